"""Closed-form conductor arithmetic for elliptic and genus-2 degenerations,
plus Artin/Swan bookkeeping for ramification filtrations and tori.

These are formula evaluators over user-supplied valuations; nothing here
derives discriminants or Swan conductors from equations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import (
    BadFiltration,
    InconsistentData,
    MissingField,
    NegativeConductor,
)

GOOD = "good"
MULTIPLICATIVE = "multiplicative"


@dataclass(frozen=True)
class KodairaType:
    """Reduction type symbol: ``I`` and ``I*`` carry the index ``n``."""

    kind: str
    n: int | None = None

    _KINDS = ("I", "II", "III", "IV", "I*", "IV*", "III*", "II*")

    def __post_init__(self):
        if self.kind not in self._KINDS:
            raise ValueError("unknown reduction type %r" % self.kind)
        if self.kind in ("I", "I*"):
            if self.n is None or self.n < 0:
                raise ValueError("type %s needs an index n >= 0" % self.kind)
        elif self.n is not None:
            raise ValueError("type %s carries no index" % self.kind)

    @classmethod
    def parse(cls, text: str) -> "KodairaType":
        """Parse symbols like ``I5``, ``I0*``, ``IV*``, ``II``.

        >>> KodairaType.parse("I3*")
        KodairaType(kind='I*', n=3)
        """
        text = text.strip()
        star = text.endswith("*")
        body = text[:-1] if star else text
        if body.startswith("I") and body[1:].isdigit():
            return cls("I*" if star else "I", int(body[1:]))
        return cls(body + "*" if star else body)

    def __str__(self):
        body = "I%d" % self.n if self.kind in ("I", "I*") else self.kind.rstrip("*")
        return body + ("*" if self.kind.endswith("*") else "")


#: tame base change conductor by reduction type
_CTAME = {
    "I": Fraction(0),
    "II": Fraction(1, 6),
    "III": Fraction(1, 4),
    "IV": Fraction(1, 3),
    "I*": Fraction(1, 2),
    "IV*": Fraction(2, 3),
    "III*": Fraction(3, 4),
    "II*": Fraction(5, 6),
}

#: discriminant valuation of the standard tame representative of each type
#: (conductor 2 for additive types plus component count minus one)
STANDARD_VDELTA = {
    "I": lambda n: n,
    "II": lambda n: 2,
    "III": lambda n: 3,
    "IV": lambda n: 4,
    "I*": lambda n: n + 6,
    "IV*": lambda n: 8,
    "III*": lambda n: 9,
    "II*": lambda n: 10,
}


def ctame_elliptic(kt: KodairaType | str) -> Fraction:
    """Tame base change conductor of an elliptic curve by reduction type.

    >>> ctame_elliptic("II*")
    Fraction(5, 6)
    """
    if isinstance(kt, str):
        kt = KodairaType.parse(kt)
    return _CTAME[kt.kind]


@dataclass(frozen=True)
class EllipticData:
    """Numerical inputs for the elliptic conductor formulas.

    ``potential`` is ``"good"`` or ``"multiplicative"``; ``v_j`` is the
    valuation of the j-invariant (needed, and negative, in the
    multiplicative case); ``delta_wild`` the wild part of the conductor.
    """

    kodaira: KodairaType
    v_delta: int
    potential: str
    v_j: int | None = None
    delta_wild: int = 0
    p: int = 1
    art: int | None = None

    def __post_init__(self):
        if self.potential not in (GOOD, MULTIPLICATIVE):
            raise ValueError("potential must be 'good' or 'multiplicative'")
        if self.potential == MULTIPLICATIVE and self.v_j is not None and self.v_j >= 0:
            raise InconsistentData(
                "potential multiplicative reduction forces v(j) < 0"
            )
        if self.delta_wild < 0:
            raise ValueError("wild conductor part cannot be negative")
        if self.p == 1 and self.delta_wild:
            raise InconsistentData("delta_wild > 0 is impossible with p = 1")


def c_elliptic(data: EllipticData) -> Fraction:
    """Base change conductor from the minimal discriminant.

    ``v(Delta)/12`` with potential good reduction, else
    ``(v(Delta) + v(j))/12``.
    """
    if data.potential == GOOD:
        return Fraction(data.v_delta, 12)
    if data.v_j is None:
        raise MissingField("v_j is required for potential multiplicative reduction")
    return Fraction(data.v_delta + data.v_j, 12)


def c_relative(v_delta: int, v_delta_prime: int, ram_index: int) -> Fraction:
    """Conductor of a single extension step from the two discriminants:
    ``(v(Delta) - v'(Delta')/e)/12``."""
    if ram_index < 1:
        raise ValueError("ramification index must be >= 1")
    return Fraction(v_delta, 12) - Fraction(v_delta_prime, 12 * ram_index)


def d_pot(data: EllipticData) -> int:
    """Potential degree of degeneration: 0 or ``-v(j)``."""
    if data.potential == GOOD:
        return 0
    if data.v_j is None:
        raise MissingField("v_j is required for potential multiplicative reduction")
    return -data.v_j


def artin_relation(data: EllipticData) -> tuple[int, Fraction]:
    """Recover the Artin conductor from ``c = -(Art + d_pot)/12``.

    Returns ``(Art, c)`` and cross-checks a user-supplied value.
    """
    c = c_elliptic(data)
    art = -12 * c - d_pot(data)
    if art.denominator != 1:
        raise InconsistentData("derived Artin conductor %s is not integral" % art)
    art = int(art)
    if data.art is not None and data.art != art:
        raise InconsistentData(
            "supplied Art = %d contradicts derived Art = %d" % (data.art, art)
        )
    return art, c


@dataclass(frozen=True)
class WildDefectReport:
    c_tame: Fraction
    defect: Fraction           # c - c_tame
    c: Fraction
    v_j_derived: int | None    # only in the p=2, I_n* multiplicative branch


def wild_defect(data: EllipticData) -> WildDefectReport:
    """Difference ``c - c_tame`` from the wild conductor part.

    Generically the defect is ``delta/12``; the residue characteristic 2
    types ``I_n*`` (n > 0) are special: ``(delta + n)/12`` with potential
    good reduction and ``delta/4`` with potential multiplicative reduction,
    where additionally ``v(j) = 2 delta - n``.
    """
    ct = ctame_elliptic(data.kodaira)
    delta = data.delta_wild
    special = (
        data.p == 2 and data.kodaira.kind == "I*" and (data.kodaira.n or 0) > 0
    )
    v_j_derived = None
    if not special:
        defect = Fraction(delta, 12)
    elif data.potential == GOOD:
        defect = Fraction(delta + data.kodaira.n, 12)
    else:
        defect = Fraction(delta, 4)
        v_j_derived = 2 * delta - data.kodaira.n
        if data.v_j is not None and data.v_j != v_j_derived:
            raise InconsistentData(
                "v(j) = %d contradicts 2*delta - n = %d" % (data.v_j, v_j_derived)
            )
    return WildDefectReport(ct, defect, ct + defect, v_j_derived)


def genus2_c(v_delta_min: int, sigma: int, tau: int, ext_degree: int) -> Fraction:
    """Genus-2 conductor from the minimal discriminant and the stable model:
    ``v(Delta_min) = 10 c + (sigma + tau)/[K':K]``."""
    if sigma < 0 or tau < 0 or tau > sigma:
        raise ValueError("need 0 <= tau <= sigma")
    if ext_degree < 1:
        raise ValueError("extension degree must be >= 1")
    c = Fraction(v_delta_min, 10) - Fraction(sigma + tau, 10 * ext_degree)
    if c < 0:
        raise NegativeConductor("inputs force c = %s < 0" % c)
    return c


# -- ramification filtrations ---------------------------------------------------


@dataclass(frozen=True)
class RamificationFiltration:
    """Lower-numbering filtration sizes with fixed-space codimensions.

    ``sizes[i]`` is the order of the i-th group (``sizes[0]`` the full
    group), ``codims[i]`` the codimension of the subspace it fixes; beyond
    the listed levels the group is trivial.
    """

    sizes: tuple[int, ...]
    codims: tuple[int, ...]

    def __post_init__(self):
        if not self.sizes or len(self.sizes) != len(self.codims):
            raise BadFiltration("sizes and codims must align and be non-empty")
        if any(s < 1 for s in self.sizes) or any(c < 0 for c in self.codims):
            raise BadFiltration("sizes must be >= 1 and codimensions >= 0")
        for a, b in zip(self.sizes, self.sizes[1:]):
            if b > a or a % b:
                raise BadFiltration("group orders must be non-increasing divisors")
        for a, b in zip(self.codims, self.codims[1:]):
            if b > a:
                raise BadFiltration("codimensions must be non-increasing")

    @property
    def order(self) -> int:
        return self.sizes[0]


def artin_swan(filt: RamificationFiltration) -> tuple[Fraction, Fraction, int]:
    """``(Art, Sw, tame part)`` of the filtration's representation data.

    ``Art = sum_i codim_i / [G : G_i]`` over all levels; the ``i = 0`` term
    is the tame part and the rest is the Swan conductor.
    """
    order = filt.order
    art = Fraction(0)
    for size, codim in zip(filt.sizes, filt.codims):
        art += Fraction(codim * size, order)
    tame_part = filt.codims[0]
    return art, art - tame_part, tame_part


def filtration_base_change(filt: RamificationFiltration, d: int) -> RamificationFiltration:
    """Reindex the filtration along a tame extension of degree ``d``.

    With ``e = gcd(d, |G|)``, level ``i > 0`` of the new filtration is the
    old level at position ``ceil(i e / d)``; higher ramification is pushed
    out by the factor ``d/e``, so ``Sw`` scales exactly by ``d``.
    """
    if d < 1:
        raise ValueError("degree must be >= 1")
    e = gcd(d, filt.order)
    top = (len(filt.sizes) - 1) * d // e
    sizes, codims = [filt.sizes[0] // e], [filt.codims[0]]
    for i in range(1, top + 1):
        j = -((-i * e) // d)  # ceil(i e / d)
        if j >= len(filt.sizes):
            break
        sizes.append(filt.sizes[j])
        codims.append(filt.codims[j])
    return RamificationFiltration(tuple(sizes), tuple(codims))


def torus_ctame(g: int, rank_fixed: int, sw: Fraction | int) -> tuple[Fraction, Fraction]:
    """Tame conductor and growth slope of a torus from its character data:
    ``c_tame = (g - rank of the inertia-fixed characters)/2`` and slope
    ``Sw/2``."""
    if not 0 <= rank_fixed <= g:
        raise ValueError("fixed rank must lie in [0, g]")
    return Fraction(g - rank_fixed, 2), Fraction(sw, 2)
