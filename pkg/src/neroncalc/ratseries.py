"""Exact rational generating series with geometric denominators.

A series lives in ``R[T, 1/(1 - L^a T^b)]`` where ``R = Z[L^{+-1}][AB]`` is
spanned by monomials ``L^l * [B]`` with ``[B]`` an opaque commutative symbol
keyed by a multiset of positive genera (the class of a product of Jacobians;
the empty multiset is the unit).  Numerators are flat dictionaries

    (T-degree, L-exponent, genus multiset) -> Fraction

with no zero values; denominators are multisets of factors ``1 - L^a T^b``
with ``b >= 1``.  Rational coefficients only appear transiently inside an
assembly and callers assert integrality at the end.

>>> s = geometric_sum(2, 1, 0, 0)   # T + T^3 + T^5 + ...
>>> str(s)
'(T) / (1 - T^2)'
>>> s.expand(5)[(5, 0, ())]
Fraction(1, 1)
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NonIntegralAssembly, NonReducible

Key = tuple[int, int, tuple[int, ...]]
Poly = dict[Key, Fraction]


def _clean(poly: Poly) -> Poly:
    return {k: v for k, v in poly.items() if v}


def _poly_add(a: Poly, b: Poly) -> Poly:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, Fraction(0)) + v
    return _clean(out)


def _poly_scale(a: Poly, c) -> Poly:
    c = Fraction(c)
    return _clean({k: v * c for k, v in a.items()})


def _merge_ab(x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted(x + y))


def _poly_mul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for (n1, l1, ab1), v1 in a.items():
        for (n2, l2, ab2), v2 in b.items():
            k = (n1 + n2, l1 + l2, _merge_ab(ab1, ab2))
            out[k] = out.get(k, Fraction(0)) + v1 * v2
    return _clean(out)


def _factor_poly(a: int, b: int) -> Poly:
    return {(0, 0, ()): Fraction(1), (b, a, ()): Fraction(-1)}


def _den_poly(den) -> Poly:
    out: Poly = {(0, 0, ()): Fraction(1)}
    for a, b in den:
        out = _poly_mul(out, _factor_poly(a, b))
    return out


def _divide_by_factor(num: Poly, a: int, b: int) -> Poly | None:
    """Exact quotient ``num / (1 - L^a T^b)`` or None if not divisible."""
    if not num:
        return {}
    max_n = max(k[0] for k in num)
    slices: dict[int, Poly] = {}
    for (n, l, ab), v in num.items():
        slices.setdefault(n, {})[(0, l, ab)] = v
    q_slices: dict[int, Poly] = {}
    for n in range(0, max_n + 1):
        cur = dict(slices.get(n, {}))
        prev = q_slices.get(n - b)
        if prev:
            for (z, l, ab), v in prev.items():
                k = (z, l + a, ab)
                cur[k] = cur.get(k, Fraction(0)) + v
        cur = _clean(cur)
        if cur:
            q_slices[n] = cur
    quotient: Poly = {}
    for n, sl in q_slices.items():
        for (_, l, ab), v in sl.items():
            quotient[(n, l, ab)] = v
    if _poly_mul(quotient, _factor_poly(a, b)) != _clean(num):
        return None
    return quotient


def _reduce(num: Poly, den: tuple[tuple[int, int], ...]):
    changed = True
    while changed and num:
        changed = False
        for f in sorted(set(den)):
            q = _divide_by_factor(num, *f)
            if q is not None:
                num = q
                rem = list(den)
                rem.remove(f)
                den = tuple(rem)
                changed = True
                break
    return num, den


class RationalSeries:
    """Numerator polynomial over a multiset of ``1 - L^a T^b`` factors.

    Instances are immutable; identical factors are cancelled against the
    numerator whenever exact division succeeds.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=()):
        if isinstance(num, dict):
            num = num.items()
        poly = _clean({k: Fraction(v) for k, v in num})
        den = tuple(sorted(tuple(f) for f in den))
        for a, b in den:
            if b < 1:
                raise ValueError("denominator factor needs b >= 1")
        poly, den = _reduce(poly, den)
        object.__setattr__(self, "num", tuple(sorted(poly.items())))
        object.__setattr__(self, "den", den)

    def __setattr__(self, *args):
        raise AttributeError("RationalSeries is immutable")

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls) -> "RationalSeries":
        return cls({})

    @classmethod
    def monomial(cls, coeff=1, n: int = 0, l: int = 0, ab=()) -> "RationalSeries":
        return cls({(n, l, tuple(sorted(ab))): Fraction(coeff)})

    # -- ring operations -------------------------------------------------------

    def _num_dict(self) -> Poly:
        return dict(self.num)

    def __add__(self, other: "RationalSeries") -> "RationalSeries":
        den1, den2 = list(self.den), list(other.den)
        common: list[tuple[int, int]] = []
        for f in set(den1) | set(den2):
            common += [f] * max(den1.count(f), den2.count(f))
        extra1 = list(common)
        for f in den1:
            extra1.remove(f)
        extra2 = list(common)
        for f in den2:
            extra2.remove(f)
        num = _poly_add(
            _poly_mul(self._num_dict(), _den_poly(extra1)),
            _poly_mul(other._num_dict(), _den_poly(extra2)),
        )
        return RationalSeries(num, common)

    def __mul__(self, other: "RationalSeries") -> "RationalSeries":
        return RationalSeries(
            _poly_mul(self._num_dict(), other._num_dict()),
            self.den + other.den,
        )

    def scale(self, c) -> "RationalSeries":
        return RationalSeries(_poly_scale(self._num_dict(), c), self.den)

    def mul_monomial(self, coeff=1, n: int = 0, l: int = 0, ab=()) -> "RationalSeries":
        return self * RationalSeries.monomial(coeff, n, l, ab)

    def subs_T_power(self, a: int) -> "RationalSeries":
        """Substitute ``T -> T^a``."""
        if a < 1:
            raise ValueError("substitution degree must be >= 1")
        num = {(n * a, l, ab): v for (n, l, ab), v in self.num}
        den = tuple((w, b * a) for w, b in self.den)
        return RationalSeries(num, den)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalSeries):
            return NotImplemented
        lhs = _poly_mul(self._num_dict(), _den_poly(other.den))
        rhs = _poly_mul(other._num_dict(), _den_poly(self.den))
        return lhs == rhs

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return "RationalSeries(%s)" % self

    # -- analysis ----------------------------------------------------------------

    def expand(self, order: int) -> Poly:
        """Power series coefficients up to and including ``T^order``."""
        out = {k: v for k, v in self.num if k[0] <= order}
        for a, b in self.den:
            # multiply by 1 + L^a T^b + L^{2a} T^{2b} + ...
            acc: Poly = dict(out)
            step = dict(out)
            while step:
                step = {
                    (n + b, l + a, ab): v
                    for (n, l, ab), v in step.items()
                    if n + b <= order
                }
                for key, v in step.items():
                    acc[key] = acc.get(key, Fraction(0)) + v
            out = _clean(acc)
        return out

    def coefficient(self, n: int) -> Poly:
        """Coefficient of ``T^n`` as an L/AB polynomial keyed ``(0, l, ab)``."""
        return {
            (0, l, ab): v for (m, l, ab), v in self.expand(n).items() if m == n
        }

    @property
    def is_integral(self) -> bool:
        return all(v.denominator == 1 for _, v in self.num)

    def require_integral(self, what: str = "series") -> "RationalSeries":
        if not self.is_integral:
            raise NonIntegralAssembly("%s has non-integral coefficients" % what)
        return self

    def degree(self) -> int:
        """``deg_T(num) - sum of denominator T-degrees``."""
        if not self.num:
            raise ValueError("degree of the zero series")
        return max(k[0] for k, _ in self.num) - sum(b for _, b in self.den)

    def _plain_T_coeffs(self) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for (n, l, ab), v in self.num:
            if l != 0 or ab != ():
                raise NonReducible("numerator carries L or abelian classes")
            out[n] = out.get(n, Fraction(0)) + v
        return out

    def pole_order_at_one(self) -> int:
        """Order of the pole at ``T = 1`` for series with plain Z numerators.

        Counts denominator factors ``1 - T^b`` net of the multiplicity of
        ``T = 1`` as a numerator root (multiplicity found by exact
        evaluation of successive derivatives).
        """
        poly = self._plain_T_coeffs()
        vanishing = sum(1 for a, _ in self.den if a == 0)
        mult = 0
        while mult < vanishing:
            if sum(poly.values()) != 0:
                break
            poly = {n - 1: v * n for n, v in poly.items() if n}
            mult += 1
        return vanishing - mult

    def unique_pole_slope(self) -> tuple[Fraction, int]:
        """The single slope ``a/b`` among denominator factors, with its count."""
        if not self.den:
            raise NonReducible("series has no denominator factors")
        slopes = {Fraction(a, b) for a, b in self.den}
        if len(slopes) != 1:
            raise NonReducible("multiple pole slopes: %s" % sorted(slopes))
        return slopes.pop(), len(self.den)

    # -- presentation ---------------------------------------------------------------

    def __str__(self):
        num = _poly_str(self._num_dict())
        if not self.den:
            return num
        den = " ".join(_factor_str(a, b) for a, b in self.den)
        return "(%s) / %s" % (num, den)

    def to_dict(self) -> dict:
        return {
            "num": [
                {
                    "T": n,
                    "L": l,
                    "B": list(ab),
                    "c": v.numerator if v.denominator == 1 else str(v),
                }
                for (n, l, ab), v in self.num
            ],
            "den": [list(f) for f in self.den],
            "pretty": str(self),
        }


def _coeff_str(l: int, ab: tuple[int, ...], v: Fraction) -> str:
    symbols = []
    if l:
        symbols.append("L" if l == 1 else "L^%d" % l)
    if ab:
        symbols.append("[B(%s)]" % ",".join(map(str, ab)))
    if not symbols:
        return str(v)
    body = "*".join(symbols)
    if v == 1:
        return body
    if v == -1:
        return "-" + body
    return "%s*%s" % (v, body)


def _poly_str(poly: Poly) -> str:
    if not poly:
        return "0"
    bits = []
    for (n, l, ab), v in sorted(poly.items()):
        c = _coeff_str(l, ab, v)
        if n == 0:
            bits.append(c)
        else:
            tpart = "T" if n == 1 else "T^%d" % n
            if c == "1":
                bits.append(tpart)
            elif c == "-1":
                bits.append("-" + tpart)
            else:
                bits.append("%s*%s" % (c, tpart))
    return " + ".join(bits).replace("+ -", "- ")


def _factor_str(a: int, b: int) -> str:
    tpart = "T" if b == 1 else "T^%d" % b
    if a == 0:
        return "(1 - %s)" % tpart
    lpart = "L" if a == 1 else "L^%d" % a
    return "(1 - %s %s)" % (lpart, tpart)


def geometric_sum(e: int, b: int, t: int, w: int) -> RationalSeries:
    """Closed form of ``sum_{q >= 0} (q e + b)^t L^{q w} T^{q e + b}``.

    Built by applying ``T d/dT`` ``t`` times to ``T^b / (1 - L^w T^e)``;
    the result has denominator ``(1 - L^w T^e)^{t+1}``.

    >>> str(geometric_sum(1, 1, 1, 0))
    '(T) / (1 - T) (1 - T)'
    """
    if e < 1 or b < 1:
        raise ValueError("need e >= 1 and b >= 1")
    num: Poly = {(b, 0, ()): Fraction(1)}
    for k in range(1, t + 1):
        theta = {(n, l, ab): v * n for (n, l, ab), v in num.items()}
        shift_theta = {(n + e, l + w, ab): v for (n, l, ab), v in theta.items()}
        shift_num = {(n + e, l + w, ab): v * k * e for (n, l, ab), v in num.items()}
        num = _poly_add(_poly_add(theta, _poly_scale(shift_theta, -1)), shift_num)
    return RationalSeries(num, ((w, e),) * (t + 1))
