"""The combinatorial transform realizing tame base change on dual graphs.

For ``d`` prime both to the residue characteristic and to the stabilization
index of the model, base change to the degree-``d`` extension followed by
normalization and minimal resolution acts on the combinatorial data alone:
every vertex keeps its genus, its multiplicity gets divided by
``gcd(N, d)``, and every edge is replaced by the Hirzebruch-Jung chain of
its local data.  The output is *not* contracted; callers wanting the
minimal model apply :func:`~neroncalc.curves.contract_minus_one`.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from math import gcd

from .curves import SncdCurve, Vertex, serialize_curve
from .cyclo import CycloProduct
from .errors import InternalError, PreconditionError
from .hj import LocalPointData, local_point_data
from .invariants import char_poly, component_group, stabilization_index


@dataclass(frozen=True)
class EdgeRecord:
    endpoints: tuple[str, str]
    old_multiplicities: tuple[int, int]
    local: LocalPointData
    inserted: tuple[str, ...]


@dataclass(frozen=True)
class BaseChangeTrace:
    input_digest: str
    d: int
    vertex_records: tuple[tuple[str, int, int, int], ...]  # id, old N, gcd, new N
    edge_records: tuple[EdgeRecord, ...]
    output: SncdCurve

    def to_dict(self) -> dict:
        return {
            "input_sha256": self.input_digest,
            "d": self.d,
            "vertices": [
                {"id": i, "N": n, "gcd": g, "N_new": m}
                for i, n, g, m in self.vertex_records
            ],
            "edges": [
                {
                    "endpoints": list(r.endpoints),
                    "N": list(r.old_multiplicities),
                    "points_above": r.local.num_points,
                    "quotient_order": r.local.d2,
                    "inserted": list(r.inserted),
                }
                for r in self.edge_records
            ],
        }


def _check_preconditions(curve: SncdCurve, d: int) -> None:
    if d < 1:
        raise PreconditionError("degree must be positive")
    if gcd(d, curve.p) != 1:
        raise PreconditionError(
            "gcd(d, p) = %d != 1" % gcd(d, curve.p)
        )
    e = stabilization_index(curve)
    if gcd(d, e) != 1:
        raise PreconditionError(
            "gcd(d, e) = %d != 1 with e = %d" % (gcd(d, e), e)
        )
    if curve.multiplicity_gcd() != 1:
        raise PreconditionError(
            "index-one fails: gcd of multiplicities is %d"
            % curve.multiplicity_gcd()
        )


def transform(curve: SncdCurve, d: int) -> tuple[SncdCurve, BaseChangeTrace]:
    """Dual graph of the resolved degree-``d`` base change.

    Vertices keep identity and genus with ``N -> N/gcd(N, d)``; each edge is
    replaced by its Hirzebruch-Jung chain, oriented so that the chain entry
    adjacent to the second endpoint carries ``mu_1``.
    """
    _check_preconditions(curve, d)
    digest = hashlib.sha256(serialize_curve(curve).encode()).hexdigest()
    new_vertices = []
    vrecords = []
    for v in curve.vertices:
        g = gcd(v.N, d)
        new_vertices.append(Vertex(v.id, v.N // g, v.g))
        vrecords.append((v.id, v.N, g, v.N // g))
    new_edges: list[tuple[str, str]] = []
    erecords = []
    for idx, (a, b) in enumerate(curve.edges):
        na, nb = curve.multiplicity(a), curve.multiplicity(b)
        local = local_point_data(na, nb, d, p=curve.p)
        if local.num_points != 1:
            raise InternalError(
                "edge (%s, %s) splits into %d points under d=%d"
                % (a, b, local.num_points, d)
            )
        if local.chain is None:
            new_edges.append((a, b))
            erecords.append(EdgeRecord((a, b), (na, nb), local, ()))
            continue
        interior = local.chain.mu[1:-1]
        ids = ["%s|%s|%d|%d" % (a, b, idx, k + 1) for k in range(len(interior))]
        for vid, mult in zip(ids, interior):
            new_vertices.append(Vertex(vid, mult, 0))
        # chain ends: mu[0] sits on b's side, mu[-1] on a's side
        path = [b] + ids + [a]
        for u, w in zip(path, path[1:]):
            new_edges.append((u, w))
        erecords.append(EdgeRecord((a, b), (na, nb), local, tuple(ids)))
    out = SncdCurve(new_vertices, new_edges, curve.p)
    trace = BaseChangeTrace(digest, d, tuple(vrecords), tuple(erecords), out)
    return out, trace


def e_division_law(
    curve: SncdCurve, d: int, transformed: SncdCurve | None = None
) -> tuple[int, int]:
    """``(predicted, measured)`` stabilization index after base change.

    The prediction is ``e / gcd(e, d)``.  Without a supplied output graph
    the transform is run, which restricts ``d`` to its preconditions (and
    then the two values must agree).
    """
    e = stabilization_index(curve)
    predicted = e // gcd(e, d)
    if transformed is None:
        transformed, _ = transform(curve, d)
    return predicted, stabilization_index(transformed)


def compfu_check(curve: SncdCurve, d: int) -> tuple[int, int, int]:
    """Component group growth ``|Phi| -> d^{b1} |Phi|`` under the transform.

    Returns ``(order before, order after, d^{b1})``; raises
    :class:`InternalError` if the law fails.
    """
    before = component_group(curve).order
    out, _ = transform(curve, d)
    after = component_group(out).order
    factor = d ** curve.b1()
    if after != factor * before:
        raise InternalError(
            "component growth %d -> %d violates factor %d" % (before, after, factor)
        )
    return before, after, factor


def charpoly_commutation(curve: SncdCurve, d: int) -> bool:
    """Does base change of the graph commute with the root-power map on P?"""
    out, _ = transform(curve, d)
    direct: CycloProduct = char_poly(out)
    via_roots = char_poly(curve).power_d(d)
    return direct == via_roots
