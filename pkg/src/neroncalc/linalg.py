"""Exact integer linear algebra: Smith normal form and abelian group quotients.

Matrices are plain lists of rows of Python ints, so all arithmetic is
arbitrary precision.  The two entry points most callers want are

* :func:`cokernel` -- the quotient of ``Z^m`` by the column span of a matrix,
* :func:`smith_quotient` -- ``ker(A)/im(B)`` for a pair of compatible maps.

>>> cokernel([[2, 0], [0, 6]])
(FiniteAbelianGroup(factors=(2, 6)), 0)
>>> smith_quotient([[0, 0]], [[2], [0]])
(FiniteAbelianGroup(factors=(2,)), 1)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod

from .errors import DimensionMismatch


def prime_to_part(n: int, p: int) -> int:
    """Largest divisor of ``n`` coprime to ``p`` (``p == 1`` strips nothing)."""
    if n == 0:
        raise ValueError("prime_to_part of 0 is undefined")
    n = abs(n)
    if p <= 1:
        return n
    while n % p == 0:
        n //= p
    return n


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Finite abelian group in invariant factor form ``Z/d1 x ... x Z/dr``.

    The factors satisfy ``d1 | d2 | ... | dr`` with every ``di >= 2``; the
    trivial group stores an empty tuple.

    >>> FiniteAbelianGroup.from_factors([6, 2]).factors
    (2, 6)
    >>> FiniteAbelianGroup.from_factors([4, 6]).factors   # repaired via gcd/lcm
    (2, 12)
    >>> FiniteAbelianGroup((4, 6))
    Traceback (most recent call last):
        ...
    ValueError: invariant factors must form a divisibility chain: [4, 6]
    """

    factors: tuple[int, ...] = ()

    def __post_init__(self):
        for a, b in zip(self.factors, self.factors[1:]):
            if b % a:
                raise ValueError(
                    "invariant factors must form a divisibility chain: %r"
                    % list(self.factors)
                )
        if any(d < 2 for d in self.factors):
            raise ValueError("invariant factors must be >= 2")

    @classmethod
    def from_factors(cls, factors) -> "FiniteAbelianGroup":
        """Build from any list of cyclic orders (1s dropped, order fixed)."""
        cleaned = sorted(abs(d) for d in factors if abs(d) != 1)
        if any(d == 0 for d in cleaned):
            raise ValueError("0 is not a finite cyclic order")
        # Repair the divisibility chain with pairwise gcd/lcm exchanges.
        again = True
        while again:
            again = False
            for i in range(len(cleaned) - 1):
                a, b = cleaned[i], cleaned[i + 1]
                if b % a:
                    g = gcd(a, b)
                    cleaned[i], cleaned[i + 1] = g, a * b // g
                    again = True
        return cls(tuple(d for d in cleaned if d != 1))

    @property
    def order(self) -> int:
        return prod(self.factors)

    @property
    def is_trivial(self) -> bool:
        return not self.factors

    def prime_to(self, p: int) -> "FiniteAbelianGroup":
        """Prime-to-``p`` part: ``p``-power factors stripped from each ``di``."""
        return FiniteAbelianGroup.from_factors(
            prime_to_part(d, p) for d in self.factors
        )

    def __str__(self):
        if not self.factors:
            return "1"
        return " x ".join("C%d" % d for d in self.factors)


def _row_sub(row_i, row_t, q):
    for j, v in enumerate(row_t):
        if v:
            row_i[j] -= q * v


def _snf_diagonal_dense(M: list[list[int]]) -> list[int]:
    """Diagonal of the Smith normal form of ``M`` (destroys ``M``).

    Returns the nonzero diagonal entries, positive, in divisibility order.
    """
    m = len(M)
    n = len(M[0]) if m else 0
    diag: list[int] = []
    t = 0
    while t < m and t < n:
        # Smallest nonzero entry of the trailing submatrix as pivot.
        pivot = None
        for i in range(t, m):
            row = M[i]
            for j in range(t, n):
                v = row[j]
                if v and (pivot is None or abs(v) < pivot[0]):
                    pivot = (abs(v), i, j)
        if pivot is None:
            break
        _, pi, pj = pivot
        M[t], M[pi] = M[pi], M[t]
        if pj != t:
            for row in M:
                row[t], row[pj] = row[pj], row[t]
        while True:
            dirty = False
            for i in range(t + 1, m):
                if M[i][t]:
                    q = M[i][t] // M[t][t]
                    if q:
                        _row_sub(M[i], M[t], q)
                    if M[i][t]:
                        M[t], M[i] = M[i], M[t]
                        dirty = True
            col_dirty = False
            for j in range(t + 1, n):
                if M[t][j]:
                    q = M[t][j] // M[t][t]
                    if q:
                        for row in M:
                            row[j] -= q * row[t]
                    if M[t][j]:
                        for row in M:
                            row[t], row[j] = row[j], row[t]
                        col_dirty = True
            if not dirty and not col_dirty:
                break
        diag.append(abs(M[t][t]))
        t += 1
    return _fix_divisibility(diag)


def _fix_divisibility(diag: list[int]) -> list[int]:
    diag = sorted(diag)
    again = True
    while again:
        again = False
        for i in range(len(diag) - 1):
            a, b = diag[i], diag[i + 1]
            if b % a:
                g = gcd(a, b)
                diag[i], diag[i + 1] = g, a * b // g
                again = True
    return diag


def smith_diagonal(rows: list[list[int]]) -> list[int]:
    """Nonzero invariant factors of an integer matrix.

    A sparse pass eliminates unit pivots first (each contributing an
    invariant factor 1), so graph-shaped matrices with many ``+-1`` entries
    stay cheap; the residual block goes through dense reduction.

    >>> smith_diagonal([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    [2, 6, 12]
    """
    m = len(rows)
    if m == 0:
        return []
    n = len(rows[0])
    if any(len(r) != n for r in rows):
        raise DimensionMismatch("ragged matrix")
    sparse = {i: {j: v for j, v in enumerate(r) if v} for i, r in enumerate(rows)}
    sparse = {i: r for i, r in sparse.items() if r}
    cols: dict[int, set[int]] = {}
    for i, r in sparse.items():
        for j in r:
            cols.setdefault(j, set()).add(i)
    units = 0
    while True:
        best = None
        for i, r in sparse.items():
            for j, v in r.items():
                if v in (1, -1):
                    cand = (len(r) * len(cols[j]), i, j)
                    if best is None or cand < best:
                        best = cand
        if best is None:
            break
        _, pi, pj = best
        prow = sparse.pop(pi)
        sign = prow[pj]
        for i in list(cols[pj]):
            if i == pi or i not in sparse:
                continue
            f = sparse[i].get(pj, 0)
            if not f:
                continue
            q = f * sign  # f / pivot with pivot = +-1
            row = sparse[i]
            for j, v in prow.items():
                new = row.get(j, 0) - q * v
                if new:
                    row[j] = new
                    cols.setdefault(j, set()).add(i)
                else:
                    row.pop(j, None)
                    cols[j].discard(i)
            if not row:
                del sparse[i]
        for j in prow:
            cols[j].discard(pi)
        cols.pop(pj, None)
        units += 1
    if sparse:
        live_rows = sorted(sparse)
        live_cols = sorted({j for r in sparse.values() for j in r})
        colpos = {j: k for k, j in enumerate(live_cols)}
        dense = [[0] * len(live_cols) for _ in live_rows]
        for k, i in enumerate(live_rows):
            for j, v in sparse[i].items():
                dense[k][colpos[j]] = v
        rest = _snf_diagonal_dense(dense)
    else:
        rest = []
    return _fix_divisibility([1] * units + rest)


def cokernel(rows: list[list[int]], ambient: int | None = None):
    """Quotient of ``Z^m`` by the column span of an ``m x n`` matrix.

    Returns ``(torsion, free_rank)``.  ``ambient`` overrides ``m`` when the
    matrix is empty.

    >>> cokernel([[2]])
    (FiniteAbelianGroup(factors=(2,)), 0)
    >>> cokernel([[0, 0], [0, 0]])
    (FiniteAbelianGroup(factors=()), 2)
    """
    m = len(rows) if ambient is None else ambient
    diag = smith_diagonal(rows) if rows else []
    torsion = FiniteAbelianGroup.from_factors(d for d in diag if d > 1)
    return torsion, m - len(diag)


def _snf_with_column_basis(A: list[list[int]]):
    """Reduce ``A`` with row and column operations, tracking column ops.

    Returns ``(rank, C)`` where ``C`` is the unimodular matrix of accumulated
    column operations; the last ``n - rank`` columns of ``C`` are a basis of
    the saturated kernel lattice of ``A``.
    """
    M = [list(r) for r in A]
    m = len(M)
    n = len(M[0]) if m else 0
    C = [[int(i == j) for j in range(n)] for i in range(n)]

    def col_swap(a, b):
        if a == b:
            return
        for row in M:
            row[a], row[b] = row[b], row[a]
        for row in C:
            row[a], row[b] = row[b], row[a]

    def col_sub(a, b, q):
        # column a -= q * column b
        for row in M:
            row[a] -= q * row[b]
        for row in C:
            row[a] -= q * row[b]

    t = 0
    while t < m and t < n:
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                v = M[i][j]
                if v and (pivot is None or abs(v) < pivot[0]):
                    pivot = (abs(v), i, j)
        if pivot is None:
            break
        _, pi, pj = pivot
        M[t], M[pi] = M[pi], M[t]
        col_swap(t, pj)
        while True:
            dirty = False
            for i in range(t + 1, m):
                if M[i][t]:
                    q = M[i][t] // M[t][t]
                    if q:
                        _row_sub(M[i], M[t], q)
                    if M[i][t]:
                        M[t], M[i] = M[i], M[t]
                        dirty = True
            for j in range(t + 1, n):
                if M[t][j]:
                    q = M[t][j] // M[t][t]
                    if q:
                        col_sub(j, t, q)
                    if M[t][j]:
                        col_swap(t, j)
                        dirty = True
            if not dirty:
                break
        t += 1
    return t, C


def kernel_basis(A: list[list[int]]) -> list[list[int]]:
    """Columns spanning the saturated kernel lattice of ``A`` in ``Z^n``.

    >>> kernel_basis([[1, 1]])
    [[-1], [1]]
    """
    m = len(A)
    n = len(A[0]) if m else 0
    rank, C = _snf_with_column_basis(A)
    return [[C[i][j] for j in range(rank, n)] for i in range(n)]


def _solve_integer(K: list[list[int]], B: list[list[int]]) -> list[list[int]]:
    """Solve ``K X = B`` exactly; ``K`` has full column rank.

    Raises :class:`DimensionMismatch` if no rational solution exists and
    ``ValueError`` if the solution is not integral.
    """
    n = len(K)
    k = len(K[0]) if n else 0
    b = len(B[0]) if B and B[0] is not None else 0
    aug = [[Fraction(K[i][j]) for j in range(k)] + [Fraction(B[i][j]) for j in range(b)]
           for i in range(n)]
    pivots = []
    r = 0
    for c in range(k):
        piv = next((i for i in range(r, n) if aug[i][c]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(n):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [v - f * w for v, w in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    if r != k:
        raise DimensionMismatch("kernel basis is rank deficient")
    for i in range(r, n):
        if any(aug[i][k:]):
            raise DimensionMismatch("columns do not lie in the kernel lattice")
    X = [[None] * b for _ in range(k)]
    for row, c in enumerate(pivots):
        for j in range(b):
            v = aug[row][k + j]
            if v.denominator != 1:
                raise ValueError("non-integral coordinates in kernel basis")
            X[c][j] = int(v)
    return X


def smith_quotient(A: list[list[int]], B: list[list[int]]):
    """Invariant factors and free rank of ``ker(A)/im(B)``.

    ``A`` is an ``a x n`` map out of ``Z^n`` (an empty or all-zero ``A``
    means the full lattice ``Z^n``) and ``B`` an ``n x b`` map into ``Z^n``
    whose image must lie in ``ker(A)``.

    >>> smith_quotient([], [[2, 0], [0, 6]])
    (FiniteAbelianGroup(factors=(2, 6)), 0)
    >>> smith_quotient([[1, 1, 1]], [[-2, 1], [1, -2], [1, 1]])
    (FiniteAbelianGroup(factors=(3,)), 0)
    """
    if not B or not B[0]:
        raise DimensionMismatch("B must have at least one column; pad with zeros")
    n = len(B)
    if A and any(len(row) != n for row in A):
        raise DimensionMismatch("A has %d columns, B has %d rows" % (len(A[0]), n))
    # A o B must vanish.
    for row in A:
        for j in range(len(B[0])):
            if sum(row[i] * B[i][j] for i in range(n)):
                raise DimensionMismatch("image of B is not contained in ker(A)")
    if A and any(any(row) for row in A):
        K = kernel_basis(A)
        k = len(K[0]) if K else 0
        if k == 0:
            return FiniteAbelianGroup(), 0
        X = _solve_integer(K, B)
    else:
        k = n
        X = B
    diag = smith_diagonal(X)
    torsion = FiniteAbelianGroup.from_factors(d for d in diag if d > 1)
    return torsion, k - len(diag)
