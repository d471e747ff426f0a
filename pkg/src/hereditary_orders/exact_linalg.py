"""Exact integer and prime-field linear algebra.

Everything here works on plain Python integers (arbitrary precision), so
pivot growth during Smith reduction is never a concern.  Matrices are
accepted as any sequence of row sequences; results use tuples.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

DEFAULT_PRIME = 32003
PRIME_ENV_VAR = "HEREDITARY_ORDERS_PRIME"

IntMatrix = tuple[tuple[int, ...], ...]


def as_int_matrix(a: Sequence[Sequence[int]]) -> IntMatrix:
    rows = tuple(tuple(int(x) for x in row) for row in a)
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("ragged matrix")
    return rows


def identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> IntMatrix:
    if not a:
        return ()
    inner = len(b)
    ncols = len(b[0]) if b else 0
    return tuple(
        tuple(sum(row[k] * b[k][j] for k in range(inner)) for j in range(ncols))
        for row in a
    )


def determinant(a: Sequence[Sequence[int]]) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    m = [list(r) for r in as_int_matrix(a)]
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("determinant of a non-square matrix")
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1] if n else 1


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SmithDecomposition:
    """``u @ a @ v == diag(d)`` (zero padded) with ``d[i] | d[i+1]``."""

    d: tuple[int, ...]
    u: IntMatrix
    v: IntMatrix
    shape: tuple[int, int]

    @property
    def rank(self) -> int:
        return sum(1 for x in self.d if x != 0)

    def diagonal_matrix(self) -> IntMatrix:
        rows, cols = self.shape
        return tuple(
            tuple(self.d[i] if i == j and i < len(self.d) else 0 for j in range(cols))
            for i in range(rows)
        )


def smith_normal_form(a: Sequence[Sequence[int]]) -> SmithDecomposition:
    """Smith normal form with unimodular transforms.

    Pivoting always picks the smallest nonzero entry (in absolute value) of
    the remaining submatrix.  The diagonal is normalised to be nonnegative.

    >>> smith_normal_form([[2, 0], [0, 3]]).d
    (1, 6)
    """
    A = [list(r) for r in as_int_matrix(a)]
    m = len(A)
    n = len(A[0]) if m else 0
    U = [list(r) for r in identity(m)]
    V = [list(r) for r in identity(n)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        A[dst] = [x + q * y for x, y in zip(A[dst], A[src])]
        U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in A:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    diag = []
    for k in range(min(m, n)):
        while True:
            best = None
            for i in range(k, m):
                for j in range(k, n):
                    x = A[i][j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
            if best is None:
                break
            _, i, j = best
            if i != k:
                swap_rows(i, k)
            if j != k:
                swap_cols(j, k)
            piv = A[k][k]
            for i in range(k + 1, m):
                if A[i][k]:
                    add_row(i, k, -(A[i][k] // piv))
            for j in range(k + 1, n):
                if A[k][j]:
                    add_col(j, k, -(A[k][j] // piv))
            if any(A[i][k] for i in range(k + 1, m)) or any(A[k][j] for j in range(k + 1, n)):
                continue
            bad = next(
                (i for i in range(k + 1, m) for j in range(k + 1, n) if A[i][j] % piv),
                None,
            )
            if bad is not None:
                add_row(k, bad, 1)
                continue
            break
        if best is None:
            break
        if A[k][k] < 0:
            A[k] = [-x for x in A[k]]
            U[k] = [-x for x in U[k]]
        diag.append(A[k][k])
    return SmithDecomposition(
        d=tuple(diag),
        u=as_int_matrix(U) if m else (),
        v=as_int_matrix(V) if n else (),
        shape=(m, n),
    )


def invariant_factors(a: Sequence[Sequence[int]]) -> tuple[int, ...]:
    return smith_normal_form(a).d


def _normalise_sign(vec: Sequence[int]) -> tuple[int, ...]:
    lead = next((x for x in vec if x), 0)
    return tuple(-x for x in vec) if lead < 0 else tuple(vec)


def solve_integer_linear(
    a: Sequence[Sequence[int]], b: Sequence[int], ncols: int | None = None
) -> tuple[tuple[int, ...] | None, tuple[tuple[int, ...], ...]]:
    """Integer solutions of ``a @ x == b``.

    Returns ``(x, kernel)`` where ``x`` is a particular solution (``None``
    when no integer solution exists) and ``kernel`` is a Z-basis of the
    integer kernel of ``a``.  ``ncols`` is only needed for a matrix with
    zero rows.
    """
    A = as_int_matrix(a)
    m = len(A)
    n = len(A[0]) if m else (ncols or 0)
    if len(b) != m:
        raise ValueError(f"right-hand side has length {len(b)}, expected {m}")
    if m == 0:
        return (0,) * n, identity(n)
    snf = smith_normal_form(A)
    c = [sum(snf.u[i][k] * b[k] for k in range(m)) for i in range(m)]
    r = snf.rank
    y = [0] * n
    for i in range(m):
        if i < r:
            q, rem = divmod(c[i], snf.d[i])
            if rem:
                return None, _kernel_from(snf, r, n)
            y[i] = q
        elif c[i] != 0:
            return None, _kernel_from(snf, r, n)
    x = tuple(sum(snf.v[i][j] * y[j] for j in range(n)) for i in range(n))
    return x, _kernel_from(snf, r, n)


def _kernel_from(snf: SmithDecomposition, r: int, n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(_normalise_sign([snf.v[i][j] for i in range(n)]) for j in range(r, n))


# ---------------------------------------------------------------------------
# prime fields


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    p: int = DEFAULT_PRIME

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    def reduce(self, x) -> int:
        """Image of an integer or ``Fraction`` in the field."""
        num = getattr(x, "numerator", x)
        den = getattr(x, "denominator", 1)
        if den % self.p == 0:
            raise ZeroDivisionError(f"denominator {den} vanishes mod {self.p}")
        return num * pow(den, -1, self.p) % self.p


def default_field() -> PrimeField:
    return PrimeField(int(os.environ.get(PRIME_ENV_VAR, DEFAULT_PRIME)))


SparseRow = Mapping[int, int]


def _echelon(rows: Iterable[SparseRow], p: int) -> dict[int, dict[int, int]]:
    """Row echelon form over F_p; pivot rows keyed by leading column, lead = 1."""
    pivots: dict[int, dict[int, int]] = {}
    for raw in rows:
        row = {c: v % p for c, v in raw.items() if v % p}
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                inv = pow(row[c], -1, p)
                pivots[c] = {k: v * inv % p for k, v in row.items()}
                break
            f = row[c]
            for k, v in piv.items():
                nv = (row.get(k, 0) - f * v) % p
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return pivots


def _dense_rows(a: Sequence[Sequence[int]]) -> list[dict[int, int]]:
    return [{j: x for j, x in enumerate(row) if x} for row in a]


def rank_mod_p(a, field: PrimeField | None = None) -> int:
    """Rank over F_p of a dense matrix (sequence of rows) or of sparse dict rows."""
    field = field or default_field()
    rows = list(a)
    if rows and not isinstance(rows[0], Mapping):
        rows = _dense_rows(rows)
    return len(_echelon(rows, field.p))


def nullspace_mod_p(
    rows: Iterable[SparseRow], ncols: int, field: PrimeField | None = None
) -> list[dict[int, int]]:
    """Basis of ``{x : row . x = 0 for every row}`` as sparse vectors."""
    p = (field or default_field()).p
    piv = _echelon(rows, p)
    # back substitution so every pivot row is free of other pivot columns
    for c in sorted(piv, reverse=True):
        row = piv[c]
        for c2 in sorted(piv):
            if c2 >= c:
                break
            other = piv[c2]
            f = other.get(c)
            if f:
                for k, v in row.items():
                    nv = (other.get(k, 0) - f * v) % p
                    if nv:
                        other[k] = nv
                    else:
                        other.pop(k, None)
    basis = []
    for f in range(ncols):
        if f in piv:
            continue
        vec = {f: 1}
        for c, row in piv.items():
            v = row.get(f)
            if v:
                vec[c] = -v % p
        basis.append(vec)
    return basis


# ---------------------------------------------------------------------------
# rationals


def _fraction_rows(a) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in a]


def rank_rational(a: Sequence[Sequence]) -> int:
    """Rank over Q by exact Gaussian elimination."""
    m = _fraction_rows(a)
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(rank + 1, len(m)):
            f = m[i][c] / m[rank][c]
            if f:
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank


def inverse_rational(a: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(a)
    m = [row + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(_fraction_rows(a))]
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        m[c], m[piv] = m[piv], m[c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for i in range(n):
            if i != c and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return [row[n:] for row in m]


def characteristic_polynomial(a: Sequence[Sequence]) -> list[Fraction]:
    """Coefficients of det(x I - a), leading first (Faddeev-LeVerrier)."""
    n = len(a)
    A = _fraction_rows(a)
    coeffs = [Fraction(1)]
    M = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M <- A M + c_{k-1} I
        AM = [[sum(A[i][l] * M[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
        M = [[AM[i][j] + (coeffs[-1] if i == j else 0) for j in range(n)] for i in range(n)]
        AM = [[sum(A[i][l] * M[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
        coeffs.append(-sum(AM[i][i] for i in range(n)) / k)
    return coeffs
