"""Hereditary orders over a discrete valuation ring, in block form.

The DVR is R = k[[s]] with m = (s) and residue field k = F_p.  An order is
given by block sizes ``(n_1, ..., n_t)``: entry ``(a, b)`` of the n x n
matrix ring ranges over R when block(a) >= block(b) and over m otherwise.
All module-theoretic statements reduce to valuation patterns, which is what
``LatticeColumn`` records.

Two independent routes are provided:

* closed forms (``projective``, ``simple_dim``, ``hom_ext_simple_pair``, ...);
* an oracle that builds the truncation Delta / s^N Delta over F_p and
  computes Hom spaces as commuting linear maps, Ext^1 from the projective
  presentation ``0 -> P_j -> P_1 -> S_j -> 0``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from dataclasses import field as dc_field
from functools import cached_property
from itertools import accumulate

import numpy as np

from .exact_linalg import PrimeField, default_field, nullspace_mod_p, rank_mod_p


@dataclass(frozen=True)
class BlockOrder:
    blocks: tuple[int, ...]

    def __post_init__(self):
        blocks = tuple(int(b) for b in self.blocks)
        if not blocks:
            raise ValueError("a block order needs at least one block")
        if any(b < 1 for b in blocks):
            raise ValueError("block sizes must be positive")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def from_json(cls, text: str | dict) -> "BlockOrder":
        data = json.loads(text) if isinstance(text, str) else text
        return cls(tuple(data["blocks"]))

    @property
    def t(self) -> int:
        return len(self.blocks)

    @property
    def n(self) -> int:
        return sum(self.blocks)

    @property
    def ramification_index(self) -> int:
        return self.t

    @property
    def is_maximal(self) -> bool:
        return self.t == 1

    @cached_property
    def _prefix(self) -> tuple[int, ...]:
        return (0,) + tuple(accumulate(self.blocks))

    def p(self, i: int) -> int:
        """p_i = n_1 + ... + n_i  (p_0 = 0)."""
        return self._prefix[i]

    def q(self, i: int) -> int:
        return self.n - self._prefix[i]

    @cached_property
    def block_of(self) -> tuple[int, ...]:
        """1-based block index of each 0-based row."""
        return tuple(i + 1 for i, b in enumerate(self.blocks) for _ in range(b))

    def floor(self, a: int, b: int) -> int:
        """Minimal valuation of entry (a, b) of the order (0-based rows/cols)."""
        return 0 if self.block_of[a] >= self.block_of[b] else 1

    def radical_floor(self, a: int, b: int) -> int:
        return 0 if self.block_of[a] > self.block_of[b] else 1

    def column(self, i: int) -> int:
        """First matrix column lying in block i."""
        self._check_block(i)
        return self.p(i - 1)

    def _check_block(self, i: int, lo: int = 1):
        if not lo <= i <= self.t:
            raise IndexError(f"index {i} outside {lo}..{self.t}")


@dataclass(frozen=True)
class LatticeColumn:
    """Full R-lattice in K^n given by per-row minimal valuations."""

    floors: tuple[int, ...]

    def shift(self, k: int) -> "LatticeColumn":
        return LatticeColumn(tuple(f + k for f in self.floors))

    def contains(self, other: "LatticeColumn") -> bool:
        return all(a <= b for a, b in zip(self.floors, other.floors))

    def is_stable(self, order: BlockOrder) -> bool:
        """Closed under left multiplication by the order."""
        f = self.floors
        n = len(f)
        return all(f[a] <= order.floor(a, b) + f[b] for a in range(n) for b in range(n))


@dataclass(frozen=True)
class ColumnModule:
    """Finite-length module ``top / bottom`` for lattices bottom ⊆ top."""

    top: LatticeColumn
    bottom: LatticeColumn
    label: str = ""

    def __post_init__(self):
        if not self.top.contains(self.bottom):
            raise ValueError("bottom lattice is not contained in top lattice")

    @cached_property
    def basis(self) -> tuple[tuple[int, int], ...]:
        """Basis vectors ``(row, valuation)`` over the residue field."""
        return tuple(
            (a, v)
            for a, (lo, hi) in enumerate(zip(self.top.floors, self.bottom.floors))
            for v in range(lo, hi)
        )

    @cached_property
    def index(self) -> dict[tuple[int, int], int]:
        return {b: i for i, b in enumerate(self.basis)}

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def loewy_length(self) -> int:
        return max((hi - lo for lo, hi in zip(self.top.floors, self.bottom.floors)), default=0)

    @cached_property
    def _rows(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for i, (r, _) in enumerate(self.basis):
            out.setdefault(r, []).append(i)
        return out

    def rows(self, a: int) -> list[int]:
        """Indices of the basis vectors lying in row a."""
        return self._rows.get(a, [])


# ---------------------------------------------------------------------------
# closed forms


def projective(d: BlockOrder, i: int) -> LatticeColumn:
    """P_i: valuation floor 1 on the first p_{i-1} rows, 0 below."""
    d._check_block(i)
    k = d.p(i - 1)
    return LatticeColumn((1,) * k + (0,) * (d.n - k))


def simple(d: BlockOrder, j: int) -> ColumnModule:
    """S_j = P_1 / P_j for j = 2..t."""
    d._check_block(j, lo=2)
    return ColumnModule(projective(d, 1), projective(d, j), label=f"S{j}")


def truncated_projective(d: BlockOrder, i: int, N: int) -> ColumnModule:
    """P_i / s^N P_i, the finite-length stand-in for P_i."""
    P = projective(d, i)
    return ColumnModule(P, P.shift(N), label=f"P{i}/s^{N}")


def simple_dim(d: BlockOrder, j: int) -> int:
    d._check_block(j, lo=2)
    return d.p(j - 1)


def delta_tensor_simple(d: BlockOrder, i: int, j: int) -> str | None:
    """Delta_i ⊗ S_j: ``None`` (zero) when i > j, else the label ``"S<i>"``.

    Computed from Delta_i P_j, which is P_1 for i > j and P_i otherwise.
    """
    d._check_block(i, lo=2)
    d._check_block(j, lo=2)
    image = 1 if i > j else i
    return None if image == 1 else f"S{image}"


def hom_ext_simple_pair(d: BlockOrder, j: int, i: int) -> tuple[int, int]:
    """(dim Hom(S_j, S_i), dim Ext^1(S_j, S_i))."""
    d._check_block(i, lo=2)
    d._check_block(j, lo=2)
    return (0 if i > j else 1), 0


def rhom_simple_projective(d: BlockOrder, j: int) -> tuple[int, int]:
    """(dim Hom(S_j, P_1), dim Ext^1(S_j, P_1)); both vanish."""
    d._check_block(j, lo=2)
    return 0, 0


def hom_projective_simple(d: BlockOrder, i: int, j: int) -> tuple[int, int]:
    """(dim Hom(P_i, S_j), dim Ext^1(P_i, S_j)).

    Hom(P_i, M) is the row of M at the first column of block i; for S_j
    that row is R/m exactly when block i precedes block j.
    """
    d._check_block(i)
    d._check_block(j, lo=2)
    return (1 if i < j else 0), 0


def strongly_exceptional(d: BlockOrder) -> bool:
    """The simples S_2, ..., S_t in increasing order form a strongly exceptional collection."""
    idx = range(2, d.t + 1)
    for a in idx:
        for b in idx:
            hom, ext = hom_ext_simple_pair(d, a, b)
            if ext or (b > a and hom) or (a == b and hom != 1):
                return False
    return True


# ---------------------------------------------------------------------------
# truncated algebra oracle


@dataclass(frozen=True)
class TruncatedAlgebra:
    """Delta / s^N Delta as an F_p-algebra with basis s^v E_ab, floor(a,b) <= v < N."""

    order: BlockOrder
    N: int
    field: PrimeField = dc_field(default_factory=default_field)

    def __post_init__(self):
        if self.N < 2:
            raise ValueError("truncation level must be at least 2")

    @cached_property
    def basis(self) -> tuple[tuple[int, int, int], ...]:
        n = self.order.n
        return tuple(
            (v, a, b)
            for a in range(n)
            for b in range(n)
            for v in range(self.order.floor(a, b), self.N)
        )

    @property
    def dim(self) -> int:
        return len(self.basis)

    def multiply(self, x: tuple[int, int, int], y: tuple[int, int, int]):
        v, a, b = x
        w, c, d = y
        if b != c or v + w >= self.N:
            return None
        return (v + w, a, d)

    @cached_property
    def generators(self) -> tuple[tuple[int, int, int], ...]:
        """Algebra generators besides the diagonal idempotents E_aa.

        Lowering units E_{a+1,a}, raising units inside a block, s E_aa and
        the corner s^f E_{1n}.  ``generated_dimension`` checks they suffice.
        """
        o = self.order
        n = o.n
        gens = [(0, a + 1, a) for a in range(n - 1)]
        gens += [(0, a, a + 1) for a in range(n - 1) if o.block_of[a] == o.block_of[a + 1]]
        gens += [(1, a, a) for a in range(n)]
        gens.append((o.floor(0, n - 1), 0, n - 1))
        return tuple(gens)

    def generated_dimension(self) -> int:
        """Dimension of the subalgebra generated by idempotents and ``generators``."""
        span = {(0, a, a) for a in range(self.order.n)} | set(self.generators)
        frontier = set(span)
        while frontier:
            new = set()
            for x in frontier:
                for y in self.generators:
                    for z in (self.multiply(x, y), self.multiply(y, x)):
                        if z is not None and z not in span:
                            new.add(z)
            span |= new
            frontier = new
        return len(span)

    def check_module(self, M: ColumnModule):
        if not (M.top.is_stable(self.order) and M.bottom.is_stable(self.order)):
            raise ValueError(f"{M.label or M} is not a module over the order")
        if M.loewy_length > self.N:
            raise ValueError(f"{M.label or M} is not killed by s^{self.N}")

    def hom_basis(self, A: ColumnModule, B: ColumnModule) -> tuple[list[dict], list]:
        """Basis of Hom(A, B) as sparse vectors over the unknowns.

        Commuting with the idempotents E_aa forces maps to preserve rows, so
        the unknowns are X[(a,w),(a,v)] for basis vectors of A and B in the
        same row a.  Each generator s^k E_ab then imposes
        X · rho_A(g) = rho_B(g) · X.
        """
        self.check_module(A)
        self.check_module(B)
        unknowns = []
        uidx = {}
        for a in range(self.order.n):
            for j in B.rows(a):
                for i in A.rows(a):
                    uidx[(j, i)] = len(unknowns)
                    unknowns.append((j, i))
        p = self.field.p
        equations = []
        for k, a, b in self.generators:
            # rho(g) sends basis (b, v) to (a, v + k), or to 0 past the bottom
            for i in A.rows(b):
                _, v = A.basis[i]
                ai = A.index.get((a, v + k))
                for j in B.rows(a):
                    eq = {}
                    if ai is not None:
                        eq[uidx[(j, ai)]] = 1
                    _, w = B.basis[j]
                    src = B.index.get((b, w - k))
                    if src is not None and w - k >= B.top.floors[b]:
                        col = uidx[(src, i)]
                        eq[col] = (eq.get(col, 0) - 1) % p
                    eq = {c: x for c, x in eq.items() if x}
                    if eq:
                        equations.append(eq)
        return nullspace_mod_p(equations, len(unknowns), self.field), unknowns


def _as_matrix(vec: dict, unknowns, rows: int, cols: int, p: int) -> np.ndarray:
    m = np.zeros((rows, cols), dtype=np.int64)
    for u, x in vec.items():
        j, i = unknowns[u]
        m[j, i] = x % p
    return m


def _rank_np(m: np.ndarray, p: int) -> int:
    rows = [{j: int(x) for j, x in enumerate(r) if x} for r in m]
    return rank_mod_p(rows, PrimeField(p))


@dataclass(frozen=True)
class OracleResult:
    hom: int
    ext1: int
    hom_via_presentation: int

    def as_pair(self) -> tuple[int, int]:
        return self.hom, self.ext1


def _inclusion(src: ColumnModule, dst: ColumnModule) -> np.ndarray:
    """Matrix of the map src -> dst induced by the lattice inclusion src.top ⊆ dst.top."""
    m = np.zeros((dst.dim, src.dim), dtype=np.int64)
    for i, key in enumerate(src.basis):
        j = dst.index.get(key)
        if j is not None:
            m[j, i] = 1
    return m


def oracle_hom_ext(
    d: BlockOrder,
    N: int,
    module_a: ColumnModule,
    module_b: ColumnModule,
    field: PrimeField | None = None,
) -> OracleResult:
    """Hom and Ext^1 from ``module_a`` to ``module_b`` by explicit linear algebra.

    ``module_a`` must be ``L / L'`` with both lattices projective (stable
    columns), which gives the projective presentation 0 -> L' -> L -> A -> 0.
    Hom(A, B) is computed directly; Ext^1(A, B) is the cokernel of
    Hom(L, B) -> Hom(L', B).  The kernel of that map is reported as well
    so the two Hom computations can be compared.
    """
    field = field or default_field()
    alg = TruncatedAlgebra(d, N, field)
    p = field.p
    top = ColumnModule(module_a.top, module_a.top.shift(N))
    sub = ColumnModule(module_a.bottom, module_a.bottom.shift(N))

    hom_ab, _ = alg.hom_basis(module_a, module_b)
    hom_top, unk_top = alg.hom_basis(top, module_b)
    hom_sub, _ = alg.hom_basis(sub, module_b)

    incl = _inclusion(sub, top)
    images = []
    for vec in hom_top:
        X = _as_matrix(vec, unk_top, module_b.dim, top.dim, p)
        images.append((X @ incl % p).ravel())
    restriction_rank = _rank_np(np.array(images), p) if images else 0
    return OracleResult(
        hom=len(hom_ab),
        ext1=len(hom_sub) - restriction_rank,
        hom_via_presentation=len(hom_top) - restriction_rank,
    )


@dataclass(frozen=True)
class RadicalCheck:
    verified: bool
    exponent: int
    minimal: bool
    failure: tuple[int, int, int] | None = None

    def describe(self) -> str:
        if self.verified:
            return f"I^{self.exponent} = m·Delta verified"
        v, a, b = self.failure
        return f"I^{self.exponent} differs from m·Delta at s^{v} E[{a + 1},{b + 1}]"


def _span_tensor(order: BlockOrder, N: int, floor) -> np.ndarray:
    n = order.n
    out = np.zeros((N, n, n), dtype=bool)
    for a in range(n):
        for b in range(n):
            out[floor(a, b):, a, b] = True
    return out


def _span_product(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Monomial span of all products, truncated at s^N."""
    N = x.shape[0]
    out = np.zeros_like(x)
    xi, yi = x.astype(np.int64), y.astype(np.int64)
    for v in range(N):
        for w in range(N - v):
            out[v + w] |= (xi[v] @ yi[w]) > 0
    return out


def radical_power_check(d: BlockOrder, N: int) -> RadicalCheck:
    """Verify I^e = m·Delta inside Delta / s^N Delta, e the number of blocks."""
    e = d.ramification_index
    if N < e + 1:
        raise ValueError(f"truncation level must be at least {e + 1}")
    rad = _span_tensor(d, N, d.radical_floor)
    target = _span_tensor(d, N, lambda a, b: 1 + d.floor(a, b))
    power = rad
    previous = None
    for _ in range(e - 1):
        previous = power
        power = _span_product(power, rad)
    diff = np.argwhere(power != target)
    minimal = e == 1 or previous is None or not np.array_equal(previous, target)
    if diff.size:
        v, a, b = (int(x) for x in diff[0])
        return RadicalCheck(False, e, minimal, (v, a, b))
    return RadicalCheck(True, e, minimal)


def comparison_table(d: BlockOrder, N: int, field: PrimeField | None = None) -> list[dict]:
    """Closed form vs oracle for every pair of simples and every (S_j, P_1)."""
    rows = []
    for j in range(2, d.t + 1):
        Sj = simple(d, j)
        for i in range(2, d.t + 1):
            oracle = oracle_hom_ext(d, N, Sj, simple(d, i), field)
            closed = hom_ext_simple_pair(d, j, i)
            rows.append({
                "source": f"S{j}", "target": f"S{i}",
                "closed": list(closed), "oracle": list(oracle.as_pair()),
                "agree": closed == oracle.as_pair() and oracle.hom == oracle.hom_via_presentation,
            })
        oracle = oracle_hom_ext(d, N, Sj, truncated_projective(d, 1, N), field)
        closed = rhom_simple_projective(d, j)
        rows.append({
            "source": f"S{j}", "target": "P1",
            "closed": list(closed), "oracle": list(oracle.as_pair()),
            "agree": closed == oracle.as_pair() and oracle.hom == oracle.hom_via_presentation,
        })
    return rows


def parse_blocks(text: str) -> BlockOrder:
    try:
        blocks = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise ValueError(f"bad block list {text!r}") from exc
    return BlockOrder(blocks)


def equal_blocks(n: int, parts: int) -> tuple[int, ...]:
    """``parts`` block sizes, as equal as possible, summing to n (larger first)."""
    if parts < 1 or n < parts:
        raise ValueError(f"cannot split {n} into {parts} positive blocks")
    q, r = divmod(n, parts)
    return tuple(q + 1 if i < r else q for i in range(parts))


def all_block_orders(max_t: int, max_block: int) -> list[BlockOrder]:
    out = []
    for t in range(1, max_t + 1):
        combos = [()]
        for _ in range(t):
            combos = [c + (b,) for c in combos for b in range(1, max_block + 1)]
        out.extend(BlockOrder(c) for c in combos)
    return out

