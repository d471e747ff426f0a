"""The rank-one grading group H = <h_1, ..., h_t | e_i h_i = e_j h_j>.

Elements are integer coefficient vectors over the generators.  Two vectors
name the same element when they differ by the relation lattice spanned by
``e_i h_i - e_j h_j``; the canonical representative keeps ``0 <= a_i < e_i``
for every generator except the first.

With no weights at all (``t = 0``) the group is taken to be Z with a single
generator playing the role of ``z``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, reduce
from math import gcd, lcm, prod
from typing import Iterator, Sequence

from .exact_linalg import SmithDecomposition, smith_normal_form, solve_integer_linear


def check_weights(weights: Sequence[int]) -> tuple[int, ...]:
    e = tuple(int(x) for x in weights)
    for x in e:
        if x < 2:
            raise ValueError("ramification index must be ≥ 2")
    return e


@dataclass(frozen=True)
class GradingGroup:
    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", check_weights(self.weights))

    @property
    def t(self) -> int:
        return len(self.weights)

    @property
    def ngens(self) -> int:
        return max(self.t, 1)

    @cached_property
    def relation_matrix(self) -> tuple[tuple[int, ...], ...]:
        e = self.weights
        rows = []
        for i in range(self.t - 1):
            row = [0] * self.t
            row[i], row[i + 1] = e[i], -e[i + 1]
            rows.append(tuple(row))
        return tuple(rows)

    @cached_property
    def snf(self) -> SmithDecomposition:
        return smith_normal_form(self.relation_matrix)

    @property
    def free_rank(self) -> int:
        return self.ngens - self.snf.rank

    @property
    def torsion(self) -> tuple[int, ...]:
        """Nonunit invariant factors: G = ⊕ Z/d."""
        return tuple(d for d in self.snf.d if d > 1)

    @property
    def torsion_order(self) -> int:
        return prod(self.torsion)

    @cached_property
    def phi_values(self) -> tuple[int, ...]:
        if self.t == 0:
            return (1,)
        big = lcm(*self.weights)
        q = [big // x for x in self.weights]
        g = reduce(gcd, q)
        return tuple(x // g for x in q)

    # -- elements ---------------------------------------------------------

    def element(self, *coeffs: int) -> "GroupElement":
        if len(coeffs) == 1 and not isinstance(coeffs[0], int):
            coeffs = tuple(coeffs[0])
        return GroupElement(self, tuple(int(c) for c in coeffs))

    def zero(self) -> "GroupElement":
        return self.element((0,) * self.ngens)

    def gen(self, i: int) -> "GroupElement":
        """The generator h_i, 1-based."""
        if not 1 <= i <= self.ngens:
            raise IndexError(f"generator index {i} out of range")
        c = [0] * self.ngens
        c[i - 1] = 1
        return self.element(c)

    @property
    def z(self) -> "GroupElement":
        return self.element((1,) * self.ngens)

    @property
    def c(self) -> "GroupElement":
        """The common value e_i h_i (the degree of the defining relations)."""
        if self.t == 0:
            raise ValueError("no relation degree without weights")
        return self.gen(1) * self.weights[0]

    def canonical(self, coeffs: Sequence[int]) -> tuple[int, ...]:
        if len(coeffs) != self.ngens:
            raise ValueError(f"expected {self.ngens} coefficients, got {len(coeffs)}")
        if self.t <= 1:
            return tuple(coeffs)
        e = self.weights
        first = coeffs[0] + e[0] * sum(c // w for c, w in zip(coeffs[1:], e[1:]))
        return (first,) + tuple(c % w for c, w in zip(coeffs[1:], e[1:]))

    def in_relation_lattice(self, coeffs: Sequence[int]) -> bool:
        """Membership test through integer linear algebra (no canonical forms)."""
        if self.t <= 1:
            return all(c == 0 for c in coeffs)
        rt = [list(col) for col in zip(*self.relation_matrix)]
        x, _ = solve_integer_linear(rt, list(coeffs))
        return x is not None

    def phi(self, coeffs: Sequence[int]) -> int:
        return sum(a * b for a, b in zip(coeffs, self.phi_values))

    def canonical_elements(self, phi_min: int, phi_max: int) -> Iterator["GroupElement"]:
        """Every element with phi in [phi_min, phi_max], each once, in canonical form."""
        f = self.phi_values
        if self.t <= 1:
            for a in range(phi_min, phi_max + 1):
                if a % f[0] == 0:
                    yield self.element(a // f[0])
            return
        tails = _box(self.weights[1:])
        for tail in tails:
            rest = sum(a * b for a, b in zip(tail, f[1:]))
            lo = -((rest - phi_min) // f[0])
            hi = (phi_max - rest) // f[0]
            for a1 in range(lo, hi + 1):
                yield self.element((a1,) + tail)

    def nonnegative_vectors(
        self, h: "GroupElement", bounds: Sequence[int | None] | None = None
    ) -> Iterator[tuple[int, ...]]:
        """Exponent vectors p in N^t with sum p_i h_i == h.

        Candidates are enumerated by phi-degree, then filtered by equality
        in H.  ``bounds[i]`` (when not None) imposes ``p_i < bounds[i]``.
        """
        target = h.phi
        if target < 0:
            return
        f = self.phi_values
        n = self.ngens
        bounds = list(bounds) if bounds is not None else [None] * n

        def rec(i, remaining, acc):
            if i == n - 1:
                if remaining % f[i] == 0:
                    last = remaining // f[i]
                    if bounds[i] is None or last < bounds[i]:
                        yield acc + (last,)
                return
            top = remaining // f[i]
            if bounds[i] is not None:
                top = min(top, bounds[i] - 1)
            for a in range(top + 1):
                yield from rec(i + 1, remaining - a * f[i], acc + (a,))

        for p in rec(0, target, ()):
            if self.element(p) == h:
                yield p


def _box(bounds: Sequence[int]) -> list[tuple[int, ...]]:
    out = [()]
    for b in bounds:
        out = [x + (a,) for x in out for a in range(b)]
    return out


@dataclass(frozen=True, eq=False)
class GroupElement:
    group: GradingGroup
    coeffs: tuple[int, ...]
    canonical: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "canonical", self.group.canonical(self.coeffs))

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.group.weights == other.group.weights and self.canonical == other.canonical

    def __hash__(self):
        return hash((self.group.weights, self.canonical))

    def __add__(self, other: "GroupElement") -> "GroupElement":
        return self.group.element(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "GroupElement":
        return self.group.element(tuple(-a for a in self.coeffs))

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return self + (-other)

    def __mul__(self, k: int) -> "GroupElement":
        return self.group.element(tuple(k * a for a in self.coeffs))

    __rmul__ = __mul__

    @property
    def phi(self) -> int:
        return self.group.phi(self.coeffs)

    def normalized(self) -> "GroupElement":
        return self.group.element(self.canonical)

    def __repr__(self):
        terms = [f"{a}h{i + 1}" for i, a in enumerate(self.canonical) if a]
        return "+".join(terms).replace("+-", "-") if terms else "0"


def build_grading_group(weights: Sequence[int]) -> GradingGroup:
    return GradingGroup(tuple(weights))


def canonical_form(g: GroupElement, group: GradingGroup | None = None) -> tuple[int, ...]:
    return (group or g.group).canonical(g.coeffs)


def phi(g: GroupElement, group: GradingGroup | None = None) -> int:
    return (group or g.group).phi(g.coeffs)
