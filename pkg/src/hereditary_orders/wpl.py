"""Graded rings of weighted projective lines and their order-side counterpart.

Two H-graded rings are compared degree by degree:

* the weighted-projective-line ring
  ``k[x_1..x_t] / (x_i^{e_i} - x_2^{e_2} + lambda_i x_1^{e_1}), i >= 3``,
  whose graded pieces have the normal monomials (exponent of x_i below
  e_i for i >= 3) as a basis;
* the ring of sections attached to a hereditary order, whose piece of
  degree p_1 h_1 + ... + p_t h_t (p in N^t) is the space of global
  sections of O(sum floor(p_i / e_i) x_i) on P^1.

``oracle_hilbert`` recomputes the first side with no normal-form
assumption, by ranking the relation span over F_p.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from .exact_linalg import PrimeField, default_field, rank_mod_p
from .grading import GradingGroup, GroupElement, check_weights
from .p1 import Point, format_point, parse_point, sheaf_cohomology_line

Mobius = tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]


def _homogeneous(x: Point) -> tuple[Fraction, Fraction]:
    return (Fraction(1), Fraction(0)) if x is None else (Fraction(x), Fraction(1))


def apply_mobius(m: Mobius, x: Point) -> Point:
    a, b = _homogeneous(x)
    num = m[0][0] * a + m[0][1] * b
    den = m[1][0] * a + m[1][1] * b
    return None if den == 0 else num / den


def normalizing_mobius(points: Sequence[Point]) -> Mobius:
    """Möbius map sending x_1 -> inf, x_2 -> 0, x_3 -> 1 (as many as exist)."""
    pts = [parse_point(x) for x in points]
    one, zero = Fraction(1), Fraction(0)
    if len(pts) == 0:
        return ((one, zero), (zero, one))
    a1, b1 = _homogeneous(pts[0])
    if len(pts) == 1:
        # any map with x_1 -> inf
        return ((one, zero), (zero, one)) if pts[0] is None else ((zero, one), (one, -a1))
    a2, b2 = _homogeneous(pts[1])
    # numerator vanishes at x_2, denominator at x_1
    num = (b2, -a2)
    den = (b1, -a1)
    c = one
    if len(pts) >= 3:
        a3, b3 = _homogeneous(pts[2])
        c = (den[0] * a3 + den[1] * b3) / (num[0] * a3 + num[1] * b3)
    return ((c * num[0], c * num[1]), den)


def normalize_points(points: Sequence) -> tuple[tuple[Point, ...], Mobius]:
    pts = [parse_point(x) for x in points]
    if len(set(pts)) != len(pts):
        raise ValueError("ramification points must be distinct")
    m = normalizing_mobius(pts)
    return tuple(apply_mobius(m, x) for x in pts), m


def lambda_from_points(points: Sequence) -> tuple[Fraction, ...]:
    """lambda_i for i >= 3 after moving (x_1, x_2, x_3) to (inf, 0, 1)."""
    normalized, _ = normalize_points(points)
    return tuple(normalized[2:]) if len(normalized) >= 3 else ()


@dataclass(frozen=True)
class GradedRingSpec:
    weights: tuple[int, ...]
    lambdas: tuple[Fraction, ...] = ()
    group: GradingGroup = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        e = check_weights(self.weights)
        lam = tuple(Fraction(x) for x in self.lambdas)
        t = len(e)
        if t <= 2 and lam:
            raise ValueError("no lambda parameters exist for t <= 2")
        if t >= 3:
            if len(lam) != t - 2:
                raise ValueError(f"{t} weights need {t - 2} lambda parameters")
            if lam[0] != 1:
                raise ValueError("lambda_3 must be 1")
            if any(x == 0 for x in lam) or len(set(lam)) != len(lam):
                raise ValueError("lambda parameters must be nonzero and pairwise distinct")
        object.__setattr__(self, "weights", e)
        object.__setattr__(self, "lambdas", lam)
        object.__setattr__(self, "group", GradingGroup(e))

    @classmethod
    def from_points(cls, weights: Sequence[int], points: Sequence | None = None) -> "GradedRingSpec":
        e = tuple(weights)
        if points is None or len(points) == 0:
            from .p1 import default_points

            points = default_points(len(e))
        if len(points) != len(e):
            raise ValueError(f"{len(points)} points given for {len(e)} weights")
        return cls(e, lambda_from_points(points))

    @property
    def t(self) -> int:
        return len(self.weights)

    def generator_degrees(self) -> tuple[GroupElement, ...]:
        """Degrees of the polynomial generators of the comparison ring."""
        H = self.group
        if self.t == 0:
            return (H.gen(1), H.gen(1))
        if self.t == 1:
            return (H.gen(1), H.gen(1) * self.weights[0])
        return tuple(H.gen(i) for i in range(1, self.t + 1))

    def exponent_bounds(self) -> tuple[int | None, ...]:
        if self.t <= 2:
            return (None,) * len(self.generator_degrees())
        return (None, None) + self.weights[2:]

    def relations(self) -> list[dict[tuple[int, ...], Fraction]]:
        """x_i^{e_i} - x_2^{e_2} + lambda_i x_1^{e_1} as {exponent: coefficient}."""
        out = []
        e = self.weights
        for i in range(2, self.t):
            def mono(k, power):
                v = [0] * self.t
                v[k] = power
                return tuple(v)

            out.append({mono(i, e[i]): Fraction(1), mono(1, e[1]): Fraction(-1), mono(0, e[0]): self.lambdas[i - 2]})
        return out


def monomials_of_degree(
    degrees: Sequence[GroupElement], h: GroupElement, bounds: Sequence[int | None] | None = None
) -> Iterator[tuple[int, ...]]:
    """Exponent vectors a with sum a_i deg_i == h, optionally a_i < bounds[i]."""
    target = h.phi
    if target < 0:
        return
    f = [d.phi for d in degrees]
    if any(x <= 0 for x in f):
        raise ValueError("generator degrees must have positive phi")
    k = len(degrees)
    bounds = list(bounds) if bounds is not None else [None] * k

    def rec(i, remaining, acc):
        if i == k:
            if remaining == 0:
                yield acc
            return
        top = remaining // f[i]
        if bounds[i] is not None:
            top = min(top, bounds[i] - 1)
        for a in range(top + 1):
            yield from rec(i + 1, remaining - a * f[i], acc + (a,))

    H = h.group
    for a in rec(0, target, ()):
        deg = H.zero()
        for ai, d in zip(a, degrees):
            deg = deg + d * ai
        if deg == h:
            yield a


def hilbert_wpl(spec: GradedRingSpec, h: GroupElement) -> int:
    """Number of normal monomials of degree h."""
    return sum(1 for _ in monomials_of_degree(spec.generator_degrees(), h, spec.exponent_bounds()))


def hilbert_order_side(weights: Sequence[int], h: GroupElement) -> int:
    """dim of the degree-h piece of the ring of sections.

    Every p in N^t of degree h labels the same subspace (the relations of
    the ambient ring identify the pieces), so the dimension is the common
    value of h^0(O(sum floor(p_i/e_i) x_i)) over those p, or 0 when no such
    p exists.  The common value is checked rather than assumed.
    """
    e = check_weights(weights)
    H = h.group
    if H.weights != e:
        raise ValueError("degree belongs to a different grading group")
    if not e:
        return sheaf_cohomology_line(h.coeffs[0])[0]
    values = set()
    for p in H.nonnegative_vectors(h):
        divisor_degree = sum(pi // ei for pi, ei in zip(p, e))
        values.add(sheaf_cohomology_line(divisor_degree)[0])
    if len(values) > 1:
        raise ArithmeticError(f"degree {h} gets inconsistent dimensions {sorted(values)}")
    return values.pop() if values else 0


def oracle_hilbert(
    spec: GradedRingSpec,
    h: GroupElement,
    field: PrimeField | None = None,
    phi_bound: int = 40,
) -> int:
    """dim R_h as (#monomials) - rank(relation multiples), ranked over F_p."""
    if h.phi > phi_bound:
        raise ValueError(f"phi(h) = {h.phi} exceeds the configured bound {phi_bound}")
    field = field or default_field()
    degrees = spec.generator_degrees()
    monos = list(monomials_of_degree(degrees, h))
    if spec.t <= 2 or not monos:
        return len(monos)
    col = {m: k for k, m in enumerate(monos)}
    shift = spec.group.c
    rows = []
    for mult in monomials_of_degree(degrees, h - shift):
        for rel in spec.relations():
            row = {}
            for expo, coeff in rel.items():
                target = tuple(a + b for a, b in zip(mult, expo))
                k = col[target]
                row[k] = (row.get(k, 0) + field.reduce(coeff)) % field.p
            rows.append(row)
    return len(monos) - rank_mod_p(rows, field)


@dataclass(frozen=True)
class HilbertRow:
    degree: tuple[int, ...]
    phi: int
    dim_wpl: int
    dim_order: int
    dim_oracle: int | None = None

    @property
    def match(self) -> bool:
        ok = self.dim_wpl == self.dim_order
        if self.dim_oracle is not None:
            ok = ok and self.dim_oracle == self.dim_wpl
        return ok

    def to_json(self) -> dict:
        out = {
            "degree": list(self.degree),
            "phi": self.phi,
            "dim_wpl": self.dim_wpl,
            "dim_order": self.dim_order,
            "match": self.match,
        }
        if self.dim_oracle is not None:
            out["dim_oracle"] = self.dim_oracle
        return out


@dataclass(frozen=True)
class HilbertReport:
    weights: tuple[int, ...]
    points: tuple[Point, ...]
    normalized_points: tuple[Point, ...]
    lambdas: tuple[Fraction, ...]
    rows: tuple[HilbertRow, ...]

    @property
    def match(self) -> bool:
        return all(r.match for r in self.rows)

    @property
    def first_mismatch(self) -> HilbertRow | None:
        return next((r for r in self.rows if not r.match), None)

    def to_json(self) -> dict:
        bad = self.first_mismatch
        return {
            "e": list(self.weights),
            "points": [format_point(x) for x in self.points],
            "normalized_points": [format_point(x) for x in self.normalized_points],
            "lambda": [str(x) for x in self.lambdas],
            "match": self.match,
            "first_mismatch": bad.to_json() if bad else None,
            "rows": [r.to_json() for r in self.rows],
        }


def hilbert_rows(
    spec: GradedRingSpec,
    phi_bound: int,
    with_oracle: bool = False,
    field: PrimeField | None = None,
) -> tuple[HilbertRow, ...]:
    H = spec.group
    rows = []
    for h in H.canonical_elements(0, phi_bound):
        rows.append(HilbertRow(
            degree=h.canonical,
            phi=h.phi,
            dim_wpl=hilbert_wpl(spec, h),
            dim_order=hilbert_order_side(spec.weights, h),
            dim_oracle=oracle_hilbert(spec, h, field, phi_bound) if with_oracle else None,
        ))
    rows.sort(key=lambda r: (r.phi, r.degree))
    return tuple(rows)


def verify_hilbert_match(
    weights: Sequence[int],
    points: Sequence | None = None,
    phi_bound: int = 12,
    with_oracle: bool = False,
    field: PrimeField | None = None,
) -> HilbertReport:
    """Compare both Hilbert functions at every degree with 0 <= phi <= phi_bound."""
    if phi_bound < 1:
        raise ValueError("phi bound must be at least 1")
    e = check_weights(weights)
    if points is None or len(points) == 0:
        from .p1 import default_points

        points = default_points(len(e))
    pts = tuple(parse_point(x) for x in points)
    normalized, _ = normalize_points(pts)
    spec = GradedRingSpec.from_points(e, pts)
    return HilbertReport(
        weights=e,
        points=pts,
        normalized_points=normalized,
        lambdas=spec.lambdas,
        rows=hilbert_rows(spec, phi_bound, with_oracle, field),
    )


def random_points(t: int, rng: random.Random, spread: int = 50) -> tuple[Point, ...]:
    """t distinct random points of P^1(Q), infinity included with some probability."""
    pts: list[Point] = []
    while len(pts) < t:
        if rng.random() < 0.15:
            x = None
        else:
            x = Fraction(rng.randint(-spread, spread), rng.randint(1, 5))
        if x not in pts:
            pts.append(x)
    return tuple(pts)


def report_json(report: HilbertReport) -> str:
    return json.dumps(report.to_json(), sort_keys=True)
