"""Sheaves of hereditary orders on the projective line.

The order is described only by its ramification data: points x_1..x_t,
indices e_i >= 2 and the rank n of the ambient matrix algebra.  Global
Hom/Ext between the summands of

    T = (sum of arm simples S_ij) + E + E(-1)

are computed by first writing down the sheaf Hom and sheaf Ext^1 (local
data at the ramification points, taken from the DVR closed forms; line
bundles away from them) and then taking cohomology on P^1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Sequence

from .dvr import (
    BlockOrder,
    equal_blocks,
    hom_ext_simple_pair,
    hom_projective_simple,
    rhom_simple_projective,
)
from .exact_linalg import characteristic_polynomial, inverse_rational, rank_rational
from .grading import check_weights

Point = Fraction | None  # None is the point at infinity


def parse_point(text) -> Point:
    if text is None:
        return None
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    s = str(text).strip().lower()
    if s in ("inf", "infinity", "∞", "oo"):
        return None
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad point {text!r}") from exc


def format_point(x: Point) -> str:
    return "inf" if x is None else str(x)


def default_points(t: int) -> tuple[Point, ...]:
    """inf, 0, 1, 2, 3, ... ; already in the normalised position."""
    pts: list[Point] = [None]
    pts += [Fraction(k) for k in range(t - 1)]
    return tuple(pts[:t])


def sheaf_cohomology_line(d: int) -> tuple[int, int]:
    """(h^0, h^1) of O(d) on P^1."""
    return max(0, d + 1), max(0, -d - 1)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SheafOrderSpec:
    e: tuple[int, ...]
    points: tuple[Point, ...] = ()
    n: int = 0
    local_blocks: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        e = check_weights(self.e)
        pts = tuple(parse_point(x) for x in self.points) if self.points else default_points(len(e))
        if len(pts) != len(e):
            raise ValueError(f"{len(pts)} points given for {len(e)} ramification indices")
        if len(set(pts)) != len(pts):
            raise ValueError("ramification points must be distinct")
        n = int(self.n) if self.n else max(e, default=1)
        if any(n < x for x in e):
            raise ValueError(f"matrix rank n = {n} is smaller than a ramification index")
        if self.local_blocks:
            blocks = tuple(tuple(int(b) for b in bl) for bl in self.local_blocks)
            if len(blocks) != len(e):
                raise ValueError("one block partition per ramification point is required")
            for bl, x in zip(blocks, e):
                if len(bl) != x or sum(bl) != n or min(bl) < 1:
                    raise ValueError(f"block sizes {bl} do not give index {x} and rank {n}")
        else:
            blocks = tuple(equal_blocks(n, x) for x in e)
        object.__setattr__(self, "e", e)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "local_blocks", blocks)

    @classmethod
    def from_json(cls, data: str | dict) -> "SheafOrderSpec":
        if isinstance(data, str):
            data = json.loads(data)
        if not isinstance(data, dict) or "e" not in data:
            raise ValueError("spec must be a JSON object with an 'e' list")
        return cls(
            e=tuple(data["e"]),
            points=tuple(data.get("points") or ()),
            n=int(data.get("n") or 0),
            local_blocks=tuple(tuple(b) for b in data.get("blocks") or ()),
        )

    def to_json(self) -> dict:
        return {
            "e": list(self.e),
            "points": [format_point(x) for x in self.points],
            "n": self.n,
            "blocks": [list(b) for b in self.local_blocks],
        }

    @property
    def t(self) -> int:
        return len(self.e)

    def local_order(self, i: int) -> BlockOrder:
        """Completion of the order at x_i (1-based), an order with e_i blocks."""
        return BlockOrder(self.local_blocks[i - 1])


@dataclass(frozen=True)
class TiltingSummand:
    kind: str  # "arm", "E" or "E(-1)"
    point: int = 0
    j: int = 0

    @property
    def label(self) -> str:
        return f"S[{self.point},{self.j}]" if self.kind == "arm" else self.kind

    @classmethod
    def parse(cls, label: str) -> "TiltingSummand":
        s = label.strip().replace(" ", "")
        if s in ("E", "E(0)"):
            return cls("E")
        if s in ("E(-1)", "E-1", "E(−1)"):
            return cls("E(-1)")
        if s.startswith("S[") and s.endswith("]"):
            i, j = s[2:-1].split(",")
            return cls("arm", int(i), int(j))
        raise ValueError(f"unknown summand {label!r}")


def tilting_object(spec: SheafOrderSpec) -> tuple[TiltingSummand, ...]:
    """Summands in exceptional order: arms (S_i2..S_ie_i, point by point), E, E(-1)."""
    arms = [TiltingSummand("arm", i, j) for i, ei in enumerate(spec.e, 1) for j in range(2, ei + 1)]
    return tuple(arms) + (TiltingSummand("E"), TiltingSummand("E(-1)"))


# ---------------------------------------------------------------------------
# sheaf Hom, then cohomology


@dataclass(frozen=True)
class SheafTerm:
    """A coherent sheaf up to the data needed for cohomology."""

    kind: str  # "zero", "line", "skyscraper"
    degree: int = 0
    point: int = 0
    length: int = 0

    def cohomology(self) -> tuple[int, int]:
        if self.kind == "line":
            return sheaf_cohomology_line(self.degree)
        if self.kind == "skyscraper":
            return self.length, 0
        return 0, 0

    def describe(self) -> str:
        if self.kind == "line":
            return "O" if self.degree == 0 else f"O({self.degree})"
        if self.kind == "skyscraper":
            return f"O_x{self.point}" + (f"^{self.length}" if self.length != 1 else "")
        return "0"


ZERO = SheafTerm("zero")


def _skyscraper(point: int, length: int) -> SheafTerm:
    return SheafTerm("skyscraper", point=point, length=length) if length else ZERO


def _twist(s: TiltingSummand) -> int:
    return -1 if s.kind == "E(-1)" else 0


def local_rhom(spec: SheafOrderSpec, a: TiltingSummand, b: TiltingSummand) -> tuple[SheafTerm, SheafTerm]:
    """(sheaf Hom, sheaf Ext^1) from a to b."""
    if a.kind != "arm" and b.kind != "arm":
        # Hom_O(E(u), E(v)) = O_X(v - u) by Morita; locally free so no Ext
        return SheafTerm("line", degree=_twist(b) - _twist(a)), ZERO
    if a.kind == "arm" and b.kind == "arm":
        if a.point != b.point:
            return ZERO, ZERO
        hom, ext = hom_ext_simple_pair(spec.local_order(a.point), a.j, b.j)
        return _skyscraper(a.point, hom), _skyscraper(a.point, ext)
    if a.kind == "arm":
        # the stalk of E and of E(-1) at x_i is the projective P_1
        hom, ext = rhom_simple_projective(spec.local_order(a.point), a.j)
        return _skyscraper(a.point, hom), _skyscraper(a.point, ext)
    hom, ext = hom_projective_simple(spec.local_order(b.point), 1, b.j)
    return _skyscraper(b.point, hom), _skyscraper(b.point, ext)


@dataclass(frozen=True)
class HomExtTable:
    summands: tuple[TiltingSummand, ...]
    entries: tuple[tuple[tuple[int, int], ...], ...]
    sheaves: tuple[tuple[str, ...], ...] = field(default=(), compare=False)

    @property
    def size(self) -> int:
        return len(self.summands)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(s.label for s in self.summands)

    def index(self, label: str | TiltingSummand) -> int:
        s = label if isinstance(label, TiltingSummand) else TiltingSummand.parse(label)
        return self.summands.index(s)

    def entry(self, a, b) -> tuple[int, int]:
        return self.entries[self.index(a)][self.index(b)]

    def hom(self, a, b) -> int:
        return self.entry(a, b)[0]

    def ext1(self, a, b) -> int:
        return self.entry(a, b)[1]

    def drop(self, *labels: str | TiltingSummand) -> "HomExtTable":
        gone = {self.index(x) for x in labels}
        keep = [i for i in range(self.size) if i not in gone]
        return HomExtTable(
            tuple(self.summands[i] for i in keep),
            tuple(tuple(self.entries[i][j] for j in keep) for i in keep),
            tuple(tuple(self.sheaves[i][j] for j in keep) for i in keep) if self.sheaves else (),
        )

    def with_entry(self, a, b, value: tuple[int, int]) -> "HomExtTable":
        ia, ib = self.index(a), self.index(b)
        rows = [list(r) for r in self.entries]
        rows[ia][ib] = tuple(value)
        return replace(self, entries=tuple(tuple(r) for r in rows))

    def to_json(self) -> dict:
        return {
            "summands": list(self.labels),
            "hom": [[h for h, _ in row] for row in self.entries],
            "ext1": [[x for _, x in row] for row in self.entries],
        }

    def to_text(self) -> str:
        """Aligned tables: sheaf RHom, then Hom, then Ext^1 (row = source)."""
        blocks = []
        if self.sheaves:
            blocks.append(("RHom sheaf", self.sheaves))
        blocks.append(("Hom", tuple(tuple(str(h) for h, _ in r) for r in self.entries)))
        blocks.append(("Ext^1", tuple(tuple(str(x) for _, x in r) for r in self.entries)))
        out = []
        for title, cells in blocks:
            width = max([len(x) for x in self.labels] + [len(c) for r in cells for c in r] + [len(title)])
            fmt = lambda c: c.rjust(width)  # noqa: E731
            out.append(" | ".join([fmt(title)] + [fmt(x) for x in self.labels]))
            out.append("-+-".join(["-" * width] * (self.size + 1)))
            for lab, row in zip(self.labels, cells):
                out.append(" | ".join([fmt(lab)] + [fmt(c) for c in row]))
            out.append("")
        return "\n".join(out).rstrip() + "\n"


def hom_ext_table(spec: SheafOrderSpec) -> HomExtTable:
    """Global (dim Hom, dim Ext^1) between all summands of the tilting object.

    Ext^1 = H^1(sheaf Hom) + H^0(sheaf Ext^1); higher local Ext vanish since
    the order is hereditary.
    """
    summands = tilting_object(spec)
    entries, sheaves = [], []
    for a in summands:
        row, srow = [], []
        for b in summands:
            hom_sheaf, ext_sheaf = local_rhom(spec, a, b)
            h0, h1 = hom_sheaf.cohomology()
            e0, _ = ext_sheaf.cohomology()
            row.append((h0, h1 + e0))
            srow.append(hom_sheaf.describe())
        entries.append(tuple(row))
        sheaves.append(tuple(srow))
    return HomExtTable(summands, tuple(entries), tuple(sheaves))


def cartan_matrix(table: HomExtTable) -> tuple[tuple[int, ...], ...]:
    """C[a][b] = dim Hom(T_a, T_b) - dim Ext^1(T_a, T_b)."""
    return tuple(tuple(h - x for h, x in row) for row in table.entries)


def is_unitriangular_lower(c: Sequence[Sequence[int]]) -> bool:
    n = len(c)
    return all(c[i][i] == 1 for i in range(n)) and all(
        c[i][j] == 0 for i in range(n) for j in range(i + 1, n)
    )


# ---------------------------------------------------------------------------
# canonical algebra


@dataclass(frozen=True)
class CanonicalQuiver:
    """Source v0, sink vinf, arm i with vertices (i,1)..(i,e_i-1) and e_i arrows."""

    weights: tuple[int, ...]

    @property
    def vertices(self) -> tuple:
        arms = [(i, k) for i, ei in enumerate(self.weights, 1) for k in range(1, ei)]
        return ("v0", *arms, "vinf")

    @property
    def arrows(self) -> tuple[tuple, ...]:
        out = []
        for i, ei in enumerate(self.weights, 1):
            chain = ["v0"] + [(i, k) for k in range(1, ei)] + ["vinf"]
            out += [(chain[k], chain[k + 1]) for k in range(len(chain) - 1)]
        return tuple(out)

    def paths(self, x, y) -> list[tuple[int, ...]]:
        """All paths x -> y as tuples of arrow indices (the trivial path is ())."""
        arrows = self.arrows
        found = []

        def walk(v, acc):
            if v == y:
                found.append(acc)
            for k, (s, t) in enumerate(arrows):
                if s == v:
                    walk(t, acc + (k,))

        walk(x, ())
        return found

    def arm_path(self, i: int) -> tuple[int, ...]:
        start = sum(self.weights[: i - 1])
        return tuple(range(start, start + self.weights[i - 1]))


def _check_lambdas(t: int, lambdas: Sequence) -> tuple[Fraction, ...]:
    lam = tuple(Fraction(x) for x in lambdas)
    if len(lam) != max(t - 2, 0):
        raise ValueError(f"{t} arms need {max(t - 2, 0)} lambda parameters, got {len(lam)}")
    if lam and lam[0] != 1:
        raise ValueError("lambda_3 must be 1")
    if any(x == 0 for x in lam) or len(set(lam)) != len(lam):
        raise ValueError("lambda parameters must be nonzero and pairwise distinct")
    return lam


def canonical_algebra_cartan(weights: Sequence[int], lambdas: Sequence = ()) -> tuple[tuple, tuple]:
    """(vertices, C) with C[x][y] = dim of the path space x -> y modulo the relations.

    Relations: arm_i - arm_2 + lambda_i arm_1 for i >= 3, as elements of the
    path space v0 -> vinf; the ideal they generate is spanned by all
    composites p * rho * q, computed here without assuming anything about
    where those composites land.
    """
    e = check_weights(weights)
    lam = _check_lambdas(len(e), lambdas)
    # fewer than two weights: pad with single-arrow arms
    Q = CanonicalQuiver(e + (1,) * (2 - len(e)))
    relations = []
    for i in range(3, len(e) + 1):
        relations.append({Q.arm_path(i): Fraction(1), Q.arm_path(2): Fraction(-1), Q.arm_path(1): lam[i - 3]})
    verts = Q.vertices
    C = []
    for x in verts:
        row = []
        for y in verts:
            basis = Q.paths(x, y)
            pos = {p: k for k, p in enumerate(basis)}
            span = []
            for rho in relations:
                for pre in Q.paths(x, "v0"):
                    for post in Q.paths("vinf", y):
                        vec = [Fraction(0)] * len(basis)
                        for path, coeff in rho.items():
                            full = pre + path + post
                            if full in pos:
                                vec[pos[full]] += coeff
                        span.append(vec)
            row.append(len(basis) - rank_rational(span))
        C.append(tuple(row))
    return verts, tuple(C)


def summand_vertex(s: TiltingSummand):
    if s.kind == "E":
        return "vinf"
    if s.kind == "E(-1)":
        return "v0"
    return (s.point, s.j - 1)


def canonical_cartan(weights: Sequence[int], lambdas: Sequence = ()) -> tuple[tuple[int, ...], ...]:
    """Canonical-algebra Cartan matrix, rows/columns in tilting-summand order.

    Summand S_ij sits at arm vertex (i, j-1), E at vinf and E(-1) at v0.
    """
    verts, C = canonical_algebra_cartan(weights, lambdas)
    pos = {v: k for k, v in enumerate(verts)}
    order = [pos[summand_vertex(s)] for s in tilting_object(SheafOrderSpec(tuple(weights)))]
    return tuple(tuple(C[a][b] for b in order) for a in order)


def coxeter_polynomial(c: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Characteristic polynomial of -C^T C^{-1}, coefficients from the leading one.

    Invariant under derived equivalence of the underlying algebras.
    """
    n = len(c)
    inv = inverse_rational(c)
    phi = [[-sum(Fraction(c[k][i]) * inv[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    return tuple(int(x) for x in characteristic_polynomial(phi))
