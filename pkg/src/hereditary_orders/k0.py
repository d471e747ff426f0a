"""Grothendieck group ranks, the tilting verdict and the classification report."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Union

from .p1 import HomExtTable, SheafOrderSpec


@dataclass(frozen=True)
class K0Result:
    rank: int | None
    finitely_generated: bool
    decomposition: str

    def to_json(self) -> dict:
        return {"rank": self.rank, "fg": self.finitely_generated, "decomposition": self.decomposition}


def k0_rank(spec: SheafOrderSpec, genus: int = 0) -> K0Result:
    """K_0 of a hereditary order on P^1: the base contributes Z^2, each point e_i - 1."""
    if genus != 0:
        raise ValueError("K_0 rank is only defined over a base of genus 0")
    r = sum(x - 1 for x in spec.e)
    return K0Result(2 + r, True, f"Z^2 + Z^{r}")


@dataclass(frozen=True)
class TiltingVerdict:
    tilting: bool
    failed: tuple[str, ...]
    reasons: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.tilting

    def to_json(self) -> dict:
        return {"tilting": self.tilting, "failed": list(self.failed), "reasons": list(self.reasons)}


def verify_tilting(table: HomExtTable, spec: SheafOrderSpec) -> TiltingVerdict:
    """Check (a) no Ext^1, (b) strongly exceptional order, (c) count = K_0 rank.

    All failing conditions are reported, each with its first offending entry.
    """
    failed, reasons = [], []
    labels = table.labels
    n = table.size

    bad = next(((a, b) for a in range(n) for b in range(n) if table.entries[a][b][1] != 0), None)
    if bad:
        a, b = bad
        failed.append("a")
        reasons.append(f"(a) Ext^1({labels[a]}, {labels[b]}) = {table.entries[a][b][1]} is nonzero")

    bad = next((a for a in range(n) if table.entries[a][a][0] != 1), None)
    if bad is None:
        bad2 = next(((a, b) for a in range(n) for b in range(a + 1, n) if table.entries[a][b][0] != 0), None)
        if bad2:
            a, b = bad2
            failed.append("b")
            reasons.append(f"(b) Hom({labels[a]}, {labels[b]}) = {table.entries[a][b][0]} points forward")
    else:
        failed.append("b")
        reasons.append(f"(b) End({labels[bad]}) has dimension {table.entries[bad][bad][0]}, not 1")

    rank = k0_rank(spec).rank
    if n != rank:
        failed.append("c")
        reasons.append(f"(c) count {n} != rank {rank}")

    return TiltingVerdict(not failed, tuple(failed), tuple(reasons))


# ---------------------------------------------------------------------------
# classification


@dataclass(frozen=True)
class HereditaryAlgebra:
    vertices: int | None = None


@dataclass(frozen=True)
class CyclicQuiver:
    """Cyclically oriented quiver of type A~_n, so n + 1 vertices."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a cyclic quiver needs at least one vertex")


@dataclass(frozen=True)
class SheafOrder:
    spec: SheafOrderSpec
    genus: int = 0

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("genus must be nonnegative")


@dataclass(frozen=True)
class FiniteLengthInfiniteSimples:
    pass


CategoryDescriptor = Union[HereditaryAlgebra, CyclicQuiver, SheafOrder, FiniteLengthInfiniteSimples]

_KINDS = {
    "HereditaryAlgebra": HereditaryAlgebra,
    "CyclicQuiver": CyclicQuiver,
    "SheafOrder": SheafOrder,
    "FiniteLengthInfiniteSimples": FiniteLengthInfiniteSimples,
}


def descriptor_from_json(data: str | dict) -> CategoryDescriptor:
    if isinstance(data, str):
        data = json.loads(data)
    kind = data.get("kind") if isinstance(data, dict) else None
    if kind not in _KINDS:
        raise ValueError(f"descriptor kind must be one of {sorted(_KINDS)}")
    if kind == "HereditaryAlgebra":
        v = data.get("vertices")
        return HereditaryAlgebra(None if v is None else int(v))
    if kind == "CyclicQuiver":
        return CyclicQuiver(int(data["n"]))
    if kind == "SheafOrder":
        return SheafOrder(SheafOrderSpec.from_json(data.get("spec", {"e": data.get("e", [])})), int(data.get("genus", 0)))
    return FiniteLengthInfiniteSimples()


def descriptor_to_json(d: CategoryDescriptor) -> dict:
    if isinstance(d, HereditaryAlgebra):
        return {"kind": "HereditaryAlgebra", "vertices": d.vertices}
    if isinstance(d, CyclicQuiver):
        return {"kind": "CyclicQuiver", "n": d.n}
    if isinstance(d, SheafOrder):
        return {"kind": "SheafOrder", "spec": d.spec.to_json(), "genus": d.genus}
    return {"kind": "FiniteLengthInfiniteSimples"}


@dataclass(frozen=True)
class ClassificationReport:
    finitely_generated: bool
    rank: int | None
    has_tilting_object: bool
    case: str
    reasons: tuple[str, ...]

    def to_json(self) -> dict:
        return {
            "fg": self.finitely_generated,
            "rank": self.rank,
            "tilting": self.has_tilting_object,
            "case": self.case,
            "reasons": list(self.reasons),
        }


def classify(d: CategoryDescriptor) -> ClassificationReport:
    """Place a hereditary category in one of four cases.

    (i)   coherent sheaves of a hereditary order on P^1;
    (ii)  modules over a finite dimensional hereditary algebra;
    (iii) finite dimensional reps of a cyclically oriented A~_n;
    (iv)  derived equivalent to finite length with infinitely many simples.
    """
    if isinstance(d, SheafOrder):
        if d.genus > 0:
            return ClassificationReport(
                False, None, False, "(i)",
                ("the Jacobian of a positive-genus curve has infinitely generated k-points",
                 "so K_0 is not finitely generated and no tilting object exists"),
            )
        table_rank = k0_rank(d.spec).rank
        return ClassificationReport(
            True, table_rank, True, "(i)",
            ("base curve is P^1, contributing Z^2",
             f"each ramification point adds e_i - 1 to the rank, giving {table_rank}",
             "arm simples together with E and E(-1) form a tilting object"),
        )
    if isinstance(d, HereditaryAlgebra):
        return ClassificationReport(
            True, d.vertices, True, "(ii)",
            ("K_0 is free on the simple modules",
             "the regular module is a tilting object"),
        )
    if isinstance(d, CyclicQuiver):
        return ClassificationReport(
            True, d.n + 1, False, "(iii)",
            ("nilpotent representations of a cyclically oriented quiver form a finite length category",
             f"K_0 is free on the {d.n + 1} simples",
             "every object has finite length, so no object generates the derived category"),
        )
    return ClassificationReport(
        False, None, False, "(iv)",
        ("infinitely many simple objects give a K_0 that is not finitely generated",
         "without finite generation there is no tilting object"),
    )
