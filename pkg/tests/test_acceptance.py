"""Acceptance gate: nine criteria, one PASS/FAIL line each.

Run with pytest (lines appear in the terminal summary) or directly with
``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import random
import time
from itertools import combinations_with_replacement, product

from hereditary_orders.dvr import (
    all_block_orders,
    comparison_table,
    radical_power_check,
)
from hereditary_orders.exact_linalg import PrimeField, determinant
from hereditary_orders.grading import GradingGroup
from hereditary_orders.k0 import CyclicQuiver, classify, k0_rank, verify_tilting
from hereditary_orders.p1 import (
    SheafOrderSpec,
    canonical_cartan,
    cartan_matrix,
    hom_ext_table,
    is_unitriangular_lower,
)
from hereditary_orders.wpl import (
    GradedRingSpec,
    hilbert_wpl,
    oracle_hilbert,
    random_points,
    verify_hilbert_match,
)

FIELD = PrimeField(32003)
SEED = 20240601


def weight_sequences(max_t: int, max_e: int):
    for t in range(max_t + 1):
        yield from product(range(2, max_e + 1), repeat=t)


def weight_multisets(max_t: int, max_e: int):
    for t in range(max_t + 1):
        yield from combinations_with_replacement(range(2, max_e + 1), t)


def reference_hom(a, b) -> int:
    """Hom dimensions between the summands as printed in the reference table."""
    if a.kind == "arm":
        if b.kind != "arm":
            return 0
        return 1 if a.point == b.point and b.j <= a.j else 0
    if b.kind == "arm":
        return 1
    return {("E", "E"): 1, ("E", "E(-1)"): 0, ("E(-1)", "E"): 2, ("E(-1)", "E(-1)"): 1}[(a.kind, b.kind)]


REFERENCE_SHEAVES = {("E", "E"): "O", ("E", "E(-1)"): "O(-1)", ("E(-1)", "E"): "O(1)", ("E(-1)", "E(-1)"): "O"}


# ---------------------------------------------------------------------------


def criterion_1():
    checked = 0
    for e in [(2, 3, 7), (2, 2, 2)]:
        table = hom_ext_table(SheafOrderSpec(e))
        for ia, a in enumerate(table.summands):
            for ib, b in enumerate(table.summands):
                hom, ext = table.entries[ia][ib]
                if (hom, ext) != (reference_hom(a, b), 0):
                    return False, f"e={e}: entry ({a.label}, {b.label}) = {(hom, ext)}"
                sheaf = table.sheaves[ia][ib]
                if (a.kind, b.kind) in REFERENCE_SHEAVES and sheaf != REFERENCE_SHEAVES[(a.kind, b.kind)]:
                    return False, f"e={e}: sheaf ({a.label}, {b.label}) = {sheaf}"
                checked += 1
    return True, f"{checked} entries"


def criterion_2():
    count = 0
    for e in weight_sequences(4, 7):
        spec = SheafOrderSpec(e)
        table = hom_ext_table(spec)
        c = cartan_matrix(table)
        rank = k0_rank(spec).rank
        if table.size != rank or rank != 2 + sum(x - 1 for x in e):
            return False, f"e={e}: {table.size} summands, rank {rank}"
        if not verify_tilting(table, spec):
            return False, f"e={e}: not tilting"
        if not is_unitriangular_lower(c) or determinant(c) != 1:
            return False, f"e={e}: Cartan matrix not lower unitriangular"
        count += 1
    return True, f"{count} specs"


def criterion_3():
    count = 0
    for d in all_block_orders(4, 3):
        previous = None
        for N in (2, 3, 4):
            rows = comparison_table(d, N, FIELD)
            bad = next((r for r in rows if not r["agree"]), None)
            if bad:
                return False, f"blocks {d.blocks}, N={N}: {bad}"
            oracle = [tuple(r["oracle"]) for r in rows]
            if previous is not None and oracle != previous:
                return False, f"blocks {d.blocks}: depends on N"
            previous = oracle
            count += len(rows)
    return True, f"{count} entries"


def criterion_4():
    count = 0
    for d in all_block_orders(4, 3):
        for N in (d.t + 1, d.t + 2):
            check = radical_power_check(d, N)
            if not check.verified:
                return False, f"blocks {d.blocks}, N={N}: {check.describe()}"
            count += 1
    return True, f"{count} truncations"


def _lambda_runs(e, rng):
    return [random_points(len(e), rng) for _ in range(3)]


def criterion_5():
    rng = random.Random(SEED)
    count = 0
    for e in weight_sequences(3, 4):
        for pts in _lambda_runs(e, rng):
            rep = verify_hilbert_match(e, pts, 12)
            if not rep.match:
                return False, f"e={e}, points={pts}: {rep.first_mismatch}"
            count += len(rep.rows)
    return True, f"{count} degrees"


def criterion_6():
    rng = random.Random(SEED + 1)
    count = 0
    for e in weight_sequences(3, 4):
        for pts in _lambda_runs(e, rng):
            spec = GradedRingSpec.from_points(e, pts)
            for h in spec.group.canonical_elements(0, 12):
                a, b = hilbert_wpl(spec, h), oracle_hilbert(spec, h, FIELD, 12)
                if a != b:
                    return False, f"e={e}, lambda={spec.lambdas}, h={h}: {a} != {b}"
                count += 1
    return True, f"{count} degrees"


def criterion_7():
    count, agree, first = 0, 0, None
    for e in weight_sequences(4, 5):
        lam = (1, 2)[: max(len(e) - 2, 0)]
        tilt = cartan_matrix(hom_ext_table(SheafOrderSpec(e)))
        if canonical_cartan(e, lam) == tilt:
            agree += 1
        elif first is None:
            first = e
        count += 1
    if first is None:
        return True, f"{count} specs"
    return False, f"{agree}/{count} agree; first difference at e={first}"


def criterion_8():
    count = 0
    for e in weight_sequences(5, 7):
        H = GradingGroup(e)
        if H.free_rank != 1:
            return False, f"e={e}: free rank {H.free_rank}"
        if H.torsion_order != _product(H.torsion) or any(d <= 1 for d in H.torsion):
            return False, f"e={e}: torsion {H.torsion}"
        if H.z.phi <= 0:
            return False, f"e={e}: phi(z) = {H.z.phi}"
        if _gcd(H.phi_values) != 1:
            return False, f"e={e}: phi not surjective"
        count += 1
    return True, f"{count} groups"


def criterion_9():
    for e in [(2, 3, 7), (2, 2, 2), (3,), ()]:
        spec = SheafOrderSpec(e)
        table = hom_ext_table(spec)
        for label in table.labels:
            v = verify_tilting(table.drop(label), spec)
            if v or "c" not in v.failed:
                return False, f"e={e}: dropping {label} kept {v}"
        for a, b in product(table.labels, repeat=2):
            v = verify_tilting(table.with_entry(a, b, (table.hom(a, b), 1)), spec)
            if v or "a" not in v.failed:
                return False, f"e={e}: Ext^1({a},{b}) injection not caught"
    r = classify(CyclicQuiver(4))
    if not (r.finitely_generated and not r.has_tilting_object):
        return False, f"cyclic quiver: {r}"
    return True, "drops, injections and cyclic quiver"


def _product(xs):
    out = 1
    for x in xs:
        out *= x
    return out


def _gcd(xs):
    from math import gcd

    g = 0
    for x in xs:
        g = gcd(g, x)
    return g


CRITERIA = {
    1: ("reference Hom/Ext tables", criterion_1, 1),
    2: ("tilting count, verdict and Cartan for t<=4, e<=7", criterion_2, 30),
    3: ("DVR oracle vs closed forms, N-independent", criterion_3, 60),
    4: ("radical power law", criterion_4, 10),
    5: ("Hilbert series equality", criterion_5, 60),
    6: ("normal monomials vs rank oracle", criterion_6, 120),
    7: ("canonical algebra Cartan equals tilting Cartan", criterion_7, 30),
    8: ("grading group structure", criterion_8, 5),
    9: ("negative controls", criterion_9, 5),
}


def run_criterion(number):
    title, fn, budget = CRITERIA[number]
    start = time.perf_counter()
    ok, detail = fn()
    seconds = time.perf_counter() - start
    if ok and seconds > budget:
        ok, detail = False, f"{detail}; over the {budget}s budget"
    return ok, title, detail, seconds


def _check(number, acceptance_line):
    ok, title, detail, seconds = run_criterion(number)
    acceptance_line(number, ok, title, detail, seconds)
    assert ok, detail


def test_criterion_1(acceptance_line):
    _check(1, acceptance_line)


def test_criterion_2(acceptance_line):
    _check(2, acceptance_line)


def test_criterion_3(acceptance_line):
    _check(3, acceptance_line)


def test_criterion_4(acceptance_line):
    _check(4, acceptance_line)


def test_criterion_5(acceptance_line):
    _check(5, acceptance_line)


def test_criterion_6(acceptance_line):
    _check(6, acceptance_line)


def test_criterion_7(acceptance_line):
    _check(7, acceptance_line)


def test_criterion_8(acceptance_line):
    _check(8, acceptance_line)


def test_criterion_9(acceptance_line):
    _check(9, acceptance_line)


if __name__ == "__main__":
    for k in CRITERIA:
        ok, title, detail, seconds = run_criterion(k)
        print(f"[{'PASS' if ok else 'FAIL'}] criterion {k}: {title} ({seconds:.2f}s) {detail}")
