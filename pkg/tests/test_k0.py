import json

import pytest

from hereditary_orders.k0 import (
    CyclicQuiver,
    FiniteLengthInfiniteSimples,
    HereditaryAlgebra,
    SheafOrder,
    classify,
    descriptor_from_json,
    descriptor_to_json,
    k0_rank,
    verify_tilting,
)
from hereditary_orders.p1 import SheafOrderSpec, hom_ext_table


@pytest.mark.parametrize("e, rank", [((2, 3, 7), 11), ((), 2), ((2, 2), 4)])
def test_k0_rank(e, rank):
    res = k0_rank(SheafOrderSpec(e))
    assert res.rank == rank and res.finitely_generated


def test_k0_rank_rejects_genus():
    with pytest.raises(ValueError):
        k0_rank(SheafOrderSpec((2,)), genus=1)


def test_verify_tilting_examples():
    spec = SheafOrderSpec((2, 3, 7))
    table = hom_ext_table(spec)
    assert verify_tilting(table, spec)
    v = verify_tilting(table.drop("E(-1)"), spec)
    assert not v and v.failed == ("c",) and "10 != rank 11" in v.reasons[0]
    v = verify_tilting(table.with_entry("S[3,4]", "E", (0, 1)), spec)
    assert v.failed == ("a",)


def test_verify_tilting_condition_b():
    spec = SheafOrderSpec((2, 2))
    table = hom_ext_table(spec)
    assert verify_tilting(table.with_entry("E", "E(-1)", (1, 0)), spec).failed == ("b",)
    assert verify_tilting(table.with_entry("E", "E", (2, 0)), spec).failed == ("b",)


@pytest.mark.parametrize("e", [(2,), (2, 2, 2), (3, 4)])
def test_dropping_any_summand_fails_count(e):
    spec = SheafOrderSpec(e)
    table = hom_ext_table(spec)
    for label in table.labels:
        v = verify_tilting(table.drop(label), spec)
        assert not v and "c" in v.failed


def test_classify_cases():
    r = classify(CyclicQuiver(4))
    assert (r.finitely_generated, r.has_tilting_object, r.case) == (True, False, "(iii)")
    r = classify(SheafOrder(SheafOrderSpec((2, 2))))
    assert (r.finitely_generated, r.rank, r.has_tilting_object, r.case) == (True, 4, True, "(i)")
    for e in [(), (2, 3, 7)]:
        r = classify(SheafOrder(SheafOrderSpec(e), genus=1))
        assert (r.finitely_generated, r.has_tilting_object) == (False, False)
    r = classify(FiniteLengthInfiniteSimples())
    assert (r.finitely_generated, r.case) == (False, "(iv)")
    r = classify(HereditaryAlgebra(3))
    assert (r.rank, r.has_tilting_object, r.case) == (3, True, "(ii)")
    assert classify(HereditaryAlgebra()).rank is None


@pytest.mark.parametrize(
    "desc",
    [CyclicQuiver(2), HereditaryAlgebra(5), FiniteLengthInfiniteSimples(), SheafOrder(SheafOrderSpec((2, 3)), 2)],
)
def test_descriptor_json_round_trip(desc):
    text = json.dumps(descriptor_to_json(desc))
    assert descriptor_from_json(text) == desc
    assert classify(descriptor_from_json(text)) == classify(desc)


def test_descriptor_validation():
    with pytest.raises(ValueError):
        descriptor_from_json({"kind": "Other"})
    with pytest.raises(ValueError):
        CyclicQuiver(0)
    with pytest.raises(ValueError):
        SheafOrder(SheafOrderSpec(()), genus=-1)
