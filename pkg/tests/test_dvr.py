import pytest

from hereditary_orders.dvr import (
    BlockOrder,
    ColumnModule,
    LatticeColumn,
    TruncatedAlgebra,
    all_block_orders,
    comparison_table,
    delta_tensor_simple,
    equal_blocks,
    hom_projective_simple,
    oracle_hom_ext,
    parse_blocks,
    projective,
    radical_power_check,
    simple,
    simple_dim,
    strongly_exceptional,
    truncated_projective,
)
from hereditary_orders.exact_linalg import PrimeField


def test_floors_and_prefixes():
    d = BlockOrder((1, 2))
    assert (d.t, d.n, d.p(1), d.q(1)) == (2, 3, 1, 2)
    assert [[d.floor(a, b) for b in range(3)] for a in range(3)] == [[0, 1, 1], [0, 0, 0], [0, 0, 0]]
    assert [[d.radical_floor(a, b) for b in range(3)] for a in range(3)] == [[1, 1, 1], [0, 1, 1], [0, 1, 1]]


def test_validation():
    with pytest.raises(ValueError):
        BlockOrder(())
    with pytest.raises(ValueError):
        parse_blocks("1,0")
    with pytest.raises(ValueError):
        parse_blocks("1,x")
    with pytest.raises(IndexError):
        simple(BlockOrder((2,)), 2)
    with pytest.raises(ValueError):
        ColumnModule(LatticeColumn((1,)), LatticeColumn((0,)))


@pytest.mark.parametrize("d", all_block_orders(3, 2))
def test_projectives_are_lattices_and_simples_have_closed_dims(d):
    for i in range(1, d.t + 1):
        assert projective(d, i).is_stable(d)
    for j in range(2, d.t + 1):
        S = simple(d, j)
        assert S.dim == simple_dim(d, j) and S.loewy_length == 1


def test_truncated_algebra_generators_and_modules():
    d = BlockOrder((1, 2, 1))
    alg = TruncatedAlgebra(d, 3, PrimeField(101))
    assert alg.generated_dimension() == alg.dim
    for j in range(2, d.t + 1):
        alg.check_module(simple(d, j))
    alg.check_module(truncated_projective(d, 1, 3))


@pytest.mark.parametrize("blocks", [(1, 1), (1, 2), (2, 1), (1, 1, 1), (2, 1, 1), (1, 1, 1, 1)])
@pytest.mark.parametrize("N", [2, 3])
def test_oracle_matches_closed_forms(blocks, N):
    rows = comparison_table(BlockOrder(blocks), N, PrimeField(101))
    bad = [r for r in rows if not r["agree"]]
    assert not bad, bad


def test_oracle_projective_to_simple():
    d = BlockOrder((1, 1, 1))
    for i in range(1, 4):
        P = truncated_projective(d, i, 3)
        for j in range(2, 4):
            res = oracle_hom_ext(d, 3, P, simple(d, j))
            # P / s^N P is not projective, so only Hom is comparable
            assert res.hom == hom_projective_simple(d, i, j)[0]


def test_oracle_is_independent_of_truncation():
    d = BlockOrder((1, 2, 1))
    tables = [[tuple(r["oracle"]) for r in comparison_table(d, N)] for N in (2, 3, 4)]
    assert tables[0] == tables[1] == tables[2]


@pytest.mark.parametrize("d", all_block_orders(3, 2))
def test_radical_law(d):
    check = radical_power_check(d, d.t + 1)
    assert check.verified and check.minimal, check.describe()


def test_radical_check_needs_room():
    with pytest.raises(ValueError):
        radical_power_check(BlockOrder((1, 1, 1)), 3)


def test_delta_tensor_and_exceptionality():
    d = BlockOrder((1, 1, 1))
    assert delta_tensor_simple(d, 3, 2) is None
    assert delta_tensor_simple(d, 2, 3) == "S2"
    assert strongly_exceptional(d)


def test_equal_blocks():
    assert equal_blocks(7, 3) == (3, 2, 2)
    with pytest.raises(ValueError):
        equal_blocks(2, 3)
