from itertools import product
from math import lcm, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hereditary_orders.grading import GradingGroup, canonical_form, phi

weights = st.lists(st.integers(2, 7), min_size=0, max_size=5).map(tuple)


def test_structure_examples():
    H = GradingGroup((2, 3, 7))
    assert (H.free_rank, H.torsion, H.phi_values) == (1, (), (21, 14, 6))
    H = GradingGroup((2, 2, 2))
    assert (H.free_rank, H.torsion, H.phi_values) == (1, (2, 2), (1, 1, 1))
    H = GradingGroup(())
    assert (H.ngens, H.free_rank, H.phi_values) == (1, 1, (1,))


def test_rejects_small_weight():
    with pytest.raises(ValueError, match="ramification index"):
        GradingGroup((2, 1))


@settings(max_examples=200, deadline=None)
@given(weights)
def test_torsion_order_and_phi(e):
    H = GradingGroup(e)
    assert H.free_rank == 1
    assert H.torsion_order == (prod(e) // lcm(*e) if e else 1)
    assert H.z.phi > 0
    assert any(g.phi == 1 for g in H.canonical_elements(1, 1))
    if e:
        # phi kills the relations
        assert all(H.phi(r) == 0 for r in H.relation_matrix)
        assert len({H.phi(H.c.coeffs)} | {x * f for x, f in zip(e, H.phi_values)}) == 1


@settings(max_examples=200, deadline=None)
@given(weights.filter(lambda e: len(e) >= 2), st.data())
def test_canonical_form_agrees_with_lattice_membership(e, data):
    H = GradingGroup(e)
    vec = st.lists(st.integers(-12, 12), min_size=len(e), max_size=len(e))
    a, b = data.draw(vec), data.draw(vec)
    same = H.element(a) == H.element(b)
    assert same == H.in_relation_lattice([x - y for x, y in zip(a, b)])
    c = H.canonical(a)
    assert H.in_relation_lattice([x - y for x, y in zip(a, c)])
    assert all(0 <= ci < ei for ci, ei in zip(c[1:], e[1:]))


@pytest.mark.parametrize("e", [(2, 2), (2, 3), (2, 2, 2), (3, 3, 3), (2, 4, 6)])
def test_canonical_elements_cover_each_fibre_once(e):
    H = GradingGroup(e)
    B = 8
    elems = list(H.canonical_elements(0, B))
    assert len(set(elems)) == len(elems)
    # every fibre of phi is a coset of the torsion subgroup
    assert len(elems) == (B + 1) * H.torsion_order
    # exhaustive check against a box of raw vectors
    found = {H.element(v) for v in product(range(-6, 7), repeat=len(e)) if 0 <= H.phi(v) <= B}
    assert found <= set(elems)


def test_group_arithmetic():
    H = GradingGroup((2, 2, 2))
    h1, h2, h3 = H.gen(1), H.gen(2), H.gen(3)
    assert h1 * 2 == h2 * 2 == H.c
    assert h1 + h2 - h2 == h1
    assert h1 != h2
    assert (h1 + h2).phi == 2
    assert canonical_form(h2 * 3) == (2, 1, 0)
    assert phi(h3 * 4) == 4
    assert repr(H.zero()) == "0"


def test_nonnegative_vectors():
    H = GradingGroup((2, 2, 2))
    got = sorted(H.nonnegative_vectors(H.gen(1) * 2))
    assert got == [(0, 0, 2), (0, 2, 0), (2, 0, 0)]
    assert list(H.nonnegative_vectors(-H.gen(1))) == []
    for p in got:
        assert H.element(p) == H.gen(1) * 2
