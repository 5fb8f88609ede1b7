import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from helpers import all_types
from reeder.dynkin import DynkinType, extend
from reeder.errors import UnsupportedFormError, UnsupportedSubsetError
from reeder.forms import inner_form, named_form
from reeder.lattice import (SubgroupSpec, coroot_matrix, embedding_for, embedding_mod2, fundamental_group_order,
                            identity, induced_coloring, matmul, rank_mod2, smith_decomposition, smith_normal_form,
                            torsion_order)

T = DynkinType.parse


def det(m):
    return oracles.det(m)


def check_smith(m):
    f = smith_decomposition(m)
    assert matmul(matmul(f.U, m), f.V) == f.D
    assert abs(det(f.U)) == 1 and abs(det(f.V)) == 1
    d = f.invariant_factors
    for i, row in enumerate(f.D):
        for j, x in enumerate(row):
            if i != j:
                assert x == 0
    assert all(x >= 0 for x in d)
    nonzero = [x for x in d if x]
    assert d[:len(nonzero)] == nonzero
    assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))
    return d


def test_smith_examples():
    assert smith_normal_form(identity(4)) == (1, 1, 1, 1)
    assert smith_normal_form([[2, 0], [0, 3]]) == (1, 6)
    assert smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == (2, 6, 12)
    assert smith_normal_form([[0, 0], [0, 0]]) == (0, 0)
    assert smith_normal_form([[4], [6]]) == (2,)


@pytest.mark.parametrize("seed", range(200))
def test_smith_reconstruction_random(seed):
    rng = random.Random(seed)
    m = [[rng.randint(-9, 9) for _ in range(6)] for _ in range(6)]
    check_smith(m)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 4).flatmap(lambda r: st.integers(1, 4).flatmap(
    lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=r, max_size=r))))
def test_smith_matches_determinantal_divisors(m):
    assert list(check_smith(m)) == oracles.determinantal_divisors(m)


def test_coroot_matrix_examples():
    e8 = T("E8")
    assert coroot_matrix(e8, range(1, 9)) == identity(8)
    m = coroot_matrix(e8, [0, 1, 2, 3, 5, 6, 7, 8])
    assert [row[0] for row in m] == [-c for c in extend(e8).comarks[1:]]
    assert torsion_order(m) == 5
    assert smith_normal_form(m) == (1,) * 7 + (5,)
    assert torsion_order(coroot_matrix(T("D4"), [0, 1, 3, 4])) == 2
    d4 = coroot_matrix(T("D4"), [0, 1, 3, 4])
    assert abs(det(d4)) == 2


def test_dependent_coroots_rejected():
    with pytest.raises(UnsupportedSubsetError):
        torsion_order(coroot_matrix(T("A3"), [0, 1, 2, 3]))


@pytest.mark.parametrize("t", list(all_types(8)), ids=str)
def test_subsets_of_simple_roots_simply_connected(t):
    amb = inner_form(t)
    for r in range(1, t.rank + 1):
        for keep in itertools.combinations(range(1, t.rank + 1), r):
            assert fundamental_group_order(SubgroupSpec(amb, keep)) == 1


@pytest.mark.parametrize("t", list(all_types(8)), ids=str)
def test_odd_pi1_iff_injective_mod2(t):
    amb = inner_form(t)
    n = t.rank
    for drop in itertools.combinations(range(n + 1), 1 if n > 6 else 2):
        keep = [v for v in range(n + 1) if v not in drop]
        try:
            spec = SubgroupSpec(amb, keep, use_extended=True)
            emb = embedding_mod2(spec)
        except UnsupportedSubsetError:
            continue
        assert emb.matrix_mod2 == tuple(tuple(x % 2 for x in r) for r in emb.integer_matrix)
        assert emb(0) == 0
        assert (emb.pi1_order % 2 == 1) == (emb.rank_mod2() == len(keep))
        assert (emb.pi1_order % 2 == 1) == (rank_mod2(emb.columns) == len(keep))
        assert all(f % 2 for f in smith_normal_form(emb.integer_matrix)) == (emb.pi1_order % 2 == 1)


def test_inclusion_embedding():
    spec = SubgroupSpec(named_form("EV"), [1, 2, 4, 5, 6, 7])
    emb = embedding_mod2(spec)
    assert emb.pi1_order == 1
    for j, v in enumerate(spec.subdiagram.order):
        assert emb(1 << (5 - j)) == 1 << (7 - v)


def test_e8_extended_embedding():
    spec = SubgroupSpec(named_form("EVIII"), [v for v in range(9) if v != 4], use_extended=True)
    sub = spec.subdiagram
    emb = embedding_for(sub)
    assert emb.pi1_order == 5 == fundamental_group_order(spec)
    j = sub.order.index(0)
    comarks = extend(T("E8")).comarks
    parity = int("".join(str(c % 2) for c in comarks[1:]), 2)
    assert emb(1 << (len(sub.order) - 1 - j)) == parity
    assert emb.to_json()["matrix"][0][j] == str(-comarks[1])


def test_induced_coloring():
    eviii = SubgroupSpec(named_form("EVIII"), [v for v in range(9) if v != 4], use_extended=True)
    colors = dict(zip(eviii.subdiagram.order, induced_coloring(eviii)))
    assert colors[0] == 0 and colors[7] == 1
    assert sum(colors.values()) == 1
    ev = SubgroupSpec(named_form("EV"), [1, 2, 4, 5, 6, 7])
    sub = ev.subdiagram
    colors = dict(zip(sub.order, induced_coloring(ev)))
    a4 = next(c for c in sub.components if str(c.dtype) == "A4")
    assert [colors[v] for v in a4.vertices].count(1) == 1
    assert colors[7] == 1
    assert 7 in (a4.vertices[0], a4.vertices[-1])   # black at an end of the path: A4^(1)
    compact = SubgroupSpec(inner_form(T("E8")), range(0, 8), use_extended=True)
    assert set(induced_coloring(compact)) == {0}
    evii = SubgroupSpec(named_form("EVII"), range(0, 7), use_extended=True)
    assert induced_coloring(evii)[evii.subdiagram.order.index(0)] == 1


def test_induced_coloring_outer_rejected():
    with pytest.raises(UnsupportedFormError):
        induced_coloring(SubgroupSpec(named_form("EI"), [1, 2]))


def test_subgroup_spec_validation():
    with pytest.raises(UnsupportedSubsetError):
        SubgroupSpec(named_form("EV"), [])
    with pytest.raises(UnsupportedSubsetError):
        SubgroupSpec(named_form("EV"), [0, 1])
    assert SubgroupSpec(named_form("EV"), [3, 1, 1]).keep == (1, 3)
