from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hilbert_cores import core_weyl as cw
from hilbert_cores.partitions import (Box, Partition, enumerate_symmetric_cores, enumerate_symmetric_partitions,
                                      is_core, is_symmetric, r_core)
from hilbert_cores.residues import res_D
from hilbert_cores.roots import COROOT, apply_word, fold_T, folded_dot, make_graph
from strategies import symmetric_partitions

P = Partition


def test_addable_removable_examples():
    assert cw.addable_removable(P(), 0, 2) == ({Box(0, 0)}, set())
    assert cw.addable_removable(P((1,)), 1, 2) == ({Box(0, 1), Box(1, 0)}, set())
    assert cw.addable_removable(P((2, 2)), 0, 2) == (set(), {Box(1, 1)})


def test_apply_generator_examples():
    assert cw.apply_generator(P(), 0, 2) == P((1,))
    assert cw.apply_generator(P((1,)), 1, 2) == P((2, 1))
    assert cw.apply_generator(P((2, 1)), 0, 2) == P((2, 2))
    assert cw.act(P(), [0, 1, 0], 2) == P((2, 2))


def test_apply_generator_rejects_non_cores():
    with pytest.raises(ValueError):
        cw.apply_generator(P((2, 1)), 3, 2)
    # not a 4-core, so some residue class has both an addable and a removable box
    lam = P((4, 4, 3, 2))
    bad = [i for i in range(3) if all(cw.addable_removable(lam, i, 2))]
    assert bad
    with pytest.raises(ValueError):
        cw.apply_generator(lam, bad[0], 2)


@pytest.mark.parametrize("l", [2, 3, 4])
def test_generators_are_involutions_on_cores(l):
    for core in enumerate_symmetric_cores(2 * l, 30):
        for i in range(l + 1):
            image = cw.apply_generator(core, i, l)
            assert is_symmetric(image) and is_core(image, 2 * l)
            assert cw.apply_generator(image, i, l) == core
            assert res_D(image, l) == folded_dot(res_D(core, l), i)


@pytest.mark.parametrize("l", [2, 3])
def test_orbit_of_empty_is_all_cores(l):
    assert cw.core_orbit(l, 30) == set(enumerate_symmetric_cores(2 * l, 30))


def test_epsilon_examples():
    g = make_graph("D-affine", 2)
    r = cw.epsilon(g.vector((2, 1, 3, 2, 2)))
    assert (r.core, r.k) == (P((3, 1, 1)), 2)
    assert cw.act(P(), list(reversed(r.word)), 2) == r.core
    r = cw.epsilon(g.null())
    assert (r.core, r.k) == (P(), 2)
    r = cw.epsilon(g.simple("0+"))
    assert (r.core, r.k, r.word) == (P((1,)), 0, (0,))


def test_epsilon_accepts_folded_input():
    c = make_graph("C-affine", 2)
    assert cw.epsilon(c.vector((3, 3, 4), COROOT)).core == P((3, 1, 1))


def test_wt_examples():
    g = make_graph("D-affine", 2)
    for core in enumerate_symmetric_cores(4, 30):
        assert cw.wt(res_D(core, 2)) == 0
    assert cw.wt(g.null()) == 1
    half = cw.wt(make_graph("C-affine", 2).null(COROOT))
    assert half == Fraction(1, 2) and half.denominator != 1


def test_walk_rejects_unreachable():
    c = make_graph("C-affine", 2)
    with pytest.raises(cw.WalkError):
        cw.walk(c.vector((-1, 0, 0), COROOT))


@given(symmetric_partitions())
@settings(max_examples=150)
def test_epsilon_recovers_core(lam):
    for l in (2, 3, 4):
        r = cw.epsilon(res_D(lam, l))
        assert r.core == r_core(lam, 2 * l)
        assert lam.size - r.core.size == 2 * l * r.k
        assert r.k % 2 == 0


def test_components_examples():
    rec, = cw.components(4, 2)
    assert (rec.core, rec.d.coeffs, rec.wt, rec.dim) == (P((2, 2)), (1, 1, 1, 0, 0), 0, 0)
    rec, = cw.components(8, 2)
    assert (rec.core, rec.d.coeffs, rec.wt, rec.dim) == (P(), (1, 1, 2, 1, 1), 1, 2)
    recs = {r.core: (r.d.coeffs, r.wt, r.dim) for r in cw.components(13, 2)}
    assert recs == {P((3, 1, 1)): ((2, 1, 3, 2, 2), 1, 2), P((5, 3, 3, 1, 1)): ((3, 2, 3, 1, 1), 0, 0)}
    rec, = cw.components(0, 2)
    assert (rec.core, rec.wt, rec.dim) == (P(), 0, 0)


def test_components_reject_bad_arguments():
    with pytest.raises(ValueError):
        cw.components(-1, 2)
    with pytest.raises(ValueError):
        cw.components(4, 1)


@pytest.mark.parametrize("l", [2, 3, 4])
def test_components_match_bruteforce(l):
    for n in range(0, 25):
        assert {r.d for r in cw.components(n, l)} == cw.components_bruteforce(n, l)


def test_component_records_are_consistent():
    for l in (2, 3):
        for n in range(0, 41):
            for rec in cw.components(n, l):
                cw.check_record(rec)
                assert rec.n - rec.core.size == 4 * l * rec.wt


def test_record_json():
    rec, = cw.components(8, 2)
    data = rec.to_json()
    assert data["core"] == [] and data["wt"] == 1 and data["dim"] == 2
    assert data["residue"]["coeffs"] == {"0+": 1, "0-": 1, "1": 2, "2+": 1, "2-": 1}


def test_same_component_examples():
    assert cw.same_component(P((4, 2, 1, 1)), P((3, 3, 2)), 2)
    lam = P((4, 4, 3, 2))
    assert cw.same_component(lam, lam, 2)
    assert not cw.same_component(P((5, 2, 1, 1, 1)), P((4, 3, 2, 1)), 2)
    with pytest.raises(ValueError):
        cw.same_component(P((1,)), P((2, 2)), 2)


def test_first_pair_in_distinct_components():
    found = None
    for n in range(0, 25):
        cores = {r_core(lam, 4) for lam in enumerate_symmetric_partitions(n)}
        if len(cores) > 1:
            found = n
            break
    assert found == 10


@pytest.mark.parametrize("r", [1, 2, 3])
def test_example_family(r):
    v = cw.off_domain_family(r)
    assert v["2+"] - v["2-"] == 1


@given(st.lists(st.integers(0, 3), max_size=12))
def test_action_matches_dot_action_on_folded_side(word):
    l = 3
    core = cw.act(P(), word, l)
    v = fold_T(res_D(core, l))
    c = make_graph("C-affine", l)
    assert apply_word(c.zero(COROOT), word) == v
