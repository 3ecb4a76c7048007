import pytest
from hypothesis import given, strategies as st

from hilbert_cores.roots import (COROOT, RootVector, apply_word, braid_order, component_dimension,
                                 dot_reflect, euler_form, fold_T, in_folded_domain, is_positive_root,
                                 make_graph, reflect, size, tits_form, unfold_T)

GRAPHS = [make_graph("D-affine", l) for l in (2, 3, 4, 5)] + [make_graph("C-affine", l) for l in (2, 3, 4)]
GRAPHS.append(make_graph("E6-affine"))


@pytest.mark.parametrize("g", GRAPHS, ids=lambda g: f"{g.kind}-{g.l}")
def test_cartan_shape_and_radical(g):
    n = len(g.nodes)
    a = g.cartan
    for i in range(n):
        assert a[i][i] == 2
        for j in range(n):
            if i != j:
                assert a[i][j] <= 0
                assert (a[i][j] == 0) == (a[j][i] == 0)
    assert all(sum(a[i][j] * g.delta[j] for j in range(n)) == 0 for i in range(n))


@pytest.mark.parametrize("l", [2, 3, 4, 5])
def test_d_affine_delta(l):
    g = make_graph("D-affine", l)
    assert len(g.nodes) == l + 3
    assert g.delta == (1, 1) + (2,) * (l - 1) + (1, 1)
    assert size(g.null()) == 4 * l


def test_graph_examples():
    assert make_graph("D-affine", 2).delta == (1, 1, 2, 1, 1)
    c2 = make_graph("C-affine", 2)
    assert c2.cartan == ((2, -1, 0), (-2, 2, -2), (0, -1, 2))
    e6 = make_graph("E6-affine")
    assert sum(x * x for x in e6.delta) == 24


def test_size_examples():
    d = make_graph("D-affine", 2).vector((2, 1, 3, 2, 2))
    assert size(d) == 13
    assert size(make_graph("C-affine", 2).vector((3, 3, 4), COROOT)) == 13


@pytest.mark.parametrize("g", [GRAPHS[0], GRAPHS[1], GRAPHS[-1]], ids=lambda g: g.kind)
def test_tits_examples(g):
    assert tits_form(g.null()) == 0
    for node in g.nodes:
        assert tits_form(g.simple(node)) == 1


def test_tits_on_staircase_four():
    v = make_graph("E6-affine").vector({"chi0": 1, "X": 1, "std": 1, "psi_std": 1, "psi2_std": 1})
    assert tits_form(v) == 1 == v["chi0"]


def test_euler_form_rejects_folded_graph():
    g = make_graph("C-affine", 2)
    with pytest.raises(ValueError):
        euler_form(g.zero(), g.zero())


def test_reflect_examples():
    g = make_graph("D-affine", 2)
    for node in g.nodes:
        assert reflect(g.simple(node), node) == -g.simple(node)
        assert reflect(g.null(), node) == g.null()
    assert reflect(g.simple("0+"), "1") == g.simple("0+") + g.simple("1")


def test_dot_reflect_examples():
    c = make_graph("C-affine", 2)
    assert dot_reflect(c.zero(COROOT), 0) == c.simple(0, COROOT)
    for k in range(4):
        assert dot_reflect(c.null(COROOT) * k, 0) == c.null(COROOT) * k + c.simple(0, COROOT)
    d = make_graph("D-affine", 3)
    v = d.vector((1, 2, 0, 3, 1, 1))
    for node in d.nodes[1:]:
        assert dot_reflect(v, node) == reflect(v, node)


def test_fold_examples():
    d = make_graph("D-affine", 2)
    c = make_graph("C-affine", 2)
    assert fold_T(d.zero()) == c.zero(COROOT)
    assert fold_T(d.simple("0+")) == c.simple(0, COROOT)
    assert fold_T(d.vector((2, 1, 3, 2, 2))) == c.vector((3, 3, 4), COROOT)
    with pytest.raises(ValueError):
        fold_T(d.simple("0-"))


def test_unfold_rejects_odd_last():
    c = make_graph("C-affine", 2)
    assert unfold_T(c.null(COROOT)) is None
    assert unfold_T(c.vector((3, 3, 4), COROOT)).coeffs == (2, 1, 3, 2, 2)


@st.composite
def folded_vectors(draw):
    l = draw(st.integers(2, 5))
    q = draw(st.integers(0, 1))
    a0, al = draw(st.integers(0, 20)), draw(st.integers(0, 20))
    middle = draw(st.lists(st.integers(0, 20), min_size=l - 1, max_size=l - 1))
    return make_graph("D-affine", l).vector([a0 + q, a0] + middle + [al, al])


@given(folded_vectors())
def test_fold_round_trip(d):
    assert in_folded_domain(d)
    assert unfold_T(fold_T(d)) == d
    assert size(fold_T(d)) == size(d)


def test_positive_root_examples():
    g = make_graph("D-affine", 2)
    assert is_positive_root(g.null())
    assert is_positive_root(g.simple("1"))
    assert not is_positive_root(g.simple("1") * 2)
    assert not is_positive_root(g.zero())


def test_component_dimension_examples():
    g = make_graph("D-affine", 2)
    assert component_dimension(g.null()) == 2
    assert component_dimension(g.vector((1, 1, 1, 0, 0))) == 0
    with pytest.raises(ValueError):
        component_dimension(g.simple("1") * 2)


def test_dot_action_is_involutive_and_braided():
    for g in GRAPHS:
        side = COROOT if g.kind == "C-affine" else "root"
        v = g.vector(range(len(g.nodes)), side)
        n = len(g.nodes)
        for i in range(n):
            assert apply_word(v, [i, i]) == v
            for j in range(n):
                m = braid_order(g, i, j)
                assert apply_word(v, [i, j] * m) == v


def test_root_vector_json_round_trip():
    for g in GRAPHS:
        side = COROOT if g.kind == "C-affine" else "root"
        v = g.vector(range(len(g.nodes)), side)
        assert RootVector.from_json(v.to_json()) == v
    assert make_graph("D-affine", 2).vector((2, 1, 3, 2, 2))["2+"] == 2
