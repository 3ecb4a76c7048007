import dataclasses
from functools import lru_cache

import pytest

from hilbert_cores.cyclotomic import Cyclotomic
from hilbert_cores.groups import (TableMismatch, build_group, character_table, decompose, det, ideal_is_stable,
                                  mckay_graph, order, quotient_trace, same_shape, trace, validate_table,
                                  verify_bt_presentation)
from hilbert_cores.partitions import Partition, enumerate_symmetric_partitions, staircase
from hilbert_cores.residues import res_D, res_E6
from hilbert_cores.roots import make_graph

P = Partition


@lru_cache(maxsize=None)
def table(kind, l=None):
    return character_table(build_group(kind, l))


@pytest.mark.parametrize("l, classes", [(2, 5), (3, 6), (4, 7), (5, 8)])
def test_bd_order_and_classes(l, classes):
    g = table("BD", l).group
    assert g.order == 4 * l
    assert len(g.classes) == classes == l + 3
    assert sorted(len(c) for c in g.classes) == sorted(table("BD", l).class_sizes)
    assert all(det(x) == 1 for x in g.elements)


def test_bt_order_and_classes():
    t = table("BT")
    assert t.group.order == 24
    assert t.class_sizes == (1, 1, 6, 4, 4, 4, 4)
    for col, n in zip(t.columns, t.class_sizes):
        assert len(t.group.class_of(t.representative(col))) == n


def test_bt_presentation():
    g = table("BT").group
    assert verify_bt_presentation(g)
    z = g.named["z"]
    assert z != g.named["1"] and order(z) == 2
    assert order(g.named["b^2"]) == 3


def test_character_values_examples():
    assert table("BD", 2).value("2+", "s") == -1
    assert table("BD", 4).value("4+", "s") == -1
    t3 = table("BD", 3)
    assert t3.value("3+", "s") == Cyclotomic.zeta(t3.group.N, t3.group.N // 4)
    bt = table("BT")
    assert bt.value("X", "a") == -1 and bt.value("X", "1") == 3


@pytest.mark.parametrize("key", [("BD", 2), ("BD", 3), ("BD", 4), ("BT", None)])
def test_orthonormal_rows(key):
    t = table(*key)
    for r in t.rows:
        for s in t.rows:
            assert t.inner(t.row(r), t.row(s)) == (1 if r == s else 0)
    assert sum(t.dim(r) ** 2 for r in t.rows) == t.group.order
    assert [trace(t.representative(c)) for c in t.columns] == list(t.row(t.std))


def test_validate_table_catches_wrong_values():
    t = table("BD", 3)
    values = dict(t.values)
    values["1"], values["2"] = values["2"], values["1"]
    with pytest.raises(TableMismatch):
        validate_table(dataclasses.replace(t, values=values))
    with pytest.raises(TableMismatch):
        validate_table(dataclasses.replace(t, class_sizes=(1, 1, 2, 2, 2, 4)))


def test_quotient_trace_examples():
    for l in (2, 3):
        g = table("BD", l).group
        lam = P((4, 4, 3, 2))
        assert quotient_trace(lam, g.named["1"]) == lam.size
        assert quotient_trace(P((1,)), g.named["w^1"]) == 1
        assert quotient_trace(P((2, 2)), g.named["s"]) == 0


def test_unstable_ideal_rejected():
    g = table("BD", 2).group
    assert not ideal_is_stable(P((2,)), g.named["s"])
    with pytest.raises(ValueError):
        quotient_trace(P((2,)), g.named["s"])
    with pytest.raises(ValueError):
        decompose(P((2,)), table("BD", 2))
    with pytest.raises(ValueError):
        decompose(P((2, 2)), table("BT"))


def test_decompose_examples():
    assert decompose(P((4, 4, 3, 2)), table("BD", 2)).coeffs == (2, 1, 3, 2, 2)
    bt = table("BT")
    assert decompose(staircase(2), bt) == make_graph("E6-affine").vector({"chi0": 1, "std": 1})
    assert decompose(P(), bt) == make_graph("E6-affine").zero()
    assert decompose(P(), table("BD", 3)) == make_graph("D-affine", 3).zero()


@pytest.mark.parametrize("l", [2, 3])
def test_decompose_matches_res_d(l):
    t = table("BD", l)
    for n in range(0, 11):
        for lam in enumerate_symmetric_partitions(n):
            assert decompose(lam, t) == res_D(lam, l)


def test_decompose_matches_res_e6():
    for m in range(5):
        assert decompose(staircase(m), table("BT")) == res_E6(m)


@pytest.mark.parametrize("l", [2, 3, 4])
def test_mckay_bd(l):
    g = mckay_graph(table("BD", l))
    assert same_shape(g, make_graph("D-affine", l))
    if l == 2:
        center = g.nodes.index("1")
        assert {g.nodes[j] for e in g.edges for j in e if center in e} - {"1"} == {"0+", "0-", "2+", "2-"}


def test_mckay_bt():
    g = mckay_graph(table("BT"))
    assert same_shape(g, make_graph("E6-affine"))
    x = g.nodes.index("X")
    assert g.valence(x) == 3


def test_group_size_guard():
    with pytest.raises(ValueError):
        build_group("BD", 1)
    with pytest.raises(ValueError):
        build_group("E8")
