"""Property suites behind ``hilbert-cores verify``.

Each suite returns a list of :class:`Check`; a failing check carries the first
counterexample found.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any, Callable

from . import core_weyl as cw
from .groups import build_group, character_table, decompose, mckay_graph, same_shape, verify_bt_presentation
from .partitions import Partition, enumerate_symmetric_cores, enumerate_symmetric_partitions, r_core, staircase
from .residues import c_residue_rows, e6_constants, res_D, res_E6_table
from .roots import (COROOT, apply_word, braid_order, component_dimension, fold_T, folded_dot, in_folded_domain,
                    make_graph, size, tits_form)

SEED = 20240611
TRIALS = 1000


@dataclass
class Check:
    suite: str
    name: str
    passed: bool
    detail: str = ""
    counterexample: Any = None

    def to_json(self) -> dict:
        return {"suite": self.suite, "property": self.name, "passed": self.passed, "detail": self.detail,
                "counterexample": self.counterexample}


def _first_failure(items, predicate: Callable) -> Any:
    for item in items:
        if not predicate(item):
            return item
    return None


def _check(suite: str, name: str, items, predicate: Callable, detail: str = "") -> Check:
    items = list(items)
    bad = _first_failure(items, predicate)
    return Check(suite, name, bad is None, detail or f"{len(items)} cases",
                 None if bad is None else repr(bad))


# -- residues-oracle -------------------------------------------------------------------

def suite_residues_oracle() -> list[Check]:
    s = "residues-oracle"
    lam = Partition((4, 4, 3, 2))
    checks = [
        Check(s, "golden Res_D(4,4,3,2), l=2", res_D(lam, 2).coeffs == (2, 1, 3, 2, 2), str(res_D(lam, 2))),
        Check(s, "golden C-residue filling of (4,4,3,2), l=2",
              c_residue_rows(lam, 2) == ["0121", "1012", "210", "12"], "/".join(c_residue_rows(lam, 2))),
    ]
    for l in (2, 3):
        table = character_table(build_group("BD", l))
        cases = [mu for n in range(13) for mu in enumerate_symmetric_partitions(n)]
        checks.append(_check(s, f"decompose(BD, l={l}) == res_D for all symmetric lambda of size <= 12", cases,
                             lambda mu: decompose(mu, table) == res_D(mu, l)))
    table = character_table(build_group("BT"))
    e6 = res_E6_table(6)
    checks.append(_check(s, "decompose(BT, staircase(m)) == res_E6(m) for m <= 6", range(7),
                         lambda m: decompose(staircase(m), table) == e6[m]))
    return checks


# -- equivariance ----------------------------------------------------------------------

def random_folded_vector(rng: random.Random, l: int, top: int = 20):
    q = rng.randint(0, 1)
    a0 = rng.randint(0, top - q)
    al = rng.randint(0, top)
    middle = [rng.randint(0, top) for _ in range(l - 1)]
    return make_graph("D-affine", l).vector([a0 + q, a0] + middle + [al, al])


def random_word(rng: random.Random, l: int, max_len: int = 12) -> list[int]:
    return [rng.randint(0, l) for _ in range(rng.randint(0, max_len))]


def fold_equivariance_trial(d, word) -> bool:
    v = fold_T(d)
    for i in word:
        d = folded_dot(d, i)
        if not in_folded_domain(d):
            return False
        v = apply_word(v, [i])
        if fold_T(d) != v or size(d) != size(v):
            return False
    return True


def null_shift_trial(l: int, word, k: int) -> bool:
    g = make_graph("C-affine", l)
    v = apply_word(g.zero(COROOT), word)
    shifted = v + g.null(COROOT) * k
    return apply_word(shifted, list(reversed(word))) == g.null(COROOT) * k


def residue_equivariance_trial(core: Partition, word, l: int) -> bool:
    for i in word:
        image = cw.apply_generator(core, i, l)
        if res_D(image, l) != folded_dot(res_D(core, l), i):
            return False
        core = image
    return True


def suite_equivariance(trials: int = TRIALS, seed: int = SEED) -> list[Check]:
    s = "equivariance"
    rng = random.Random(seed)
    fold_cases, shift_cases, res_cases = [], [], []
    cores = {l: enumerate_symmetric_cores(2 * l, 40) for l in (2, 3, 4)}
    for _ in range(trials):
        l = rng.choice((2, 3, 4))
        fold_cases.append((random_folded_vector(rng, l), random_word(rng, l)))
        shift_cases.append((l, random_word(rng, l), rng.randint(-3, 3)))
        res_cases.append((rng.choice(cores[l]), random_word(rng, l), l))
    exhaustive = [(core, [i], l) for l in (2, 3) for core in cores[l] for i in range(l + 1)]
    return [
        _check(s, "fold_T intertwines the dot actions (and preserves size)", fold_cases,
               lambda c: fold_equivariance_trial(*c)),
        _check(s, "orbit of 0 shifted by k null coroots is the orbit of k null coroots", shift_cases,
               lambda c: null_shift_trial(*c)),
        _check(s, "res_D intertwines the core action with the dot action (random words)", res_cases,
               lambda c: residue_equivariance_trial(*c)),
        _check(s, "res_D intertwines the core action (all cores <= 40, all generators)", exhaustive,
               lambda c: residue_equivariance_trial(*c)),
    ]


# -- e6-identities ---------------------------------------------------------------------

def printed_p1_failures(max_m: int = 399) -> list[int]:
    table = res_E6_table(max_m)
    return [m for m in range(1, max_m + 1, 2)
            if 2 * table[m - 1]["chi0"] + e6_constants(m).e0 - table[m - 1]["psi_std"] != 1]


def suite_e6_identities(max_m: int = 400, max_k: int = 10_000) -> list[Check]:
    s = "e6-identities"
    C = e6_constants
    R = res_E6_table(max_m)
    evens, odds = range(2, max_m + 1, 2), range(1, max_m, 2)
    ks = range(1, max_k + 1)
    return [
        _check(s, "r1: d0(2k+2) + d0(2k) = e0(2k+1) + a(2k+1)", ks,
               lambda k: C(2 * k + 2).d0 + C(2 * k).d0 == C(2 * k + 1).e0 + C(2 * k + 1).a),
        _check(s, "r2: e0(2k-1) + e0(2k+1) = d0(2k)", ks,
               lambda k: C(2 * k - 1).e0 + C(2 * k + 1).e0 == C(2 * k).d0),
        _check(s, "r3: k + 1 = a(2k+1) + a(2k+3)", ks,
               lambda k: k + 1 == C(2 * k + 1).a + C(2 * k + 3).a),
        _check(s, "eqdm0: d0(m) = R(m-1)[chi0] + R(m-1)[X] - 2 R(m-1)[std]", evens,
               lambda m: C(m).d0 == R[m - 1]["chi0"] + R[m - 1]["X"] - 2 * R[m - 1]["std"]),
        _check(s, "eqdm: d(m) = R(m-1)[psi] + R(m-1)[X] - 2 R(m-1)[psi_std]", evens,
               lambda m: C(m).d == R[m - 1]["psi"] + R[m - 1]["X"] - 2 * R[m - 1]["psi_std"]),
        _check(s, "p1 (corrected): 2 R(m-1)[chi0] + e0(m) - R(m-1)[std] = 1", odds,
               lambda m: 2 * R[m - 1]["chi0"] + C(m).e0 - R[m - 1]["std"] == 1),
        Check(s, "p1 (as printed, with psi_std) fails exactly at odd m = 3 mod 6",
              printed_p1_failures(max_m - 1) == [m for m in odds if m % 6 == 3],
              f"{len(printed_p1_failures(max_m - 1))} failures"),
        _check(s, "p2: 2 R(m-1)[psi] + e(m) = R(m-1)[psi_std]", odds,
               lambda m: 2 * R[m - 1]["psi"] + C(m).e == R[m - 1]["psi_std"]),
        _check(s, "p3: 2 R(m-1)[X] + a(m) = R(m-1)[std] + 2 R(m-1)[psi_std]", odds,
               lambda m: 2 * R[m - 1]["X"] + C(m).a == R[m - 1]["std"] + 2 * R[m - 1]["psi_std"]),
        _check(s, "<R(m), R(m)> = R(m)[chi0]", range(max_m + 1),
               lambda m: tits_form(R[m]) == R[m]["chi0"]),
        _check(s, "component through the staircase has dimension 0", range(max_m + 1),
               lambda m: component_dimension(R[m]) == 0),
        _check(s, "size(R(m)) = m(m+1)/2", range(max_m + 1), lambda m: size(R[m]) == m * (m + 1) // 2),
    ]


# -- cores-action ----------------------------------------------------------------------

def braid_holds(core: Partition, i: int, j: int, l: int) -> bool:
    m = braid_order(make_graph("C-affine", l), i, j)
    return cw.act(core, [i, j] * m, l) == core


def suite_cores_action(max_size: int = 40) -> list[Check]:
    s = "cores-action"
    checks = []
    for l in (2, 3):
        cores = enumerate_symmetric_cores(2 * l, max_size)
        pairs = [(c, i) for c in cores for i in range(l + 1)]
        checks.append(_check(s, f"generators are involutions (l={l})", pairs,
                             lambda p: cw.apply_generator(cw.apply_generator(p[0], p[1], l), p[1], l) == p[0]))
        checks.append(_check(s, f"generators keep symmetric {2 * l}-cores (l={l})", pairs,
                             lambda p: (lambda mu: mu.is_symmetric() and r_core(mu, 2 * l) == mu)(
                                 cw.apply_generator(p[0], p[1], l))))
        triples = [(c, i, j) for c in cores if c.size <= 20 for i in range(l + 1) for j in range(i + 1, l + 1)]
        checks.append(_check(s, f"braid relations (l={l})", triples, lambda t: braid_holds(*t, l)))
        checks.append(Check(s, f"orbit of the empty core is every symmetric {2 * l}-core of size <= 30 (l={l})",
                            cw.core_orbit(l, 30) == set(enumerate_symmetric_cores(2 * l, 30))))
        lams = [lam for n in range(21) for lam in enumerate_symmetric_partitions(n)]
        checks.append(_check(s, f"epsilon(res_D(lambda)).core is the {2 * l}-core (l={l})", lams,
                             lambda lam: cw.epsilon(res_D(lam, l)).core == r_core(lam, 2 * l)))
        images = [fold_T(res_D(c, l)) for c in cores]
        checks.append(Check(s, f"fold_T . res_D is injective on cores <= {max_size} (l={l})",
                            len(set(images)) == len(images)))
    return checks


# -- components-bruteforce -------------------------------------------------------------

def suite_components_bruteforce(max_n: int = 24) -> list[Check]:
    s = "components-bruteforce"
    cases = [(n, l) for l in (2, 3, 4) for n in range(max_n + 1)]

    def same_criterion(case) -> bool:
        n, l = case
        lams = enumerate_symmetric_partitions(n)
        return all((res_D(a, l) == res_D(b, l)) == cw.same_component(a, b, l) for a in lams for b in lams)

    return [
        _check(s, f"components(n, l) == brute-force residues for n <= {max_n}", cases,
               lambda c: {r.d for r in cw.components(*c)} == cw.components_bruteforce(*c)
               and len(cw.components(*c)) == len(cw.components_bruteforce(*c))),
        _check(s, "same residue <=> same 2l-core over all pairs", cases, same_criterion),
        _check(s, "dim = 2 wt = (n - size(core)) / 2l", cases,
               lambda c: all(r.dim == 2 * r.wt == (r.n - r.core.size) // (2 * r.l) for r in cw.components(*c))),
    ]


# -- mckay -----------------------------------------------------------------------------

def suite_mckay() -> list[Check]:
    s = "mckay"
    checks = []
    for l in (2, 3, 4):
        g = build_group("BD", l)
        table = character_table(g)  # validates classes and orthogonality
        checks.append(Check(s, f"order(BD_{2 * l}) = {4 * l} with {l + 3} classes",
                            g.order == 4 * l and len(g.classes) == l + 3))
        checks.append(Check(s, f"McKay graph of BD_{2 * l} is D-affine({l})",
                            same_shape(mckay_graph(table), make_graph("D-affine", l))))
    bt = build_group("BT")
    table = character_table(bt)
    checks.append(Check(s, "order(BT) = 24, class sizes 1,1,6,4,4,4,4",
                        bt.order == 24 and sorted(map(len, bt.classes)) == [1, 1, 4, 4, 4, 4, 6]))
    checks.append(Check(s, "BT presentation a^2 = b^3 = c^3 = abc", verify_bt_presentation(bt)))
    checks.append(Check(s, "McKay graph of BT is E6-affine", same_shape(mckay_graph(table), make_graph("E6-affine"))))
    return checks


SUITES: dict[str, Callable[[], list[Check]]] = {
    "residues-oracle": suite_residues_oracle,
    "equivariance": suite_equivariance,
    "e6-identities": suite_e6_identities,
    "cores-action": suite_cores_action,
    "components-bruteforce": suite_components_bruteforce,
    "mckay": suite_mckay,
}


def run_suite(name: str) -> list[Check]:
    if name == "all":
        return [c for suite in SUITES.values() for c in suite()]
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    return SUITES[name]()
