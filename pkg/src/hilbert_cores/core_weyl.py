"""The affine type C Weyl group acting on symmetric 2l-cores, and the component index.

Generators ``s_0, ..., s_l`` act on a symmetric ``2l``-core by adding every
addable box of C-residue ``i`` or removing every removable one.  On the root
side the same generators act through :func:`roots.folded_dot`, and
``fold_T . res_D`` intertwines the two actions.  Walking a folded vector down
to a multiple ``k`` of the null coroot recovers the core, and ``k / 2`` is
the weight of the component.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .partitions import Box, Partition, enumerate_symmetric_cores, enumerate_symmetric_partitions, r_core
from .residues import c_residue, res_D
from .roots import (COROOT, RootVector, component_dimension, dot_reflect, fold_T, in_folded_domain,
                    make_graph, size, unfold_T)


class WalkError(ValueError):
    """The vector is not in the dot-orbit of any nonnegative multiple of the null coroot."""


def addable_removable(lam: Partition, i: int, l: int) -> tuple[set[Box], set[Box]]:
    parts = lam.parts
    addable, removable = set(), set()
    for r in range(len(parts) + 1):
        row = parts[r] if r < len(parts) else 0
        above = parts[r - 1] if r > 0 else None
        if above is None or row < above:
            if c_residue((r, row), l) == i:
                addable.add(Box(r, row))
        if row > 0:
            below = parts[r + 1] if r + 1 < len(parts) else 0
            if below < row and c_residue((r, row - 1), l) == i:
                removable.add(Box(r, row - 1))
    return addable, removable


def _rebuild(lam: Partition, add: Iterable[Box] = (), remove: Iterable[Box] = ()) -> Partition:
    rows = list(lam.parts) + [0]
    for r, _ in add:
        rows[r] += 1
    for r, _ in remove:
        rows[r] -= 1
    return Partition([p for p in rows if p > 0])


def apply_generator(lam: Partition, i: int, l: int) -> Partition:
    if not 0 <= i <= l:
        raise ValueError(f"generator index {i} outside [0, {l}]")
    addable, removable = addable_removable(lam, i, l)
    if addable and removable:
        raise ValueError(f"{lam} has both addable and removable boxes of C-residue {i}: not a symmetric {2 * l}-core")
    if addable:
        return _rebuild(lam, add=addable)
    return _rebuild(lam, remove=removable)


def act(lam: Partition, word: Sequence[int], l: int) -> Partition:
    """Apply the generators of ``word`` left to right."""
    for i in word:
        lam = apply_generator(lam, i, l)
    return lam


def core_orbit(l: int, max_size: int) -> set[Partition]:
    """Breadth-first orbit of the empty partition, truncated to cores of size <= ``max_size``."""
    seen = {Partition()}
    queue = deque(seen)
    while queue:
        lam = queue.popleft()
        for i in range(l + 1):
            mu = apply_generator(lam, i, l)
            if mu.size <= max_size and mu not in seen:
                seen.add(mu)
                queue.append(mu)
    return seen


# -- epsilon ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CoreWalkResult:
    core: Partition
    k: int
    word: tuple[int, ...]


def _is_null_multiple(v: RootVector) -> bool:
    return len(set(v.coeffs)) == 1 and v.coeffs[0] >= 0


def _descend(v: RootVector) -> tuple[RootVector, list[int]] | None:
    word: list[int] = []
    current = size(v)
    while True:
        if _is_null_multiple(v):
            return v, word
        for i in range(len(v.coeffs)):
            w = dot_reflect(v, i)
            if size(w) < current:
                v, current = w, size(w)
                word.append(i)
                break
        else:
            return None
        if current < 0:
            return None


def _bfs(v: RootVector, depth: int) -> tuple[RootVector, list[int]] | None:
    seen = {v.coeffs}
    frontier = [(v, [])]
    for _ in range(depth):
        nxt = []
        for u, word in frontier:
            for i in range(len(u.coeffs)):
                w = dot_reflect(u, i)
                if w.coeffs in seen:
                    continue
                if _is_null_multiple(w):
                    return w, word + [i]
                seen.add(w.coeffs)
                nxt.append((w, word + [i]))
        frontier = nxt
    return None


def walk(v: RootVector) -> CoreWalkResult:
    """Walk a coroot-side C-affine vector down to ``k`` times the null coroot."""
    if v.graph.kind != "C-affine" or v.side != COROOT:
        raise ValueError("walk expects a coroot-side C-affine vector")
    l = v.graph.l
    found = _descend(v)
    if found is None:
        found = _bfs(v, 4 * l + max(size(v), 0))
    if found is None:
        raise WalkError(f"{v} does not reach a multiple of the null coroot")
    end, word = found
    core = act(Partition(), list(reversed(word)), l)
    return CoreWalkResult(core, end.coeffs[0], tuple(word))


def epsilon(d: RootVector) -> CoreWalkResult:
    """Core and null-coroot multiple of a D-affine vector (or an already folded one)."""
    if d.side == COROOT:
        return walk(d)
    if any(c < 0 for c in d.coeffs):
        raise ValueError(f"{d} has negative coefficients")
    return walk(fold_T(d))


def wt(d: RootVector) -> Fraction:
    return Fraction(epsilon(d).k, 2)


# -- components ------------------------------------------------------------------------

@dataclass(frozen=True)
class ComponentRecord:
    n: int
    l: int
    core: Partition
    d: RootVector
    wt: int
    dim: int

    def to_json(self) -> dict:
        return {"n": self.n, "l": self.l, "core": list(self.core.parts),
                "residue": self.d.to_json(), "wt": self.wt, "dim": self.dim}


def component_for_core(core: Partition, n: int, l: int) -> ComponentRecord | None:
    extra = n - core.size
    if extra < 0 or extra % (2 * l):
        return None
    k = extra // (2 * l)
    folded = fold_T(res_D(core, l)) + make_graph("C-affine", l).null(COROOT) * k
    d = unfold_T(folded)
    if d is None:
        return None
    record = ComponentRecord(n, l, core, d, k // 2, component_dimension(d))
    check_record(record)
    return record


def check_record(rec: ComponentRecord) -> None:
    d = rec.d
    assert size(d) == rec.n, rec
    assert in_folded_domain(d), rec
    assert rec.dim == 2 * rec.wt, rec
    assert rec.n - rec.core.size == 4 * rec.l * rec.wt, rec


def components(n: int, l: int) -> list[ComponentRecord]:
    """Components of the fixed locus containing a torus-fixed point, one per admissible core.

    Only cores with ``n - |core|`` divisible by ``4l`` survive the parity check
    in :func:`roots.unfold_T`.
    """
    if n < 0 or l < 2:
        raise ValueError("need n >= 0 and l >= 2")
    out = []
    for core in enumerate_symmetric_cores(2 * l, n):
        rec = component_for_core(core, n, l)
        if rec is not None:
            out.append(rec)
    return out


def components_bruteforce(n: int, l: int) -> set[RootVector]:
    return {res_D(lam, l) for lam in enumerate_symmetric_partitions(n)}


def same_component(mu1: Partition, mu2: Partition, l: int) -> bool:
    if mu1.size != mu2.size:
        raise ValueError(f"sizes differ: {mu1.size} != {mu2.size}")
    return r_core(mu1, 2 * l) == r_core(mu2, 2 * l)


OFF_DOMAIN_WORD = ("0+", "1", "2+")  # s_{2+} s_1 s_{0+}: rightmost letter acts first


def off_domain_family(r: int) -> RootVector:
    """Dot-apply ``s_{2+} s_1 s_{0+}`` to ``r`` times the null root of D-affine(2)."""
    if r < 1:
        raise ValueError("r must be positive")
    g = make_graph("D-affine", 2)
    v = g.null() * r
    for node in OFF_DOMAIN_WORD:
        v = dot_reflect(v, node)
    assert v["2+"] == v["2-"] + 1, v
    assert size(v) == 8 * r + 4, v
    assert component_dimension(v) == 2 * r, v
    assert not in_folded_domain(v)
    return v
