"""Affine Dynkin diagrams, root vectors, quadratic forms and Weyl actions.

Three diagram kinds are built by :func:`make_graph`:

* ``"D-affine"`` (``l >= 2``): the McKay graph of the binary dihedral group of
  order ``4l``, nodes ``0+, 0-, 1, ..., l-1, l+, l-``;
* ``"C-affine"`` (``l >= 2``): the diagram obtained by folding ``D-affine``
  along the swap of ``0+/0-`` and ``l+/l-``, nodes ``0, ..., l``;
* ``"E6-affine"``: the McKay graph of the binary tetrahedral group.

Coroot-side vectors (only meaningful on ``C-affine``) are reflected with the
transposed Cartan matrix and measured with the marks of the null root.
"""
from __future__ import annotations

import functools
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

ROOT = "root"
COROOT = "coroot"

E6_NODES = ("chi0", "psi", "psi2", "X", "std", "psi_std", "psi2_std")


@dataclass(frozen=True)
class DynkinGraph:
    kind: str
    l: int | None
    nodes: tuple[str, ...]
    cartan: tuple[tuple[int, ...], ...]
    delta: tuple[int, ...]
    triv: str

    def index(self, node: str | int) -> int:
        if isinstance(node, int):
            if not 0 <= node < len(self.nodes):
                raise IndexError(node)
            return node
        try:
            return self.nodes.index(str(node))
        except ValueError:
            raise KeyError(f"{node!r} is not a node of {self.kind}") from None

    @property
    def simply_laced(self) -> bool:
        return all(self.cartan[i][j] in (0, -1) for i in range(len(self.nodes))
                   for j in range(len(self.nodes)) if i != j)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        n = len(self.nodes)
        return tuple((i, j) for i in range(n) for j in range(i + 1, n) if self.cartan[i][j] != 0)

    def valence(self, i: int) -> int:
        return sum(1 for e in self.edges if i in e)

    def oriented_edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as (source, target), pointing toward the endpoint of higher valence
        (ties toward the larger node index)."""
        out = []
        for i, j in self.edges:
            vi, vj = self.valence(i), self.valence(j)
            out.append((i, j) if (vj, j) > (vi, i) else (j, i))
        return tuple(out)

    def marks(self, side: str = ROOT) -> tuple[int, ...]:
        if side == COROOT and self.kind == "C-affine":
            return (1,) + (2,) * (self.l - 1) + (1,)
        return self.delta

    def simple(self, node: str | int, side: str = ROOT) -> RootVector:
        coeffs = [0] * len(self.nodes)
        coeffs[self.index(node)] = 1
        return RootVector(self, tuple(coeffs), side)

    def zero(self, side: str = ROOT) -> RootVector:
        return RootVector(self, (0,) * len(self.nodes), side)

    def null(self, side: str = ROOT) -> RootVector:
        """The null root, or the null coroot ``sum of simple coroots`` on ``C-affine``."""
        if side == COROOT and self.kind == "C-affine":
            return RootVector(self, (1,) * len(self.nodes), side)
        return RootVector(self, self.delta, side)

    def vector(self, coeffs: Sequence[int] | Mapping[str, int], side: str = ROOT) -> RootVector:
        if isinstance(coeffs, Mapping):
            unknown = set(coeffs) - set(self.nodes)
            if unknown:
                raise KeyError(f"unknown nodes {sorted(unknown)}")
            coeffs = [coeffs.get(name, 0) for name in self.nodes]
        return RootVector(self, tuple(int(c) for c in coeffs), side)


@dataclass(frozen=True)
class RootVector:
    graph: DynkinGraph
    coeffs: tuple[int, ...]
    side: str = ROOT

    def __post_init__(self):
        if len(self.coeffs) != len(self.graph.nodes):
            raise ValueError(f"expected {len(self.graph.nodes)} coefficients, got {len(self.coeffs)}")
        if self.side not in (ROOT, COROOT):
            raise ValueError(f"bad side {self.side!r}")

    def __getitem__(self, node: str | int) -> int:
        return self.coeffs[self.graph.index(node)]

    def _check(self, other: RootVector) -> None:
        if other.graph != self.graph or other.side != self.side:
            raise ValueError("root vectors live in different lattices")

    def __add__(self, other: RootVector) -> RootVector:
        self._check(other)
        return RootVector(self.graph, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.side)

    def __sub__(self, other: RootVector) -> RootVector:
        self._check(other)
        return RootVector(self.graph, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)), self.side)

    def __neg__(self) -> RootVector:
        return RootVector(self.graph, tuple(-a for a in self.coeffs), self.side)

    def __mul__(self, k: int) -> RootVector:
        return RootVector(self.graph, tuple(k * a for a in self.coeffs), self.side)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.coeffs)) + ")"

    def as_dict(self) -> dict[str, int]:
        return dict(zip(self.graph.nodes, self.coeffs))

    def to_json(self) -> dict:
        out: dict = {"graph_kind": self.graph.kind}
        if self.graph.l is not None:
            out["l"] = self.graph.l
        if self.side == COROOT:
            out["side"] = COROOT
        out["coeffs"] = self.as_dict()
        return out

    @classmethod
    def from_json(cls, data: Mapping) -> RootVector:
        graph = make_graph(data["graph_kind"], data.get("l"))
        return graph.vector(data["coeffs"], data.get("side", ROOT))


def _d_affine(l: int) -> DynkinGraph:
    nodes = ("0+", "0-") + tuple(str(i) for i in range(1, l)) + (f"{l}+", f"{l}-")
    idx = {name: i for i, name in enumerate(nodes)}
    edges = [("0+", "1"), ("0-", "1"), (str(l - 1), f"{l}+"), (str(l - 1), f"{l}-")]
    edges += [(str(i), str(i + 1)) for i in range(1, l - 1)]
    n = len(nodes)
    cartan = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for a, b in edges:
        cartan[idx[a]][idx[b]] = cartan[idx[b]][idx[a]] = -1
    delta = tuple(1 if name.endswith(("+", "-")) else 2 for name in nodes)
    return DynkinGraph("D-affine", l, nodes, tuple(map(tuple, cartan)), delta, "0+")


def _c_affine(l: int) -> DynkinGraph:
    # a_ij = <beta_i^vee, beta_j> for beta_0 = alpha_0+ + alpha_0-, beta_l = alpha_l+ + alpha_l-
    n = l + 1
    cartan = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(l):
        cartan[i][i + 1] = cartan[i + 1][i] = -1
    cartan[1][0] = -2
    cartan[l - 1][l] = -2
    delta = (1,) + (2,) * (l - 1) + (1,)
    return DynkinGraph("C-affine", l, tuple(str(i) for i in range(n)), tuple(map(tuple, cartan)), delta, "0")


def _e6_affine() -> DynkinGraph:
    edges = [("chi0", "std"), ("std", "X"), ("psi", "psi_std"), ("psi_std", "X"),
             ("psi2", "psi2_std"), ("psi2_std", "X")]
    return simply_laced_graph(E6_NODES, edges, (1, 1, 1, 3, 2, 2, 2), "chi0", kind="E6-affine")


def simply_laced_graph(nodes: Sequence[str], edges: Iterable[tuple[str, str]], delta: Sequence[int],
                       triv: str, kind: str = "simply-laced") -> DynkinGraph:
    nodes = tuple(nodes)
    n = len(nodes)
    cartan = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for a, b in edges:
        i, j = nodes.index(a), nodes.index(b)
        if i == j or cartan[i][j] != 0:
            raise ValueError(f"loop or multiple edge at {a}-{b}")
        cartan[i][j] = cartan[j][i] = -1
    return DynkinGraph(kind, None, nodes, tuple(map(tuple, cartan)), tuple(delta), triv)


@functools.lru_cache(maxsize=None)
def make_graph(kind: str, l: int | None = None) -> DynkinGraph:
    if kind in ("D-affine", "C-affine"):
        if l is None or l < 2:
            raise ValueError(f"{kind} needs l >= 2, got {l}")
        return _d_affine(l) if kind == "D-affine" else _c_affine(l)
    if kind == "E6-affine":
        return _e6_affine()
    raise ValueError(f"unknown diagram kind {kind!r}")


def size(v: RootVector) -> int:
    return sum(m * c for m, c in zip(v.graph.marks(v.side), v.coeffs))


def euler_form(v: RootVector, w: RootVector) -> int:
    """Bilinear Euler form for the canonical orientation (orientation-dependent;
    its diagonal, :func:`tits_form`, is not)."""
    v._check(w)
    if not v.graph.simply_laced:
        raise ValueError(f"Euler form needs a simply-laced diagram, got {v.graph.kind}")
    total = sum(a * b for a, b in zip(v.coeffs, w.coeffs))
    return total - sum(v.coeffs[s] * w.coeffs[t] for s, t in v.graph.oriented_edges())


def tits_form(v: RootVector) -> int:
    return euler_form(v, v)


def reflect(v: RootVector, node: str | int) -> RootVector:
    i = v.graph.index(node)
    a = v.graph.cartan
    n = len(v.coeffs)
    if v.side == ROOT:
        pairing = sum(a[i][j] * v.coeffs[j] for j in range(n))
    else:
        pairing = sum(a[j][i] * v.coeffs[j] for j in range(n))
    coeffs = list(v.coeffs)
    coeffs[i] -= pairing
    return RootVector(v.graph, tuple(coeffs), v.side)


def dot_reflect(v: RootVector, node: str | int) -> RootVector:
    """Linear reflection, shifted by the simple (co)root at the trivial node when
    reflecting in that node."""
    i = v.graph.index(node)
    w = reflect(v, i)
    if i == v.graph.index(v.graph.triv):
        w = w + v.graph.simple(i, v.side)
    return w


def apply_word(v: RootVector, word: Iterable[str | int], dot: bool = True) -> RootVector:
    """Apply generators left to right (the first letter acts first)."""
    step = dot_reflect if dot else reflect
    for node in word:
        v = step(v, node)
    return v


# -- folding D-affine(l) -> C-affine(l) ------------------------------------------------

def paired_nodes(l: int, i: int) -> tuple[str, ...]:
    """D-affine nodes whose reflections make up the folded generator ``s_i``."""
    if i == 0:
        return ("0+", "0-")
    if i == l:
        return (f"{l}+", f"{l}-")
    if 0 < i < l:
        return (str(i),)
    raise ValueError(f"generator index {i} outside [0, {l}]")


def folded_dot(d: RootVector, i: int) -> RootVector:
    """Dot action of the folded generator ``s_i`` on a D-affine vector."""
    return apply_word(d, paired_nodes(d.graph.l, i))


def folded_domain_violation(d: RootVector) -> str | None:
    if d.graph.kind != "D-affine" or d.side != ROOT:
        return f"expected a root-side D-affine vector, got {d.graph.kind}/{d.side}"
    l = d.graph.l
    gap = d["0+"] - d["0-"]
    if not 0 <= gap <= 1:
        return f"0 <= d[0+] - d[0-] <= 1 fails (difference {gap})"
    if d[f"{l}+"] != d[f"{l}-"]:
        return f"d[{l}+] == d[{l}-] fails ({d[f'{l}+']} != {d[f'{l}-']})"
    return None


def in_folded_domain(d: RootVector) -> bool:
    return folded_domain_violation(d) is None


def fold_T(d: RootVector) -> RootVector:
    problem = folded_domain_violation(d)
    if problem:
        raise ValueError(problem)
    l = d.graph.l
    a0, q = d["0-"], d["0+"] - d["0-"]
    middle = tuple(d[str(i)] for i in range(1, l))
    return make_graph("C-affine", l).vector((2 * a0 + q,) + middle + (2 * d[f"{l}+"],), COROOT)


def unfold_T(v: RootVector) -> RootVector | None:
    """Inverse of :func:`fold_T`; ``None`` when the last coordinate is odd."""
    if v.graph.kind != "C-affine" or v.side != COROOT:
        raise ValueError("expected a coroot-side C-affine vector")
    l = v.graph.l
    first, last = v.coeffs[0], v.coeffs[l]
    if last % 2:
        return None
    a0, q = divmod(first, 2)
    coeffs = (a0 + q, a0) + v.coeffs[1:l] + (last // 2, last // 2)
    return make_graph("D-affine", l).vector(coeffs)


# -- roots and dimensions ------------------------------------------------------------

def is_positive_root(v: RootVector) -> bool:
    if not v.graph.simply_laced:
        raise ValueError("positive-root test needs a simply-laced diagram")
    if all(c == 0 for c in v.coeffs) or any(c < 0 for c in v.coeffs):
        return False
    q = tits_form(v)
    if q == 1:
        return True
    if q == 0:
        k, rem = divmod(v.coeffs[0], v.graph.delta[0])
        assert rem == 0 and v == v.graph.null() * k, f"isotropic vector {v} is not a multiple of delta"
        return True
    return False


def component_dimension(d: RootVector) -> int:
    dim = 2 * (d[d.graph.triv] - tits_form(d))
    if dim < 0:
        raise ValueError(f"negative dimension {dim} for {d}: not a component index")
    return dim


def braid_order(graph: DynkinGraph, i: int, j: int) -> int:
    """Coxeter exponent m_ij read off the Cartan matrix."""
    if i == j:
        return 1
    return {0: 2, 1: 3, 2: 4, 3: 6}[graph.cartan[i][j] * graph.cartan[j][i]]


def degree_counts(graph: DynkinGraph) -> Counter:
    return Counter(graph.valence(i) for i in range(len(graph.nodes)))
