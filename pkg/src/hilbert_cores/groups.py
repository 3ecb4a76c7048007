"""Explicit binary dihedral and binary tetrahedral groups over Q(zeta_N).

This is the independent check on the residue maps: it decomposes
``C[x, y] / I_lambda`` into irreducible characters using matrices, traces and
hard-coded character tables, without touching any box-counting code.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .cyclotomic import Cyclotomic
from .partitions import Partition, is_symmetric, staircase
from .roots import E6_NODES, DynkinGraph, RootVector, make_graph, simply_laced_graph

Matrix = tuple  # (a, b, c, d) of Cyclotomic, row-major

MAX_GROUP_ORDER = 10_000


class TableMismatch(ValueError):
    pass


def mat_mul(x: Matrix, y: Matrix) -> Matrix:
    a, b, c, d = x
    e, f, g, h = y
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def mat_inv(x: Matrix) -> Matrix:
    """Inverse of a determinant-one matrix."""
    a, b, c, d = x
    return (d, -b, -c, a)


def mat_pow(x: Matrix, k: int) -> Matrix:
    out = identity(x[0].N)
    for _ in range(k):
        out = mat_mul(out, x)
    return out


def identity(N: int) -> Matrix:
    one, zero = Cyclotomic.rational(N, 1), Cyclotomic.rational(N, 0)
    return (one, zero, zero, one)


def trace(x: Matrix) -> Cyclotomic:
    return x[0] + x[3]


def det(x: Matrix) -> Cyclotomic:
    return x[0] * x[3] - x[1] * x[2]


def order(x: Matrix) -> int:
    one = identity(x[0].N)
    y, k = x, 1
    while y != one:
        y, k = mat_mul(y, x), k + 1
        if k > MAX_GROUP_ORDER:
            raise ValueError("element of infinite order")
    return k


@dataclass
class MatrixGroup:
    name: str
    N: int
    l: int | None
    generators: dict[str, Matrix]
    named: dict[str, Matrix]
    elements: list[Matrix] = field(default_factory=list, repr=False)
    classes: list[frozenset] = field(default_factory=list, repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def class_of(self, x: Matrix) -> frozenset:
        for cls in self.classes:
            if x in cls:
                return cls
        raise KeyError("element not in group")


def _closure(gens: Iterable[Matrix], N: int) -> list[Matrix]:
    gens = list(gens)
    one = identity(N)
    seen = {one}
    out = [one]
    queue = deque([one])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = mat_mul(x, g)
            if y not in seen:
                if len(seen) >= MAX_GROUP_ORDER:
                    raise OverflowError("group closure exceeded the element bound")
                seen.add(y)
                out.append(y)
                queue.append(y)
    return out


def _conjugacy_classes(elements: list[Matrix]) -> list[frozenset]:
    remaining = set(elements)
    classes = []
    for x in elements:
        if x not in remaining:
            continue
        cls = frozenset(mat_mul(mat_mul(g, x), mat_inv(g)) for g in elements)
        remaining -= cls
        classes.append(cls)
    return classes


def _diag(z: Cyclotomic) -> Matrix:
    # z is a root of unity, so its inverse is its conjugate
    zero = Cyclotomic.rational(z.N, 0)
    return (z, zero, zero, z.conjugate())


def _s(N: int) -> Matrix:
    one, zero = Cyclotomic.rational(N, 1), Cyclotomic.rational(N, 0)
    return (zero, -one, one, zero)


def build_group(kind: str, l: int | None = None) -> MatrixGroup:
    """``build_group("BD", l)`` (order 4l) or ``build_group("BT")`` (order 24)."""
    if kind == "BD":
        if l is None or l < 2:
            raise ValueError("BD needs l >= 2")
        N = math.lcm(4, 2 * l)
        w = _diag(Cyclotomic.zeta(N, N // (2 * l)))
        s = _s(N)
        gens = {"w": w, "s": s}
        named = {"1": identity(N), "-1": mat_pow(w, l), "s": s, "sw": mat_mul(s, w)}
        for p in range(1, l):
            named[f"w^{p}"] = mat_pow(w, p)
        name = f"BD_{2 * l}"
    elif kind == "BT":
        N = 24
        w4 = _diag(Cyclotomic.zeta(N, 6))
        s = _s(N)
        z8 = Cyclotomic.zeta(N, 3)
        inv_sqrt2 = (z8 - z8 ** 3) / 2
        t = tuple(inv_sqrt2 * x for x in (z8, z8, z8 ** 3, z8.conjugate()))
        gens = {"w4": w4, "s": s, "t": t}
        a, b, c = mat_mul(s, w4), t, mat_mul(s, mat_mul(t, t))
        named = {"1": identity(N), "z": mat_mul(mat_mul(a, b), c), "a": a, "b": b, "c": c,
                 "b^2": mat_mul(b, b), "c^2": mat_mul(c, c)}
        name = "BT"
    else:
        raise ValueError(f"unknown group kind {kind!r}")
    for g in gens.values():
        if det(g) != 1:
            raise ValueError("generators must have determinant 1")
    group = MatrixGroup(name, N, l, gens, named)
    group.elements = _closure(gens.values(), N)
    group.classes = _conjugacy_classes(group.elements)
    return group


def verify_bt_presentation(g: MatrixGroup) -> bool:
    """Check a^2 = b^3 = c^3 = abc = z with z central of order 2, and |<t^2>| = 3."""
    a, b, c = g.named["a"], g.named["b"], g.named["c"]
    one = identity(g.N)
    z = mat_mul(mat_mul(a, b), c)
    ok = mat_pow(a, 2) == z and mat_pow(b, 3) == z and mat_pow(c, 3) == z
    ok &= z != one and mat_mul(z, z) == one
    ok &= all(mat_mul(z, x) == mat_mul(x, z) for x in g.generators.values())
    ok &= order(mat_mul(b, b)) == 3
    return bool(ok)


# -- character tables ------------------------------------------------------------------

@dataclass
class CharacterTable:
    group: MatrixGroup
    rows: tuple[str, ...]
    columns: tuple[str, ...]
    class_sizes: tuple[int, ...]
    values: dict[str, tuple[Cyclotomic, ...]]
    triv: str
    std: str
    graph_kind: str

    def row(self, name: str) -> tuple[Cyclotomic, ...]:
        return self.values[name]

    def value(self, row: str, column: str) -> Cyclotomic:
        return self.values[row][self.columns.index(column)]

    def representative(self, column: str) -> Matrix:
        return self.group.named[column]

    def dim(self, row: str) -> int:
        return int(self.values[row][0].to_fraction())

    def inner(self, f: Iterable[Cyclotomic], g: Iterable[Cyclotomic]) -> Cyclotomic:
        total = Cyclotomic.rational(self.group.N, 0)
        for size, x, y in zip(self.class_sizes, f, g):
            total = total + x * y.conjugate() * size
        return total / self.group.order

    def graph(self) -> DynkinGraph:
        if self.graph_kind == "E6-affine":
            return make_graph("E6-affine")
        return make_graph("D-affine", self.group.l)


def _bd_table(g: MatrixGroup) -> CharacterTable:
    l, N = g.l, g.N
    Z = lambda k: Cyclotomic.zeta(N, k * N // (2 * l))  # powers of zeta_2l
    one = Cyclotomic.rational(N, 1)
    cols = ("1", "-1") + tuple(f"w^{p}" for p in range(1, l)) + ("s", "sw")
    sizes = (1, 1) + (2,) * (l - 1) + (l, l)
    sign = lambda p: one * (-1) ** p
    i4 = Cyclotomic.zeta(N, N // 4)

    def row(at_one, at_minus, at_w, at_s, at_sw):
        return (at_one * one, at_minus * one) + tuple(at_w(p) for p in range(1, l)) + (at_s, at_sw)

    values = {
        "0+": row(1, 1, lambda p: one, one, one),
        "0-": row(1, 1, lambda p: one, -one, -one),
    }
    if l % 2 == 0:
        values[f"{l}+"] = row(1, 1, sign, -one, one)
        values[f"{l}-"] = row(1, 1, sign, one, -one)
    else:
        values[f"{l}+"] = row(1, -1, sign, i4, -i4)
        values[f"{l}-"] = row(1, -1, sign, -i4, i4)
    for k in range(1, l):
        zero = one * 0
        values[str(k)] = row(2, 2 * (-1) ** k, lambda p, k=k: Z(k * p) + Z(-k * p), zero, zero)
    rows = make_graph("D-affine", l).nodes
    return CharacterTable(g, rows, cols, sizes, {r: values[r] for r in rows}, "0+", "1", "D-affine")


def _bt_table(g: MatrixGroup) -> CharacterTable:
    N = g.N
    one = Cyclotomic.rational(N, 1)
    w, w2 = Cyclotomic.zeta(N, 8), Cyclotomic.zeta(N, 16)  # zeta_3, zeta_3^2
    o = lambda *xs: tuple(x if isinstance(x, Cyclotomic) else one * x for x in xs)
    values = {
        "chi0": o(1, 1, 1, 1, 1, 1, 1),
        "psi": o(1, 1, 1, w, w2, w2, w),
        "psi2": o(1, 1, 1, w2, w, w, w2),
        "X": o(3, 3, -1, 0, 0, 0, 0),
        "std": o(2, -2, 0, 1, 1, -1, -1),
        "psi_std": o(2, -2, 0, w, w2, -w2, -w),
        "psi2_std": o(2, -2, 0, w2, w, -w, -w2),
    }
    cols = ("1", "z", "a", "b", "c", "b^2", "c^2")
    return CharacterTable(g, E6_NODES, cols, (1, 1, 6, 4, 4, 4, 4), values, "chi0", "std", "E6-affine")


def character_table(g: MatrixGroup) -> CharacterTable:
    table = _bd_table(g) if g.name.startswith("BD") else _bt_table(g)
    validate_table(table)
    return table


def validate_table(table: CharacterTable) -> None:
    g = table.group
    seen = set()
    for col, size in zip(table.columns, table.class_sizes):
        cls = g.class_of(table.representative(col))
        if len(cls) != size:
            raise TableMismatch(f"column {col}: class has {len(cls)} elements, table says {size}")
        if cls in seen:
            raise TableMismatch(f"column {col} repeats a class")
        seen.add(cls)
        # (order, trace) fingerprint is constant on the class
        rep = table.representative(col)
        if any((order(x), trace(x)) != (order(rep), trace(rep)) for x in cls):
            raise TableMismatch(f"column {col}: inconsistent fingerprints")
    if len(seen) != len(g.classes) or sum(table.class_sizes) != g.order:
        raise TableMismatch("columns do not cover every conjugacy class")
    std = table.row(table.std)
    for col, value in zip(table.columns, std):
        if trace(table.representative(col)) != value:
            raise TableMismatch(f"natural character disagrees with the matrix trace at {col}")
    for r in table.rows:
        for s in table.rows:
            if table.inner(table.row(r), table.row(s)) != (1 if r == s else 0):
                raise TableMismatch(f"rows {r}, {s} are not orthonormal")
    if sum(table.dim(r) ** 2 for r in table.rows) != g.order:
        raise TableMismatch("sum of squared dimensions differs from the group order")


# -- polynomial representations --------------------------------------------------------

def monomial_image(g: Matrix, i: int, j: int) -> dict[tuple[int, int], Cyclotomic]:
    """Coefficients of ``g . x^i y^j`` where ``(g.f)(v) = f(g^-1 v)``."""
    a, b, c, d = mat_inv(g)
    out: dict[tuple[int, int], Cyclotomic] = {}
    for p in range(i + 1):
        left = a ** p * b ** (i - p) * math.comb(i, p)
        for q in range(j + 1):
            term = left * c ** q * d ** (j - q) * math.comb(j, q)
            key = (p + q, i + j - p - q)
            out[key] = out[key] + term if key in out else term
    return out


def _diagonal_coefficient(g: Matrix, i: int, j: int) -> Cyclotomic:
    a, b, c, d = mat_inv(g)
    total = Cyclotomic.rational(g[0].N, 0)
    for p in range(max(0, i - j), i + 1):
        total = total + a ** p * b ** (i - p) * c ** (i - p) * d ** (j - i + p) * (math.comb(i, p) * math.comb(j, i - p))
    return total


def ideal_is_stable(lam: Partition, g: Matrix) -> bool:
    """Whether the monomial ideal of ``lam`` is mapped into itself by ``g``."""
    corners = [(r, lam.parts[r] if r < len(lam.parts) else 0) for r in range(len(lam.parts) + 1)]
    corners = [(r, c) for r, c in corners if r == 0 or c < lam.parts[r - 1]]
    for i, j in corners:
        for (x, y), coeff in monomial_image(g, i, j).items():
            if coeff != 0 and (x, y) in lam:
                return False
    return True


def quotient_trace(lam: Partition, g: Matrix, check: bool = True) -> Cyclotomic:
    if check and not ideal_is_stable(lam, g):
        raise ValueError(f"the ideal of {lam} is not stable under this element")
    total = Cyclotomic.rational(g[0].N, 0)
    for r, c in lam.boxes():
        total = total + _diagonal_coefficient(g, r, c)
    return total


def _check_precondition(lam: Partition, table: CharacterTable) -> None:
    if table.graph_kind == "D-affine" and not is_symmetric(lam):
        raise ValueError(f"{lam} is not symmetric: its ideal is not stable under s")
    if table.graph_kind == "E6-affine" and lam != staircase(len(lam.parts)):
        raise ValueError(f"{lam} is not a staircase: its ideal is not stable under the group")
    for gen in table.group.generators.values():
        if not ideal_is_stable(lam, gen):
            raise ValueError(f"the ideal of {lam} is not stable under the group")


def decompose(lam: Partition, table: CharacterTable) -> RootVector:
    """Multiplicities of the irreducible characters in ``C[x, y] / I_lam``."""
    _check_precondition(lam, table)
    traces = [quotient_trace(lam, table.representative(col), check=False) for col in table.columns]
    mults = []
    for r in table.rows:
        m = table.inner(traces, table.row(r))
        if not m.is_rational_integer() or m.to_fraction() < 0:
            raise ArithmeticError(f"multiplicity of {r} is {m}, not a nonnegative integer")
        mults.append(int(m.to_fraction()))
    if sum(m * table.dim(r) for m, r in zip(mults, table.rows)) != lam.size:
        raise ArithmeticError("multiplicities do not add up to the dimension")
    return table.graph().vector(mults)


def mckay_graph(table: CharacterTable) -> DynkinGraph:
    std = table.row(table.std)
    edges = []
    for i, r in enumerate(table.rows):
        product = [x * y for x, y in zip(std, table.row(r))]
        for j, s in enumerate(table.rows):
            m = table.inner(product, table.row(s))
            back = table.inner([x * y for x, y in zip(std, table.row(s))], table.row(r))
            if m != back:
                raise ValueError(f"asymmetric McKay multiplicities at {r}, {s}")
            if m == 0:
                continue
            if m != 1 or i == j:
                raise ValueError(f"unexpected multiplicity {m} between {r} and {s}")
            if i < j:
                edges.append((r, s))
    return simply_laced_graph(table.rows, edges, [table.dim(r) for r in table.rows], table.triv)


def same_shape(mckay: DynkinGraph, reference: DynkinGraph) -> bool:
    return (mckay.nodes == reference.nodes and mckay.cartan == reference.cartan
            and mckay.delta == reference.delta and mckay.triv == reference.triv)
