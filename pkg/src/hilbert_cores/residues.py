"""Residue vectors of symmetric partitions (type D) and staircases (type E6)."""
from __future__ import annotations

from dataclasses import dataclass

from .partitions import Box, Partition, conjugate, is_symmetric, render, staircase
from .roots import RootVector, make_graph


@dataclass(frozen=True)
class ResidueStatistics:
    l: int
    d: tuple[int, ...]  # d[k] for k in 1..l, stored at index k-1
    tilde_d0: int
    d0: int

    @property
    def d0_plus(self) -> int:
        return self.d0 // 2 + self.tilde_d0 - self.tilde_d0 // 2

    @property
    def d0_minus(self) -> int:
        return self.d0 // 2 + self.tilde_d0 // 2


def residue_statistics(lam: Partition, l: int) -> ResidueStatistics:
    if l < 2:
        raise ValueError("l must be at least 2")
    counts = [0] * (2 * l)
    diagonal = 0
    for r, c in lam.boxes():
        counts[(r - c) % (2 * l)] += 1
        diagonal += r == c
    d = tuple(counts[k] + counts[2 * l - k] if k != l else counts[l] for k in range(1, l + 1))
    return ResidueStatistics(l, d, diagonal, counts[0] - diagonal)


def _first_asymmetric_row(lam: Partition) -> int:
    conj = conjugate(lam).parts
    rows = max(len(lam.parts), len(conj))
    padded = lam.parts + (0,) * (rows - len(lam.parts))
    conj = conj + (0,) * (rows - len(conj))
    return next(i for i in range(rows) if padded[i] != conj[i])


def res_D(lam: Partition, l: int) -> RootVector:
    """Type-D residue of a symmetric partition, on the nodes ``0+, 0-, 1..l-1, l+, l-``."""
    if not is_symmetric(lam):
        row = _first_asymmetric_row(lam)
        raise ValueError(f"{lam} is not symmetric: row {row} differs from column {row} of the conjugate")
    st = residue_statistics(lam, l)
    assert st.d0 % 2 == 0 and all(x % 2 == 0 for x in st.d)
    halves = tuple(x // 2 for x in st.d)
    coeffs = (st.d0_plus, st.d0_minus) + halves[:-1] + (halves[-1], halves[-1])
    return make_graph("D-affine", l).vector(coeffs)


def c_residue(box: Box | tuple[int, int], l: int) -> int:
    row, col = box
    r = (col - row) % (2 * l)
    return r if r <= l else 2 * l - r


def c_residue_rows(lam: Partition, l: int) -> list[str]:
    return ["".join(str(c_residue((r, c), l)) for c in range(p)) for r, p in enumerate(lam.parts)]


def render_c_residues(lam: Partition, l: int) -> str:
    return render(lam, fill=lambda b: c_residue(b, l))


# -- type E6 ---------------------------------------------------------------------------

@dataclass(frozen=True)
class E6Constants:
    m: int
    d0: int | None = None
    d: int | None = None
    a: int | None = None
    b: int | None = None
    e0: int | None = None
    e: int | None = None


def e6_constants(m: int) -> E6Constants:
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m % 2 == 0:
        k = m // 2
        d0 = {0: 1 + (k - 2) // 3, 1: k // 3, 2: 1 + (k - 1) // 3}[m % 3]
        d, rem = divmod(m - 2 * d0, 4)
        assert rem == 0 and d >= 0, (m, d0)
        return E6Constants(m, d0=d0, d=d)
    k = (m - 1) // 2
    a = 0 if k == 0 else 1 + (k - 1) // 2
    b = m - 3 * a
    e0 = {0: (b + 1) // 3, 1: 1 + b // 3, 2: b // 3}[m % 3]
    e, rem = divmod(b - e0, 2)
    assert rem == 0 and e >= 0, (m, b, e0)
    return E6Constants(m, a=a, b=b, e0=e0, e=e)


def beta_m(m: int) -> RootVector:
    g = make_graph("E6-affine")
    c = e6_constants(m)
    if m % 2 == 0:
        return g.vector({"std": c.d0, "psi_std": c.d, "psi2_std": c.d})
    return g.vector({"X": c.a, "chi0": c.e0, "psi": c.e, "psi2": c.e})


_E6_TABLE: list[RootVector] = []


def res_E6_table(max_m: int) -> list[RootVector]:
    """``[res_E6(0), ..., res_E6(max_m)]``, built by the recursion and memoized."""
    if not _E6_TABLE:
        _E6_TABLE.append(make_graph("E6-affine").zero())
    while len(_E6_TABLE) <= max_m:
        _E6_TABLE.append(_E6_TABLE[-1] + beta_m(len(_E6_TABLE)))
    return _E6_TABLE[: max_m + 1]


def res_E6(m: int) -> RootVector:
    """Residue of the staircase ``(m, m-1, ..., 1)`` in the E6-affine root lattice."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return res_E6_table(m)[m]


def res_E6_partition(lam: Partition) -> RootVector:
    m = len(lam.parts)
    if lam != staircase(m):
        raise ValueError(f"{lam} is not a staircase partition")
    return res_E6(m)
