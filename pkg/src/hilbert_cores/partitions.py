"""Partitions, Young diagrams, hooks and cores.

Boxes are ``(row, col)`` pairs in English notation: row 0 is the top row and
``Box(r, c)`` lies in ``lam`` iff ``r < len(lam.parts)`` and
``c < lam.parts[r]``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, NamedTuple, Sequence


class Box(NamedTuple):
    row: int
    col: int


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive integers.

    >>> Partition((2, 2, 1)).conjugate()
    Partition((3, 2))
    """

    parts: tuple[int, ...]
    size: int = field(init=False, compare=False, repr=False)

    def __init__(self, parts: Sequence[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "size", sum(parts))

    def __repr__(self) -> str:
        return f"Partition({self.parts!r})"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")" if self.parts else "∅"

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __contains__(self, box: object) -> bool:
        r, c = box  # type: ignore[misc]
        return 0 <= r < len(self.parts) and 0 <= c < self.parts[r]

    def boxes(self) -> Iterator[Box]:
        for r, p in enumerate(self.parts):
            for c in range(p):
                yield Box(r, c)

    def conjugate(self) -> Partition:
        return conjugate(self)

    def is_symmetric(self) -> bool:
        return is_symmetric(self)


def conjugate(lam: Partition) -> Partition:
    if not lam.parts:
        return lam
    return Partition(tuple(sum(1 for p in lam.parts if p > c) for c in range(lam.parts[0])))


def is_symmetric(lam: Partition) -> bool:
    return conjugate(lam) == lam


def hook_length(lam: Partition, box: Box | tuple[int, int]) -> int:
    r, c = box
    if (r, c) not in lam:
        raise ValueError(f"box {(r, c)} is outside the diagram of {lam}")
    arm = lam.parts[r] - c - 1
    leg = sum(1 for p in lam.parts[r + 1:] if p > c)
    return arm + leg + 1


def hook_lengths(lam: Partition) -> list[list[int]]:
    conj = conjugate(lam).parts
    return [[p - c + conj[c] - r - 1 for c in range(p)] for r, p in enumerate(lam.parts)]


def beta_numbers(lam: Partition, length: int | None = None) -> list[int]:
    """First-column hook lengths, padded to ``length`` beads."""
    n = len(lam.parts) if length is None else length
    if n < len(lam.parts):
        raise ValueError("length shorter than the number of parts")
    parts = list(lam.parts) + [0] * (n - len(lam.parts))
    return [parts[i] + n - 1 - i for i in range(n)]


def from_beta_numbers(beta: Sequence[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    n = len(beta)
    return Partition(tuple(b - (n - 1 - i) for i, b in enumerate(beta) if b - (n - 1 - i) > 0))


def r_core(lam: Partition, r: int) -> Partition:
    """Remove rim r-hooks until none is left, by sliding beads up an r-runner abacus."""
    if r < 1:
        raise ValueError("r must be at least 1")
    beta = beta_numbers(lam)
    counts = [0] * r
    for b in beta:
        counts[b % r] += 1
    pushed = [runner + r * k for runner in range(r) for k in range(counts[runner])]
    return from_beta_numbers(pushed)


def is_core(lam: Partition, r: int) -> bool:
    return r_core(lam, r) == lam


def staircase(m: int) -> Partition:
    if m < 0:
        raise ValueError("m must be nonnegative")
    return Partition(tuple(range(m, 0, -1)))


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in lexicographically decreasing order."""

    def rec(n: int, m: int) -> Iterator[tuple[int, ...]]:
        if n == 0:
            yield ()
            return
        for first in range(min(n, m), 0, -1):
            for rest in rec(n - first, first):
                yield (first,) + rest

    for parts in rec(n, n if max_part is None else max_part):
        yield Partition(parts)


def _distinct_odd(n: int, bound: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    top = min(n, bound)
    if top % 2 == 0:
        top -= 1
    for h in range(top, 0, -2):
        for rest in _distinct_odd(n - h, h - 2):
            yield (h,) + rest


def from_principal_hooks(hooks: Sequence[int]) -> Partition:
    """Self-conjugate partition with the given (distinct, odd) diagonal hook lengths."""
    hooks = sorted(hooks, reverse=True)
    arms = [(h - 1) // 2 for h in hooks]
    k = len(arms)
    rows = [arms[i] + i + 1 for i in range(k)]
    i = k
    while True:
        row = sum(1 for j in range(k) if arms[j] + j + 1 > i)
        if row == 0:
            break
        rows.append(row)
        i += 1
    return Partition(rows)


def enumerate_symmetric_partitions(n: int) -> list[Partition]:
    if n < 0:
        raise ValueError("n must be nonnegative")
    found = [from_principal_hooks(h) for h in _distinct_odd(n, n)]
    return sorted(found, reverse=True)


def enumerate_symmetric_cores(r: int, max_size: int) -> list[Partition]:
    if r < 2:
        raise ValueError("r must be at least 2")
    return [
        lam
        for n in range(max_size + 1)
        for lam in enumerate_symmetric_partitions(n)
        if is_core(lam, r)
    ]


def parse_partition(text: str) -> Partition:
    """Parse ``"4,4,3,2"``; the empty string (or ``"empty"``) is the empty partition."""
    text = text.strip()
    if text in ("", "empty", "∅"):
        return Partition()
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ValueError(f"not a partition literal: {text!r}") from None
    return Partition(parts)


def render(lam: Partition, fill=None, blank: str = "·") -> str:
    """ASCII Young diagram, one character per box; ``fill(box)`` picks the glyph."""
    if not lam.parts:
        return blank
    rows = []
    for r, p in enumerate(lam.parts):
        rows.append("".join(str(fill(Box(r, c))) if fill else "#" for c in range(p)))
    return "\n".join(rows)
