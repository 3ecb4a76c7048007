"""Exact arithmetic in the cyclotomic field Q(zeta_N).

Elements are rational coefficient vectors on ``1, zeta, ..., zeta^(phi(N)-1)``,
kept reduced modulo the N-th cyclotomic polynomial, so equality is coefficient
equality.
"""
from __future__ import annotations

import functools
from fractions import Fraction
from typing import Sequence, Union

Scalar = Union[int, Fraction]


def _polydiv_exact(num: list[int], den: list[int]) -> list[int]:
    """Exact quotient of integer polynomials (coefficient lists, constant first)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        q, rem = divmod(num[i + len(den) - 1], den[-1])
        assert rem == 0
        out[i] = q
        for j, c in enumerate(den):
            num[i + j] -= q * c
    assert not any(num), "division was not exact"
    return out


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    if n < 1:
        raise ValueError("order must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _polydiv_exact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


@functools.lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Reduced coordinates of zeta^k for 0 <= k < n."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    rows = []
    cur = [1] + [0] * (deg - 1)
    for _ in range(n):
        rows.append(tuple(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * p for c, p in zip(cur, phi[:-1])]
    return tuple(rows)


class Cyclotomic:
    __slots__ = ("N", "coeffs", "_hash")

    def __init__(self, N: int, coeffs: Sequence[Scalar] = ()):
        deg = len(cyclotomic_polynomial(N)) - 1
        if len(coeffs) > deg:
            coeffs = _reduce(N, coeffs)
        self.N = N
        self.coeffs = tuple(Fraction(c) for c in coeffs) + (Fraction(0),) * (deg - len(coeffs))
        self._hash = None

    @classmethod
    def zeta(cls, N: int, k: int = 1) -> Cyclotomic:
        return cls(N, _power_table(N)[k % N])

    @classmethod
    def rational(cls, N: int, q: Scalar) -> Cyclotomic:
        return cls(N, (q,))

    def _coerce(self, other) -> Cyclotomic:
        if isinstance(other, Cyclotomic):
            if other.N != self.N:
                raise ValueError(f"mixing Q(zeta_{self.N}) and Q(zeta_{other.N})")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.N, (other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Cyclotomic(self.N, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.N, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Cyclotomic(self.N, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.N, [a * other for a in self.coeffs])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        prod = [Fraction(0)] * (2 * len(self.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        return Cyclotomic(self.N, _reduce(self.N, prod))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.N, [a / other for a in self.coeffs])
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        result, base = Cyclotomic(self.N, (1,)), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic(self.N, (other,))
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self.N == other.N and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.N, self.coeffs))
        return self._hash

    def conjugate(self) -> Cyclotomic:
        """Complex conjugation, zeta -> zeta^(N-1)."""
        table = _power_table(self.N)
        out = [Fraction(0)] * len(self.coeffs)
        for j, c in enumerate(self.coeffs):
            if c:
                for t, x in enumerate(table[(-j) % self.N]):
                    out[t] += c * x
        return Cyclotomic(self.N, out)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def is_rational_integer(self) -> bool:
        return self.is_rational() and self.coeffs[0].denominator == 1

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __complex__(self) -> complex:
        import cmath
        z = cmath.exp(2j * cmath.pi / self.N)
        return sum(float(c) * z ** k for k, c in enumerate(self.coeffs))

    def __repr__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*z{self.N}^{k}")
        return " + ".join(terms) if terms else "0"


def _reduce(N: int, coeffs: Sequence[Scalar]) -> list[Fraction]:
    phi = cyclotomic_polynomial(N)
    deg = len(phi) - 1
    work = [Fraction(c) for c in coeffs]
    for i in range(len(work) - 1, deg - 1, -1):
        top = work[i]
        if top:
            for j in range(deg + 1):
                work[i - deg + j] -= top * phi[j]
    return work[:deg]
