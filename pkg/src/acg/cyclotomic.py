"""Exact arithmetic in rings of cyclotomic integers Z[zeta_m].

Values are integer coordinate vectors over the power basis
1, zeta, ..., zeta^(phi(m)-1), kept reduced modulo the m-th cyclotomic
polynomial, so zero testing and equality are exact coordinate tests.
Floating point never enters any decision.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable

_POLY_CACHE: dict[int, tuple] = {}
_REDUCTION_CACHE: dict[int, list] = {}


def cyclotomic_polynomial(m: int) -> tuple:
    """Coefficients (ascending) of the m-th cyclotomic polynomial."""
    cached = _POLY_CACHE.get(m)
    if cached is not None:
        return cached
    # x^m - 1 divided by the product of all lower-level factors
    poly = tuple([-1] + [0] * (m - 1) + [1])
    for d in range(1, m):
        if m % d == 0:
            poly = _poly_divide_exact(poly, cyclotomic_polynomial(d))
    _POLY_CACHE[m] = poly
    return poly


def _poly_divide_exact(num: tuple, den: tuple) -> tuple:
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(den) - 1]
        assert c % den[-1] == 0
        q[i] = c // den[-1]
        for j, dj in enumerate(den):
            num[i + j] -= q[i] * dj
    assert all(c == 0 for c in num), "division was not exact"
    return tuple(q)


def _reduction_rows(m: int, upto: int) -> list:
    """Row k: coordinates of x^(phi+k) over the power basis, k < upto."""
    rows = _REDUCTION_CACHE.setdefault(m, [])
    phi = len(cyclotomic_polynomial(m)) - 1
    while len(rows) < upto:
        k = len(rows)
        # x^(phi+k) = x * x^(phi+k-1); shift then reduce the overflow term
        if k == 0:
            prev = [0] * phi
            prev.append(1)  # literally x^phi
        else:
            prev = [0] + list(rows[k - 1])
        head = prev[phi] if len(prev) > phi else 0
        row = prev[:phi]
        if head:
            cp = cyclotomic_polynomial(m)
            for j in range(phi):
                row[j] -= head * cp[j]
        rows.append(tuple(row))
    return rows


def _reduce(coeffs: list, m: int) -> tuple:
    phi = len(cyclotomic_polynomial(m)) - 1
    if len(coeffs) <= phi:
        return tuple(coeffs) + (0,) * (phi - len(coeffs))
    rows = _reduction_rows(m, len(coeffs) - phi)
    out = list(coeffs[:phi])
    for k in range(phi, len(coeffs)):
        c = coeffs[k]
        if c:
            row = rows[k - phi]
            for j in range(phi):
                out[j] += c * row[j]
    return tuple(out)


class CyclotomicValue:
    """An element of Z[zeta_m] in reduced coordinates."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs: Iterable[int]):
        self.conductor = conductor
        self.coeffs = _reduce(list(coeffs), conductor)

    @classmethod
    def zero(cls, m: int) -> "CyclotomicValue":
        return cls(m, [])

    @classmethod
    def from_int(cls, m: int, n: int) -> "CyclotomicValue":
        return cls(m, [n])

    @classmethod
    def zeta_power(cls, m: int, k: int) -> "CyclotomicValue":
        k %= m
        return cls(m, [0] * k + [1])

    @classmethod
    def from_power_coeffs(cls, m: int, powers: Iterable[int]) -> "CyclotomicValue":
        """Value sum(powers[i] * zeta^i), i ranging over 0..m-1."""
        return cls(m, list(powers))

    def _coerce(self, other):
        if isinstance(other, int):
            return CyclotomicValue.from_int(self.conductor, other)
        if isinstance(other, CyclotomicValue):
            if other.conductor != self.conductor:
                raise ValueError("mixed conductors")
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CyclotomicValue(self.conductor,
                               [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CyclotomicValue(self.conductor,
                               [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return CyclotomicValue(self.conductor, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicValue(self.conductor, [a * other for a in self.coeffs])
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        conv = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    conv[i + j] += ai * bj
        return CyclotomicValue(self.conductor, conv)

    __rmul__ = __mul__

    def galois(self, t: int) -> "CyclotomicValue":
        """Apply zeta -> zeta^t; t must be coprime to the conductor."""
        m = self.conductor
        if gcd(t, m) != 1:
            raise ValueError("galois exponent must be a unit modulo the conductor")
        powers = [0] * m
        for i, c in enumerate(self.coeffs):
            powers[(t * i) % m] += c
        return CyclotomicValue.from_power_coeffs(m, powers)

    def conjugate(self) -> "CyclotomicValue":
        return self.galois(self.conductor - 1 if self.conductor > 1 else 1)

    def norm_squared(self) -> "CyclotomicValue":
        """|z|^2 = z * conj(z), exactly (a real cyclotomic integer)."""
        return self * self.conjugate()

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_int(self) -> int:
        if not self.is_rational():
            raise ValueError(f"{self} is not a rational integer")
        return self.coeffs[0]

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_rational() and self.coeffs[0] == other
        return (isinstance(other, CyclotomicValue)
                and self.conductor == other.conductor
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.conductor, self.coeffs))

    def __repr__(self):
        return f"CyclotomicValue(m={self.conductor}, {self.format()})"

    def format(self) -> str:
        """Export form ``c0+c1*z^1+...`` with zero terms dropped."""
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                term = f"{c}*z^{i}"
                parts.append(term)
        if not parts:
            return "0"
        return "+".join(parts).replace("+-", "-")
