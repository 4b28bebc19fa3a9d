"""Exact arithmetic in the cyclotomic field Q(xi), xi a primitive p-th root of unity.

An element is stored densely as ``p - 1`` rational coefficients on the basis
``1, xi, ..., xi^(p-2)``.  Anything written on the redundant spanning set
``1, ..., xi^(p-1)`` is brought back with ``xi^(p-1) = -(1 + ... + xi^(p-2))``.
For ``p = 2`` the field is Q itself and ``xi = -1``.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .errors import ModulusMismatch, ZeroGaloisIndex

Rational = Union[int, Fraction]

_ZERO = Fraction(0)


def _reduce(p: int, exps: Sequence[Rational]) -> tuple:
    top = exps[p - 1]
    if top:
        return tuple(Fraction(exps[j]) - top for j in range(p - 1))
    return tuple(Fraction(exps[j]) for j in range(p - 1))


@dataclass(frozen=True)
class CycNum:
    p: int
    coeffs: tuple

    @classmethod
    def from_exponents(cls, p: int, exps: Sequence[Rational]) -> "CycNum":
        """Build ``sum_j exps[j] xi^j`` from a length-p exponent vector."""
        if len(exps) != p:
            raise ValueError(f"expected {p} exponent coefficients, got {len(exps)}")
        return cls(p, _reduce(p, exps))

    @classmethod
    def zero(cls, p: int) -> "CycNum":
        return cls(p, (_ZERO,) * (p - 1))

    @classmethod
    def rational(cls, p: int, q: Rational) -> "CycNum":
        return cls(p, (Fraction(q),) + (_ZERO,) * (p - 2))

    def exponents(self) -> list:
        """Length-p exponent vector with a zero on ``xi^(p-1)``."""
        return list(self.coeffs) + [_ZERO]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def _check(self, other: "CycNum") -> None:
        if other.p != self.p:
            raise ModulusMismatch(f"Q(xi_{self.p}) vs Q(xi_{other.p})")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycNum.rational(self.p, other)
        self._check(other)
        return CycNum(self.p, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.p, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycNum(self.p, tuple(a * other for a in self.coeffs))
        self._check(other)
        p = self.p
        acc = [_ZERO] * p
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    acc[(i + j) % p] += a * b
        return CycNum.from_exponents(p, acc)

    __rmul__ = __mul__

    def __truediv__(self, q: Rational):
        q = Fraction(q)
        return CycNum(self.p, tuple(a / q for a in self.coeffs))

    def __str__(self):
        terms = []
        for j, a in enumerate(self.coeffs):
            if a:
                terms.append(f"{a}" if j == 0 else f"{a}*xi^{j}")
        return " + ".join(terms) or "0"

    def to_json(self) -> list:
        return [str(a) for a in self.coeffs]

    @classmethod
    def from_json(cls, p: int, data: Sequence[str]) -> "CycNum":
        if len(data) != p - 1:
            raise ValueError(f"expected {p - 1} coefficients")
        return cls(p, tuple(Fraction(s) for s in data))


def cyc_from_power(p: int, k: int) -> CycNum:
    """``xi^k`` with the exponent reduced mod p."""
    exps = [_ZERO] * p
    exps[k % p] = Fraction(1)
    return CycNum.from_exponents(p, exps)


def cyc_add(x: CycNum, y: CycNum) -> CycNum:
    return x + y


def cyc_mul(x: CycNum, y: CycNum) -> CycNum:
    return x * y


def galois_apply(r: int, x: CycNum) -> CycNum:
    """Apply the automorphism g_r: xi -> xi^r."""
    p = x.p
    r %= p
    if r == 0:
        raise ZeroGaloisIndex("g_0 is not an automorphism")
    exps = [_ZERO] * p
    for j, a in enumerate(x.coeffs):
        if a:
            exps[r * j % p] += a
    return CycNum.from_exponents(p, exps)


def trace(x: CycNum) -> Fraction:
    """Galois trace to Q: Tr(1) = p - 1 and Tr(xi^j) = -1 for 0 < j < p."""
    return (x.p - 1) * x.coeffs[0] - sum(x.coeffs[1:], _ZERO)


def conj(x: CycNum) -> CycNum:
    return galois_apply(x.p - 1, x)


def abs_sq(x: CycNum) -> CycNum:
    return x * conj(x)


def to_complex(x: CycNum) -> complex:
    """Floating-point embedding with xi = exp(2 pi i / p). Debug use only."""
    w = cmath.exp(2j * cmath.pi / x.p)
    return sum(float(a) * w ** j for j, a in enumerate(x.coeffs))
