"""The group ring (Z/pZ)[z_1..z_d] / (z_i^p - 1) and the polynomial tiling test.

A set E is encoded as ``sum_{e in E} z^e``; translating by ``a`` is
multiplication by ``z^a``.  Coefficients are residues mod p, so the level k
is only seen mod p by the ring identity itself.  ``tiling_poly_check``
therefore also checks ``|E||A| = k p^d`` over the integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import BadIndex, ModulusMismatch
from .ffvec import PointSet, all_points, point_index, same_space


@dataclass(frozen=True)
class QuotientPoly:
    p: int
    d: int
    coeffs: tuple  # indexed by exponent vectors in lexicographic order

    def __post_init__(self):
        if len(self.coeffs) != self.p ** self.d:
            raise ValueError(f"expected {self.p ** self.d} coefficients")
        object.__setattr__(self, "coeffs", tuple(int(c) % self.p for c in self.coeffs))

    @classmethod
    def zero(cls, p: int, d: int) -> "QuotientPoly":
        return cls(p, d, (0,) * p ** d)

    @classmethod
    def monomial(cls, p: int, d: int, exponent: Sequence[int], c: int = 1) -> "QuotientPoly":
        coeffs = [0] * p ** d
        coeffs[point_index([e % p for e in exponent], p)] = c
        return cls(p, d, tuple(coeffs))

    @classmethod
    def all_ones(cls, p: int, d: int, k: int = 1) -> "QuotientPoly":
        """``k * prod_i (1 + z_i + ... + z_i^(p-1))``."""
        return cls(p, d, (k,) * p ** d)

    def __getitem__(self, exponent: Sequence[int]) -> int:
        return self.coeffs[point_index(exponent, self.p)]

    def terms(self):
        return [(e, c) for e, c in zip(all_points(self.p, self.d), self.coeffs) if c]

    def __add__(self, other: "QuotientPoly") -> "QuotientPoly":
        _same_ring(self, other)
        return QuotientPoly(self.p, self.d, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "QuotientPoly") -> "QuotientPoly":
        return ring_mul(self, other)


def _same_ring(P: QuotientPoly, Q: QuotientPoly) -> None:
    if (P.p, P.d) != (Q.p, Q.d):
        raise ModulusMismatch(f"ring over F_{P.p}^{P.d} vs F_{Q.p}^{Q.d}")


def ring_mul(P: QuotientPoly, Q: QuotientPoly) -> QuotientPoly:
    _same_ring(P, Q)
    p, d = P.p, P.d
    out = [0] * p ** d
    qt = Q.terms()
    for e, a in P.terms():
        for f, b in qt:
            idx = 0
            for x, y in zip(e, f):
                idx = idx * p + (x + y) % p
            out[idx] += a * b
    return QuotientPoly(p, d, tuple(out))


def encode_set(E: PointSet) -> QuotientPoly:
    coeffs = [0] * E.p ** E.d
    for e in E:
        coeffs[point_index(e, E.p)] = 1
    return QuotientPoly(E.p, E.d, tuple(coeffs))


def tiling_poly_check(E: PointSet, A: PointSet, k: int) -> bool:
    p, d = same_space(E, A)
    product = ring_mul(encode_set(E), encode_set(A))
    ring_ok = product == QuotientPoly.all_ones(p, d, k)
    return ring_ok and len(E) * len(A) == k * p ** d


def moment_identity_first(E: PointSet, A: PointSet) -> tuple:
    """``|A| sum(e) + |E| sum(a)`` componentwise mod p."""
    p, d = same_space(E, A)
    se = [sum(e[j] for e in E) for j in range(d)]
    sa = [sum(a[j] for a in A) for j in range(d)]
    return tuple((len(A) * se[j] + len(E) * sa[j]) % p for j in range(d))


def moment_identity_second(E: PointSet, A: PointSet, j: int) -> int:
    """``sum(e_j^2)|A| + sum(a_j^2)|E| + 2 sum(e_j) sum(a_j)`` mod p.

    ``j`` is a 1-based coordinate index.
    """
    p, d = same_space(E, A)
    if not 1 <= j <= d:
        raise BadIndex(f"coordinate index {j} outside 1..{d}")
    i = j - 1
    s1e = sum(e[i] for e in E)
    s1a = sum(a[i] for a in A)
    s2e = sum(e[i] ** 2 for e in E)
    s2a = sum(a[i] ** 2 for a in A)
    return (s2e * len(A) + s2a * len(E) + 2 * s1e * s1a) % p
