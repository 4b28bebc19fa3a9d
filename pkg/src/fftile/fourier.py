"""Exact discrete Fourier analysis of rational-valued functions on F_p^d.

Conventions: ``f^(m) = p^-d sum_x f(x) xi^(x.m)`` with xi = exp(2 pi i / p),
i.e. the principal character satisfies chi(-t) = xi^t.  Inversion reads
``f(x) = sum_m xi^(-x.m) f^(m)``.

Every coefficient is a :class:`~fftile.cyclotomic.CycNum`; zero tests are
coefficient-wise and there are no tolerances anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .cyclotomic import CycNum, abs_sq, conj, galois_apply, trace
from .errors import InternalContradiction, NonRationalResult, ZeroDirection
from .ffvec import (
    PointSet,
    all_points,
    directions,
    dot,
    point_index,
    same_space,
    vscale,
)


@dataclass(frozen=True)
class RationalFunction:
    """A map F_p^d -> Q stored densely in lexicographic point order."""

    p: int
    d: int
    values: tuple

    def __post_init__(self):
        vals = tuple(Fraction(v) for v in self.values)
        if len(vals) != self.p ** self.d:
            raise ValueError(f"expected {self.p ** self.d} values, got {len(vals)}")
        object.__setattr__(self, "values", vals)

    @classmethod
    def indicator(cls, E: PointSet) -> "RationalFunction":
        vals = [0] * (E.p ** E.d)
        for x in E:
            vals[point_index(x, E.p)] = 1
        return cls(E.p, E.d, tuple(vals))

    @classmethod
    def constant(cls, p: int, d: int, c=1) -> "RationalFunction":
        return cls(p, d, (c,) * (p ** d))

    def __call__(self, x: Sequence[int]) -> Fraction:
        return self.values[point_index(x, self.p)]

    def items(self):
        return zip(all_points(self.p, self.d), self.values)

    def average(self) -> Fraction:
        return sum(self.values, Fraction(0)) / (self.p ** self.d)


@dataclass(frozen=True)
class Spectrum:
    """Fourier coefficients in the same lexicographic order as the points."""

    p: int
    d: int
    coeffs: tuple

    def __getitem__(self, m: Sequence[int]) -> CycNum:
        return self.coeffs[point_index(m, self.p)]

    def items(self):
        return zip(all_points(self.p, self.d), self.coeffs)


@dataclass(frozen=True)
class HyperplaneStats:
    direction: tuple
    averages: tuple  # average of f on each hyperplane x.m = t, t = 0 .. p-1
    mean: Fraction
    variance: Fraction
    trace_abs_sq: Fraction
    coefficient: CycNum


@dataclass(frozen=True)
class EquidistributionReport:
    direction: tuple
    counts: tuple
    equidistributed: bool
    fourier_zero: bool


def _coefficient(p: int, d: int, weighted: Iterable, m: Sequence[int]) -> CycNum:
    buckets = [Fraction(0)] * p
    for x, v in weighted:
        if v:
            buckets[dot(x, m, p)] += v
    scale = p ** d
    return CycNum.from_exponents(p, [b / scale for b in buckets])


def coefficient(f: RationalFunction, m: Sequence[int]) -> CycNum:
    """A single Fourier coefficient ``f^(m)``."""
    return _coefficient(f.p, f.d, f.items(), tuple(m))


@lru_cache(maxsize=65536)
def set_coefficient(E: PointSet, m: tuple) -> CycNum:
    """``E^(m)`` for the indicator of ``E``."""
    p, d = E.p, E.d
    counts = [0] * p
    for x in E:
        counts[dot(x, m, p)] += 1
    scale = p ** d
    return CycNum.from_exponents(p, [Fraction(c, scale) for c in counts])


def dft(f: RationalFunction) -> Spectrum:
    pts = all_points(f.p, f.d)
    return Spectrum(f.p, f.d, tuple(coefficient(f, m) for m in pts))


def inverse_dft(F: Spectrum) -> RationalFunction:
    p, d = F.p, F.d
    pts = all_points(p, d)
    exps_of = [c.exponents() for c in F.coeffs]
    values = []
    for x in pts:
        acc = [Fraction(0)] * p
        for m, exps in zip(pts, exps_of):
            shift = -dot(x, m, p) % p
            for j, a in enumerate(exps):
                if a:
                    acc[(j + shift) % p] += a
        v = CycNum.from_exponents(p, acc)
        if not v.is_rational():
            raise NonRationalResult(f"value at {x} is {v}")
        values.append(v.coeffs[0])
    return RationalFunction(p, d, tuple(values))


def zero_set(F: Spectrum) -> list:
    """Nonzero frequencies where the coefficient vanishes, sorted."""
    zero = (0,) * F.d
    return [m for m, c in F.items() if m != zero and c.is_zero()]


def _require_nonzero(m: Sequence[int], p: int) -> tuple:
    m = tuple(a % p for a in m)
    if not any(m):
        raise ZeroDirection("direction must be nonzero")
    return m


def hyperplane_counts(E: PointSet, m: Sequence[int]) -> tuple:
    """``|E cap {x : x.m = j}|`` for j = 0 .. p-1."""
    counts = [0] * E.p
    for x in E:
        counts[dot(x, m, E.p)] += 1
    return tuple(counts)


def equidistribution_check(E: PointSet, m: Sequence[int]) -> EquidistributionReport:
    m = _require_nonzero(m, E.p)
    counts = hyperplane_counts(E, m)
    equi = len(set(counts)) == 1
    vanishes = set_coefficient(E, m).is_zero()
    if equi != vanishes:
        raise InternalContradiction(
            f"direction {m}: counts {counts} but Fourier coefficient zero = {vanishes}"
        )
    return EquidistributionReport(m, counts, equi, vanishes)


def tiling_fourier_check(E: PointSet, A: PointSet, k: int) -> bool:
    """Size condition plus vanishing of ``E^(m) A^(m)`` for every m != 0.

    By Galois symmetry ``E^(rm) = g_r(E^(m))``, so one representative per
    line through the origin suffices.
    """
    p, d = same_space(E, A)
    size_ok = len(E) * len(A) == k * p ** d
    for m in directions(p, d):
        if set_coefficient(E, m).is_zero():
            continue
        if not set_coefficient(A, m).is_zero():
            return False
    return size_ok


def galois_symmetry_check(f: RationalFunction, F: Spectrum | None = None) -> bool:
    """``f^(rm) == g_r(f^(m))`` for all nonzero m and r."""
    p, d = f.p, f.d
    F = F if F is not None else dft(f)
    zero = (0,) * d
    for m in all_points(p, d):
        if m == zero:
            continue
        base = F[m]
        for r in range(2, p):
            if F[vscale(r, m, p)] != galois_apply(r, base):
                return False
    return True


def phi_forward(f: RationalFunction) -> tuple:
    """``(average, [f^(m) for m in canonical directions])``."""
    avg = f.average()
    return avg, [coefficient(f, m) for m in directions(f.p, f.d)]


def phi_inverse(p: int, d: int, average, coeffs: Sequence[CycNum]) -> RationalFunction:
    """Rebuild f from its average and one coefficient per direction."""
    M = directions(p, d)
    if len(coeffs) != len(M):
        raise ValueError(f"expected {len(M)} direction coefficients, got {len(coeffs)}")
    full: list = [None] * (p ** d)
    full[0] = CycNum.rational(p, average)
    for m, c in zip(M, coeffs):
        for r in range(1, p):
            full[point_index(vscale(r, m, p), p)] = galois_apply(r, c)
    return inverse_dft(Spectrum(p, d, tuple(full)))


def trace_identity(f: RationalFunction, m: Sequence[int]) -> dict:
    """Both sides of the plain and squared trace identities along ``m``.

    Returns a dict with keys ``plain`` and ``squared``, each a pair
    ``(orbit_sum, trace_value)``.  Raises if either pair disagrees.
    """
    p = f.p
    m = _require_nonzero(m, p)
    orbit = [coefficient(f, vscale(r, m, p)) for r in range(1, p)]
    plain_sum = sum(orbit[1:], orbit[0])
    sq_sum = sum((abs_sq(c) for c in orbit[1:]), abs_sq(orbit[0]))
    if not (plain_sum.is_rational() and sq_sum.is_rational()):
        raise InternalContradiction(f"orbit sums along {m} are not rational")
    base = orbit[0]
    out = {
        "plain": (plain_sum.coeffs[0], trace(base)),
        "squared": (sq_sum.coeffs[0], trace(abs_sq(base))),
    }
    for key, (lhs, rhs) in out.items():
        if lhs != rhs:
            raise InternalContradiction(f"{key} trace identity fails along {m}: {lhs} != {rhs}")
    return out


def hyperplane_stats(f: RationalFunction, m: Sequence[int]) -> HyperplaneStats:
    p, d = f.p, f.d
    m = _require_nonzero(m, p)
    sums = [Fraction(0)] * p
    for x, v in f.items():
        sums[dot(x, m, p)] += v
    mu = tuple(s / p ** (d - 1) for s in sums)
    mean = sum(mu, Fraction(0)) / p
    var = sum(((u - mean) ** 2 for u in mu), Fraction(0)) / p
    fm = coefficient(f, m)
    via_averages = CycNum.from_exponents(p, [u / p for u in mu])
    if fm != via_averages:
        raise InternalContradiction(f"coefficient along {m} disagrees with hyperplane averages")
    tr = trace(abs_sq(fm))
    if tr != var:
        raise InternalContradiction(f"variance {var} != Tr|f^(m)|^2 = {tr} along {m}")
    if mean != f.average():
        raise InternalContradiction("hyperplane mean differs from global average")
    return HyperplaneStats(m, mu, mean, var, tr, fm)


def plancherel(f: RationalFunction, F: Spectrum | None = None) -> tuple:
    """``(sum_m |f^(m)|^2, p^-d sum_x f(x)^2)``; both rational."""
    F = F if F is not None else dft(f)
    total = CycNum.zero(f.p)
    for c in F.coeffs:
        if not c.is_zero():
            total = total + c * conj(c)
    lhs = total.rational_value()
    rhs = sum((v * v for v in f.values), Fraction(0)) / f.p ** f.d
    return lhs, rhs


def variance_decomposition(f: RationalFunction) -> tuple:
    """``(p^-d sum f^2, mu^2 + sum over directions of the hyperplane variance)``."""
    lhs = sum((v * v for v in f.values), Fraction(0)) / f.p ** f.d
    mu = f.average()
    rhs = mu * mu + sum((hyperplane_stats(f, m).variance for m in directions(f.p, f.d)), Fraction(0))
    return lhs, rhs
