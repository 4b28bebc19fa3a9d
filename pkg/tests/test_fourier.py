import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fftile.cyclotomic import CycNum, cyc_from_power, to_complex, trace
from fftile.errors import NonRationalResult, ZeroDirection
from fftile.ffvec import PointSet, all_points, canonical_direction, directions, vscale
from fftile.fourier import (
    RationalFunction,
    Spectrum,
    dft,
    equidistribution_check,
    galois_symmetry_check,
    hyperplane_stats,
    inverse_dft,
    phi_forward,
    phi_inverse,
    plancherel,
    set_coefficient,
    tiling_fourier_check,
    trace_identity,
    variance_decomposition,
    zero_set,
)
from fftile.tiling import tiling_direct_check

PARABOLA = PointSet(5, 2, [(t, t * t % 5) for t in range(5)])
NONGRAPH = PointSet(5, 2, [(0, 0), (1, 1), (2, 3), (3, 1), (2, 4)])


def _numpy_dft(f: RationalFunction) -> np.ndarray:
    # numpy's inverse FFT uses exp(+2 pi i x.m / p) / N, which is the forward transform here
    arr = np.array([float(v) for v in f.values]).reshape((f.p,) * f.d)
    return np.fft.ifftn(arr).reshape(-1)


def _random_function(rng, p, d, lo=-3, hi=3):
    return RationalFunction(p, d, tuple(Fraction(rng.randint(lo, hi), rng.randint(1, 4)) for _ in range(p ** d)))


def rational_functions(p, d):
    vals = st.fractions(min_value=-3, max_value=3, max_denominator=4)
    return st.lists(vals, min_size=p ** d, max_size=p ** d).map(lambda v: RationalFunction(p, d, tuple(v)))


@pytest.mark.parametrize("p,d", [(2, 2), (3, 2), (5, 1), (5, 2), (3, 3), (7, 1)])
def test_dft_matches_numpy(p, d):
    rng = random.Random(p * 10 + d)
    for _ in range(3):
        f = _random_function(rng, p, d)
        F = dft(f)
        ref = _numpy_dft(f)
        got = np.array([to_complex(c) for c in F.coeffs])
        assert np.allclose(got, ref, atol=1e-12)
        assert F[(0,) * d] == CycNum.rational(p, f.average())


def test_dft_examples():
    H = PointSet(3, 2, [(t, 0) for t in range(3)])
    F = dft(RationalFunction.indicator(H))
    for m, c in F.items():
        if m[0] == 0:
            assert c == CycNum.rational(3, Fraction(1, 3))
        else:
            assert c.is_zero()
    delta = dft(RationalFunction.indicator(PointSet(5, 1, [(0,)])))
    assert all(c == CycNum.rational(5, Fraction(1, 5)) for c in delta.coeffs)
    ones = dft(RationalFunction.constant(5, 2))
    assert ones[(0, 0)] == CycNum.rational(5, 1)
    assert all(c.is_zero() for m, c in ones.items() if m != (0, 0))


def test_inverse_examples():
    H = RationalFunction.indicator(PointSet(3, 2, [(t, 0) for t in range(3)]))
    assert inverse_dft(dft(H)) == H
    F = Spectrum(5, 1, tuple(CycNum.rational(5, 1 if i == 0 else 0) for i in range(5)))
    assert inverse_dft(F) == RationalFunction.constant(5, 1)
    P = RationalFunction.indicator(PARABOLA)
    assert inverse_dft(dft(P)) == P


def test_inverse_rejects_non_rational():
    coeffs = [CycNum.zero(5)] * 5
    coeffs[1] = cyc_from_power(5, 1)
    with pytest.raises(NonRationalResult):
        inverse_dft(Spectrum(5, 1, tuple(coeffs)))


@settings(max_examples=25, deadline=None)
@given(rational_functions(3, 2))
def test_inverse_roundtrip_property(f):
    assert inverse_dft(dft(f)) == f


def test_zero_set_examples():
    Z = set(zero_set(dft(RationalFunction.indicator(PARABOLA))))
    assert {(a, 0) for a in range(1, 5)} <= Z
    assert zero_set(dft(RationalFunction.indicator(PointSet(5, 2, [(2, 3)])))) == []
    assert zero_set(dft(RationalFunction.indicator(NONGRAPH))) == []


@settings(max_examples=25, deadline=None)
@given(rational_functions(5, 2))
def test_zero_set_is_union_of_punctured_lines(f):
    Z = set(zero_set(dft(f)))
    for m in Z:
        assert all(vscale(r, m, 5) in Z for r in range(1, 5))


def test_equidistribution_examples():
    rep = equidistribution_check(PARABOLA, (1, 0))
    assert rep.counts == (1, 1, 1, 1, 1) and rep.equidistributed
    rep = equidistribution_check(PointSet(5, 2, [(0, 0)]), (1, 2))
    assert sorted(rep.counts) == [0, 0, 0, 0, 1] and not rep.equidistributed
    for m in directions(5, 2):
        assert not equidistribution_check(NONGRAPH, m).equidistributed
    with pytest.raises(ZeroDirection):
        equidistribution_check(PARABOLA, (0, 0))


@settings(max_examples=60, deadline=None)
@given(st.sets(st.tuples(st.integers(0, 4), st.integers(0, 4)), max_size=15), st.sampled_from(directions(5, 2)))
def test_equidistribution_agrees_with_fourier(pts, m):
    rep = equidistribution_check(PointSet.of(5, 2, pts), m)
    assert rep.equidistributed == rep.fourier_zero


def test_tiling_fourier_examples():
    A = PointSet.full(5, 1)
    assert tiling_fourier_check(PointSet(5, 1, [(0,), (1,)]), A, 2)
    H = PointSet.span(3, 2, [(1, 2)])
    Hp = PointSet.span(3, 2, [(1, 1)])
    assert tiling_fourier_check(H, Hp, 1)
    two = PointSet(5, 1, [(0,), (1,)])
    assert not tiling_fourier_check(two, two, 1)


@settings(max_examples=80, deadline=None)
@given(
    st.sets(st.tuples(st.integers(0, 2), st.integers(0, 2)), max_size=9),
    st.sets(st.tuples(st.integers(0, 2), st.integers(0, 2)), max_size=9),
    st.integers(1, 4),
)
def test_fourier_duality_and_direct(e, a, k):
    E, A = PointSet.of(3, 2, e), PointSet.of(3, 2, a)
    got = tiling_fourier_check(E, A, k)
    assert got == tiling_fourier_check(A, E, k)
    assert got == tiling_direct_check(E, A, k).holds


def test_galois_symmetry_examples():
    assert galois_symmetry_check(RationalFunction.indicator(PARABOLA))
    assert galois_symmetry_check(RationalFunction.constant(3, 2, Fraction(7, 2)))
    one = RationalFunction.indicator(PointSet(5, 1, [(1,)]))
    F = dft(one)
    for m in range(5):
        assert F[(m,)] == cyc_from_power(5, m) / 5
    assert galois_symmetry_check(one, F)


def test_galois_symmetry_detects_broken_spectrum():
    F = dft(RationalFunction.indicator(PointSet(5, 1, [(1,)])))
    coeffs = list(F.coeffs)
    coeffs[2] = coeffs[3]
    assert not galois_symmetry_check(RationalFunction.constant(5, 1), Spectrum(5, 1, tuple(coeffs)))


@settings(max_examples=20, deadline=None)
@given(rational_functions(5, 2))
def test_galois_symmetry_property(f):
    assert galois_symmetry_check(f)


def test_phi_examples():
    avg, cs = phi_forward(RationalFunction.constant(5, 2, 0))
    assert avg == 0 and all(c.is_zero() for c in cs)
    # one rational slot plus (p^d - 1)/(p - 1) slots of dimension p - 1
    p, d = 3, 2
    assert 1 + len(directions(p, d)) * (p - 1) == p ** d


def test_phi_roundtrip_random():
    rng = random.Random(11)
    for _ in range(100):
        f = _random_function(rng, 5, 2)
        avg, cs = phi_forward(f)
        assert phi_inverse(5, 2, avg, cs) == f


def test_phi_is_onto():
    # arbitrary slot data must come back from a rational function
    rng = random.Random(5)
    cs = [CycNum(3, tuple(Fraction(rng.randint(-3, 3), 2) for _ in range(2))) for _ in directions(3, 2)]
    f = phi_inverse(3, 2, Fraction(1, 7), cs)
    assert phi_forward(f) == (Fraction(1, 7), cs)


def test_trace_identity_examples():
    out = trace_identity(RationalFunction.constant(5, 2, 3), (1, 2))
    assert out["plain"] == (0, 0)
    one = RationalFunction.indicator(PointSet(5, 1, [(1,)]))
    out = trace_identity(one, (1,))
    assert out["plain"] == (Fraction(-1, 5), Fraction(-1, 5))
    assert out["squared"] == (Fraction(4, 25), Fraction(4, 25))
    with pytest.raises(ZeroDirection):
        trace_identity(one, (0,))


def test_hyperplane_stats_examples():
    s = hyperplane_stats(RationalFunction.constant(3, 2), (1, 1))
    assert s.averages == (1, 1, 1) and s.variance == 0
    s = hyperplane_stats(RationalFunction.indicator(PARABOLA), (1, 0))
    assert s.averages == (Fraction(1, 5),) * 5 and s.variance == 0
    s = hyperplane_stats(RationalFunction.indicator(PointSet(3, 2, [(0, 0)])), (1, 0))
    assert s.averages == (Fraction(1, 3), 0, 0)
    assert s.coefficient == CycNum.rational(3, Fraction(1, 9))
    # hand value: mean 1/9, variance (1/3)(4/81 + 2/81) = 2/81 = Tr(1/81)
    assert s.variance == Fraction(2, 81) == s.trace_abs_sq
    assert trace(CycNum.rational(3, Fraction(1, 81))) == Fraction(2, 81)


@settings(max_examples=15, deadline=None)
@given(rational_functions(3, 2), st.sampled_from(directions(3, 2)))
def test_hyperplane_stats_property(f, m):
    s = hyperplane_stats(f, m)
    assert s.mean == f.average()
    lhs, rhs = plancherel(f)
    assert lhs == rhs


@pytest.mark.parametrize("p,d", [(3, 2), (5, 2), (2, 3), (3, 3)])
def test_plancherel_and_variance_random(p, d):
    rng = random.Random(p + d)
    for _ in range(5):
        f = _random_function(rng, p, d)
        a, b = plancherel(f)
        assert a == b
        a, b = variance_decomposition(f)
        assert a == b


def test_set_coefficient_matches_dft():
    F = dft(RationalFunction.indicator(NONGRAPH))
    for m in all_points(5, 2):
        assert set_coefficient(NONGRAPH, m) == F[m]
        if any(m):
            assert canonical_direction(m, 5) in directions(5, 2)
