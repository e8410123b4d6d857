"""Special-function accuracy against an independent high-precision oracle.

Frozen reference values were generated once with a 40-digit mpmath series
evaluation; the in-file power series provides a second, self-contained
cross-check at small arguments.
"""

import math

import numpy as np
import pytest

from slowphoton.specfun import (
    ACCURACY,
    bessel_i,
    bessel_j,
    erf,
    scaled_bessel_i0,
    scaled_bessel_i1,
)

# (x, J0(x), J1(x)) from the 40-digit oracle
J_REFERENCE = [
    (0.5, 0.9384698072408129042284, 0.242268457674873886384),
    (1.0, 0.7651976865579665514497, 0.4400505857449335159597),
    (2.0, 0.2238907791412356680518, 0.5767248077568733872024),
    (5.0, -0.1775967713143383043474, -0.3275791375914652220377),
    (10.0, -0.2459357644513483351978, 0.04347274616886143666975),
    (25.0, 0.0962667832759581161735, -0.1253502495802899046518),
    (50.0, 0.05581232766925181500475, -0.09751182812517513766146),
    (100.0, 0.01998585030422312242423, -0.07714535201411215803269),
    (1000.0, 0.02478668615242017456133, 0.004728311907089523917576),
    (10000.0, -0.007096160353388801477265, 0.003647450755529580344117),
]

# (x, I0(x), I1(x))
I_REFERENCE = [
    (0.5, 1.063483370741323519263, 0.2578943053908963163625),
    (1.0, 1.266065877752008335598, 0.5651591039924850272077),
    (2.0, 2.279585302336067267437, 1.590636854637329063382),
    (5.0, 27.23987182360444689454, 24.33564214245052719914),
    (10.0, 2815.71662846625447147, 2670.988303701254654341),
    (50.0, 2.932553783849336326655e20, 2.903078590103556796751e20),
    (200.0, 2.039687173409724619542e85, 2.034581549332062703427e85),
    (700.0, 1.529593347671873736316e302, 1.528500390233900688145e302),
]

# (x, exp(-x)*I0(x), exp(-x)*I1(x))
I_SCALED_REFERENCE = [
    (0.5, 0.645035270449150068108, 0.1564208031848716971426),
    (1.0, 0.4657596075936404365019, 0.2079104153497084488694),
    (10.0, 0.1278333371634286073231, 0.121262681384455518719),
    (200.0, 0.02822715994911191567034, 0.02815650339483291782246),
    (1e4, 0.003989472674604732106361, 0.00398927319598366226448),
    (1e6, 0.0003989423302692457787773, 0.0003989421307980307763133),
]

# (x, erf(x))
ERF_REFERENCE = [
    (0.1, 0.1124629160182848922033),
    (0.5, 0.5204998778130465376827),
    (1.0, 0.8427007929497148693412),
    (1.3, 0.9340079449406524366039),
    (2.0, 0.9953222650189527341621),
    (3.0, 0.9999779095030014145586),
    (5.0, 0.9999999999984625402056),
]

J0_FIRST_ROOT = 2.404825557695772768622

RTOL = ACCURACY.max_relative_error
ATOL = ACCURACY.abs_floor


def series_j(order, x, terms=70):
    """Power series for J0/J1 in exact rational arithmetic (no cancellation)."""
    from fractions import Fraction

    half = Fraction(x) / 2
    total = Fraction(0)
    for k in range(terms):
        term = half ** (2 * k + order)
        term /= math.factorial(k) * math.factorial(k + order)
        total += -term if k % 2 else term
    return float(total)


def series_i(order, x, terms=80):
    from fractions import Fraction

    half = Fraction(x) / 2
    total = Fraction(0)
    for k in range(terms):
        total += half ** (2 * k + order) / (math.factorial(k) * math.factorial(k + order))
    return float(total)


class TestBesselJ:
    def test_exact_values_at_zero(self):
        assert bessel_j(0, 0.0) == 1.0
        assert bessel_j(1, 0.0) == 0.0

    @pytest.mark.parametrize("x,j0,j1", J_REFERENCE)
    def test_oracle_values(self, x, j0, j1):
        assert bessel_j(0, x) == pytest.approx(j0, rel=RTOL, abs=ATOL)
        assert bessel_j(1, x) == pytest.approx(j1, rel=RTOL, abs=ATOL)

    def test_against_series(self):
        for x in np.linspace(0.05, 9.0, 25):
            assert bessel_j(0, x) == pytest.approx(series_j(0, x), rel=1e-13, abs=1e-14)
            assert bessel_j(1, x) == pytest.approx(series_j(1, x), rel=1e-13, abs=1e-14)

    def test_first_root(self):
        assert abs(bessel_j(0, J0_FIRST_ROOT)) <= 1e-12

    def test_derivative_identity(self):
        # d/dx J0 = -J1, central differences at random points
        rng = np.random.default_rng(20240517)
        xs = rng.uniform(0.1, 50.0, size=100)
        h = 1e-5
        for x in xs:
            fd = (bessel_j(0, x + h) - bessel_j(0, x - h)) / (2 * h)
            assert fd == pytest.approx(-bessel_j(1, x), abs=1e-8)

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            bessel_j(0, -1.0)
        with pytest.raises(ValueError):
            bessel_j(0, math.nan)
        with pytest.raises(ValueError):
            bessel_j(2, 1.0)

    def test_vectorized(self):
        x = np.array([0.0, 1.0, 2.0])
        out = bessel_j(0, x)
        assert out.shape == (3,)
        assert out[0] == 1.0


class TestBesselI:
    def test_exact_values_at_zero(self):
        assert bessel_i(0, 0.0) == 1.0
        assert bessel_i(1, 0.0) == 0.0

    @pytest.mark.parametrize("x,i0,i1", I_REFERENCE)
    def test_oracle_values(self, x, i0, i1):
        assert bessel_i(0, x) == pytest.approx(i0, rel=RTOL)
        assert bessel_i(1, x) == pytest.approx(i1, rel=RTOL)

    def test_against_series(self):
        for x in np.linspace(0.1, 20.0, 15):
            assert bessel_i(0, x) == pytest.approx(series_i(0, x), rel=1e-13)
            assert bessel_i(1, x) == pytest.approx(series_i(1, x), rel=1e-13)

    def test_range_error(self):
        with pytest.raises(ValueError, match="scaled"):
            bessel_i(0, 701.0)


class TestScaledBessel:
    def test_at_zero(self):
        assert scaled_bessel_i0(0.0) == 1.0
        assert scaled_bessel_i1(0.0) == 0.0

    @pytest.mark.parametrize("x,i0e,i1e", I_SCALED_REFERENCE)
    def test_oracle_values(self, x, i0e, i1e):
        assert scaled_bessel_i0(x) == pytest.approx(i0e, rel=ACCURACY.scaled_i0_max_relative_error)
        assert scaled_bessel_i1(x) == pytest.approx(i1e, rel=ACCURACY.scaled_i0_max_relative_error)

    def test_asymptotic_form(self):
        # i0e(x) ~ (2*pi*x)**-0.5 * (1 + 1/(8x)) for large x
        x = 200.0
        asym = (2 * math.pi * x) ** -0.5 * (1 + 1 / (8 * x))
        assert scaled_bessel_i0(x) == pytest.approx(asym, rel=2e-5)

    def test_consistency_with_unscaled(self):
        for x in np.linspace(0.1, 50.0, 23):
            assert scaled_bessel_i0(x) * math.exp(x) == pytest.approx(
                bessel_i(0, x), rel=1e-9
            )

    def test_domain_error(self):
        with pytest.raises(ValueError):
            scaled_bessel_i0(-0.5)


class TestErf:
    def test_zero(self):
        assert erf(0.0) == 0.0

    @pytest.mark.parametrize("x,val", ERF_REFERENCE)
    def test_oracle_values(self, x, val):
        assert erf(x) == pytest.approx(val, rel=RTOL)

    def test_exactly_odd(self):
        for x in [0.3, 1.3, 2.7, 5.5, 17.0]:
            assert erf(-x) == -erf(x)

    def test_derivative_identity(self):
        rng = np.random.default_rng(7)
        h = 1e-5
        for x in rng.uniform(-3, 3, size=50):
            fd = (erf(x + h) - erf(x - h)) / (2 * h)
            assert fd == pytest.approx(2 / math.sqrt(math.pi) * math.exp(-x * x), abs=1e-8)

    def test_non_finite_rejected(self):
        with pytest.raises(ValueError):
            erf(math.inf)
