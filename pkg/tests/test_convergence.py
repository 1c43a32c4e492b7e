import math
from fractions import Fraction

import pytest

from fcseries import convergence as cv
from fcseries import fc
from fcseries.errors import DegenerateExponentError


class TestRatioLimit:
    def test_catalan_exponent(self):
        assert cv.ratio_limit(2) == 4.0

    def test_symmetric_minimum(self):
        assert cv.ratio_limit(0.5) == pytest.approx(0.5, rel=1e-15)

    def test_fifth(self):
        assert cv.ratio_limit(Fraction(1, 5)) == pytest.approx(4 ** 0.8 / 5, rel=1e-15)

    def test_degenerate_rejected(self):
        for mu in (0, 1, 0.0, 1.0):
            with pytest.raises(DegenerateExponentError):
                cv.ratio_limit(mu)

    def test_symmetry_about_half(self):
        for d in (0.1, 0.35, 1.7):
            assert cv.ratio_limit(0.5 + d) == pytest.approx(cv.ratio_limit(0.5 - d), rel=1e-13)


class TestAsymptotic:
    def test_accuracy_t40(self):
        exact = float(fc.fc_number(2, 1, 40))
        assert cv.asymptotic_fc(2, 1, 40) == pytest.approx(exact, rel=0.02)

    def test_accuracy_t400_bigints(self):
        exact = float(fc.fc_number(Fraction(2), Fraction(1), 400))
        assert cv.asymptotic_fc(2, 1, 400) == pytest.approx(exact, rel=0.002)

    def test_ratio_window(self):
        exact = float(fc.fc_number(Fraction(3), Fraction(2), 100))
        ratio = cv.asymptotic_fc(3, 2, 100) / exact
        assert 0.98 <= ratio <= 1.02

    def test_convergence_to_exact(self):
        # relative error shrinks monotonically-ish with t for desk parameters
        for mu, r in ((2, 1), (5, 1), (-0.25, 0.25), (1.5, 3)):
            errs = []
            for t in (40, 80, 160):
                exact = float(fc.fc_number(Fraction(mu), Fraction(r), t))
                errs.append(abs(cv.asymptotic_fc(mu, r, t) / exact - 1))
            assert errs[-1] < errs[0]
            assert errs[0] < 0.02


class TestBounds:
    def test_necessary_box_pair(self):
        box = cv.necessary_box([0.5, 1.5])
        assert box[0] == pytest.approx(2.0, rel=1e-14)
        assert box[1] == pytest.approx(2 * 3 ** -1.5, rel=1e-14)

    def test_necessary_box_catalan(self):
        assert cv.necessary_box([2.0])[0] == pytest.approx(0.25)

    def test_necessary_box_quintic(self):
        assert cv.necessary_box([5.0])[0] == pytest.approx(4 ** 4 / 5 ** 5, rel=1e-14)
        assert 4 ** 4 / 5 ** 5 == 0.08192

    def test_sufficient_simplex_pair(self):
        sb = cv.sufficient_simplex([0.5, 1.5])
        assert sb.radius == pytest.approx(2 * 3 ** -1.5, rel=1e-14)
        assert sb.mu_star == 1.5

    def test_simplex_k1(self):
        sb = cv.sufficient_simplex([2.0])
        assert sb.radius == pytest.approx(0.25)

    def test_simplex_tie_break_upper(self):
        sb = cv.sufficient_simplex([1 / 3, 2 / 3])
        assert sb.mu_star == 2 / 3
        assert sb.radius == pytest.approx(1 / cv.ratio_limit(1 / 3), rel=1e-13)

    def test_trinomial_radius_values(self):
        assert cv.trinomial_radius(5) == pytest.approx(256 / 3125, rel=1e-14)
        assert cv.trinomial_radius(-0.25) == pytest.approx(4 / 5 ** 1.25, rel=1e-14)
        assert cv.trinomial_radius(0.5) == pytest.approx(2.0, rel=1e-14)

    def test_mellin_pair(self):
        assert cv.mellin_bound([0.5, 1.5]) == pytest.approx(0.5 * 2 * 3 ** -1.5, rel=1e-13)

    def test_mellin_single_is_half_radius(self):
        assert cv.mellin_bound([2.0]) == pytest.approx(cv.trinomial_radius(2.0), rel=1e-14)

    def test_mellin_four_exponents(self):
        mus = [0.2, 0.4, 0.6, 0.8]
        want = 0.25 * min(1 / cv.ratio_limit(0.2), 1 / cv.ratio_limit(0.8))
        assert cv.mellin_bound(mus) == pytest.approx(want, rel=1e-14)

    def test_measure_bounds_k1_coincide(self):
        lo, hi = cv.measure_bounds([2.0])
        assert lo == pytest.approx(0.25) and hi == pytest.approx(0.25)

    def test_measure_bounds_pair(self):
        lo, hi = cv.measure_bounds([0.5, 1.5])
        b = 2 * 3 ** -1.5
        assert lo == pytest.approx(0.5 * b * b, rel=1e-13)
        assert hi == pytest.approx(2 * b, rel=1e-13)

    def test_measure_bounds_equal_pair(self):
        lo, hi = cv.measure_bounds([2.0, 2.0])
        assert lo == pytest.approx(0.03125)
        assert hi == pytest.approx(1 / 16)

    def test_ordering_chain(self):
        import random

        rng = random.Random(3)
        for _ in range(50):
            k = rng.randint(1, 3)
            mus = []
            while len(mus) < k:
                m = rng.uniform(-3, 4)
                if abs(m) > 0.05 and abs(m - 1) > 0.05:
                    mus.append(m)
            mellin = cv.mellin_bound(mus)
            simplex = cv.sufficient_simplex(mus).radius
            box = cv.necessary_box(mus)
            assert mellin <= simplex * (1 + 1e-12)
            for entry in box:
                assert simplex <= entry * (1 + 1e-12)
            lo, hi = cv.measure_bounds(mus)
            assert lo <= hi * (1 + 1e-12)
