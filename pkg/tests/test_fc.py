import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fcseries import fc
from fcseries.branchcut import carg, cpow

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012, 742900, 2674440, 9694845]

small_fractions = st.fractions(min_value=-3, max_value=3, max_denominator=4)


class TestFcNumber:
    def test_catalan_sequence_exact(self):
        for t, want in enumerate(CATALAN):
            assert fc.fc_number(2, 1, t) == want

    def test_base_case_any_parameters(self):
        assert fc.fc_number(7.3, -2.1, 0) == 1

    def test_integer_form_oracle(self):
        # (1/((m-1)t+1)) * binom(mt, t) at m=3, t=2
        assert fc.fc_number(3, 1, 2) == Fraction(math.comb(6, 2), 5) == 3

    def test_exact_mode_returns_fractions(self):
        v = fc.fc_number(Fraction(1, 5), Fraction(1, 5), 7)
        assert isinstance(v, Fraction)

    def test_float_mode_matches_exact(self):
        for t in (1, 5, 23):
            exact = fc.fc_number(Fraction(3, 2), Fraction(-1, 3), t)
            approx = fc.fc_number(1.5, -1 / 3, t)
            assert approx == pytest.approx(float(exact), rel=1e-12)

    def test_negative_t_rejected(self):
        with pytest.raises(ValueError):
            fc.fc_number(2, 1, -1)

    def test_zero_pattern_fifth_roots(self):
        # t*mu + r integer inside 1..t-1 forces an exact zero factor
        for t in range(4, 60, 5):
            assert fc.fc_number(Fraction(1, 5), Fraction(1, 5), t) == 0


class TestFcMulti:
    def test_small_example(self):
        assert fc.fc_multi((2, 3), 1, (1, 1)) == 5

    def test_zero_index(self):
        assert fc.fc_multi((Fraction(7, 2), -2), Fraction(5, 3), (0, 0)) == 1

    def test_equal_exponent_collapse(self):
        assert fc.fc_multi((2, 2, 2), 1, (1, 0, 1)) == 2 * fc.fc_number(2, 1, 2) == 4

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            fc.fc_multi((2, 3), 1, (1, 1, 1))

    @given(
        mu=st.lists(small_fractions, min_size=1, max_size=3),
        r=small_fractions,
        data=st.data(),
    )
    @settings(max_examples=60, deadline=None)
    def test_defining_forms_agree(self, mu, r, data):
        k = len(mu)
        t = tuple(data.draw(st.integers(min_value=0, max_value=4)) for _ in range(k))
        assert fc.fc_multi(mu, r, t) == fc.fc_multi_binomial(mu, r, t)

    @given(
        mu=st.lists(small_fractions, min_size=1, max_size=3),
        r=small_fractions,
        s=small_fractions,
        data=st.data(),
    )
    @settings(max_examples=40, deadline=None)
    def test_convolution_identity_exact(self, mu, r, s, data):
        k = len(mu)
        t = tuple(data.draw(st.integers(min_value=0, max_value=3)) for _ in range(k))
        lhs = fc.fc_multi(mu, r + s, t)

        def subs(n_vec):
            if len(n_vec) == 1:
                return [(j,) for j in range(n_vec[0] + 1)]
            return [(j,) + rest for j in range(n_vec[0] + 1) for rest in subs(n_vec[1:])]

        rhs = sum(
            fc.fc_multi(mu, r, u) * fc.fc_multi(mu, s, tuple(a - b for a, b in zip(t, u)))
            for u in subs(list(t))
        )
        assert lhs == rhs

    def test_recurrence_exact_up_to_level_six(self):
        mu = (Fraction(1, 2), Fraction(5, 3))
        r = Fraction(-2, 3)
        for level in range(7):
            for t in fc.compositions(level, 2):
                lhs = fc.fc_multi(mu, r + 1, t)
                rhs = fc.fc_multi(mu, r, t)
                for j in range(2):
                    if t[j] > 0:
                        tm = tuple(x - (1 if i == j else 0) for i, x in enumerate(t))
                        rhs += fc.fc_multi(mu, r + mu[j], tm)
                assert lhs == rhs


class TestCompositions:
    def test_small_case(self):
        assert list(fc.compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]

    def test_zero_level(self):
        assert list(fc.compositions(0, 3)) == [(0, 0, 0)]

    def test_count_stars_and_bars(self):
        assert len(list(fc.compositions(3, 3))) == math.comb(3 + 2, 2) == 10
        for t, k in ((5, 2), (4, 4), (7, 3)):
            assert len(list(fc.compositions(t, k))) == math.comb(t + k - 1, k - 1)

    def test_lexicographic_order(self):
        seq = list(fc.compositions(4, 3))
        assert seq == sorted(seq)


class TestGenfunEval:
    def test_catalan_closed_form(self):
        z = 0.2
        closed = (1 - math.sqrt(1 - 4 * z)) / (2 * z)
        sv = fc.genfun_eval(2, 1, z, 60)
        assert abs(sv.value - closed) <= max(sv.tail_estimate, 1e-9)
        sv = fc.genfun_eval(2, 1, z, 200)
        assert sv.value == pytest.approx(closed, abs=1e-14)

    def test_z_zero(self):
        sv = fc.genfun_eval(-1.7, 0.4, 0, 17)
        assert sv.value == 1 and sv.tail_estimate == 0.0

    def test_quintic_fixed_point_residual(self):
        sv = fc.genfun_eval(Fraction(1, 5), Fraction(1, 5), 0.1, 40)
        v = sv.value
        assert abs(v ** 5 - 1 - 0.1 * v) < 1e-12

    def test_outside_radius_warns_and_inf_tail(self):
        with pytest.warns(RuntimeWarning):
            sv = fc.genfun_eval(2, 1, 0.3, 30)  # radius 1/4
        assert sv.tail_estimate == math.inf

    def test_fast_path_matches_reference(self):
        mu, r = Fraction(1, 5), Fraction(1, 5)
        z = complex(-0.55, 0.2)
        slow = fc.genfun_eval(mu, r, z, 512)       # reference path boundary
        zp = 1 + 0j
        acc = 0j
        for t in range(601):
            acc += complex(fc.fc_number(mu, r, t)) * zp
            zp *= z
        fast = fc.genfun_eval(mu, r, z, 600)       # vectorized path
        assert abs(fast.value - acc) < 1e-13
        # terms past 512 are ~1e-250 here, so the two paths agree to rounding
        assert abs(slow.value - acc) < 1e-13

    def test_fast_path_float_params(self):
        z = complex(0.21, -0.13)
        acc = sum(complex(fc.fc_number(-0.25, 0.25, t)) * z ** t for t in range(701))
        fast = fc.genfun_eval(-0.25, 0.25, z, 700)
        assert abs(fast.value - acc) < 1e-13

    def test_tail_estimate_bounds_error_inside_radius(self):
        mu, r = 2, 1
        z = 0.2
        closed = (1 - math.sqrt(1 - 4 * z)) / (2 * z)
        for T in (20, 40, 80):
            sv = fc.genfun_eval(mu, r, z, T)
            assert abs(sv.value - closed) <= 10 * sv.tail_estimate + 1e-15


class TestGenfunMultiEval:
    def test_equal_exponent_collapse(self):
        sv2 = fc.genfun_multi_eval((2, 2), 1, (0.1, 0.1), 60)
        sv1 = fc.genfun_eval(2, 1, 0.2, 60)
        assert abs(sv2.value - sv1.value) < 1e-14

    def test_zero_point(self):
        sv = fc.genfun_multi_eval((0.5, 1.5), 1, (0, 0), 10)
        assert sv.value == 1 and sv.tail_estimate == 0.0

    def test_functional_equation_residual(self):
        mu = (Fraction(1, 2), Fraction(3, 2))
        z = (0.2, 0.1)
        sv = fc.genfun_multi_eval(mu, 1, z, 80)
        f = sv.value
        res = f - 1 - z[0] * cpow(f, 0.5) - z[1] * cpow(f, 1.5)
        assert abs(res) < 1e-10

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            fc.genfun_multi_eval((2, 3), 1, (0.1,), 10)

    def test_power_law_numeric(self):
        import random

        rng = random.Random(7)
        for _ in range(6):
            k = rng.randint(1, 3)
            mu = [rng.uniform(-2, 3) for _ in range(k)]
            if any(abs(m) < 0.05 or abs(m - 1) < 0.05 for m in mu):
                continue
            r = rng.uniform(-2, 2)
            s = rng.uniform(-2, 2)
            from fcseries.convergence import sufficient_simplex

            rad = sufficient_simplex(mu).radius
            z = [rad / (2 * k) * rng.uniform(0.3, 1.0) for _ in range(k)]
            br = fc.genfun_multi_eval(mu, r, z, 60).value
            bs = fc.genfun_multi_eval(mu, s, z, 60).value
            brs = fc.genfun_multi_eval(mu, r + s, z, 60).value
            assert abs(br * bs - brs) < 1e-9

    def test_three_variable_functional_equation(self):
        mu = (Fraction(1, 3), Fraction(1, 2), Fraction(5, 2))
        z = (0.05, 0.04, 0.02)
        f = fc.genfun_multi_eval(mu, 1, z, 60).value
        res = f - 1 - sum(zj * cpow(f, float(m)) for zj, m in zip(z, mu))
        assert abs(res) < 1e-10


class TestParamTypes:
    def test_fcparams_validation(self):
        with pytest.raises(ValueError):
            fc.FCParams(math.inf, 1.0)
        fc.FCParams(0.5, -1.0)

    def test_multi_index_unit_vector(self):
        idx = fc.MultiFCIndex((1, 0, 3))
        assert idx.level == 4
        assert idx.unit == (Fraction(1, 4), Fraction(0), Fraction(3, 4))
        with pytest.raises(ValueError):
            fc.MultiFCIndex((0, 0)).unit

    def test_multi_params_nonempty(self):
        with pytest.raises(ValueError):
            fc.MultiFCParams((), 1.0)


class TestBranchCut:
    def test_arg_range(self):
        assert carg(1) == 0.0
        assert carg(-1) == pytest.approx(math.pi)
        assert carg(complex(0, -1)) == pytest.approx(3 * math.pi / 2)

    def test_cpow_positive_real(self):
        assert cpow(4.0, 0.5) == pytest.approx(2.0)

    def test_cpow_below_axis_uses_big_arg(self):
        w = complex(1, -1e-12)  # just below the positive real axis
        val = cpow(w, 0.5)
        assert val.real == pytest.approx(-1.0, abs=1e-6)

    def test_cpow_integer_is_native(self):
        w = complex(-2, 1)
        assert cpow(w, 3) == w ** 3

    def test_cpow_zero(self):
        assert cpow(0, 0.5) == 0
        with pytest.raises(ZeroDivisionError):
            cpow(0, -1)
