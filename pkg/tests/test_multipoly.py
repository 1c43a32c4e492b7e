import random
from fractions import Fraction

import numpy as np
import pytest

from fcseries.multipoly import MultiPoly, det_bareiss

V = ("x", "y")


def _p(terms):
    return MultiPoly(V, terms)


class TestArithmetic:
    def test_add_cancels(self):
        a = _p({(1, 0): 2, (0, 1): 3})
        b = _p({(1, 0): -2})
        assert (a + b).terms == {(0, 1): 3}

    def test_mul(self):
        x = MultiPoly.var(V, "x")
        y = MultiPoly.var(V, "y")
        p = (x + y) * (x - y)
        assert p == x * x - y * y

    def test_pow(self):
        x = MultiPoly.var(V, "x")
        assert (x + 1) ** 3 == x ** 3 + 3 * x ** 2 + 3 * x + MultiPoly.const(V, 1)

    def test_int_coercion(self):
        x = MultiPoly.var(V, "x")
        assert (x + 2) - 2 == x

    def test_exact_div_roundtrip(self):
        rng = random.Random(0)
        for _ in range(25):
            a = _p({(rng.randint(0, 3), rng.randint(0, 3)): rng.randint(-5, 5) for _ in range(4)})
            b = _p({(rng.randint(0, 2), rng.randint(0, 2)): rng.randint(-5, 5) for _ in range(3)})
            if not a or not b:
                continue
            assert (a * b).exact_div(b) == a

    def test_exact_div_rejects_inexact(self):
        x = MultiPoly.var(V, "x")
        with pytest.raises(ValueError):
            (x * x + 1).exact_div(x)

    def test_evaluate_exact(self):
        p = _p({(2, 1): 3, (0, 0): -7})
        assert p.evaluate({"x": Fraction(1, 2), "y": 4}) == 3 * Fraction(1, 4) * 4 - 7


class TestSubstitutions:
    def test_substitute_scalars(self):
        p = _p({(2, 1): 3, (1, 0): 5})
        q = p.substitute_scalars({"y": -1})
        assert q == _p({(2, 0): -3, (1, 0): 5})

    def test_substitute_zero_kills(self):
        p = _p({(2, 1): 3, (1, 0): 5})
        assert p.substitute_scalars({"y": 0}) == _p({(1, 0): 5})

    def test_rename_projects(self):
        p = _p({(2, 0): 3})
        q = p.rename({"x": "u"}, ("u",))
        assert q.vars == ("u",) and q.terms == {(2,): 3}
        with pytest.raises(ValueError):
            _p({(1, 1): 1}).rename({"x": "u"}, ("u",))

    def test_ray_coeffs(self):
        p = _p({(2, 0): 1, (0, 1): -3, (1, 1): 2})
        # along (a, b): a^2 s^2 - 3 b s + 2 a b s^2
        assert p.ray_coeffs((2, 5)) == [0, -15, 24]

    def test_axis_restriction(self):
        p = _p({(2, 0): 1, (1, 1): 7, (0, 3): -2})
        assert p.axis_restriction("x") == [0, 0, 1]
        assert p.axis_restriction("y") == [0, 0, 0, -2]

    def test_content_and_divide(self):
        p = _p({(2, 1): 4, (1, 1): -2})
        assert p.content_monomial() == (1, 1)
        assert p.divide_monomial((1, 1)) == _p({(1, 0): 4, (0, 0): -2})


class TestCanonicalForm:
    def test_golden_string(self):
        p = _p({(0, 0): 4, (2, 0): -1, (1, 1): 3})
        assert p.canonical_str() == "-1 * x^2 * y^0\n3 * x^1 * y^1\n4 * x^0 * y^0"

    def test_hash_equality(self):
        a = _p({(1, 0): 2})
        b = _p({(1, 0): 2})
        assert a == b and hash(a) == hash(b)


class TestBareiss:
    def test_against_numpy_integer_matrices(self):
        rng = random.Random(1)
        vars0 = ()
        for n in (1, 2, 3, 4, 5):
            for _ in range(8):
                m = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)]
                entries = [[MultiPoly.const(vars0, v) for v in row] for row in m]
                got = det_bareiss(entries, vars0)
                want = round(float(np.linalg.det(np.array(m, dtype=float))))
                assert got.constant_term() == want

    def test_symbolic_two_by_two(self):
        x = MultiPoly.var(V, "x")
        y = MultiPoly.var(V, "y")
        one = MultiPoly.const(V, 1)
        d = det_bareiss([[x, y], [one, x]], V)
        assert d == x * x - y

    def test_zero_column_gives_zero(self):
        z = MultiPoly.zero(V)
        one = MultiPoly.const(V, 1)
        assert det_bareiss([[z, one], [z, one]], V) == MultiPoly.zero(V)

    def test_pivoting_with_zero_pivot(self):
        z = MultiPoly.zero(V)
        one = MultiPoly.const(V, 1)
        two = MultiPoly.const(V, 2)
        # det [[0,1],[2,0]] = -2
        assert det_bareiss([[z, one], [two, z]], V).constant_term() == -2
