import random
from fractions import Fraction

import pytest

from cyclocover.exactmath import (
    Polynomial,
    RationalFunction,
    derivative,
    log_derivative,
    order_at,
    poly_gcd,
    rational_roots,
    squarefree_decomposition,
)

X = Polynomial.x()


def rf(num, den=Polynomial.one()):
    return RationalFunction(num, den)


class TestPolynomial:
    def test_trailing_zeros_stripped(self):
        assert Polynomial((1, 2, 0, 0)).coeffs == (1, 2)
        assert Polynomial((0, 0)).is_zero

    def test_zero_degree_convention(self):
        assert Polynomial.zero().degree == -1
        assert Polynomial.one().degree == 0

    def test_arithmetic(self):
        p = (X + 1) * (X - 1)
        assert p == X**2 - 1
        q, r = (X**3 - 1).divmod(X - 1)
        assert q == X**2 + X + 1 and r.is_zero

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            Polynomial((0.5, 1))

    def test_eval_and_roots(self):
        p = Polynomial.from_roots([Fraction(1, 2), -3])
        assert p(Fraction(1, 2)) == 0 and p(-3) == 0 and p(0) != 0
        assert p.root_multiplicity(Fraction(1, 2)) == 1

    def test_monic_keeps_value_ratio(self):
        p = 3 * (X + 2) ** 2
        assert p.monic() == (X + 2) ** 2

    def test_gcd(self):
        a = (X - 1) ** 2 * (X + 2)
        b = (X - 1) * (X + 5)
        assert poly_gcd(a, b) == X - 1


class TestDerivative:
    def test_power_rule(self):
        assert derivative(rf(X**2)) == rf(2 * X)

    def test_quotient_rule(self):
        f = rf(Polynomial.one(), X - 1)
        assert f.den == X - 1
        expected = RationalFunction(Polynomial((-1,)), (X - 1) ** 2)
        assert derivative(f) == expected

    def test_constant(self):
        assert derivative(rf(Polynomial.constant(5))).is_zero

    def test_reduced_output(self):
        f = rf((X - 1) ** 3)
        d = derivative(f)
        assert d == rf(3 * (X - 1) ** 2)
        assert poly_gcd(d.num, d.den).degree == 0


class TestLogDerivative:
    def test_exponent_rule(self):
        assert log_derivative(rf((X - 1) ** 3)) == RationalFunction(
            Polynomial.constant(3), X - 1
        )

    def test_sum_of_simple_poles(self):
        assert log_derivative(rf(X * (X + 1))) == RationalFunction(
            2 * X + 1, X**2 + X
        )

    def test_common_denominator(self):
        f = rf(X**2 * (X - 1) ** 5)
        expected = RationalFunction(Polynomial.constant(2), X) + RationalFunction(
            Polynomial.constant(5), X - 1
        )
        assert log_derivative(f) == expected

    def test_zero_rejected(self):
        with pytest.raises(ValueError, match="log derivative of zero"):
            log_derivative(rf(Polynomial.zero()))

    def test_multiplicative(self):
        rng = random.Random(11)
        for _ in range(25):
            f = _random_rational_function(rng)
            g = _random_rational_function(rng)
            assert log_derivative(f * g) == log_derivative(f) + log_derivative(g)


class TestOrderAt:
    def test_double_root(self):
        assert order_at(rf((X - 1) ** 2 * (X + 2)), 1) == 2

    def test_pole(self):
        assert order_at(rf(Polynomial.one(), X**3), 0) == -3

    def test_regular_point(self):
        assert order_at(rf(X + 5), 0) == 0

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            order_at(rf(Polynomial.zero()), 0)

    def test_additive_under_product(self):
        rng = random.Random(23)
        for _ in range(25):
            f = _random_rational_function(rng)
            g = _random_rational_function(rng)
            c = Fraction(rng.randint(-3, 3))
            assert order_at(f * g, c) == order_at(f, c) + order_at(g, c)

    def test_derivative_drops_order_by_one(self):
        rng = random.Random(37)
        for _ in range(25):
            f = _random_rational_function(rng)
            c = Fraction(rng.randint(-2, 2))
            m = order_at(f, c)
            if m != 0:
                assert order_at(derivative(f), c) == m - 1


class TestRationalRoots:
    def test_paper_shape_factor(self):
        # (1 + 3x)^2, carrying an arbitrary scalar
        p = Fraction(3, 128) * (Polynomial((1, 3)) ** 2)
        roots, cofactor = rational_roots(p)
        assert roots == [(Fraction(-1, 3), 2)]
        assert cofactor == Polynomial.one()

    def test_no_rational_roots(self):
        p = X**2 + 1
        roots, cofactor = rational_roots(p)
        assert roots == [] and cofactor == p

    def test_simple_split(self):
        roots, cofactor = rational_roots(X**3 - X)
        assert roots == [(Fraction(-1), 1), (Fraction(0), 1), (Fraction(1), 1)]
        assert cofactor == Polynomial.one()

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            rational_roots(Polynomial.zero())

    def test_large_coefficients(self):
        # roots with big numerators and denominators, mixed with an
        # irrational quadratic; no integer factorization involved
        big = Fraction(10**9 + 7, 3)
        p = (
            Polynomial.from_roots([big])
            * Polynomial.from_roots([Fraction(-1, 10**6)]) ** 3
            * (X**2 - 2)
        )
        roots, cofactor = rational_roots(p)
        assert (big, 1) in roots and (Fraction(-1, 10**6), 3) in roots
        assert cofactor == X**2 - 2

    def test_tight_root_cluster(self):
        # rational roots closer together than any fixed isolation window
        tight = [Fraction(1, 2), Fraction(1, 2) + Fraction(1, 10**9), Fraction(-1, 2)]
        p = Polynomial.from_roots(tight) * (X**2 - 3)
        roots, cofactor = rational_roots(p)
        assert sorted(r for r, _ in roots) == sorted(tight)
        assert cofactor == X**2 - 3

    def test_bisection_midpoint_hits_root(self):
        # 0 sits exactly at the midpoint of the symmetric isolation interval
        p = Polynomial.from_roots([Fraction(-1, 7), 0, Fraction(1, 7)])
        roots, cofactor = rational_roots(p)
        assert [r for r, _ in roots] == [Fraction(-1, 7), 0, Fraction(1, 7)]
        assert cofactor == Polynomial.one()

    def test_round_trip(self):
        rng = random.Random(5)
        for _ in range(20):
            factors = [
                Polynomial.from_roots(
                    [Fraction(rng.randint(-6, 6), rng.randint(1, 4))]
                )
                ** rng.randint(1, 3)
                for _ in range(rng.randint(1, 3))
            ]
            scalar = Fraction(rng.randint(1, 9), rng.randint(1, 9))
            irrational = X**2 + rng.randint(1, 5)
            p = Polynomial.constant(scalar) * irrational
            for f in factors:
                p = p * f
            roots, cofactor = rational_roots(p)
            rebuilt = Polynomial.constant(p.leading) * cofactor
            for root, mult in roots:
                rebuilt = rebuilt * Polynomial.from_roots([root]) ** mult
            assert rebuilt == p


class TestSquarefreeDecomposition:
    def test_multiplicities(self):
        p = (X - 1) ** 3 * (X + 2) * (X**2 + 1) ** 2
        parts = squarefree_decomposition(p)
        assert (X + 2, 1) in parts
        assert (X**2 + 1, 2) in parts
        assert (X - 1, 3) in parts

    def test_round_trip(self):
        rng = random.Random(91)
        for _ in range(20):
            p = Polynomial.one()
            for _ in range(rng.randint(1, 3)):
                base = Polynomial.from_roots([rng.randint(-4, 4)]) + rng.randint(0, 1) * X**2
                p = p * base ** rng.randint(1, 3)
            rebuilt = Polynomial.one()
            for factor, mult in squarefree_decomposition(p):
                rebuilt = rebuilt * factor**mult
            assert rebuilt == p.monic()


def _random_rational_function(rng) -> RationalFunction:
    def small_poly():
        p = Polynomial.from_roots(
            [Fraction(rng.randint(-3, 3)) for _ in range(rng.randint(0, 2))]
        )
        return p * Fraction(rng.randint(1, 5), rng.randint(1, 3))

    num = small_poly()
    den = small_poly()
    return RationalFunction(num, den)
