from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from spectral_stokes import matrices as mx
from spectral_stokes import polycore as pc
from spectral_stokes.errors import MultiplicityTooLow, NotPolynomial, RootOffCircle

x = sympy.Symbol("x")


def sympy_poly(p: pc.RealPoly):
    return sympy.Poly([sympy.Rational(str(c)) if not isinstance(c, float) else c
                       for c in reversed(p.coeffs)], x)


class TestExpandSignedProduct:
    def test_single_factor(self):
        assert pc.expand_signed_product([(1, 1)]) == pc.RealPoly([-1, 1])

    def test_division_oracle(self):
        # (x^3 - 1) / (x - 1) via an independent long division
        q, r = sympy.div(x**3 - 1, x - 1, x)
        expected = [int(c) for c in reversed(sympy.Poly(q, x).all_coeffs())]
        assert r == 0
        got = pc.expand_signed_product([(1, -1), (3, 1)])
        assert list(got.coeffs) == expected == [1, 1, 1]

    def test_chain_32_polynomial(self):
        q, r = sympy.div((x - 1) * (x**6 - 1), x**3 - 1, x)
        assert r == 0
        got = pc.expand_signed_product([(1, 1), (3, -1), (6, 1)])
        assert sympy_poly(got).as_expr() == sympy.expand(q)
        assert list(got.coeffs) == [-1, 1, 0, -1, 1]

    def test_nonpolynomial_rejected(self):
        with pytest.raises(NotPolynomial):
            pc.expand_signed_product([(2, -1), (3, 1)])

    def test_constant_term_is_unit(self):
        # alternating chain-style factor lists always end at +-1
        for factors in ([(1, 1), (3, -1), (6, 1)], [(1, -1), (4, 1)],
                        [(1, 1), (2, -1), (4, 1)]):
            p = pc.expand_signed_product(factors)
            k, p0 = pc.palindrome_class(p)
            assert p0 in (1, -1)
            assert p0 == (-1) ** (k - 1)


class TestUnitCircleAngles:
    def test_quadratic_oracle(self):
        # roots of x^2 + x + 1 by the quadratic formula: exp(+-2 pi i/3)
        r1, r2 = sympy.solve(x**2 + x + 1, x)
        angles = sorted((-sympy.arg(r) / (2 * sympy.pi)) % 1 for r in (r1, r2))
        assert angles == [sympy.Rational(1, 3), sympy.Rational(2, 3)]
        got = pc.unit_circle_angles(pc.RealPoly([1, 1, 1]))
        assert got == [(Fraction(1, 3), 1), (Fraction(2, 3), 1)]

    def test_triple_root_one(self):
        got = pc.unit_circle_angles(pc.RealPoly([-1, 3, -3, 1]))
        assert got == [(Fraction(0), 3)]

    def test_double_root_minus_one(self):
        got = pc.unit_circle_angles(pc.RealPoly([1, 2, 1]))
        assert got == [(Fraction(1, 2), 2)]

    def test_off_circle_rejected(self):
        with pytest.raises(RootOffCircle):
            pc.unit_circle_angles(pc.RealPoly([1, -3, 1]))

    def test_numeric_mode_snaps(self):
        p = pc.RealPoly([1.0, 1.0, 1.0])
        got = pc.unit_circle_angles(p, tol=1e-9)
        assert len(got) == 2
        assert got[0][0] == Fraction(1, 3) and got[1][0] == Fraction(2, 3)

    def test_round_trip_on_cyclotomic_products(self):
        for mults in ({12: 1}, {1: 2, 3: 1}, {2: 1, 4: 2}):
            p = pc.poly_from_cyclotomic_mults(mults)
            angles = pc.unit_circle_angles(p)
            assert pc.galois_closed_mults(angles) == mults

    def test_numeric_round_trip(self):
        import random
        rng = random.Random(3)
        for _ in range(20):
            half = sorted(rng.uniform(0.02, 0.48) for _ in range(rng.randrange(1, 5)))
            angles = half + [1.0 - b for b in reversed(half)]
            p = pc.poly_from_float_angles(angles)
            got = pc.flatten_angles(pc.unit_circle_angles(p, tol=1e-7))
            assert len(got) == len(angles)
            for x, y in zip(sorted(got, key=float), sorted(angles)):
                assert pc.circle_dist(x, y) <= 1e-7


class TestPalindromeClass:
    def test_symmetric(self):
        k, p0 = pc.palindrome_class(pc.RealPoly([1, 1, 1]))
        assert (k, p0) == (1, 1)

    def test_antisymmetric(self):
        k, p0 = pc.palindrome_class(pc.RealPoly([-1, 1, 0, -1, 1]))
        assert (k, p0) == (2, -1)

    def test_real_roots_off_circle(self):
        k, _ = pc.palindrome_class(pc.RealPoly([1, -3, 1]))
        assert k is None


class TestCompanionMatrix:
    def test_two_by_two(self):
        A = pc.companion_matrix(pc.RealPoly([1, 5, 1]))
        assert A.tolist() == [[-5, -1], [1, 0]]

    def test_degree_one(self):
        assert pc.companion_matrix(pc.RealPoly([-1, 1])).tolist() == [[1]]

    def test_three_by_three_shape(self):
        A = pc.companion_matrix(pc.RealPoly([7, 5, 3, 1]))
        assert A.tolist() == [[-3, -5, -7], [1, 0, 0], [0, 1, 0]]

    @given(st.lists(st.integers(-4, 4).map(lambda n: Fraction(n, 2)),
                    min_size=1, max_size=10))
    @settings(max_examples=40, deadline=None)
    def test_char_poly_property(self, coeffs):
        p = pc.RealPoly(list(coeffs) + [1])
        A = pc.companion_matrix(p)
        cp = mx.char_poly_exact(A)
        oracle = sympy.Matrix(A.tolist()).charpoly(x).all_coeffs()  # high to low
        assert [sympy.Rational(str(c)) for c in reversed(cp.coeffs)] == list(oracle)
        assert cp == p


class TestJordanChains:
    def test_double_root_one(self):
        p = pc.RealPoly([1, -2, 1])
        v0, v1 = pc.jordan_chain_vectors(p, Fraction(0), 1)
        assert np.allclose(v0, [1, 1]) and np.allclose(v1, [1, 0])
        R = np.array([[2.0, -1.0], [1.0, 0.0]])
        assert np.allclose((R - np.eye(2)) @ v1, v0)

    def test_eigenvector_case(self):
        p = pc.RealPoly([1, 1, 1])
        (v0,) = pc.jordan_chain_vectors(p, Fraction(1, 3), 0)
        z = pc.angle_to_point(Fraction(1, 3))
        assert np.allclose(v0, [z, 1])

    def test_double_root_minus_one(self):
        p = pc.RealPoly([1, 2, 1])
        v0, v1 = pc.jordan_chain_vectors(p, Fraction(1, 2), 1)
        assert np.allclose(v0, [-1, 1]) and np.allclose(v1, [-1, 0])

    def test_multiplicity_guard(self):
        with pytest.raises(MultiplicityTooLow):
            pc.jordan_chain_vectors(pc.RealPoly([1, 1, 1]), Fraction(1, 3), 1)

    def test_exact_relation_higher_block(self):
        # (x - 1)^2 (x^2 + x + 1): root of unity angle 1/3, plus a 2-block at 1
        p = pc.RealPoly([1, -2, 1]) * pc.RealPoly([1, 1, 1])
        pc.jordan_chain_vectors(p, Fraction(0), 1)
        pc.jordan_chain_vectors(p, Fraction(1, 3), 0)


class TestSerialization:
    def test_poly_round_trip(self):
        p = pc.RealPoly([Fraction(1, 2), -3, 1])
        assert pc.RealPoly.from_json(p.to_json()) == p

    def test_rational_strings(self):
        assert pc.format_number(Fraction(-1, 2)) == "-1/2"
        assert pc.parse_rational("-1/2") == Fraction(-1, 2)


class TestCyclotomic:
    def test_known_polynomials(self):
        assert list(pc.cyclotomic_polynomial(1).coeffs) == [-1, 1]
        assert list(pc.cyclotomic_polynomial(2).coeffs) == [1, 1]
        assert list(pc.cyclotomic_polynomial(6).coeffs) == [1, -1, 1]
        assert list(pc.cyclotomic_polynomial(12).coeffs) == [1, 0, -1, 0, 1]

    def test_factorization(self):
        p = pc.poly_from_cyclotomic_mults({1: 2, 4: 1, 6: 2})
        mults, rem = pc.factor_cyclotomic(p)
        assert mults == {1: 2, 4: 1, 6: 2}
        assert rem.degree == 0
