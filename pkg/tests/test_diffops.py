"""Minor theta operators, polarized compounds and the bracket."""

import random
from fractions import Fraction

import pytest

from siegelq.diffops import (
    BracketParams,
    half_rising,
    leading_part,
    polarize_compound,
    rankin_cohen,
    theta_operator,
)
from siegelq.halfint import compound, enumerate_indices, mat_add, mat_scale
from siegelq.qexpansion import FourierExpansion, eisenstein
from siegelq.theta import gram_a, rep_numbers


def rand_symmetric_rational(rng, n):
    m = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            v = Fraction(rng.randint(-6, 6), rng.choice([1, 1, 2]))
            m[i][j] = v
            m[j][i] = v
    return tuple(tuple(row) for row in m)


def rand_expansion(rng, degree, bound):
    coeffs = {
        t.doubled: Fraction(rng.randint(-9, 9))
        for t in enumerate_indices(degree, bound)
    }
    return FourierExpansion(degree, bound, coeffs)


class TestHalfRising:
    def test_explicit(self):
        assert half_rising(5, 0) == 1
        assert half_rising(Fraction(3, 2), 2) == 3
        assert half_rising(2, 1) == 2
        assert half_rising(Fraction(1, 2), 3) == Fraction(3, 4)

    def test_recursion(self):
        rng = random.Random(61)
        for _ in range(40):
            s = Fraction(rng.randint(-8, 8), rng.choice([1, 2]))
            h = rng.randint(0, 6)
            assert half_rising(s, h + 1) == half_rising(s, h) * (s + Fraction(h, 2))

    def test_validation(self):
        with pytest.raises(ValueError):
            half_rising(1, -1)


class TestPolarizeCompound:
    def test_endpoints_are_compounds(self):
        rng = random.Random(62)
        for _ in range(60):
            n = rng.randint(1, 4)
            r = rng.randint(1, n)
            a = rand_symmetric_rational(rng, n)
            b = rand_symmetric_rational(rng, n)
            cs = polarize_compound(a, b, r)
            assert len(cs) == r + 1
            assert cs[0] == compound(a, r)
            assert cs[r] == compound(b, r)

    def test_lambda_evaluation(self):
        rng = random.Random(63)
        for _ in range(60):
            n = rng.randint(1, 3)
            r = rng.randint(1, n)
            a = rand_symmetric_rational(rng, n)
            b = rand_symmetric_rational(rng, n)
            cs = polarize_compound(a, b, r)
            for lam in (-2, -1, 0, 1, 2):
                pencil = tuple(
                    tuple(a[i][j] + lam * b[i][j] for j in range(n)) for i in range(n)
                )
                total = cs[0]
                for i in range(1, r + 1):
                    total = mat_add(total, mat_scale(Fraction(lam) ** i, cs[i]))
                assert compound(pencil, r) == total

    def test_two_by_two_mixed_term(self):
        # hand-derived: the lambda^1 coefficient of det(R + lambda S) is
        # r11 s22 + s11 r22 - 2 r12 s12 for symmetric R, S
        rng = random.Random(64)
        for _ in range(30):
            a = rand_symmetric_rational(rng, 2)
            b = rand_symmetric_rational(rng, 2)
            cs = polarize_compound(a, b, 2)
            expect = a[0][0] * b[1][1] + b[0][0] * a[1][1] - 2 * a[0][1] * b[0][1]
            assert cs[1] == ((expect,),)

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            polarize_compound(((Fraction(1),),), ((Fraction(1), 0), (0, Fraction(1))), 1)
        with pytest.raises(ValueError):
            polarize_compound(((Fraction(1),),), ((Fraction(1),),), 2)


class TestThetaOperator:
    def test_degree_one_is_q_derivative(self):
        e4 = eisenstein(4, 5)
        th = theta_operator(e4, 1)
        for t in range(6):
            key = ((2 * t,),)
            assert th.coefficient(key) == ((t * e4.coefficient(key),),)

    def test_degree_two_order_one_blocks(self):
        f = rep_numbers(gram_a(2), 2, 2)
        th = theta_operator(f, 1)
        key = ((2, 1), (1, 2))
        a = f.coefficient(key)
        assert th.coefficient(key) == (
            (a, a * Fraction(1, 2)),
            (a * Fraction(1, 2), a),
        )

    def test_full_order_is_determinant(self):
        f = rep_numbers(gram_a(2), 2, 2)
        th = theta_operator(f, 2)
        key = ((2, 1), (1, 2))
        det_t = Fraction(3, 4)
        assert th.coefficient(key) == ((f.coefficient(key) * det_t,),)

    def test_shape_and_validation(self):
        f = rep_numbers(gram_a(2), 2, 2)
        th = theta_operator(f, 1)
        assert th.shape == ("compound", 1)
        with pytest.raises(ValueError):
            theta_operator(f, 3)
        with pytest.raises(ValueError):
            theta_operator(th, 1)

    def test_scalar_multiplication_both_sides(self):
        f = rep_numbers(gram_a(2), 2, 2)
        g = rep_numbers(gram_a(2), 2, 2)
        th = theta_operator(f, 1)
        assert th * g == g * th

    def test_block_times_block_rejected(self):
        th = theta_operator(rep_numbers(gram_a(2), 2, 2), 1)
        with pytest.raises(ValueError):
            th * th


class TestBracket:
    def test_classical_shape_order_one(self):
        # n = r = 1 reduces to k f theta(g) - l theta(f) g
        rng = random.Random(65)
        for _ in range(10):
            f = rand_expansion(rng, 1, 4)
            g = rand_expansion(rng, 1, 4)
            k, l = rng.randint(1, 9), rng.randint(1, 9)
            params = BracketParams(1, 1, k, l)
            got = rankin_cohen(f, g, params)
            expect = (f * theta_operator(g, 1)).scale(k) + (
                theta_operator(f, 1) * g
            ).scale(-l)
            assert got == expect

    def test_bilinear(self):
        rng = random.Random(66)
        for n, r in ((1, 1), (2, 1), (2, 2)):
            f1 = rand_expansion(rng, n, 2)
            f2 = rand_expansion(rng, n, 2)
            g = rand_expansion(rng, n, 2)
            params = BracketParams(n, r, 3, 5)
            lhs = rankin_cohen(f1 + f2, g, params)
            rhs = rankin_cohen(f1, g, params) + rankin_cohen(f2, g, params)
            assert lhs == rhs

    def test_constant_second_argument_is_leading_part(self):
        # with g constant only the derivative-free piece survives
        rng = random.Random(67)
        for n, r in ((1, 1), (2, 1), (2, 2)):
            f = rand_expansion(rng, n, 2)
            g = FourierExpansion.constant(3, n, 2)
            params = BracketParams(n, r, Fraction(7, 2), 4)
            assert rankin_cohen(f, g, params) == leading_part(f, g, params)

    def test_antisymmetry_small(self):
        rng = random.Random(68)
        for n, r in ((1, 1), (2, 1), (2, 2)):
            f = rand_expansion(rng, n, 2)
            g = rand_expansion(rng, n, 2)
            k, l = rng.randint(1, 8), rng.randint(1, 8)
            fwd = rankin_cohen(f, g, BracketParams(n, r, k, l))
            bwd = rankin_cohen(g, f, BracketParams(n, r, l, k))
            assert fwd == bwd.scale((-1) ** r)

    def test_bound_is_min(self):
        rng = random.Random(69)
        f = rand_expansion(rng, 1, 5)
        g = rand_expansion(rng, 1, 3)
        assert rankin_cohen(f, g, BracketParams(1, 1, 4, 6)).trace_bound == 3

    def test_rational_weights_accepted(self):
        rng = random.Random(70)
        f = rand_expansion(rng, 2, 2)
        g = rand_expansion(rng, 2, 2)
        params = BracketParams(2, 2, Fraction(1, 2), Fraction(3, 2))
        rankin_cohen(f, g, params)  # exactness only; no crash, no floats

    def test_params_validation(self):
        with pytest.raises(ValueError):
            BracketParams(2, 3, 4, 6)
        with pytest.raises(ValueError):
            BracketParams(0, 1, 4, 6)
        f = rep_numbers(gram_a(2), 2, 2)
        th = theta_operator(f, 1)
        with pytest.raises(ValueError):
            rankin_cohen(th, f, BracketParams(2, 1, 1, 1))
        with pytest.raises(ValueError):
            rankin_cohen(eisenstein(4, 2), f, BracketParams(2, 1, 4, 1))

    def test_weight_metadata(self):
        e4 = eisenstein(4, 3)
        e6 = eisenstein(6, 3)
        b = rankin_cohen(e4, e6, BracketParams(1, 1, 4, 6))
        assert b.weight == 10
