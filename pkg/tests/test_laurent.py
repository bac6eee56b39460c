"""
Tests for Laurent polynomial arithmetic and quantum integers.
"""

import math
import random
from fractions import Fraction

import pytest

from canonical_basis.core.errors import NonDivisible, ParseError
from canonical_basis.core.laurent import (
    Q,
    LaurentPoly,
    bar_symmetric_correction,
    lp_arith,
    q_binomial,
    q_factorial,
    q_int,
    quantum_bracket,
)


def P(text: str) -> LaurentPoly:
    return LaurentPoly.parse(text)


class TestParseRender:
    """Tests for the textual form."""

    @pytest.mark.parametrize(
        "text",
        ["0", "1", "-q", "q^2+2+q^-2", "2*q^-1", "q^9-3*q^-4", "-2*q^3+q"],
    )
    def test_render_reproduces_literal(self, text):
        """Test canonical literals render back unchanged."""
        assert P(text).render() == text

    def test_whitespace_and_like_terms(self):
        """Test whitespace is ignored and repeated exponents are summed."""
        assert P(" q + q - 1 ") == P("2*q-1")

    def test_cancellation_gives_zero(self):
        """Test terms cancelling to zero are dropped."""
        p = P("q^2-q^2")
        assert p.is_zero()
        assert p.render() == "0"
        assert p.terms == {}

    @pytest.mark.parametrize("text", ["q^", "2*", "x", "q^a", "1..2"])
    def test_invalid_literals(self, text):
        """Test malformed literals raise ParseError."""
        with pytest.raises(ParseError):
            P(text)


class TestArithmetic:
    """Tests for ring operations."""

    def test_square_of_q_plus_inverse(self):
        """Test (q + q^-1)^2 = q^2 + 2 + q^-2."""
        p = P("q+q^-1")
        assert p * p == P("q^2+2+q^-2")

    def test_integer_coercion(self):
        """Test ints mix with Laurent polynomials on both sides."""
        assert 1 + Q == P("q+1")
        assert Q - 1 == P("q-1")
        assert 1 - Q == P("1-q")
        assert 3 * Q == P("3*q")
        assert P("2") == 2

    def test_lp_arith_dispatch(self):
        """Test the add/sub/mul/neg dispatcher."""
        a, b = P("q"), P("q^-1")
        assert lp_arith(a, b, "add") == P("q+q^-1")
        assert lp_arith(a, b, "sub") == P("q-q^-1")
        assert lp_arith(a, b, "mul") == 1
        assert lp_arith(a, b, "neg") == P("-q")
        with pytest.raises(ValueError):
            lp_arith(a, b, "pow")

    def test_bar_is_involution(self):
        """Test bar(bar(p)) = p and bar swaps exponents."""
        p = P("3*q^4-q+7-q^-2")
        assert p.bar() == P("-q^2+7-q^-1+3*q^-4")
        assert p.bar().bar() == p

    def test_shift_and_evaluate(self):
        """Test multiplication by q^k and exact evaluation."""
        p = P("q+q^-1")
        assert p.shift(2) == P("q^3+q")
        assert p.evaluate(Fraction(2)) == Fraction(5, 2)

    def test_degree_and_valuation(self):
        """Test extreme exponents and their failure on zero."""
        p = P("q^5+q^-3")
        assert p.degree() == 5
        assert p.valuation() == -3
        with pytest.raises(ValueError):
            LaurentPoly.zero().degree()

    def test_hash_matches_equality(self):
        """Test equal polynomials hash equally."""
        assert hash(P("q+1")) == hash(P("1+q"))
        assert len({P("q"), P("q"), P("q^-1")}) == 2


class TestDivision:
    """Tests for exact division."""

    def test_divide_exact(self):
        """Test (q^2 + 2 + q^-2) / (q + q^-1) = q + q^-1."""
        assert P("q^2+2+q^-2").divide_exact(P("q+q^-1")) == P("q+q^-1")

    def test_divide_zero_dividend(self):
        """Test 0 / p = 0."""
        assert LaurentPoly.zero().divide_exact(P("q+1")).is_zero()

    def test_non_divisible(self):
        """Test q / (q + q^-1) raises NonDivisible."""
        with pytest.raises(NonDivisible):
            P("q").divide_exact(P("q+q^-1"))

    def test_divisible_with_shift(self):
        """Test q^2 + 1 = q (q + q^-1) divides exactly."""
        assert P("q^2+1").divide_exact(P("q+q^-1")) == Q

    def test_divide_by_zero(self):
        """Test division by zero raises ZeroDivisionError."""
        with pytest.raises(ZeroDivisionError):
            P("q").divide_exact(LaurentPoly.zero())


class TestQuantumIntegers:
    """Tests for [n]_d, factorials and binomials."""

    def test_small_quantum_integers(self):
        """Test [0], [1], [2], [3] and the long-root [2]_3."""
        assert q_int(0).is_zero()
        assert q_int(1) == 1
        assert q_int(2) == P("q+q^-1")
        assert q_int(3) == P("q^2+1+q^-2")
        assert q_int(2, 3) == P("q^3+q^-3")

    def test_quantum_integers_are_bar_invariant(self):
        """Test [n]_d is bar-invariant."""
        for n in range(6):
            for d in (1, 2, 3):
                assert q_int(n, d).is_bar_invariant()

    def test_factorial_and_binomial(self):
        """Test [3]! and the 4-choose-2 binomial."""
        assert q_factorial(3) == q_int(2) * q_int(3)
        assert q_binomial(4, 2) == P("q^4+q^2+2+q^-2+q^-4")
        assert q_binomial(3, 0) == 1
        assert q_binomial(3, 5).is_zero()

    def test_quantum_bracket_is_odd(self):
        """Test [-m] = -[m]."""
        assert quantum_bracket(-2) == -q_int(2)
        assert quantum_bracket(0).is_zero()

    def test_negative_argument(self):
        """Test negative n is rejected."""
        with pytest.raises(ValueError):
            q_int(-1)


class TestBarSymmetricCorrection:
    """Tests for the correction used by triangular reduction."""

    @pytest.mark.parametrize(
        "z, xi",
        [
            ("q+q^-1", "-q-q^-1"),
            ("1", "-1"),
            ("q^2+q^5", "0"),
            ("2*q^-1+q^3", "-2*q-2*q^-1"),
            ("1+2*q^2+2*q^4", "-1"),
        ],
    )
    def test_known_corrections(self, z, xi):
        """Test xi for hand-computed z."""
        assert bar_symmetric_correction(P(z)) == P(xi)

    @pytest.mark.parametrize("z", ["q^-3+q^-1+1+q+q^3", "5*q^-2-q^2", "7"])
    def test_result_is_bar_invariant_and_lands_in_qzq(self, z):
        """Test xi is bar-invariant and z + xi lies in qZ[q]."""
        xi = bar_symmetric_correction(P(z))
        assert xi.is_bar_invariant()
        assert (P(z) + xi).in_q_zq()


def random_poly(rng: random.Random, nonzero: bool = False) -> LaurentPoly:
    while True:
        p = LaurentPoly({rng.randint(-4, 4): rng.randint(-3, 3) for _ in range(rng.randint(0, 4))})
        if p or not nonzero:
            return p


class TestRingProperties:
    """Seeded checks of the ring axioms and exact division."""

    @pytest.mark.parametrize("seed", range(8))
    def test_ring_axioms(self, seed):
        """Test commutativity, associativity and distributivity on random polynomials."""
        rng = random.Random(seed)
        for _ in range(20):
            a, b, c = (random_poly(rng) for _ in range(3))
            assert a + b == b + a
            assert a * b == b * a
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a - a == 0
            assert (a * b).bar() == a.bar() * b.bar()

    @pytest.mark.parametrize("seed", range(8))
    def test_divide_product(self, seed):
        """Test divide_exact(a * b, b) == a for nonzero b."""
        rng = random.Random(seed)
        for _ in range(20):
            a, b = random_poly(rng), random_poly(rng, nonzero=True)
            assert (a * b).divide_exact(b) == a


class TestBinomialProperties:
    """Exhaustive checks of the quantum binomials for n <= 12."""

    @pytest.mark.parametrize("d", [1, 2, 3])
    def test_pascal_rule(self, d):
        """Test [n, k] = q^(dk) [n-1, k] + q^(-d(n-k)) [n-1, k-1]."""
        for n in range(1, 13):
            for k in range(n + 1):
                expected = q_binomial(n - 1, k, d).shift(d * k) + q_binomial(
                    n - 1, k - 1, d
                ).shift(-d * (n - k))
                assert q_binomial(n, k, d) == expected

    @pytest.mark.parametrize("d", [1, 2, 3])
    def test_symmetric_and_classical_limit(self, d):
        """Test bar-invariance, [n, k] = [n, n-k] and the value at q = 1."""
        for n in range(13):
            for k in range(n + 1):
                b = q_binomial(n, k, d)
                assert b.is_bar_invariant()
                assert b == q_binomial(n, n - k, d)
                assert b.evaluate(Fraction(1)) == math.comb(n, k)
