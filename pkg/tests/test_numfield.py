import random
from fractions import Fraction

import pytest

from algpoly import EmbeddingInterval, field_create, parse_elem, render_elem
from algpoly.errors import (
    DivisionByZero,
    ElementSyntaxError,
    FieldMismatch,
    NoRootInInterval,
    NotSquareFree,
    ZeroPolynomial,
)

from oracles import oracle_sign


class TestFieldCreate:
    def test_sqrt5(self, qsqrt5):
        lo, hi = qsqrt5.generator_enclosure()
        assert Fraction("2.2360679") < lo < hi < Fraction("2.2360680")

    def test_degree_one_is_rational(self):
        f = field_create([-1, 1], EmbeddingInterval(0, 2))
        assert f.degree == 1
        assert f.gen() == 1

    def test_negative_root_interval(self):
        f = field_create([-5, 0, 1], EmbeddingInterval(-3, -1))
        assert f.gen().sign() == -1
        assert (-f.gen()).floor() == 2

    def test_no_root(self):
        with pytest.raises(NoRootInInterval):
            field_create([-5, 0, 1], EmbeddingInterval(3, 4))

    def test_two_roots(self):
        with pytest.raises(NoRootInInterval):
            field_create([-5, 0, 1], EmbeddingInterval(-3, 3))

    def test_not_squarefree(self):
        with pytest.raises(NotSquareFree):
            field_create([1, -2, 1], EmbeddingInterval(0, 2))

    def test_zero_polynomial(self):
        with pytest.raises(ZeroPolynomial):
            field_create([], EmbeddingInterval(0, 1))
        with pytest.raises(ZeroPolynomial):
            field_create([3], EmbeddingInterval(0, 1))

    def test_non_monic_normalized(self):
        f = field_create([-10, 0, 2], EmbeddingInterval(1, 3))  # 2a^2 - 10
        assert f.gen() * f.gen() == 5


class TestArithmetic:
    def test_add_sub(self, qsqrt5):
        a = qsqrt5.gen()
        assert (a + 1) + (a - 1) == 2 * a
        x = qsqrt5.element([3, -2]) / 7
        assert x + (-x) == qsqrt5.zero
        third = qsqrt5.from_rational(Fraction(1, 3))
        half = qsqrt5.from_rational(Fraction(1, 2))
        s = half * a + third * a
        assert s == qsqrt5.element([0, Fraction(5, 6)])
        assert s.den == 6

    def test_mul(self, qsqrt5):
        a = qsqrt5.gen()
        assert a * a == 5
        assert (a + 1) * (a - 1) == 4

    def test_mul_p12_reduction(self, p12):
        a = p12.gen()
        assert a ** 6 * a ** 6 == 5 - a ** 6 - a ** 5 - a ** 2

    def test_inv(self, qsqrt5):
        a = qsqrt5.gen()
        assert a.inv() == a / 5
        assert qsqrt5.from_rational(2).inv() == Fraction(1, 2)
        assert (a + 1).inv() == (a - 1) / 4
        with pytest.raises(DivisionByZero):
            qsqrt5.zero.inv()

    def test_zero_divisor_detected(self):
        ring = field_create([-1, 0, 1], EmbeddingInterval(Fraction(1, 2), 2))
        with pytest.raises(DivisionByZero):
            (ring.gen() - 1).inv()

    def test_field_mismatch(self, qsqrt5, p12):
        with pytest.raises(FieldMismatch):
            qsqrt5.gen() + p12.gen()


class TestOrdering:
    def test_sign_zero_symbolic(self, qsqrt5):
        x = qsqrt5.gen() * qsqrt5.gen() - 5
        assert x.is_zero() and x.sign() == 0

    def test_sign_vs_two(self, qsqrt5):
        assert (qsqrt5.gen() - 2).sign() == 1

    def test_sign_ten_digit_threshold(self, qsqrt5):
        # sqrt(5) = 2.2360679774..., just below 2.236067978
        close = qsqrt5.from_rational(Fraction(2236067978, 10 ** 9))
        assert (qsqrt5.gen() - close).sign() == -1

    def test_sign_forces_refinement(self, qsqrt5):
        # continued fraction convergent of sqrt(5): very tight rational
        num, den = 2, 1
        for _ in range(60):
            num, den = num * 4 + den, num  # x_{k+1} = 4x_k + x_{k-1} pattern
        approx = Fraction(num, den)
        x = qsqrt5.gen() - qsqrt5.from_rational(approx)
        assert x.sign() == (1 if 5 > approx * approx else -1)

    def test_floor(self, qsqrt5):
        a = qsqrt5.gen()
        assert a.floor() == 2
        assert (-a).floor() == -3
        assert qsqrt5.from_rational(Fraction(7, 2)).floor() == 3
        assert qsqrt5.from_rational(-3).floor() == -3

    def test_floor_sandwich(self, qsqrt5):
        rng = random.Random(5)
        for _ in range(50):
            x = qsqrt5.element([rng.randint(-9, 9), rng.randint(-9, 9)], rng.randint(1, 5))
            k = x.floor()
            assert (x - k).sign() >= 0
            assert (x - (k + 1)).sign() < 0

    def test_compare_and_abs(self, qsqrt5):
        a = qsqrt5.gen()
        assert a > 2 and a < 3 and abs(-a) == a
        assert a.compare(a) == 0

    def test_is_rational(self, qsqrt5):
        assert qsqrt5.from_rational(Fraction(3, 4)).is_rational() == Fraction(3, 4)
        assert qsqrt5.gen().is_rational() is None

    def test_refinement_monotone(self, qsqrt5):
        before = qsqrt5.generator_enclosure()
        qsqrt5.refine_generator(qsqrt5.generator_digits * 2)
        after = qsqrt5.generator_enclosure()
        assert before[0] <= after[0] <= after[1] <= before[1]


class TestText:
    def test_parse_paper_vertex_entry(self, qsqrt5):
        x = parse_elem("(a + 1)", qsqrt5)
        assert x.coeffs == (1, 1) and x.den == 1

    def test_parse_negative_integer(self, qsqrt5):
        x = parse_elem("-2", qsqrt5)
        assert x.coeffs == (-2, 0)

    def test_render_volume_value(self, qsqrt5):
        x = qsqrt5.element([Fraction(15, 2), Fraction(5, 2)])
        assert render_elem(x) == "(5/2*a+15/2 ~ 13.090170)"

    def test_render_is_parse_fixed_point(self, qsqrt5):
        rng = random.Random(11)
        for _ in range(30):
            x = qsqrt5.element(
                [rng.randint(-20, 20), rng.randint(-20, 20)], rng.randint(1, 7)
            )
            text = render_elem(x)
            assert parse_elem(text, qsqrt5) == x
            assert render_elem(parse_elem(text, qsqrt5)) == text

    def test_parse_errors(self, qsqrt5):
        for bad in ["", "(a", "(b + 1)", "(1/)", "(a^)", "2/0", "(+ +)", "x"]:
            with pytest.raises(ElementSyntaxError):
                parse_elem(bad, qsqrt5)

    def test_powers(self, p12):
        x = parse_elem("(1/2*a^11 - 3*a + 7)", p12)
        assert x == p12.gen() ** 11 / 2 - 3 * p12.gen() + 7


def random_elem(rng, field, span=9):
    coeffs = [rng.randint(-span, span) for _ in range(field.degree)]
    return field.element(coeffs, rng.randint(1, 6))


class TestCanonicalForm:
    def test_reduced_after_arithmetic(self, qsqrt5):
        from math import gcd

        rng = random.Random(14)
        for _ in range(80):
            x, y = random_elem(rng, qsqrt5), random_elem(rng, qsqrt5)
            for z in (x + y, x - y, x * y):
                assert z.den >= 1
                g = z.den
                for c in z.coeffs:
                    g = gcd(g, c)
                assert g == 1

    def test_equality_is_structural(self, qsqrt5):
        x = qsqrt5.element([2, 4], 6)
        y = qsqrt5.element([1, 2], 3)
        assert x == y and hash(x) == hash(y)
        assert x.coeffs == (1, 2) and x.den == 3


class TestConcurrentRefinement:
    def test_threaded_sign_decisions(self):
        # concurrent sign decisions share the generator enclosure; stale
        # (wider) enclosures only cause retries, never wrong answers
        from concurrent.futures import ThreadPoolExecutor

        field = field_create([-5, 0, 1], EmbeddingInterval(1, 3))
        num, den = 2, 1
        jobs = []
        for k in range(40):
            num, den = num * 4 + den, num
            x = field.gen() - field.from_rational(Fraction(num, den))
            jobs.append((x, 1 if 5 * den * den > num * num else -1))
        with ThreadPoolExecutor(max_workers=8) as pool:
            results = list(pool.map(lambda job: job[0].sign(), jobs))
        assert results == [want for _, want in jobs]


class TestFieldAxioms:
    @pytest.mark.parametrize("which", ["qsqrt5", "p12", "qq"])
    def test_axioms(self, which, request):
        field = request.getfixturevalue(which)
        rng = random.Random(hash(which) & 0xFFFF)
        for _ in range(120):
            x, y, z = (random_elem(rng, field) for _ in range(3))
            assert (x + y) + z == x + (y + z)
            assert (x * y) * z == x * (y * z)
            assert x * (y + z) == x * y + x * z
            if not x.is_zero():
                assert x * x.inv() == field.one

    def test_order_compatibility(self, qsqrt5):
        rng = random.Random(23)
        checked = 0
        while checked < 60:
            x, y = random_elem(rng, qsqrt5), random_elem(rng, qsqrt5)
            if x.sign() == 1 and y.sign() == 1:
                assert (x + y).sign() == 1
                assert (x * y).sign() == 1
                checked += 1

    @pytest.mark.parametrize("which", ["qsqrt5", "p12"])
    def test_sign_against_numeric_oracle(self, which, request):
        field = request.getfixturevalue(which)
        rng = random.Random(len(which))
        for _ in range(80):
            x = random_elem(rng, field)
            assert x.sign() == oracle_sign(x)
