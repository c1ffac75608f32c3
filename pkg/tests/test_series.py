from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from subsetsum.errors import FieldTooSmall, NonzeroConstantTerm
from subsetsum.field import PrimeField
from subsetsum.polymul import ModPoly, multiply
from subsetsum.series import BASE_CASE, exp_series, exp_series_naive

from conftest import prime_between

BOTH = pytest.mark.parametrize("impl", [exp_series, exp_series_naive], ids=["dc", "naive"])


def rational_exp(f, t):
    """exp(f) mod x^(t+1) over Q, by summing f^k / k!."""
    g = [Fraction(0)] * (t + 1)
    g[0] = Fraction(1)
    power = [Fraction(1)] + [Fraction(0)] * t
    for k in range(1, t + 1):
        nxt = [Fraction(0)] * (t + 1)
        for i, a in enumerate(power):
            if a:
                for j in range(1, t + 1 - i):
                    nxt[i + j] += a * f[j]
        power = nxt
        for i in range(t + 1):
            g[i] += power[i] / factorial(k)
    return g


def to_field(q: Fraction, p: int) -> int:
    return q.numerator % p * pow(q.denominator, -1, p) % p


@BOTH
def test_exp_zero(impl):
    f = PrimeField(101)
    assert impl(ModPoly.zeros(11, f), 10, f).tolist() == [1] + [0] * 10


@BOTH
def test_exp_of_x_mod_7(impl):
    f = PrimeField(7)
    expected = [to_field(Fraction(1, factorial(i)), 7) for i in range(4)]
    assert expected == [1, 1, 4, 6]
    assert impl(ModPoly([0, 1], f), 3, f).tolist() == expected


@BOTH
def test_exp_of_x_mod_11(impl):
    f = PrimeField(11)
    expected = [to_field(Fraction(1, factorial(i)), 11) for i in range(5)]
    assert expected == [1, 1, 6, 2, 6]
    assert impl(ModPoly([0, 1], f), 4, f).tolist() == expected


@BOTH
def test_exp_of_log_square(impl):
    # 2x - x^2 = ln((1+x)^2) mod x^3, so exp gives 1 + 2x + x^2
    f = PrimeField(5)
    assert impl(ModPoly([0, 2, 4], f), 2, f).tolist() == [1, 2, 1]


@BOTH
def test_matches_rational_exponential(impl, rng):
    p = 1000003
    field = PrimeField(p)
    t = 12
    num = [0] + [rng.randint(-5, 5) for _ in range(t)]
    expected = [to_field(v, p) for v in rational_exp([Fraction(v) for v in num], t)]
    assert impl(ModPoly(num, field), t, field).tolist() == expected


@BOTH
def test_errors(impl):
    f = PrimeField(7)
    with pytest.raises(NonzeroConstantTerm):
        impl(ModPoly([1, 1], f), 3, f)
    with pytest.raises(FieldTooSmall):
        impl(ModPoly([0, 1], f), 7, f)
    with pytest.raises(ValueError):
        impl(ModPoly([0, 1], f), 3, PrimeField(11))


def test_t_zero_and_short_input():
    f = PrimeField(13)
    assert exp_series(ModPoly([0], f), 0, f).tolist() == [1]
    # shorter input is zero padded, longer input is truncated
    assert exp_series(ModPoly([0, 1], f), 5, f) == exp_series_naive(ModPoly([0, 1, 0, 0, 0, 0, 9, 9], f), 5, f)


def test_linear_input_closed_form(rng):
    for p in (1009, 2147483647, 4611686018427387847):
        field = PrimeField(p)
        c = rng.randrange(1, p)
        t = 300
        g = exp_series(ModPoly([0, c], field), t, field).tolist()
        fact = 1
        for i in range(t + 1):
            if i:
                fact = fact * i % p
            assert g[i] == pow(c, i, p) * pow(fact, -1, p) % p


def test_segment_boundaries(rng):
    # lengths straddling the base-case and schoolbook cutoffs and powers of two
    p = 4611686018427387847
    field = PrimeField(p)
    for t in sorted({BASE_CASE - 1, BASE_CASE, BASE_CASE + 1, 63, 64, 65, 127, 128, 129, 255, 256, 257, 1023, 1024}):
        f = ModPoly([0] + [rng.randrange(p) for _ in range(t)], field)
        assert exp_series(f, t, field) == exp_series_naive(f, t, field), t


def test_small_prime_just_above_t(rng):
    for t in (40, 100, 300):
        p = prime_between(rng, t + 1, t + 200)
        field = PrimeField(p)
        f = ModPoly([0] + [rng.randrange(p) for _ in range(t)], field)
        assert exp_series(f, t, field) == exp_series_naive(f, t, field)


def test_oracle_equivalence_large_t(rng):
    p = 2147483647
    field = PrimeField(p)
    t = 1500
    f = ModPoly([0] + [rng.randrange(p) for _ in range(t)], field)
    assert exp_series(f, t, field) == exp_series_naive(f, t, field)


@st.composite
def series_pairs(draw):
    t = draw(st.integers(0, 200))
    p = draw(st.sampled_from([211, 65537, 2147483647, 4611686018427387847]))
    coeffs = st.lists(st.integers(0, p - 1), min_size=t, max_size=t)
    return t, p, [0] + draw(coeffs), [0] + draw(coeffs)


@given(series_pairs())
def test_homomorphism_and_inverse(args):
    t, p, a, b = args
    field = PrimeField(p)
    fa, fb = ModPoly(a, field), ModPoly(b, field)
    ea, eb = exp_series(fa, t, field), exp_series(fb, t, field)
    assert ea[0] == 1
    assert exp_series(fa + fb, t, field) == multiply(ea, eb).truncate(t + 1)
    assert multiply(ea, exp_series(-fa, t, field)).truncate(t + 1).tolist() == [1] + [0] * t
