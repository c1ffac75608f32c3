"""Exit criteria.  Each test records one PASS/FAIL line, shown in the
"acceptance criteria" section of the pytest summary."""

import random
import time

import numpy as np
import pytest
from scipy.stats import chisquare

from subsetsum import ntt_constants as nc
from subsetsum.core import Answer, Instance, coefficients_mod_p, decide, knapsack_count_mod_p, prime_interval
from subsetsum.field import PrimeField, PrimeSampler, is_prime, sample_prime
from subsetsum.oracle import brute_force_decide, dp_count_mod_p
from subsetsum.polymul import ModPoly, multiply, multiply_lowdeg_schoolbook, multiply_ntt, ntt_forward, ntt_inverse
from subsetsum.series import exp_series, exp_series_naive

from conftest import prime_between, record, sieve


def _random_instance(rng, max_n, max_t):
    n = rng.randint(0, max_n)
    t = rng.randint(0, max_t)
    # mix small items (dense tables) with items spread up to t
    top = rng.choice([max(1, t // 8), max(1, t // 2), max(1, t)])
    return Instance(tuple(rng.randint(1, top) for _ in range(n)), t)


def test_1_oracle_congruence():
    rng = random.Random(1)
    # keep one-off JIT compilation out of the timed section
    coefficients_mod_p(Instance((1, 2, 3), 300), PrimeField(1009))
    start = time.perf_counter()
    mismatches = 0
    for _ in range(500):
        inst = _random_instance(rng, 64, 2048)
        for _ in range(5):
            field = PrimeField(prime_between(rng, inst.t + 1, 1 << 31))
            if coefficients_mod_p(inst, field) != dp_count_mod_p(inst, field):
                mismatches += 1
    elapsed = time.perf_counter() - start
    ok = mismatches == 0 and elapsed < 60
    record("1 oracle congruence", ok, f"2500 (instance, prime) pairs, {mismatches} mismatches, {elapsed:.1f}s (< 60s)")
    assert mismatches == 0
    assert elapsed < 60


def test_2_exp_backend_equivalence():
    rng = random.Random(2)
    mismatches = 0
    for _ in range(200):
        t = rng.randint(0, 512)
        p = prime_between(rng, t + 1, 1 << 31)
        field = PrimeField(p)
        f = ModPoly([0] + [rng.randrange(p) for _ in range(t)], field)
        if exp_series(f, t, field) != exp_series_naive(f, t, field):
            mismatches += 1
    identity_failures = 0
    for _ in range(100):
        t = rng.randint(0, 512)
        p = prime_between(rng, t + 1, 1 << 62)
        field = PrimeField(p)
        a = ModPoly([0] + [rng.randrange(p) for _ in range(t)], field)
        b = ModPoly([0] + [rng.randrange(p) for _ in range(t)], field)
        ea, eb = exp_series(a, t, field), exp_series(b, t, field)
        if exp_series(a + b, t, field) != multiply(ea, eb).truncate(t + 1):
            identity_failures += 1
        if multiply(ea, exp_series(-a, t, field)).truncate(t + 1).tolist() != [1] + [0] * t:
            identity_failures += 1
    ok = mismatches == 0 and identity_failures == 0
    record("2 exp backend equivalence", ok, f"200 triples: {mismatches} mismatches; 100 pairs: {identity_failures} identity failures")
    assert ok


def test_3_multiplication_exactness():
    rng = random.Random(3)
    mismatches = 0
    for _ in range(100):
        p = prime_between(rng, 2, (1 << 62) - 1)
        field = PrimeField(p)
        f = ModPoly([rng.randrange(p) for _ in range(rng.randint(1, 257))], field)
        g = ModPoly([rng.randrange(p) for _ in range(rng.randint(1, 257))], field)
        if multiply_ntt(f, g).tolist() != multiply_lowdeg_schoolbook(f, g).tolist():
            mismatches += 1
    roundtrip_failures = 0
    nprng = np.random.default_rng(3)
    for q, root in zip(nc.NTT_PRIMES, nc.ROOTS):
        for log in range(0, 17):
            n = 1 << log
            w = pow(root, 1 << (nc.MAX_LOG_SIZE - log), q)
            v = nprng.integers(0, q, size=n, dtype=np.uint64)
            if not np.array_equal(ntt_inverse(ntt_forward(v, q, w), q, w), v):
                roundtrip_failures += 1
    ok = mismatches == 0 and roundtrip_failures == 0
    record("3 multiplication exactness", ok, f"100 pairs: {mismatches} mismatches; 51 roundtrips: {roundtrip_failures} failures")
    assert ok


def test_4_decision_correctness():
    rng = random.Random(4)
    false_pos = false_neg = yes = 0
    for i in range(10_000):
        n = rng.randint(0, 20)
        t = rng.randint(0, 200)
        items = tuple(rng.randint(1, rng.choice([10, 30, 100, 200])) for _ in range(n))
        inst = Instance(items, t)
        truth = brute_force_decide(inst)
        got = decide(inst, seed=rng.getrandbits(64)).answer is Answer.YES
        yes += truth
        false_pos += got and not truth
        false_neg += truth and not got
    ok = false_pos == 0 and false_neg <= 10
    record("4 decision correctness", ok, f"10000 instances ({yes} YES): {false_pos} false positives, {false_neg} false negatives (<= 10)")
    assert false_pos == 0
    assert false_neg <= 10


def test_5_primality_and_sampling():
    limit = 10**6
    flags = sieve(limit)
    disagreements = sum(is_prime(q) != flags[q] for q in range(limit))
    primes = [q for q in range(100, 10**4 + 1) if flags[q]]
    sampler = PrimeSampler(100, 10**4, 5)
    draws = [sample_prime(sampler) for _ in range(10**5)]
    index = {q: i for i, q in enumerate(primes)}
    observed = np.zeros(len(primes))
    outside = 0
    for q in draws:
        if q in index:
            observed[index[q]] += 1
        else:
            outside += 1
    pvalue = chisquare(observed).pvalue
    ok = disagreements == 0 and outside == 0 and pvalue > 1e-3
    record("5 primality and sampling", ok, f"sieve disagreements {disagreements}; chi-square p = {pvalue:.4f} over {len(primes)} primes (> 1e-3)")
    assert disagreements == 0 and outside == 0
    assert pvalue > 1e-3


@pytest.mark.slow
def test_6_scaling():
    rng = np.random.default_rng(6)
    n = 1000
    # warm up compiled kernels and the largest twiddle table
    warm = Instance(tuple(range(1, 50)), 4096)
    coefficients_mod_p(warm, PrimeField(prime_between(random.Random(0), 4097, 1 << 31)))

    times = {}
    for log in (18, 19, 20):
        t = 1 << log
        inst = Instance(tuple(int(s) for s in rng.integers(1, t, endpoint=True, size=n)), t)
        lo, hi = prime_interval(n, t)
        field = PrimeField(sample_prime(PrimeSampler(lo, hi, log)))
        best = float("inf")
        for _ in range(2):
            start = time.perf_counter()
            coefficients_mod_p(inst, field)
            best = min(best, time.perf_counter() - start)
        times[log] = best
    r1 = times[19] / times[18]
    r2 = times[20] / times[19]
    ok = 1.8 <= r1 <= 2.8 and 1.8 <= r2 <= 2.8
    detail = ", ".join(f"t=2^{k}: {v:.2f}s" for k, v in times.items())
    record("6 scaling", ok, f"{detail}; doubling factors {r1:.2f}, {r2:.2f} (in [1.8, 2.8])")
    assert 1.8 <= r1 <= 2.8
    assert 1.8 <= r2 <= 2.8


def test_7_knapsack_prefix_sums():
    rng = random.Random(7)
    mismatches = 0
    for _ in range(100):
        inst = _random_instance(rng, 32, 512)
        field = PrimeField(prime_between(rng, inst.t + 1, 1 << 31))
        expected = sum(dp_count_mod_p(inst, field).tolist()) % field.p
        if knapsack_count_mod_p(inst, field) != expected:
            mismatches += 1
    record("7 knapsack prefix sums", mismatches == 0, f"100 instances, {mismatches} mismatches")
    assert mismatches == 0
