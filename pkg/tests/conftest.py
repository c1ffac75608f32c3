import itertools
import random

import pytest
from hypothesis import HealthCheck, settings
from sympy import randprime

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

ACCEPTANCE_LINES = []


def record(criterion: str, ok: bool, detail: str):
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {criterion}: {detail}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def prime_between(rng: random.Random, lo: int, hi: int) -> int:
    """Random prime in [lo, hi) from sympy, independent of the package's own test."""
    return int(randprime(lo, hi)) if hi - lo > 1 else lo


def enumerate_counts(items, t):
    """Exact subset counts per sum 0..t by walking every subset."""
    counts = [0] * (t + 1)
    for r in range(len(items) + 1):
        for combo in itertools.combinations(items, r):
            s = sum(combo)
            if s <= t:
                counts[s] += 1
    return counts


def sieve(limit: int) -> list[bool]:
    flags = [True] * limit
    flags[0] = False
    if limit > 1:
        flags[1] = False
    for i in range(2, int(limit**0.5) + 1):
        if flags[i]:
            flags[i * i :: i] = [False] * len(range(i * i, limit, i))
    return flags


@pytest.fixture
def rng():
    return random.Random(20240601)
