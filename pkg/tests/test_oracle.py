from math import comb

import pytest

from subsetsum.core import Instance
from subsetsum.errors import InstanceTooLarge, NonPositiveItem
from subsetsum.field import PrimeField
from subsetsum.oracle import brute_force_decide, dp_count_exact, dp_count_mod_p

from conftest import enumerate_counts, prime_between


def test_dp_mod_p_examples():
    assert dp_count_mod_p(Instance((), 3), PrimeField(101)).tolist() == [1, 0, 0, 0]
    assert dp_count_mod_p(Instance((1, 2, 3), 3), PrimeField(101)).tolist() == [1, 1, 1, 2]
    assert enumerate_counts([2, 2], 4) == [1, 0, 2, 0, 1]
    assert dp_count_mod_p(Instance((2, 2), 4), PrimeField(7)).tolist() == [1, 0, 2, 0, 1]


def test_dp_exact_examples():
    assert dp_count_exact(Instance((1,) * 30, 15))[15] == comb(30, 15) == 155117520
    assert dp_count_exact(Instance((), 0)) == [1]
    assert dp_count_exact(Instance((1, 2), 3)) == [1, 1, 1, 1]


def test_dp_is_zero_one():
    # a multiset-counting (ascending) sweep would report 2 ways to make 2 from {1}
    assert dp_count_exact(Instance((1,), 2)) == [1, 1, 0]
    assert dp_count_mod_p(Instance((1,), 2), PrimeField(5)).tolist() == [1, 1, 0]


def test_brute_force_examples():
    assert brute_force_decide(Instance((2, 4), 3)) is False
    assert brute_force_decide(Instance((), 0)) is True
    assert brute_force_decide(Instance((5,), 5)) is True
    assert brute_force_decide(Instance((1 << 62, 1 << 62, 3), 3)) is True


def test_limits_and_validation():
    with pytest.raises(InstanceTooLarge):
        brute_force_decide(Instance((1,) * 25, 3))
    with pytest.raises(InstanceTooLarge):
        dp_count_exact(Instance((1,) * 65, 3))
    assert dp_count_exact(Instance((1,) * 65, 3), max_items=100)[3] == comb(65, 3)
    for fn in (brute_force_decide, dp_count_exact):
        with pytest.raises(NonPositiveItem):
            fn(Instance((0,), 3))


def test_oracles_agree(rng):
    for _ in range(100):
        n = rng.randint(0, 16)
        t = rng.randint(0, 120)
        items = tuple(rng.randint(1, 30) for _ in range(n))
        inst = Instance(items, t)
        exact = dp_count_exact(inst)
        assert exact == enumerate_counts(items, t)
        p = prime_between(rng, 2, 1 << 62)
        assert dp_count_mod_p(inst, PrimeField(p)).tolist() == [c % p for c in exact]
        assert brute_force_decide(inst) == (exact[t] > 0)
