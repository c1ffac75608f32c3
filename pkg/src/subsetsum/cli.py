"""Command-line front end.

Usage::

    subsetsum decide   -t 6 -i items.txt [--seed S] [--repeats R] [--json]
    subsetsum count    -t 3 -p 101 < items.txt
    subsetsum coeffs   -t 10 --seed 7 < items.txt
    subsetsum knapsack -t 10 -p 1009 < items.txt
    subsetsum bench    -t 4096 --n 100 --trials 3 --algo both --seed 1

Items are whitespace-separated positive decimal integers.  Exit status is 0
whenever an answer was computed (YES and NO alike), 2 for usage or
configuration errors, 3 for malformed input and 4 for internal failures.
"""

from __future__ import annotations

import argparse
import json
import re
import secrets
import sys
import time
from dataclasses import dataclass

import numpy as np

from .core import Instance, coefficients_mod_p, decide, derive_seeds, knapsack_count_mod_p, prime_interval
from .errors import ParseError, SubsetSumError
from .field import PrimeField, PrimeSampler, is_prime, sample_prime
from .oracle import dp_count_mod_p

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_INTERNAL = 4

ITEM_LIMIT = 1 << 62
SUBCOMMANDS = ("decide", "count", "coeffs", "knapsack", "bench")

_INT_TOKEN = re.compile(r"[+-]?[0-9]+")


class ConfigError(Exception):
    pass


@dataclass
class RunConfig:
    subcommand: str
    target: int
    input_source: str = "-"
    prime: int | None = None
    seed: int | None = None
    repeats: int = 1
    output_format: str = "text"
    timings: bool = False
    n: int = 100
    trials: int = 1
    algo: str = "both"


def parse_instance(data: bytes | str, t: int = 0) -> Instance:
    """Parse whitespace-separated positive integers into an instance with target ``t``."""
    if isinstance(data, bytes):
        data = data.decode("ascii", errors="replace")
    items = []
    for idx, tok in enumerate(data.split(), start=1):
        if not _INT_TOKEN.fullmatch(tok):
            raise ParseError(idx, tok, "not a decimal integer")
        value = int(tok)
        if value < 1:
            raise ParseError(idx, tok, "items must be positive")
        if value > ITEM_LIMIT:
            raise ParseError(idx, tok, "item exceeds 2^62")
        items.append(value)
    return Instance(tuple(items), t)


def _read_input(source: str) -> bytes:
    if source == "-":
        return sys.stdin.buffer.read()
    try:
        with open(source, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read {source}: {exc.strerror}") from exc


def _validate(config: RunConfig) -> int:
    """Check the configuration and return the seed to use."""
    if config.subcommand not in SUBCOMMANDS:
        raise ConfigError(f"unknown subcommand {config.subcommand!r}")
    if config.target < 0:
        raise ConfigError("target must be non-negative")
    if config.target >= ITEM_LIMIT:
        raise ConfigError("target must be below 2^62")
    if config.repeats < 1:
        raise ConfigError("repeats must be at least 1")
    if config.prime is not None:
        p = config.prime
        if not (config.target < p < 1 << 63 and is_prime(p)):
            raise ConfigError("p must be a prime greater than t")
    if config.subcommand == "bench":
        if config.n < 0 or config.trials < 1:
            raise ConfigError("bench needs --n >= 0 and --trials >= 1")
        if config.target < 1:
            raise ConfigError("bench needs a target of at least 1")
        if config.algo not in ("genfunc", "dp", "both"):
            raise ConfigError("--algo must be genfunc, dp or both")
    if config.seed is None:
        return secrets.randbits(64)
    if not 0 <= config.seed < 1 << 64:
        raise ConfigError("seed must be an unsigned 64-bit value")
    return config.seed


def _field_for(instance: Instance, config: RunConfig, seed: int) -> PrimeField:
    t = instance.t
    if config.prime is not None:
        return PrimeField(config.prime, cap=t)
    lo, hi = prime_interval(instance.n, t)
    return PrimeField(sample_prime(PrimeSampler(lo, hi, derive_seeds(seed, 1)[0])), cap=t)


def _report(config, seed, answer, counts, primes, timings, n, t) -> str:
    if config.output_format == "json":
        obj = {
            "answer": answer,
            "counts": counts,
            "primes": primes,
            "seed": seed,
            "repeats": config.repeats,
            "timings_ms": timings,
            "n": n,
            "t": t,
        }
        return json.dumps(obj)
    lines = []
    if config.subcommand == "coeffs":
        lines.append(" ".join(map(str, counts)))
    elif config.subcommand == "bench":
        lines.append(f"answer: {answer}")
    else:
        lines.append(str(answer))
    if config.subcommand == "decide":
        lines.append("primes: " + " ".join(map(str, primes)))
        lines.append("counts: " + " ".join(map(str, counts)))
        lines.append(f"repeats: {config.repeats}")
    elif config.subcommand == "bench":
        lines.append("primes: " + " ".join(map(str, primes)))
    else:
        lines.append(f"prime: {primes[0]}")
    lines.append(f"seed: {seed}")
    if timings is not None:
        for name, value in timings.items():
            shown = " ".join(f"{v:.3f}" for v in value) if isinstance(value, list) else f"{value:.3f}"
            lines.append(f"time_ms[{name}]: {shown}")
    return "\n".join(lines)


def _bench(config: RunConfig, seed: int) -> str:
    t, n = config.target, config.n
    rng = np.random.default_rng(seed)
    timings: dict[str, list[float]] = {}
    primes, counts = [], []
    for trial, trial_seed in enumerate(derive_seeds(seed, config.trials)):
        items = tuple(int(s) for s in rng.integers(1, t, endpoint=True, size=n))
        instance = Instance(items, t)
        lo, hi = prime_interval(n, t)
        field = PrimeField(sample_prime(PrimeSampler(lo, hi, trial_seed)), cap=t)
        results = {}
        if config.algo in ("genfunc", "both"):
            start = time.perf_counter()
            results["genfunc"] = coefficients_mod_p(instance, field)
            timings.setdefault("genfunc", []).append((time.perf_counter() - start) * 1e3)
        if config.algo in ("dp", "both"):
            start = time.perf_counter()
            results["dp"] = dp_count_mod_p(instance, field)
            timings.setdefault("dp", []).append((time.perf_counter() - start) * 1e3)
        if len(results) == 2 and results["genfunc"] != results["dp"]:
            raise AssertionError(f"trial {trial}: generating-function and DP tables disagree (p={field.p})")
        primes.append(field.p)
        counts.append(next(iter(results.values()))[t])
    answer = "agree" if config.algo == "both" else "ok"
    return _report(config, seed, answer, counts, primes, timings, n, t)


def run(config: RunConfig) -> tuple[int, str]:
    """Execute one configured command; returns ``(exit_status, report)``.

    On failure the report is the error message.
    """
    try:
        seed = _validate(config)
        if config.subcommand == "bench":
            return EXIT_OK, _bench(config, seed)
        instance = parse_instance(_read_input(config.input_source), config.target)
    except ConfigError as exc:
        return EXIT_USAGE, str(exc)
    except ParseError as exc:
        return EXIT_PARSE, f"parse error: {exc}"
    except AssertionError as exc:
        return EXIT_INTERNAL, f"bench mismatch: {exc}"
    except SubsetSumError as exc:
        return EXIT_INTERNAL, f"internal error: {exc}"

    t = instance.t
    try:
        start = time.perf_counter()
        if config.subcommand == "decide":
            decision = decide(instance, seed, config.repeats)
            answer, counts, primes = str(decision.answer), decision.counts, decision.primes
        else:
            field = _field_for(instance, config, seed)
            primes = [field.p]
            if config.subcommand == "knapsack":
                answer = knapsack_count_mod_p(instance, field)
                counts = [answer]
            else:
                coeffs = coefficients_mod_p(instance, field).tolist()
                answer = coeffs[t]
                counts = coeffs if config.subcommand == "coeffs" else [answer]
        elapsed = (time.perf_counter() - start) * 1e3
    except (SubsetSumError, MemoryError) as exc:
        return EXIT_INTERNAL, f"internal error: {exc}"

    timings = {"pipeline": elapsed} if config.timings else None
    return EXIT_OK, _report(config, seed, answer, counts, primes, timings, instance.n, t)


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-t", "--target", type=int, required=True, help="target sum t")
    common.add_argument("--seed", type=int, help="unsigned 64-bit seed (default: fresh entropy, always reported)")
    common.add_argument("--json", action="store_true", help="emit one JSON object")
    common.add_argument("--timings", action="store_true", help="include wall-clock timings in the report")

    instance_opts = argparse.ArgumentParser(add_help=False)
    instance_opts.add_argument("-i", "--input", default="-", help="instance file, '-' for standard input")

    prime_opts = argparse.ArgumentParser(add_help=False)
    prime_opts.add_argument("-p", "--prime", type=int, help="explicit prime modulus p > t")

    parser = argparse.ArgumentParser(prog="subsetsum", description="SubsetSum via generating functions over F_p.")
    sub = parser.add_subparsers(dest="subcommand", required=True)
    d = sub.add_parser("decide", parents=[common, instance_opts], help="decide whether a subset sums to t")
    d.add_argument("--repeats", type=int, default=1, help="independent primes to try (default 1)")
    for name, text in (
        ("count", "number of subsets summing to t, mod p"),
        ("coeffs", "subset counts for every sum 0..t, mod p"),
        ("knapsack", "number of subsets with sum <= t, mod p"),
    ):
        sub.add_parser(name, parents=[common, instance_opts, prime_opts], help=text)
    b = sub.add_parser("bench", parents=[common], help="time the pipeline against the DP oracle")
    b.add_argument("--n", type=int, default=100, help="items per generated instance")
    b.add_argument("--trials", type=int, default=1)
    b.add_argument("--algo", choices=("genfunc", "dp", "both"), default="both")
    return parser


def config_from_args(argv=None) -> RunConfig:
    args = _parser().parse_args(argv)
    return RunConfig(
        subcommand=args.subcommand,
        target=args.target,
        input_source=getattr(args, "input", "-"),
        prime=getattr(args, "prime", None),
        seed=args.seed,
        repeats=getattr(args, "repeats", 1),
        output_format="json" if args.json else "text",
        timings=args.timings or args.subcommand == "bench",
        n=getattr(args, "n", 100),
        trials=getattr(args, "trials", 1),
        algo=getattr(args, "algo", "both"),
    )


def main(argv=None) -> int:
    config = config_from_args(argv)
    status, report = run(config)
    stream = sys.stdout if status == EXIT_OK else sys.stderr
    print(report, file=stream)
    return status


if __name__ == "__main__":
    sys.exit(main())
