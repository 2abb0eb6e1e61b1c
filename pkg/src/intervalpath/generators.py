"""Seeded instance generators emitting reproducible interval representations.

The RNG is a fixed 64-bit linear congruential generator (Knuth's MMIX
multiplier and increment) driving Fisher-Yates shuffles, so a (kind, n, k,
seed) tuple produces bit-identical corpora on any implementation; nothing
here touches Python's random module.

Kinds:
  random  - n intervals from a seeded shuffle of 1..2n paired as (min, max);
            distinct coordinates mean a pair can never be degenerate.
  proper  - the staircase [2j, 2j+3], j=1..n: connected, containment-free.
  planted - a staircase of n intervals on a coarser grid plus k wide
            intervals, one per contiguous block of the staircase, each over a
            seeded sub-range of its block. Deleting the k wide intervals
            leaves a proper representation, and each wide interval centers a
            claw on three pairwise-disjoint staircase intervals, so the
            optimum deletion size is exactly k (for n >= 5k).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidSpec
from .intervals import IntervalGraph, build, normalize_endpoints

_MASK = (1 << 64) - 1
_MUL = 6364136223846793005
_INC = 1442695040888963407


class Lcg:
    """Deterministic 64-bit LCG: state = state * MUL + INC (mod 2^64)."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state * _MUL + _INC) & _MASK
        return self.state

    def randrange(self, n: int) -> int:
        if n <= 0:
            raise ValueError("randrange needs n >= 1")
        return self.next_u64() % n

    def shuffle(self, xs: list):
        for i in range(len(xs) - 1, 0, -1):
            j = self.randrange(i + 1)
            xs[i], xs[j] = xs[j], xs[i]


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    n: int
    k: int = 0
    seed: int = 0


def generate(spec: GeneratorSpec) -> IntervalGraph:
    if spec.n < 1:
        raise InvalidSpec("n must be >= 1")
    if spec.kind == "random":
        return _gen_random(spec.n, spec.seed)
    if spec.kind == "proper":
        return _gen_proper(spec.n)
    if spec.kind == "planted":
        return _gen_planted(spec.n, spec.k, spec.seed)
    raise InvalidSpec(f"unknown kind {spec.kind!r}")


def _gen_random(n: int, seed: int) -> IntervalGraph:
    coords = list(range(1, 2 * n + 1))
    Lcg(seed).shuffle(coords)
    items = []
    for j in range(n):
        a, b = coords[2 * j], coords[2 * j + 1]
        items.append((f"v{j + 1}", min(a, b), max(a, b)))
    return build(items)


def _gen_proper(n: int) -> IntervalGraph:
    return normalize_endpoints(
        build([(f"v{j}", 2 * j, 2 * j + 3) for j in range(1, n + 1)])
    )


def _gen_planted(n: int, k: int, seed: int) -> IntervalGraph:
    if k < 0:
        raise InvalidSpec("k must be >= 0")
    if k > 0 and n < 5 * k:
        raise InvalidSpec("planted needs n >= 5k so every wide interval centers a claw")
    rng = Lcg(seed)
    # staircase on a grid of 20 so wide endpoints (odd offsets) never collide
    items = [(f"s{j}", 20 * j, 20 * j + 30) for j in range(1, n + 1)]
    for r in range(k):
        lo = r * n // k + 1
        hi = (r + 1) * n // k
        # a..b is the wide's stair range; b - a >= 4 keeps three disjoint
        # stairs under it, staying inside the block keeps wides disjoint
        a = lo + rng.randrange(hi - lo - 3)
        b = a + 4 + rng.randrange(hi - (a + 4) + 1)
        items.append((f"w{r + 1}", 20 * a + 1, 20 * b + 11))
    order = list(range(len(items)))
    rng.shuffle(order)
    return normalize_endpoints(build([items[i] for i in order]))
