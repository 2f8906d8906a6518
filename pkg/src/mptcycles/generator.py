"""Seeded random and exhaustive sources of multipartite tournaments.

Randomness comes from numpy's PCG64 bit generator seeded directly with the
64-bit seed.  One uniform bit is drawn per cross pair, pairs taken in sorted
order; bit 0 orients the pair from the lower id to the higher id.

Rejection sampling of strong instances uses sub-seed ``seed + attempt``
(mod 2**64); the result is biased toward orientations that are strong more
often, not uniform over strong instances.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .digraph import MultipartiteTournament, build, cross_pairs, is_strong

MAX_ENUM_PAIRS = 30
_MASK64 = (1 << 64) - 1


class AttemptsExhausted(RuntimeError):
    pass


class TooLarge(ValueError):
    pass


@dataclass(frozen=True)
class GenSpec:
    part_sizes: tuple[int, ...]
    seed: int = 0
    max_attempts: int = 1000

    def __post_init__(self):
        object.__setattr__(self, "part_sizes", tuple(int(s) for s in self.part_sizes))
        if not self.part_sizes:
            raise ValueError("at least one part is required")
        if self.max_attempts < 1:
            raise ValueError("max_attempts must be >= 1")
        object.__setattr__(self, "seed", int(self.seed) & _MASK64)


def _orient(part_sizes: Sequence[int], bits) -> MultipartiteTournament:
    pairs = cross_pairs(part_sizes)
    arcs = [(y, x) if b else (x, y) for (x, y), b in zip(pairs, bits)]
    return build(part_sizes, arcs)


def random_mpt(spec: GenSpec) -> MultipartiteTournament:
    rng = np.random.Generator(np.random.PCG64(spec.seed))
    P = len(cross_pairs(spec.part_sizes))
    return _orient(spec.part_sizes, rng.integers(0, 2, size=P).tolist())


def random_strong_mpt(spec: GenSpec) -> MultipartiteTournament:
    for attempt in range(spec.max_attempts):
        D = random_mpt(GenSpec(spec.part_sizes, (spec.seed + attempt) & _MASK64, 1))
        if is_strong(D):
            return D
    raise AttemptsExhausted(
        f"no strong instance for parts {list(spec.part_sizes)} in {spec.max_attempts} attempts"
    )


def enumerate_orientations(part_sizes: Sequence[int]) -> Iterator[MultipartiteTournament]:
    """Every orientation once; orientation ``k`` sets pair ``i`` by bit ``i`` of ``k``."""
    P = len(cross_pairs(part_sizes))
    if P > MAX_ENUM_PAIRS:
        raise TooLarge(f"{P} cross pairs; exhaustive enumeration capped at {MAX_ENUM_PAIRS}")
    return _enumerate(tuple(part_sizes), P)


def _enumerate(part_sizes, P):
    for k in range(1 << P):
        yield _orient(part_sizes, ((k >> i) & 1 for i in range(P)))


def random_part_sizes(rng: np.random.Generator, c_choices=(3, 4, 5, 6), max_size=3, max_n=12) -> tuple[int, ...]:
    """Draw a part-size vector for fuzzing, rejecting totals above ``max_n``."""
    while True:
        c = int(rng.choice(c_choices))
        sizes = tuple(int(s) for s in rng.integers(1, max_size + 1, size=c))
        if sum(sizes) <= max_n:
            return sizes


def fuzz_instances(count: int, seed: int = 0, **kw) -> Iterator[tuple[GenSpec, MultipartiteTournament]]:
    """``count`` strong instances with random part sizes, reproducible from ``seed``."""
    rng = np.random.Generator(np.random.PCG64(seed))
    for _ in range(count):
        sizes = random_part_sizes(rng, **kw)
        spec = GenSpec(sizes, int(rng.integers(0, 2**63)))
        yield spec, random_strong_mpt(spec)
