"""Explicit randomness: finite replayable tapes and seeded draw sources.

Every randomized operation in this package reads randomness through a draw
source. A RandomTape is a finite ordered list of draws; it is the unit of
exhaustive enumeration (iterate all tapes over declared domains) and of
coupling (run two experiments on the same tape). A SeededSource draws
unbiased values from a deterministic PRNG for large-scale runs. Both expose
``draw(domain)`` where ``domain`` is the size n of the value set {0..n-1}.
"""

from __future__ import annotations

import itertools
import random
from collections.abc import Iterable, Iterator, Sequence


class TapeExhausted(Exception):
    """An experiment tried to read past the end of its tape."""


class RandomTape:
    """Finite ordered sequence of draws, consumed front to back."""

    def __init__(self, draws: Iterable[int]):
        self.draws: tuple[int, ...] = tuple(draws)
        self.cursor = 0

    def draw(self, domain: int) -> int:
        if self.cursor >= len(self.draws):
            raise TapeExhausted(
                f"tape of length {len(self.draws)} exhausted at draw {self.cursor}"
            )
        value = self.draws[self.cursor]
        if not 0 <= value < domain:
            raise ValueError(
                f"tape draw {value} at position {self.cursor} outside domain [0, {domain})"
            )
        self.cursor += 1
        return value

    def remaining(self) -> int:
        return len(self.draws) - self.cursor

    def __repr__(self) -> str:
        return f"RandomTape({list(self.draws)!r}, cursor={self.cursor})"


class SeededSource:
    """Deterministic draw source backed by ``random.Random(seed)``."""

    def __init__(self, seed: int):
        self.seed = seed
        self._rng = random.Random(seed)

    def draw(self, domain: int) -> int:
        return uniform_draw(self._rng, domain)


def uniform_draw(rng: random.Random, domain: int) -> int:
    """Uniform value in [0, domain) by rejection on fixed-width bit draws.

    Each attempt reads exactly ``(domain-1).bit_length()`` bits and retries
    on values >= domain, so no modulo bias is introduced even for tiny
    domains.
    """
    if domain <= 0:
        raise ValueError(f"domain must be positive, got {domain}")
    if domain == 1:
        return 0
    width = (domain - 1).bit_length()
    while True:
        value = rng.getrandbits(width)
        if value < domain:
            return value


def random_tape(domains: Sequence[int], rng: random.Random) -> RandomTape:
    """One tape with a uniform draw per declared domain."""
    return RandomTape(uniform_draw(rng, n) for n in domains)


def seeded_tapes(domains: Sequence[int], count: int, seed: int) -> Iterator[RandomTape]:
    """``count`` independent uniform tapes from one seed."""
    rng = random.Random(seed)
    for _ in range(count):
        yield random_tape(domains, rng)


def exhaustive_tapes(domains: Sequence[int]) -> Iterator[RandomTape]:
    """Every tape over the Cartesian product of the declared domains."""
    for draws in itertools.product(*(range(n) for n in domains)):
        yield RandomTape(draws)
