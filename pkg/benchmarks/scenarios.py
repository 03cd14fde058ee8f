"""Synthetic factor sets for timing the automaton pipeline."""

import random
from dataclasses import dataclass

from pinclass.pins.words import HORIZONTAL, VERTICAL


@dataclass(frozen=True)
class FactorScenario:
    """A reproducible factor set whose lengths sum to about ``total_length``."""

    name: str
    total_length: int
    seed: int = 2413
    min_factor_length: int = 3
    max_factor_length: int = 40

    def factors(self) -> list[str]:
        return synthetic_factor_set(
            self.total_length,
            seed=self.seed,
            min_length=self.min_factor_length,
            max_length=self.max_factor_length,
        )


def random_alternating_word(rng: random.Random, length: int) -> str:
    """An alternating direction word, the shape of every factor the pipeline builds."""
    families = [HORIZONTAL, VERTICAL]
    first = rng.randrange(2)
    return "".join(rng.choice(families[(first + i) % 2]) for i in range(length))


def synthetic_factor_set(
    total_length: int, seed: int = 2413, min_length: int = 3, max_length: int = 40
) -> list[str]:
    """Alternating words with lengths drawn from min_length..max_length.

    With the default lengths the trie size grows about linearly in total_length.
    """
    rng = random.Random(seed)
    factors: list[str] = []
    remaining = total_length
    while remaining >= min_length:
        length = min(rng.randint(min_length, max_length), remaining)
        factors.append(random_alternating_word(rng, length))
        remaining -= length
    return factors


FACTOR_SCENARIOS = [
    FactorScenario(name="factors_1e3", total_length=1_000),
    FactorScenario(name="factors_1e4", total_length=10_000),
    FactorScenario(name="factors_1e5", total_length=100_000),
]
