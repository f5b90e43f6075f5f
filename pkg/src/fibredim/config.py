"""Configuration records for the randomized experiments."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Tuple


@dataclass(frozen=True)
class RandomPairConfig:
    """Seeded batch of random pairs over Z with nonzero characteristics."""

    seed: int = 0
    pairs: int = 100
    max_vars: int = 3
    max_relations: int = 3
    max_degree: int = 2
    coeff_range: Tuple[int, int] = (-10, 10)
    char_range: Tuple[int, int] = (2, 36)
    coprime_rate: float = 0.15
    order: str = "grevlex"

    def generator_options(self):
        return {"max_vars": self.max_vars, "max_relations": self.max_relations,
                "max_degree": self.max_degree, "coeff_range": self.coeff_range,
                "char_range": self.char_range, "coprime_rate": self.coprime_rate}

    def to_json(self):
        return asdict(self)


@dataclass(frozen=True)
class KernelSweepConfig:
    """Random ideals for the Groebner kernel sweep.

    Integer bases use a smaller degree cap: strong bases over Z grow much
    faster than reduced bases over a field, in lex order especially.
    """

    seed: int = 0
    count: int = 200
    combinations: int = 50
    max_vars: int = 3
    max_gens: int = 3
    max_degree: int = 3
    integer_max_degree: int = 2

    def to_json(self):
        return asdict(self)
