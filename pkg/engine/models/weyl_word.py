"""
Weyl Words
Ordered reflection sequences recording Cremona transformations
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Tuple, Union


class ReductionStatus(Enum):
    REDUCED = "reduced"
    NOT_REDUCIBLE = "not_reducible"


@dataclass(frozen=True)
class SimpleRoot:
    """Reflection along l_index"""

    index: int

    def __str__(self) -> str:
        return f"l{self.index}"


@dataclass(frozen=True)
class ENReflection:
    """The W'_n generator: reflection along E_n, flipping the sign of b_n"""

    def __str__(self) -> str:
        return "E_n"


Generator = Union[SimpleRoot, ENReflection]


@dataclass(frozen=True)
class WeylWord:
    generators: Tuple[Generator, ...] = ()

    @classmethod
    def of(cls, generators: Iterable[Generator]) -> "WeylWord":
        return cls(tuple(generators))

    def __len__(self) -> int:
        return len(self.generators)

    def __add__(self, other: "WeylWord") -> "WeylWord":
        return WeylWord(self.generators + other.generators)

    def inverse(self) -> "WeylWord":
        # every generator is an involution
        return WeylWord(tuple(reversed(self.generators)))

    @property
    def has_en_reflection(self) -> bool:
        return any(isinstance(g, ENReflection) for g in self.generators)

    @property
    def gamma_count(self) -> int:
        return sum(1 for g in self.generators if isinstance(g, SimpleRoot) and g.index == 0)

    def labels(self) -> List[str]:
        return [str(g) for g in self.generators]

    def __str__(self) -> str:
        return " ".join(self.labels()) if self.generators else "id"
