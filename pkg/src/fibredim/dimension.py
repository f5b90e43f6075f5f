"""Dimension values: either Empty (the zero ring) or a non-negative integer."""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Optional


@total_ordering
@dataclass(frozen=True)
class Dim:
    """Codomain of every dimension, height and transcendence-degree operation.

    ``Dim(None)`` is Empty and sorts below every finite value, so ``max``
    over a collection is the supremum with an empty supremum being Empty.
    """

    value: Optional[int] = None

    def __post_init__(self):
        if self.value is not None and self.value < 0:
            raise ValueError("dimension must be non-negative")

    @property
    def is_empty(self) -> bool:
        return self.value is None

    def __lt__(self, other):
        if not isinstance(other, Dim):
            return NotImplemented
        if self.value is None:
            return other.value is not None
        return other.value is not None and self.value < other.value

    def __add__(self, other):
        if isinstance(other, Dim):
            if self.is_empty or other.is_empty:
                return EMPTY
            return Dim(self.value + other.value)
        if self.is_empty:
            return EMPTY
        return Dim(self.value + int(other))

    __radd__ = __add__

    def to_json(self):
        return self.value

    @classmethod
    def from_json(cls, obj):
        return cls(obj)

    def __str__(self):
        return "Empty" if self.value is None else str(self.value)

    def __repr__(self):
        return "Empty" if self.value is None else f"Finite({self.value})"


EMPTY = Dim(None)


def finite(n: int) -> Dim:
    return Dim(int(n))


def dim_sup(values: Iterable[Dim]) -> Dim:
    return max(values, default=EMPTY)
