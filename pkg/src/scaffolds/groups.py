"""Finite abelian groups as products of cyclic groups, and their characters.

Group elements and characters are plain integer tuples.  The group law is
written additively on coordinates; a character ``eps`` acts on ``x`` by

    eps(x) = exp(2 pi i * sum_j eps_j * x_j / m_j)

so the character group has the same cyclic orders as the group itself.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

from .errors import InvalidInput

GroupElement = tuple[int, ...]
Character = tuple[int, ...]


@dataclass(frozen=True)
class AbelianGroup:
    orders: tuple[int, ...]
    size: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "orders", tuple(int(m) for m in self.orders))
        if any(m < 1 for m in self.orders):
            raise InvalidInput(f"cyclic orders must be >= 1, got {list(self.orders)}")
        object.__setattr__(self, "size", int(np.prod(self.orders, dtype=np.int64)))

    @cached_property
    def elements(self) -> list[GroupElement]:
        """All elements in lexicographic order."""
        return list(itertools.product(*(range(m) for m in self.orders)))

    @cached_property
    def _index(self) -> dict[GroupElement, int]:
        return {x: k for k, x in enumerate(self.elements)}

    def index(self, x: Sequence[int]) -> int:
        return self._index[self.element(x)]

    def element(self, coords: Sequence[int]) -> GroupElement:
        """Validate shape and reduce ``coords`` into canonical form."""
        try:
            coords = tuple(int(c) for c in coords)
        except TypeError:
            coords = (int(coords),)
        if len(coords) != len(self.orders):
            raise InvalidInput(
                f"element {coords} has {len(coords)} coordinates, group has {len(self.orders)}")
        return tuple(c % m for c, m in zip(coords, self.orders))

    @property
    def identity(self) -> GroupElement:
        return (0,) * len(self.orders)

    def multiply(self, a, b) -> GroupElement:
        a, b = self.element(a), self.element(b)
        return tuple((x + y) % m for x, y, m in zip(a, b, self.orders))

    def inverse(self, a) -> GroupElement:
        a = self.element(a)
        return tuple((-x) % m for x, m in zip(a, self.orders))

    def character_value(self, eps, x) -> complex:
        eps, x = self.element(eps), self.element(x)
        phase = sum(e * y / m for e, y, m in zip(eps, x, self.orders))
        return complex(np.exp(2j * np.pi * phase))

    @cached_property
    def character_table(self) -> np.ndarray:
        """``K[a, b] = eps_a(x_b)`` with both indices in enumeration order."""
        if not self.orders:
            return np.ones((1, 1), dtype=complex)
        coords = np.array(self.elements, dtype=np.int64)
        phase = np.zeros((self.size, self.size))
        for j, m in enumerate(self.orders):
            phase += np.outer(coords[:, j], coords[:, j]) / m
        return np.exp(2j * np.pi * phase)

    @cached_property
    def difference_table(self) -> np.ndarray:
        """``D[a, b]`` is the index of ``x_a * x_b^{-1}``."""
        coords = np.array(self.elements, dtype=np.int64).reshape(self.size, -1)
        orders = np.array(self.orders, dtype=np.int64)
        diff = (coords[:, None, :] - coords[None, :, :]) % orders
        # lexicographic rank of each difference tuple
        weights = np.ones(len(self.orders), dtype=np.int64)
        for j in range(len(self.orders) - 2, -1, -1):
            weights[j] = weights[j + 1] * orders[j + 1]
        return (diff * weights).sum(axis=-1) if len(self.orders) else np.zeros(
            (1, 1), dtype=np.int64)


def make_abelian_group(orders: Sequence[int]) -> AbelianGroup:
    return AbelianGroup(tuple(orders))


def multiply(g: AbelianGroup, a, b) -> GroupElement:
    return g.multiply(a, b)


def inverse(g: AbelianGroup, a) -> GroupElement:
    return g.inverse(a)


def identity(g: AbelianGroup) -> GroupElement:
    return g.identity


def character_value(g: AbelianGroup, eps, x) -> complex:
    return g.character_value(eps, x)


def dual_group(g: AbelianGroup) -> AbelianGroup:
    """The character group, realized as a group with the same cyclic orders.

    Its elements are read as characters of ``g`` through the pairing above,
    and the pairing is symmetric, so taking the dual twice gives ``g`` back.
    """
    return AbelianGroup(g.orders)
