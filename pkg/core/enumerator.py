"""Quantum weight enumerators and the Krawtchouk transforms between them.

All arithmetic is exact: integers for the Krawtchouk matrices, ``Fraction``
for transformed enumerators.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator

import galois
import numpy as np

from . import gf2
from .conf import budget
from .exceptions import BudgetExceeded, DimensionError
from .stabilizer import INFINITY, StabilizerGenerators, group_weights, pattern_weight

GF2 = galois.GF(2)


@dataclass(frozen=True)
class EnumeratorVector:
    n: int
    values: tuple[Fraction, ...]

    def __post_init__(self):
        values = tuple(Fraction(v) for v in self.values)
        if len(values) != self.n + 1:
            raise DimensionError(f'enumerator of length {len(values)} for n={self.n}')
        object.__setattr__(self, 'values', values)

    @classmethod
    def of(cls, values: Iterable) -> EnumeratorVector:
        values = tuple(values)
        return cls(len(values) - 1, values)

    def __getitem__(self, j):
        return self.values[j]

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    @property
    def total(self) -> Fraction:
        return sum(self.values, Fraction(0))

    def is_nonnegative(self) -> bool:
        return all(v >= 0 for v in self.values)

    def as_ints(self) -> list[int]:
        if any(v.denominator != 1 for v in self.values):
            raise ValueError(f'{self} has non-integer entries')
        return [int(v) for v in self.values]

    def __str__(self):
        return '(' + ', '.join(str(v) for v in self.values) + ')'


@dataclass(frozen=True)
class KrawtchoukMatrix:
    n: int
    entries: tuple[tuple[int, ...], ...]
    signed: bool = False

    def apply(self, vector: Iterable) -> list:
        vector = list(vector)
        if len(vector) != self.n + 1:
            raise DimensionError(f'vector of length {len(vector)} for n={self.n}')
        return [sum(m * a for m, a in zip(row, vector)) for row in self.entries]

    def __getitem__(self, index):
        i, j = index
        return self.entries[i][j]


@lru_cache(maxsize=None)
def krawtchouk(j: int, z: int, n: int) -> int:
    """P_j(z; n) = sum_m (-1)^m 3^(j-m) C(n-z, j-m) C(z, m)."""
    if not (0 <= j <= n and 0 <= z <= n):
        raise DimensionError(f'krawtchouk arguments out of range: j={j}, z={z}, n={n}')
    return sum(
        (-1) ** m * 3 ** (j - m) * comb(n - z, j - m) * comb(z, m)
        for m in range(min(z, j) + 1)
    )


@lru_cache(maxsize=None)
def build_matrices(n: int) -> tuple[KrawtchoukMatrix, KrawtchoukMatrix]:
    """(M, signed M) with M[i][j] = P_i(j; n) and signed entries (-1)^j M[i][j]."""
    if n < 1:
        raise DimensionError('n must be positive')
    plain = tuple(tuple(krawtchouk(i, j, n) for j in range(n + 1)) for i in range(n + 1))
    signed = tuple(tuple(-v if j % 2 else v for j, v in enumerate(row)) for row in plain)
    return KrawtchoukMatrix(n, plain), KrawtchoukMatrix(n, signed, signed=True)


def enumerator_from_group(group: StabilizerGenerators) -> EnumeratorVector:
    return EnumeratorVector(group.n, tuple(group_weights(group)))


def _transform(matrix: KrawtchoukMatrix, a: EnumeratorVector, big_k: int) -> EnumeratorVector:
    scale = Fraction(big_k, 2 ** a.n)
    return EnumeratorVector(a.n, tuple(scale * v for v in matrix.apply(a.values)))


def macwilliams(a: EnumeratorVector, big_k: int) -> EnumeratorVector:
    """Dual enumerator B = (K / 2^n) M A."""
    plain, _ = build_matrices(a.n)
    return _transform(plain, a, big_k)


def shadow(a: EnumeratorVector, big_k: int) -> EnumeratorVector:
    """Shadow enumerator Sh = (K / 2^n) M~ A."""
    _, signed = build_matrices(a.n)
    return _transform(signed, a, big_k)


def distance_from_enumerators(a: EnumeratorVector, b: EnumeratorVector) -> int | float:
    if len(a) != len(b):
        raise DimensionError('enumerators of different lengths')
    for j, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return j
    return INFINITY


def average_weight(group: StabilizerGenerators) -> Fraction:
    """Mean weight of the 2^r elements of the group, identity included."""
    a = group_weights(group)
    return Fraction(sum(j * count for j, count in enumerate(a)), 2 ** group.r)


def average_group_weight_check(group: StabilizerGenerators) -> tuple[Fraction, Fraction]:
    """Mean weight over the whole group against (3n - A_1) / 4.

    The two agree for every code of distance at least 2.
    """
    a = group_weights(group)
    return average_weight(group), Fraction(3 * group.n - a[1], 4)


def parity_split(a: EnumeratorVector) -> tuple[Fraction, Fraction]:
    """(number of even-weight elements, total)."""
    even = sum((v for j, v in enumerate(a) if j % 2 == 0), Fraction(0))
    return even, a.total


def has_parity_structure(a: EnumeratorVector) -> bool:
    """All weights even, or exactly half of them."""
    even, total = parity_split(a)
    return even == total or 2 * even == total


def normalizer_basis(group: StabilizerGenerators) -> list[int]:
    """Symplectic basis of the normalizer mod phase (dimension 2n - r)."""
    n = group.n
    if group.r == 0:
        return [1 << i for i in range(2 * n)]
    rows = []
    for g in group.gens:
        rows.append([g.z_bits >> i & 1 for i in range(n)] + [g.x_bits >> i & 1 for i in range(n)])
    kernel = GF2(np.array(rows, dtype=int)).null_space()
    basis = []
    for vec in kernel:
        bits = 0
        for i, bit in enumerate(np.asarray(vec, dtype=int)):
            if bit:
                bits |= 1 << i
        basis.append(bits)
    return basis


def normalizer_enumerator(group: StabilizerGenerators) -> EnumeratorVector:
    """Direct count of normalizer elements by weight, mod phase."""
    basis = normalizer_basis(group)
    limit = budget('GROUP_MAX_RANK')
    if len(basis) > limit:
        raise BudgetExceeded(f'normalizer of dimension {len(basis)} exceeds the enumeration budget {limit}')
    counts = [0] * (group.n + 1)
    for v in gf2.span(basis):
        counts[pattern_weight(v, group.n)] += 1
    return EnumeratorVector(group.n, tuple(counts))
