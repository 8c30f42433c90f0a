"""Instance transformers along the chain MLD -> SBP over F2 -> MW-SG.

Maximum-likelihood decoding asks for a low-weight solution of ``H e = s``.
The shortest-basis problem asks whether a subspace has a basis of short
vectors.  The stabilizer version asks whether a group has a generating set
of low maximum weight.  Each decider here is a brute-force search meant for
small instances; together they check that the transformers preserve answers.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from pathlib import Path

import galois
import numpy as np

from . import gf2
from .conf import budget
from .exceptions import BudgetExceeded, DependentBasisError, DimensionError, InstanceParseError, NoSolution
from .pauli import PauliOperator
from .stabilizer import StabilizerGenerators, pattern_weight

GF2 = galois.GF(2)


class Verdict(enum.Enum):
    YES = 'YES'
    NO = 'NO'

    @classmethod
    def of(cls, value: bool) -> Verdict:
        return cls.YES if value else cls.NO

    def __bool__(self):
        return self is Verdict.YES


def _pack(bits) -> int:
    value = 0
    for i, bit in enumerate(bits):
        if int(bit):
            value |= 1 << i
    return value


def _unpack(value: int, length: int) -> list[int]:
    return [value >> i & 1 for i in range(length)]


@dataclass(frozen=True)
class MLDInstance:
    h: tuple[tuple[int, ...], ...]
    s: tuple[int, ...]
    t: int

    def __post_init__(self):
        h = tuple(tuple(int(b) & 1 for b in row) for row in self.h)
        s = tuple(int(b) & 1 for b in self.s)
        object.__setattr__(self, 'h', h)
        object.__setattr__(self, 's', s)
        if len(s) != len(h):
            raise DimensionError(f'syndrome of length {len(s)} for {len(h)} parity checks')
        if len({len(row) for row in h}) > 1:
            raise DimensionError('parity-check rows of different lengths')
        if self.t < 0:
            raise DimensionError('threshold must be nonnegative')
        if h and np.linalg.matrix_rank(self.matrix) != len(h):
            raise DependentBasisError('parity-check matrix is not full row rank')

    @property
    def m(self) -> int:
        return len(self.h)

    @property
    def n(self) -> int:
        return len(self.h[0]) if self.h else 0

    @property
    def matrix(self) -> galois.FieldArray:
        return GF2(np.array(self.h, dtype=int).reshape(self.m, self.n))


@dataclass(frozen=True)
class SBPInstance:
    basis: tuple[int, ...]
    t: int
    ambient_dim: int

    def __post_init__(self):
        object.__setattr__(self, 'basis', tuple(self.basis))
        if gf2.rank(self.basis) != len(self.basis):
            raise DependentBasisError('basis vectors are linearly dependent')
        if any(v >> self.ambient_dim for v in self.basis):
            raise DimensionError(f'basis vector longer than {self.ambient_dim} bits')


@dataclass(frozen=True)
class MWSGInstance:
    generators: StabilizerGenerators
    t: int


# ----------------------------------------------------------------------
# linear algebra over F2


def kernel_basis(instance: MLDInstance) -> list[int]:
    if not instance.h:
        return [1 << i for i in range(instance.n)]
    return [_pack(np.asarray(v, dtype=int)) for v in instance.matrix.null_space()]


def particular_solution(instance: MLDInstance) -> int:
    """Some x with H x = s, read off the reduced echelon form of [H | s]."""
    n = instance.n
    if not instance.h:
        return 0
    augmented = GF2(np.column_stack([np.array(instance.h, dtype=int), np.array(instance.s, dtype=int)]))
    reduced = np.asarray(augmented.row_reduce(), dtype=int)
    x = 0
    for row in reduced:
        pivots = np.flatnonzero(row[:n])
        if pivots.size == 0:
            if row[n]:
                raise NoSolution('H x = s is inconsistent')
            continue
        if row[n]:
            x |= 1 << int(pivots[0])
    return x


# ----------------------------------------------------------------------
# transformers


def mld_to_sbp(instance: MLDInstance) -> SBPInstance:
    """Kernel vectors padded with zeros plus one solution padded with ones."""
    n = instance.n
    x = particular_solution(instance)
    ones = (1 << n) - 1
    basis = kernel_basis(instance) + [x | (ones << n)]
    return SBPInstance(tuple(basis), n + instance.t, 2 * n)


def sbp_to_mwsg(instance: SBPInstance) -> MWSGInstance:
    n = instance.ambient_dim
    gens = tuple(PauliOperator.z_type(n, v) for v in instance.basis)
    return MWSGInstance(StabilizerGenerators(n, gens), instance.t)


# ----------------------------------------------------------------------
# deciders


def decide_mld(instance: MLDInstance) -> Verdict:
    n = instance.n
    limit = budget('MLD_MAX_N')
    if n > limit:
        raise BudgetExceeded(f'MLD search on {n} bits exceeds the budget {limit}')
    target = _pack(instance.s)
    # syndrome of each single-bit error
    columns = [_pack([row[j] for row in instance.h]) for j in range(n)]
    for wt in range(min(instance.t, n) + 1):
        for support in itertools.combinations(range(n), wt):
            syndrome = 0
            for j in support:
                syndrome ^= columns[j]
            if syndrome == target:
                return Verdict.YES
    return Verdict.NO


def _short_elements_span(vectors, count: int, weight_of, t: int) -> bool:
    basis = gf2.XorBasis()
    for v in gf2.span(vectors):
        if v and weight_of(v) <= t:
            basis.insert(v)
            if basis.rank == count:
                return True
    return basis.rank == count


def decide_sbp(instance: SBPInstance) -> Verdict:
    r = len(instance.basis)
    limit = budget('MWSG_MAX_RANK')
    if r > limit:
        raise BudgetExceeded(f'span of dimension {r} exceeds the budget {limit}')
    return Verdict.of(_short_elements_span(list(instance.basis), r, int.bit_count, instance.t))


def decide_mwsg(instance: MWSGInstance) -> Verdict:
    """YES iff the group has a generating set of maximum weight <= t."""
    group = instance.generators
    limit = budget('MWSG_MAX_RANK')
    if group.r > limit:
        raise BudgetExceeded(f'group of rank {group.r} exceeds the budget {limit}')
    n = group.n
    return Verdict.of(_short_elements_span(group.patterns, group.r, lambda v: pattern_weight(v, n), instance.t))


# ----------------------------------------------------------------------
# instances


def random_mld_instance(rng: np.random.Generator, m: int, n: int, t: int | None = None) -> MLDInstance:
    """Uniform full-rank H with a uniform syndrome and threshold."""
    if not 0 < m <= n:
        raise DimensionError(f'need 0 < m <= n, got m={m}, n={n}')
    while True:
        h = rng.integers(0, 2, size=(m, n))
        if np.linalg.matrix_rank(GF2(h)) == m:
            break
    s = rng.integers(0, 2, size=m)
    if t is None:
        t = int(rng.integers(0, n + 1))
    return MLDInstance(tuple(map(tuple, h.tolist())), tuple(s.tolist()), t)


def read_mld_instance(text: str) -> MLDInstance:
    """Rows of H, then the syndrome line, then the threshold line."""
    lines = [raw.split('#', 1)[0].strip() for raw in text.splitlines()]
    lines = [line for line in lines if line]
    if len(lines) < 3:
        raise InstanceParseError('expected matrix rows, a syndrome line and a threshold line')

    def bits(line):
        digits = line.replace(' ', '')
        if not digits or set(digits) - {'0', '1'}:
            raise InstanceParseError(f'not a bit string: {line!r}')
        return tuple(int(c) for c in digits)

    try:
        t = int(lines[-1])
    except ValueError:
        raise InstanceParseError(f'threshold must be an integer, got {lines[-1]!r}') from None
    rows = tuple(bits(line) for line in lines[:-2])
    s = bits(lines[-2])
    try:
        return MLDInstance(rows, s, t)
    except DimensionError as exc:
        raise InstanceParseError(str(exc)) from exc


def load_mld_instance(path: str | Path) -> MLDInstance:
    return read_mld_instance(Path(path).read_text())


def format_sbp(instance: SBPInstance) -> str:
    lines = [''.join(str(b) for b in _unpack(v, instance.ambient_dim)) for v in instance.basis]
    return '\n'.join(lines + [str(instance.t)])
