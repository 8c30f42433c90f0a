"""Stabilizer groups and their code parameters.

A group is stored as an independent list of commuting Hermitian generators.
Everything that depends on the group only mod phase works on the packed
symplectic vectors; signs are recovered through :func:`element`.
"""
from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Iterable, Iterator

import networkx as nx

from . import gf2
from .conf import budget
from .exceptions import (
    BudgetExceeded, DependentBasisError, DimensionError, MinusIdentityError,
    NonCommutingError, NonHermitianError, PauliParseError,
)
from .pauli import PauliOperator, QubitSet, commutes, multiply, read_operators, restrict, tensor

logger = logging.getLogger(__name__)

INFINITY = math.inf


@dataclass(frozen=True)
class Membership:
    """Result of a membership test.

    When ``member`` is true the group holds ``i**phase_power * P`` for the
    queried ``P``.
    """

    member: bool
    phase_power: int = 0

    @property
    def sign(self):
        if not self.member or self.phase_power % 2:
            return None
        return 1 if self.phase_power == 0 else -1


@dataclass(frozen=True)
class CodeParameters:
    n: int
    k: int
    d: int | float
    w: int
    w_avg: Fraction

    @property
    def label(self) -> str:
        d = 'inf' if self.d == INFINITY else self.d
        return f'[[{self.n},{self.k},{d};{self.w}]]'

    def __str__(self):
        d = 'inf' if self.d == INFINITY else self.d
        return f'[[{self.n},{self.k},{d}]] W={self.w} W_avg={self.w_avg}'


def _absorb(basis: gf2.XorBasis, op: PauliOperator) -> bool:
    """Add ``op`` to ``basis``; False when it is already spanned."""
    residual, product = basis.reduce(op.symplectic, op)
    if residual:
        basis.insert(residual, product)
        return True
    if product.phase_power == 2:
        raise MinusIdentityError(f'{op} closes a product equal to -I')
    return False


def _new_basis() -> gf2.XorBasis:
    return gf2.XorBasis(combine=multiply)


def _check_operators(n: int, operators: list[PauliOperator]):
    for op in operators:
        if op.n != n:
            raise DimensionError(f'{op} does not act on {n} qubits')
        if not op.is_hermitian:
            raise NonHermitianError(f'{op} is not Hermitian')
    for a, b in itertools.combinations(operators, 2):
        if not commutes(a, b):
            raise NonCommutingError(f'{a} and {b} anticommute')


@dataclass(frozen=True)
class StabilizerGenerators:
    n: int
    gens: tuple[PauliOperator, ...] = ()

    def __post_init__(self):
        gens = tuple(self.gens)
        object.__setattr__(self, 'gens', gens)
        _check_operators(self.n, list(gens))
        basis = _new_basis()
        for g in gens:
            if not _absorb(basis, g):
                raise DependentBasisError(f'{g} is a product of earlier generators')
        self.__dict__['_basis'] = basis

    @classmethod
    def from_strings(cls, strings: Iterable[str], n: int | None = None) -> StabilizerGenerators:
        ops = [PauliOperator.parse(s) for s in strings]
        if n is None:
            if not ops:
                raise DimensionError('qubit count needed for an empty generator list')
            n = ops[0].n
        return cls(n, tuple(ops))

    @property
    def r(self) -> int:
        return len(self.gens)

    @property
    def k(self) -> int:
        return self.n - len(self.gens)

    @cached_property
    def patterns(self) -> list[int]:
        return [g.symplectic for g in self.gens]

    def __len__(self):
        return len(self.gens)

    def __iter__(self) -> Iterator[PauliOperator]:
        return iter(self.gens)

    def __str__(self):
        if not self.gens:
            return f'<> on {self.n} qubits'
        return '<' + ', '.join(str(g) for g in self.gens) + '>'


def canonicalize(operators: Iterable[PauliOperator], n: int | None = None) -> StabilizerGenerators:
    """Drop generators already spanned by earlier ones, keeping signs as given."""
    operators = list(operators)
    if n is None:
        if not operators:
            raise DimensionError('qubit count needed for an empty generator list')
        n = operators[0].n
    _check_operators(n, operators)
    basis = _new_basis()
    kept = [op for op in operators if _absorb(basis, op)]
    if len(kept) < len(operators):
        logger.debug('canonicalize dropped %d dependent generators', len(operators) - len(kept))
    return StabilizerGenerators(n, tuple(kept))


def read_generators(text: str) -> StabilizerGenerators:
    operators = read_operators(text)
    if not operators:
        raise PauliParseError('no generators found')
    return canonicalize(operators)


def load_generators(path: str | Path) -> StabilizerGenerators:
    return read_generators(Path(path).read_text())


def add_generator(group: StabilizerGenerators, op: PauliOperator) -> StabilizerGenerators:
    return StabilizerGenerators(group.n, group.gens + (op,))


# ----------------------------------------------------------------------
# membership


def member(group: StabilizerGenerators, op: PauliOperator) -> Membership:
    if op.n != group.n:
        raise DimensionError(f'{op} does not act on {group.n} qubits')
    residual, product = group._basis.reduce(op.symplectic, PauliOperator.identity(group.n))
    if residual:
        return Membership(False)
    return Membership(True, (product.phase_power - op.phase_power) % 4)


def element(group: StabilizerGenerators, pattern: int) -> PauliOperator:
    """The signed group element with symplectic vector ``pattern``."""
    residual, product = group._basis.reduce(pattern, PauliOperator.identity(group.n))
    if residual:
        raise ValueError(f'pattern {pattern:#x} is not in the group')
    return product


def pattern_weight(pattern: int, n: int) -> int:
    return ((pattern | (pattern >> n)) & ((1 << n) - 1)).bit_count()


def group_patterns(group: StabilizerGenerators) -> Iterator[int]:
    """All 2**r symplectic vectors of the group, identity first."""
    limit = budget('GROUP_MAX_RANK')
    if group.r > limit:
        raise BudgetExceeded(f'group rank {group.r} exceeds the enumeration budget {limit}')
    return gf2.span(group.patterns)


def group_weights(group: StabilizerGenerators) -> list[int]:
    """Number of group elements of each weight 0..n."""
    counts = [0] * (group.n + 1)
    n = group.n
    for v in group_patterns(group):
        counts[pattern_weight(v, n)] += 1
    return counts


# ----------------------------------------------------------------------
# distance


def _syndrome_table(group: StabilizerGenerators) -> list[tuple[int, int, int]]:
    """Per qubit: syndromes of X, Z and Y on that qubit."""
    table = []
    for q in range(group.n):
        sx = sz = 0
        for i, g in enumerate(group.gens):
            if g.z_bits >> q & 1:
                sx |= 1 << i
            if g.x_bits >> q & 1:
                sz |= 1 << i
        table.append((sx, sz, sx ^ sz))
    return table


def _commuting_of_weight(group: StabilizerGenerators, wt: int) -> Iterator[tuple[int, int]]:
    """(x, z) bit pairs of every weight-``wt`` Pauli commuting with the group."""
    table = _syndrome_table(group)
    letter_bits = ((1, 0), (0, 1), (1, 1))
    for qubits in itertools.combinations(range(group.n), wt):
        for letters in itertools.product(range(3), repeat=wt):
            syndrome = 0
            for q, letter in zip(qubits, letters):
                syndrome ^= table[q][letter]
            if syndrome:
                continue
            x = z = 0
            for q, letter in zip(qubits, letters):
                bx, bz = letter_bits[letter]
                x |= bx << q
                z |= bz << q
            yield x, z


def iter_logicals(group: StabilizerGenerators, wt: int) -> Iterator[PauliOperator]:
    """Weight-``wt`` Paulis in the normalizer but outside the group, mod phase."""
    n = group.n
    for x, z in _commuting_of_weight(group, wt):
        if not group._basis.contains(x | (z << n)):
            yield PauliOperator(n, x, z)


def distance(group: StabilizerGenerators) -> int | float:
    """Minimum weight of a logical operator, or infinity when k = 0."""
    if group.k == 0:
        return INFINITY
    max_n = budget('DISTANCE_MAX_N')
    max_weight = budget('DISTANCE_MAX_WEIGHT')
    if group.n > max_n:
        raise BudgetExceeded(f'distance search on {group.n} qubits exceeds the budget n <= {max_n}')
    for wt in range(1, group.n + 1):
        if wt > max_weight:
            raise BudgetExceeded(f'no logical of weight <= {max_weight} found')
        if next(iter_logicals(group, wt), None) is not None:
            return wt
    return INFINITY


# ----------------------------------------------------------------------
# weight-optimal generating sets


def weight_optimal_generating_set(group: StabilizerGenerators) -> list[PauliOperator]:
    """Greedy choice of lightest independent group elements, lightest first."""
    n = group.n
    ordered = sorted((pattern_weight(v, n), v) for v in group_patterns(group) if v)
    basis = gf2.XorBasis()
    chosen = []
    for _, v in ordered:
        if basis.insert(v):
            chosen.append(element(group, v))
            if len(chosen) == group.r:
                break
    return chosen


def weight_profile(group: StabilizerGenerators) -> list[int]:
    return [g.weight for g in weight_optimal_generating_set(group)]


def optimal_weight(group: StabilizerGenerators) -> int:
    """W(G): the smallest achievable maximum generator weight."""
    profile = weight_profile(group)
    return max(profile, default=0)


def average_optimal_weight(group: StabilizerGenerators) -> Fraction:
    """W_avg(G): the smallest achievable mean generator weight."""
    profile = weight_profile(group)
    if not profile:
        return Fraction(0)
    return Fraction(sum(profile), len(profile))


def code_parameters(group: StabilizerGenerators) -> CodeParameters:
    profile = weight_profile(group)
    return CodeParameters(
        n=group.n,
        k=group.k,
        d=distance(group),
        w=max(profile, default=0),
        w_avg=Fraction(sum(profile), len(profile)) if profile else Fraction(0),
    )


# ----------------------------------------------------------------------
# structural operations


def tensor_product(first: StabilizerGenerators, second: StabilizerGenerators) -> StabilizerGenerators:
    left_pad = PauliOperator.identity(second.n)
    right_pad = PauliOperator.identity(first.n)
    gens = [tensor(g, left_pad) for g in first.gens] + [tensor(right_pad, h) for h in second.gens]
    return StabilizerGenerators(first.n + second.n, tuple(gens))


def pad(group: StabilizerGenerators, extra: int) -> StabilizerGenerators:
    """Append ``extra`` qubits each fixed by a single-qubit Z check."""
    result = group
    for _ in range(extra):
        result = tensor_product(result, StabilizerGenerators(1, (PauliOperator.z_type(1, 1),)))
    return result


def weight_one_elements(group: StabilizerGenerators) -> dict[int, PauliOperator]:
    """Signed weight-1 group elements keyed by qubit (at most one per qubit)."""
    found = {}
    n = group.n
    for q in range(n):
        for x, z in ((1, 0), (0, 1), (1, 1)):
            pattern = (x << q) | ((z << q) << n)
            if group._basis.contains(pattern):
                found[q] = element(group, pattern)
                break
    return found


def strip_weight_one(group: StabilizerGenerators) -> tuple[StabilizerGenerators, int]:
    """Remove every qubit fixed by a weight-1 element; k, d and W are unchanged."""
    singles = weight_one_elements(group)
    if not singles:
        return group, 0
    cleared = []
    for g in group.gens:
        for q, h in singles.items():
            if g.support_mask >> q & 1:
                g = multiply(g, h)
        cleared.append(g)
    keep = QubitSet(tuple(q for q in range(group.n) if q not in singles))
    projected = [restrict(g, keep, keep_phase=True) for g in cleared]
    stripped = canonicalize([p for p in projected if p.symplectic], n=len(keep))
    return stripped, len(singles)


def factor_with_qubits(group: StabilizerGenerators) -> list[tuple[QubitSet, StabilizerGenerators]]:
    """Connected pieces of the generator overlap graph with the qubits they occupy."""
    overlap = nx.Graph()
    overlap.add_nodes_from(range(group.r))
    for a, b in itertools.combinations(range(group.r), 2):
        if group.gens[a].support_mask & group.gens[b].support_mask:
            overlap.add_edge(a, b)

    pieces = []
    covered = 0
    for component in nx.connected_components(overlap):
        members = sorted(component)
        mask = 0
        for i in members:
            mask |= group.gens[i].support_mask
        covered |= mask
        qubits = QubitSet.from_mask(mask)
        gens = tuple(restrict(group.gens[i], qubits, keep_phase=True) for i in members)
        pieces.append((qubits, StabilizerGenerators(len(qubits), gens)))
    for q in range(group.n):
        if not covered >> q & 1:
            pieces.append((QubitSet((q,)), StabilizerGenerators(1)))
    pieces.sort(key=lambda piece: piece[0].indices[0])
    return pieces


def factor_components(group: StabilizerGenerators) -> list[StabilizerGenerators]:
    return [code for _, code in factor_with_qubits(group)]


def in_group(group: StabilizerGenerators, pattern: int) -> bool:
    """Whether the symplectic vector ``pattern`` lies in the group mod phase."""
    return group._basis.contains(pattern)
