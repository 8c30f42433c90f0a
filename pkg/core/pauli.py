"""Binary-symplectic n-qubit Pauli operators with exact phase tracking.

Qubit ``i`` lives in bit ``i`` of the packed ``x_bits``/``z_bits`` integers.
``phase_power`` is measured against the letter string itself, with ``Y``
counted as a letter, so ``-ZIZZ`` has phase 2 and every Hermitian signed
Pauli has an even phase.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

from .exceptions import DimensionError, PauliParseError

LETTERS = 'IXZY'  # indexed by x | (z << 1)
_PREFIXES = {0: '', 1: 'i', 2: '-', 3: '-i'}
_PHASE_OF_PREFIX = {'': 0, '+': 0, 'i': 1, '+i': 1, '-': 2, '−': 2, '-i': 3, '−i': 3}


@dataclass(frozen=True)
class QubitSet:
    indices: tuple[int, ...]

    def __post_init__(self):
        indices = tuple(self.indices)
        object.__setattr__(self, 'indices', indices)
        if any(i < 0 for i in indices):
            raise DimensionError(f'negative qubit index in {indices}')
        if any(a >= b for a, b in zip(indices, indices[1:])):
            raise DimensionError(f'qubit indices must be strictly increasing: {indices}')

    @classmethod
    def of(cls, indices: Iterable[int]) -> QubitSet:
        return cls(tuple(sorted(set(indices))))

    @classmethod
    def from_mask(cls, mask: int) -> QubitSet:
        return cls(tuple(i for i in range(mask.bit_length()) if mask >> i & 1))

    @property
    def mask(self) -> int:
        out = 0
        for i in self.indices:
            out |= 1 << i
        return out

    def __len__(self):
        return len(self.indices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)

    def __contains__(self, item):
        return item in self.indices


@dataclass(frozen=True)
class PauliOperator:
    n: int
    x_bits: int = 0
    z_bits: int = 0
    phase_power: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise DimensionError('qubit count must be nonnegative')
        limit = 1 << self.n
        if not (0 <= self.x_bits < limit and 0 <= self.z_bits < limit):
            raise DimensionError(f'bit vectors do not fit in {self.n} qubits')
        object.__setattr__(self, 'phase_power', self.phase_power % 4)

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def identity(cls, n: int) -> PauliOperator:
        return cls(n)

    @classmethod
    def x_type(cls, n: int, mask: int) -> PauliOperator:
        return cls(n, x_bits=mask)

    @classmethod
    def z_type(cls, n: int, mask: int) -> PauliOperator:
        return cls(n, z_bits=mask)

    @classmethod
    def from_symplectic(cls, n: int, bits: int, phase_power: int = 0) -> PauliOperator:
        """Inverse of :attr:`symplectic`: low ``n`` bits are X, high ``n`` bits are Z."""
        low = (1 << n) - 1
        return cls(n, bits & low, bits >> n, phase_power)

    @classmethod
    def parse(cls, text: str) -> PauliOperator:
        return parse(text)

    # ------------------------------------------------------------------
    # views

    @property
    def symplectic(self) -> int:
        return self.x_bits | (self.z_bits << self.n)

    @property
    def support_mask(self) -> int:
        return self.x_bits | self.z_bits

    @property
    def support(self) -> QubitSet:
        return QubitSet.from_mask(self.support_mask)

    @property
    def weight(self) -> int:
        return self.support_mask.bit_count()

    @property
    def is_hermitian(self) -> bool:
        return self.phase_power % 2 == 0

    @property
    def sign(self) -> int:
        """+1 or -1 for Hermitian operators."""
        if not self.is_hermitian:
            raise ValueError(f'{self} has an imaginary phase')
        return 1 if self.phase_power == 0 else -1

    def letter(self, qubit: int) -> str:
        return LETTERS[(self.x_bits >> qubit & 1) | ((self.z_bits >> qubit & 1) << 1)]

    def letters(self) -> str:
        return ''.join(self.letter(i) for i in range(self.n))

    def unsigned(self) -> PauliOperator:
        return PauliOperator(self.n, self.x_bits, self.z_bits)

    def negate(self) -> PauliOperator:
        return PauliOperator(self.n, self.x_bits, self.z_bits, self.phase_power + 2)

    def __mul__(self, other: PauliOperator) -> PauliOperator:
        return multiply(self, other)

    def __neg__(self) -> PauliOperator:
        return self.negate()

    def __str__(self):
        return format_pauli(self)


# ----------------------------------------------------------------------
# group operations


def _check_same_n(p: PauliOperator, q: PauliOperator):
    if p.n != q.n:
        raise DimensionError(f'operators act on {p.n} and {q.n} qubits')


def weight(p: PauliOperator) -> int:
    return p.weight


def multiply(p: PauliOperator, q: PauliOperator) -> PauliOperator:
    """Exact product ``p * q``.

    Rewrites each letter string as X^x Z^z (Y = iXZ), commutes the Z block of
    ``p`` past the X block of ``q`` and converts back.
    """
    _check_same_n(p, q)
    xz_phase = (
        p.phase_power + (p.x_bits & p.z_bits).bit_count()
        + q.phase_power + (q.x_bits & q.z_bits).bit_count()
        + 2 * (p.z_bits & q.x_bits).bit_count()
    )
    x = p.x_bits ^ q.x_bits
    z = p.z_bits ^ q.z_bits
    return PauliOperator(p.n, x, z, xz_phase - (x & z).bit_count())


def commutes(p: PauliOperator, q: PauliOperator) -> bool:
    _check_same_n(p, q)
    return ((p.x_bits & q.z_bits).bit_count() + (p.z_bits & q.x_bits).bit_count()) % 2 == 0


def restrict(p: PauliOperator, qubits: QubitSet | Iterable[int], keep_phase: bool = False) -> PauliOperator:
    """The letters of ``p`` on ``qubits``, in order, as a ``len(qubits)``-qubit operator.

    The phase is dropped unless ``keep_phase``; keeping it is only meaningful
    when ``p`` acts trivially outside ``qubits``.
    """
    if not isinstance(qubits, QubitSet):
        qubits = QubitSet.of(qubits)
    x = z = 0
    for pos, q in enumerate(qubits):
        if q >= p.n:
            raise DimensionError(f'qubit {q} out of range for {p.n} qubits')
        x |= (p.x_bits >> q & 1) << pos
        z |= (p.z_bits >> q & 1) << pos
    return PauliOperator(len(qubits), x, z, p.phase_power if keep_phase else 0)


def tensor(p: PauliOperator, q: PauliOperator) -> PauliOperator:
    """``p`` on the first qubits, ``q`` on the following ones."""
    shift = p.n
    return PauliOperator(
        p.n + q.n,
        p.x_bits | (q.x_bits << shift),
        p.z_bits | (q.z_bits << shift),
        p.phase_power + q.phase_power,
    )


def embed(p: PauliOperator, n: int, qubits: QubitSet | Iterable[int]) -> PauliOperator:
    """Place the letters of ``p`` on ``qubits`` of an ``n``-qubit register."""
    if not isinstance(qubits, QubitSet):
        qubits = QubitSet(tuple(qubits))
    if len(qubits) != p.n:
        raise DimensionError(f'{p.n}-qubit operator placed on {len(qubits)} qubits')
    x = z = 0
    for pos, q in enumerate(qubits):
        if q >= n:
            raise DimensionError(f'qubit {q} out of range for {n} qubits')
        x |= (p.x_bits >> pos & 1) << q
        z |= (p.z_bits >> pos & 1) << q
    return PauliOperator(n, x, z, p.phase_power)


# ----------------------------------------------------------------------
# text format


def parse(text: str) -> PauliOperator:
    body = text.strip()
    if not body:
        raise PauliParseError('empty Pauli string')
    cut = 0
    while cut < len(body) and body[cut] not in 'IXYZ':
        cut += 1
    prefix, letters = body[:cut], body[cut:]
    if prefix not in _PHASE_OF_PREFIX:
        raise PauliParseError(f'bad phase prefix {prefix!r} in {text!r}')
    if not letters:
        raise PauliParseError(f'no qubit letters in {text!r}')
    x = z = 0
    for i, ch in enumerate(letters):
        if ch not in 'IXYZ':
            raise PauliParseError(f'illegal character {ch!r} at position {i} in {text!r}')
        code = LETTERS.index(ch)
        x |= (code & 1) << i
        z |= (code >> 1) << i
    return PauliOperator(len(letters), x, z, _PHASE_OF_PREFIX[prefix])


def format_pauli(p: PauliOperator) -> str:
    return _PREFIXES[p.phase_power] + p.letters()


def read_operators(text: str) -> list[PauliOperator]:
    """One operator per line; ``#`` starts a comment, blank lines are skipped."""
    operators = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        try:
            operators.append(parse(line))
        except PauliParseError as exc:
            raise PauliParseError(f'line {lineno}: {exc}') from exc
    return operators


def load_operators(path: str | Path) -> list[PauliOperator]:
    return read_operators(Path(path).read_text())
