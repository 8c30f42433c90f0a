"""Catalog of low-weight constructions.

Each entry pairs a label ``[[n,k,d;w]]`` with a construction expression::

    GENS(XXXI, IYYY, ZIZZ)        explicit generators
    TENSOR(e1, e2)                tensor product
    POW(e, m)                     m-fold tensor power
    PAD(e, m)                     m extra qubits with single-qubit Z checks
    SURFACE(d)                    rotated surface code on a d x d lattice
    ADDLOGICAL(e, wt)             e plus some weight-wt logical operator
    [[n,k,d;w]]                   another entry of the catalog

Verification recomputes the parameters and compares them with the label.
"""
from __future__ import annotations

import enum
import hashlib
import json
import logging
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, NamedTuple

from .conf import budget, data_path
from .exceptions import (
    BudgetExceeded, CatalogError, ChecksumMismatch, CyclicReference, DimensionError, QWeightError,
)
from .pauli import PauliOperator
from .stabilizer import (
    INFINITY, StabilizerGenerators, add_generator, distance, iter_logicals, optimal_weight, pad,
    tensor_product,
)

logger = logging.getLogger(__name__)

_LABEL = re.compile(r'\[\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*;\s*(\d+)\s*\]\]')
_TOKEN = re.compile(r'\s*(\[\[[^\]]*\]\]|[A-Z]+(?=\s*\()|[-+]?i?[IXYZ]+|\d+|[(),])')


class Label(NamedTuple):
    n: int
    k: int
    d: int
    w: int

    @classmethod
    def parse(cls, text: str) -> Label:
        match = _LABEL.fullmatch(text.strip())
        if not match:
            raise CatalogError(f'bad label {text!r}')
        return cls(*(int(g) for g in match.groups()))

    @property
    def cell(self) -> tuple[int, int, int]:
        return self.n, self.k, self.d

    def __str__(self):
        return f'[[{self.n},{self.k},{self.d};{self.w}]]'


# ----------------------------------------------------------------------
# expressions


@dataclass(frozen=True)
class Node:
    op: str
    args: tuple = ()


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if not match:
            raise CatalogError(f'unexpected input at {text[pos:pos + 12]!r}')
        tokens.append(match.group(1))
        pos = match.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, expected: str | None = None) -> str:
        token = self.peek()
        if token is None or (expected is not None and token != expected):
            raise CatalogError(f'expected {expected or "more input"} in {self.text!r}, got {token!r}')
        self.pos += 1
        return token

    def integer(self) -> int:
        token = self.take()
        if not token.isdigit():
            raise CatalogError(f'expected an integer in {self.text!r}, got {token!r}')
        return int(token)

    def parse(self) -> Node:
        node = self.expr()
        if self.peek() is not None:
            raise CatalogError(f'trailing input in {self.text!r}')
        return node

    def expr(self) -> Node:
        token = self.take()
        if token.startswith('[['):
            return Node('ref', (Label.parse(token),))
        self.take('(')
        if token == 'GENS':
            strings = [self.take()]
            while self.peek() == ',':
                self.take(',')
                strings.append(self.take())
            node = Node('gens', tuple(strings))
        elif token == 'TENSOR':
            first = self.expr()
            self.take(',')
            node = Node('tensor', (first, self.expr()))
        elif token in ('POW', 'PAD', 'ADDLOGICAL'):
            inner = self.expr()
            self.take(',')
            node = Node(token.lower(), (inner, self.integer()))
        elif token == 'SURFACE':
            node = Node('surface', (self.integer(),))
        else:
            raise CatalogError(f'unknown construction {token!r}')
        self.take(')')
        return node


def parse_expression(text: str) -> Node:
    return _Parser(text).parse()


# ----------------------------------------------------------------------
# entries


@dataclass(frozen=True)
class CatalogEntry:
    label: Label
    expr: str
    optimal: bool = True
    citation: str = ''

    @property
    def node(self) -> Node:
        return parse_expression(self.expr)

    def as_dict(self) -> dict:
        return {'label': str(self.label), 'expr': self.expr, 'optimal': self.optimal, 'citation': self.citation}


class Catalog:
    def __init__(self, entries: Iterable[CatalogEntry] = ()):
        self.entries: dict[Label, CatalogEntry] = {}
        self._expanded: dict[Label, StabilizerGenerators] = {}
        for entry in entries:
            if entry.label in self.entries:
                raise CatalogError(f'duplicate entry {entry.label}')
            self.entries[entry.label] = entry

    def __iter__(self):
        return iter(self.entries.values())

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, label) -> CatalogEntry:
        if isinstance(label, str):
            label = Label.parse(label)
        try:
            return self.entries[label]
        except KeyError:
            raise CatalogError(f'no catalog entry {label}') from None

    def expand(self, entry: CatalogEntry | str) -> StabilizerGenerators:
        if not isinstance(entry, CatalogEntry):
            entry = self[entry]
        return self._expand_label(entry.label, ())

    def _expand_label(self, label: Label, active: tuple[Label, ...]) -> StabilizerGenerators:
        if label in self._expanded:
            return self._expanded[label]
        if label in active:
            chain = ' -> '.join(str(x) for x in active + (label,))
            raise CyclicReference(f'cyclic reference {chain}')
        entry = self[label]
        group = self._build(entry.node, label, active + (label,))
        if group.n != label.n:
            raise DimensionError(f'{label} expands to {group.n} qubits')
        self._expanded[label] = group
        return group

    def _build(self, node: Node, label: Label, active: tuple[Label, ...]) -> StabilizerGenerators:
        if node.op == 'ref':
            return self._expand_label(node.args[0], active)
        if node.op == 'gens':
            return StabilizerGenerators.from_strings(node.args)
        if node.op == 'tensor':
            first, second = (self._build(arg, label, active) for arg in node.args)
            return tensor_product(first, second)
        if node.op == 'pow':
            inner, m = node.args
            if m < 1:
                raise CatalogError('tensor power must be at least 1')
            base = self._build(inner, label, active)
            result = base
            for _ in range(m - 1):
                result = tensor_product(result, base)
            return result
        if node.op == 'pad':
            inner, m = node.args
            return pad(self._build(inner, label, active), m)
        if node.op == 'surface':
            return surface_code(node.args[0])
        if node.op == 'addlogical':
            inner, wt = node.args
            base = self._build(inner, label, active)
            logical = search_logical_extension(base, label, wt)
            if logical is None:
                raise CatalogError(f'no weight-{wt} logical of the base code realizes {label}')
            return add_generator(base, logical)
        raise CatalogError(f'unknown construction {node.op!r}')


# ----------------------------------------------------------------------
# builders


def surface_code(d: int) -> StabilizerGenerators:
    """Rotated surface code on a d x d grid of data qubits, row-major."""
    if d < 2:
        raise DimensionError('surface code needs d >= 2')
    n = d * d
    gens = []
    for fi in range(-1, d):
        for fj in range(-1, d):
            qubits = [
                (fi + a) * d + (fj + b)
                for a in (0, 1) for b in (0, 1)
                if 0 <= fi + a < d and 0 <= fj + b < d
            ]
            x_type = (fi + fj) % 2 == 0
            if len(qubits) == 2:
                on_rows = fi in (-1, d - 1)
                on_columns = fj in (-1, d - 1)
                if not ((x_type and on_rows) or (not x_type and on_columns)):
                    continue
            elif len(qubits) != 4:
                continue
            mask = sum(1 << q for q in qubits)
            gens.append(PauliOperator.x_type(n, mask) if x_type else PauliOperator.z_type(n, mask))
    return StabilizerGenerators(n, tuple(gens))


def builder_surface_code(d: int) -> CatalogEntry:
    surface_code(d)
    return CatalogEntry(Label(d * d, 1, d, 4), f'SURFACE({d})', True, 'rotated surface code')


def search_logical_extension(base: StabilizerGenerators, label: Label, wt: int = 4) -> PauliOperator | None:
    """First weight-``wt`` logical whose addition gives the labeled parameters."""
    if base.n != label.n or base.k != label.k + 1:
        raise DimensionError(f'base code with k={base.k} on {base.n} qubits cannot give {label}')
    tried = 0
    for logical in iter_logicals(base, wt):
        tried += 1
        extended = add_generator(base, logical)
        if optimal_weight(extended) != label.w:
            continue
        if distance(extended) == label.d:
            logger.info('%s: logical %s after %d candidates', label, logical, tried)
            return logical
    logger.warning('%s: none of %d weight-%d logicals works', label, tried, wt)
    return None


# ----------------------------------------------------------------------
# verification


class Status(enum.Enum):
    VERIFIED = 'verified'
    MISMATCH = 'mismatch'
    DOWNGRADED = 'downgraded'
    INCOMPLETE = 'incomplete'


@dataclass(frozen=True)
class VerificationReport:
    label: Label
    status: Status
    n: int | None = None
    k: int | None = None
    d: int | float | None = None
    w: int | None = None
    w_upper: int | None = None
    mismatches: tuple[str, ...] = ()
    message: str = ''
    optimal: bool = True

    @property
    def ok(self) -> bool:
        return self.status in (Status.VERIFIED, Status.DOWNGRADED)

    def as_dict(self) -> dict:
        d = self.d
        if d == INFINITY:
            d = 'inf'
        return {
            'label': str(self.label),
            'status': self.status.value,
            'n': self.n,
            'k': self.k,
            'd': d,
            'w': self.w,
            'w_upper': self.w_upper,
            'mismatches': list(self.mismatches),
            'message': self.message,
            'optimal': self.optimal,
        }


def verify_group(label: Label, group: StabilizerGenerators, optimal: bool = True) -> VerificationReport:
    mismatches = []
    notes = []
    if group.n != label.n:
        mismatches.append(f'n={group.n}')
    if group.k != label.k:
        mismatches.append(f'k={group.k}')

    try:
        d = distance(group)
    except BudgetExceeded as exc:
        d = None
        notes.append(f'distance not computed: {exc}')
    if d is not None and d != label.d:
        mismatches.append(f'd={d}')

    w_upper = max((g.weight for g in group.gens), default=0)
    try:
        w = optimal_weight(group)
    except BudgetExceeded as exc:
        w = None
        notes.append(f'W bounded by the given generators only: {exc}')
        if w_upper > label.w:
            mismatches.append(f'W<={w_upper}')
    if w is not None and w != label.w:
        mismatches.append(f'W={w}')

    if mismatches:
        status = Status.MISMATCH
    elif notes:
        status = Status.DOWNGRADED
    else:
        status = Status.VERIFIED
    return VerificationReport(
        label, status, group.n, group.k, d, w, w_upper,
        tuple(mismatches), '; '.join(notes), optimal,
    )


def verify(entry: CatalogEntry, catalog: Catalog | None = None) -> VerificationReport:
    catalog = catalog if catalog is not None else Catalog([entry])
    try:
        group = catalog.expand(entry)
    except CyclicReference as exc:
        return VerificationReport(entry.label, Status.MISMATCH, message=str(exc), optimal=entry.optimal)
    except QWeightError as exc:
        # a logical search that finds nothing leaves the entry incomplete
        status = Status.INCOMPLETE if 'ADDLOGICAL' in entry.expr else Status.MISMATCH
        return VerificationReport(entry.label, status, message=str(exc), optimal=entry.optimal)
    report = verify_group(entry.label, group, entry.optimal)
    logger.info('%s: %s', entry.label, report.status.value)
    return report


def _verify_job(args):
    entries, label = args
    catalog = Catalog(entries)
    return verify(catalog[label], catalog)


def verify_all(
    catalog: Catalog,
    jobs: int = 1,
    progress: Callable[[str], None] | None = None,
) -> list[VerificationReport]:
    entries = list(catalog)
    reports = []
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            results = executor.map(_verify_job, [(entries, e.label) for e in entries])
            for report in results:
                reports.append(report)
                if progress is not None:
                    progress(f'{report.label}: {report.status.value}')
    else:
        for entry in entries:
            report = verify(entry, catalog)
            reports.append(report)
            if progress is not None:
                progress(f'{report.label}: {report.status.value}')
    return reports


# ----------------------------------------------------------------------
# upper bounds


@dataclass
class UpperBoundTable:
    cells: dict[tuple[int, int, int], int] = field(default_factory=dict)
    sources: dict[tuple[int, int, int], Label] = field(default_factory=dict)

    def get(self, key, default=None):
        return self.cells.get(key, default)

    def __contains__(self, key):
        return key in self.cells

    def __getitem__(self, key) -> int:
        return self.cells[key]


def upper_bound_table(reports: Iterable[VerificationReport]) -> UpperBoundTable:
    """Smallest labeled w per (n, k, d) among entries that verified."""
    table = UpperBoundTable()
    for report in reports:
        if not report.ok:
            continue
        key = report.label.cell
        if key not in table.cells or report.label.w < table.cells[key]:
            table.cells[key] = report.label.w
            table.sources[key] = report.label
    return table


@dataclass(frozen=True)
class Range:
    n: int
    k: int
    d: int
    wlb: int | float
    wub: int | None

    @property
    def tight(self) -> bool:
        return self.wub is not None and self.wlb == self.wub


def joined_ranges(table, upper: UpperBoundTable) -> list[Range]:
    return [Range(n, k, d, cell.wlb, upper.get((n, k, d))) for (n, k, d), cell in table.items()]


# ----------------------------------------------------------------------
# loading


def read_catalog(text: str) -> Catalog:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CatalogError(f'catalog is not valid JSON: {exc}') from exc
    entries = []
    for record in data.get('entries', []):
        try:
            entries.append(CatalogEntry(
                Label.parse(record['label']),
                record['expr'],
                bool(record.get('optimal', True)),
                record.get('citation', ''),
            ))
        except KeyError as exc:
            raise CatalogError(f'catalog record missing {exc}') from None
    return Catalog(entries)


def load_catalog(path: str | Path | None = None, verify_checksum: bool = True) -> Catalog:
    """Read the catalog; the shipped document is checked against its recorded sha256."""
    default = data_path('CATALOG')
    path = Path(path) if path is not None else default
    raw = path.read_bytes()
    expected = budget('CATALOG_SHA256')
    if verify_checksum and expected and path.resolve() == default.resolve():
        digest = hashlib.sha256(raw).hexdigest()
        if digest != expected:
            raise ChecksumMismatch(f'{path} has sha256 {digest}, expected {expected}')
    return read_catalog(raw.decode())
