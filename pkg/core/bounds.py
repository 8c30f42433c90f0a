"""Lower bounds on the optimal generator weight W_opt(n, k, d).

The table engine walks block lengths in increasing order.  Each cell is
settled by the rate rule for weight 3, by infeasibility of the plain
enumerator LP, or by scanning candidate weights w and asking whether the
weight-constrained LP family is infeasible for every admissible choice.
"""
from __future__ import annotations

import csv
import json
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from pathlib import Path
from typing import IO, Callable, Iterator

from .enumerator import build_matrices
from .exactlp import LinearProgram, feasible
from .exceptions import DimensionError, InadmissibleChoice
from .stabilizer import INFINITY

logger = logging.getLogger(__name__)

RATE_RULE = 'rate-rule'
NK_BOUND = 'nk-bound'
LP = 'lp'
NO_CODE = 'no-code'
OVERRIDE = 'override'


@dataclass(frozen=True)
class FamilyChoice:
    y: int
    parity: int
    b_single: int
    b_overlap: int


@dataclass(frozen=True)
class Cell:
    wlb: int | float
    source: str
    citation: str = ''


@dataclass
class WeightTable:
    max_n: int
    cells: dict[tuple[int, int, int], Cell] = field(default_factory=dict)

    def wlb(self, n: int, k: int, d: int) -> int | float:
        cell = self.cells.get((n, k, d))
        return INFINITY if cell is None else cell.wlb

    def set(self, n: int, k: int, d: int, wlb, source: str, citation: str = ''):
        self.cells[(n, k, d)] = Cell(wlb, source, citation)

    def __getitem__(self, key) -> Cell:
        return self.cells[key]

    def __contains__(self, key):
        return key in self.cells

    def __iter__(self) -> Iterator[tuple[int, int, int]]:
        return iter(sorted(self.cells))

    def items(self):
        return [(key, self.cells[key]) for key in sorted(self.cells)]

    def finite_items(self):
        return [(key, cell) for key, cell in self.items() if cell.wlb != INFINITY]


# ----------------------------------------------------------------------
# analytic bounds


def nk_lower_bound(n: int, k: int) -> int:
    """ceil(2n / (n - k)) for codes with k >= 1 and d >= 2."""
    if not 1 <= k < n:
        raise DimensionError(f'need 1 <= k < n, got n={n}, k={k}')
    return -(-2 * n // (n - k))


def weight3_rate_rule(n: int, k: int, d: int) -> bool:
    """True when weight 3 is not excluded: d = 2 and k/n <= 1/4."""
    return d == 2 and 4 * k <= n


# ----------------------------------------------------------------------
# LP families


def standard_lp(n: int, k: int, d: int) -> LinearProgram:
    """Enumerator LP in A_1..A_n with A_0 = 1 moved to the right-hand side.

    Rows are scaled by 2^(n-k) so every coefficient is an integer.
    """
    if n < 1 or not 0 <= k <= n or d < 1:
        raise DimensionError(f'bad parameters n={n}, k={k}, d={d}')
    plain, signed = build_matrices(n)
    scale = 2 ** (n - k)
    lp = LinearProgram(n)
    for i in range(n + 1):
        coefficients = [plain[i, j] - (scale if i == j else 0) for j in range(1, n + 1)]
        rhs = (scale if i == 0 else 0) - plain[i, 0]
        if i < d:
            lp.add_equality(coefficients, rhs)
        else:
            lp.add_at_least(coefficients, rhs)
    for i in range(n + 1):
        lp.add_at_least([signed[i, j] for j in range(1, n + 1)], -signed[i, 0])
    return lp


def prefix_row(n: int, upto: int) -> list[int]:
    """Indicator coefficients of A_1 + ... + A_upto."""
    return [1 if j <= upto else 0 for j in range(1, n + 1)]


def check_choice(n: int, k: int, w: int, choice: FamilyChoice):
    low = max(1, 2 * n - (w - 1) * (n - k))
    if not low <= choice.y <= n - k:
        raise InadmissibleChoice(f'y={choice.y} outside [{low}, {n - k}] for w={w}')
    if w % 2 == 1 and choice.parity != 1:
        raise InadmissibleChoice('odd w forces parity 1')
    if w % 2 == 0 and choice.y == n - k and choice.parity != 0:
        raise InadmissibleChoice('even w with every generator of weight w forces parity 0')
    if choice.parity not in (0, 1) or choice.b_single not in (0, 1) or choice.b_overlap not in (0, 1):
        raise InadmissibleChoice(f'flags must be 0 or 1: {choice}')


def growth_count(n: int, k: int, w: int, y: int, upto: int) -> int:
    """Products of generators whose weight bound p(w-1) + qw stays within ``upto``.

    Counts the identity; p of the n-k-y lighter generators and q of the y
    generators of weight exactly w.
    """
    light = n - k - y
    return sum(
        comb(light, p) * comb(y, q)
        for p in range(light + 1)
        for q in range(y + 1)
        if p * (w - 1) + q * w <= upto
    )


def weight_lp(n: int, k: int, d: int, w: int, choice: FamilyChoice) -> LinearProgram:
    check_choice(n, k, w, choice)
    r = n - k
    lp = standard_lp(n, k, d)
    # A_w >= y
    lp.add_at_least([1 if j == w else 0 for j in range(1, n + 1)], choice.y)
    # A_0 + ... + A_{w-1} <= 2^(n-k-y)
    lp.add_at_most(prefix_row(n, w - 1), 2 ** (r - choice.y) - 1)
    # cumulative growth
    for upto in range(w - 1, n):
        lp.add_at_least(prefix_row(n, upto), growth_count(n, k, w, choice.y, upto) - 1)
    # even-weight mass
    lp.add_equality([1 if j % 2 == 0 else 0 for j in range(1, n + 1)], 2 ** (r - choice.parity) - 1)
    if choice.b_single:
        lp.add_equality([1 if j == 1 else 0 for j in range(1, n + 1)], 0)
    if choice.b_overlap:
        lp.add_at_least(prefix_row(n, min(2 * w - 2, n)), 2 * r - 1)
    return lp


def coarse_growth_rows(lp: LinearProgram, n: int, k: int, w: int):
    """sum_{i <= Cw} A_i >= sum_{c=1..C} C(n-k, c) for C = 1 .. floor(n/w)."""
    total = 0
    for big_c in range(1, n // w + 1):
        total += comb(n - k, big_c)
        lp.add_at_least(prefix_row(n, min(big_c * w, n)), total)
    return lp


# ----------------------------------------------------------------------
# admissible choices


def r_dw(n: int, d: int, w: int, table: WeightTable) -> Fraction:
    """Best rate k'/n' among smaller cells with some d' >= d and W_LB <= w."""
    best = Fraction(0)
    for (n2, k2, d2), cell in table.cells.items():
        if n2 <= n - 1 and d2 >= d and k2 >= 1 and cell.wlb <= w:
            rate = Fraction(k2, n2)
            if rate > best:
                best = rate
    return best


def admissible_choices(n: int, k: int, d: int, w: int, table: WeightTable) -> Iterator[FamilyChoice]:
    b_single = int(w < table.wlb(n - 1, k, d))
    b_overlap = int(r_dw(n, d, w, table) < Fraction(k, n))
    r = n - k
    for y in range(max(1, 2 * n - (w - 1) * r), r + 1):
        for parity in (0, 1):
            if parity == 0 and w % 2 == 1:
                continue
            if parity == 1 and w % 2 == 0 and y == r:
                continue
            yield FamilyChoice(y, parity, b_single, b_overlap)


def excluded(n: int, k: int, d: int, w: int, table: WeightTable) -> bool:
    """True when no admissible choice leaves the weight LP feasible."""
    for choice in admissible_choices(n, k, d, w, table):
        if feasible(weight_lp(n, k, d, w, choice)).feasible:
            return False
    return True


@dataclass(frozen=True)
class WeightVerdict:
    feasible: bool
    reason: str = ''

    def __str__(self):
        return 'feasible' if self.feasible else f'infeasible ({self.reason})'


def check_weight(n: int, k: int, d: int, w: int, table: WeightTable) -> WeightVerdict:
    """Whether a code with W = w survives every test the table engine applies.

    ``table`` must hold the settled cells of every block length below n.
    """
    if not 1 <= k < n or d < 2 or not 1 <= w <= n:
        raise DimensionError(f'bad parameters n={n}, k={k}, d={d}, w={w}')
    if not feasible(standard_lp(n, k, d)).feasible:
        return WeightVerdict(False, f'no [[{n},{k},{d}]] code')
    if w < nk_lower_bound(n, k):
        return WeightVerdict(False, f'w below ceil(2n/(n-k)) = {nk_lower_bound(n, k)}')
    if w == 3:
        if weight3_rate_rule(n, k, d):
            return WeightVerdict(True)
        return WeightVerdict(False, 'weight 3 needs d = 2 and k/n <= 1/4')
    if excluded(n, k, d, w, table):
        return WeightVerdict(False, f'no code with W = {w}')
    return WeightVerdict(True)


# ----------------------------------------------------------------------
# table engine


def _settle_cell(n: int, k: int, d: int, table: WeightTable) -> tuple[int | float, str, bool]:
    """(wlb, source, plain LP infeasible) for one cell, given all smaller n."""
    if weight3_rate_rule(n, k, d):
        return 3, RATE_RULE, False
    if not feasible(standard_lp(n, k, d)).feasible:
        return INFINITY, NO_CODE, True
    start = max(4, nk_lower_bound(n, k))
    for w in range(start, n + 1):
        if not excluded(n, k, d, w, table):
            if w > start:
                source = LP
            elif start > 4:
                source = NK_BOUND
            else:
                source = RATE_RULE
            return w, source, False
    return INFINITY, NO_CODE, False


def _settle_cell_job(args):
    n, k, d, cells, max_n = args
    return (n, k, d), _settle_cell(n, k, d, WeightTable(max_n, cells))


def compute_table(
    max_n: int,
    jobs: int = 1,
    progress: Callable[[str], None] | None = None,
) -> WeightTable:
    """Fill W_LB(n, k, d) for 4 <= n <= max_n, 2 <= d <= (n+1)//2, 1 <= k <= n."""
    if max_n < 4:
        raise DimensionError('the table starts at n = 4')
    table = WeightTable(max_n)
    executor = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        for n in range(4, max_n + 1):
            if executor is None:
                _fill_block(table, n)
            else:
                _fill_block_parallel(table, n, executor)
            message = f'n={n}: {sum(1 for key in table.cells if key[0] == n)} cells'
            logger.info(message)
            if progress is not None:
                progress(message)
    finally:
        if executor is not None:
            executor.shutdown()
    return table


def _fill_block(table: WeightTable, n: int):
    for d in range(2, (n + 1) // 2 + 1):
        for k in range(1, n + 1):
            wlb, source, no_code = _settle_cell(n, k, d, table)
            if no_code:
                for kappa in range(k, n + 1):
                    table.set(n, kappa, d, INFINITY, NO_CODE)
                break
            table.set(n, k, d, wlb, source)


def _fill_block_parallel(table: WeightTable, n: int, executor: ProcessPoolExecutor):
    # Cells of one block length read only smaller block lengths.
    snapshot = dict(table.cells)
    work = [(n, k, d, snapshot, table.max_n) for d in range(2, (n + 1) // 2 + 1) for k in range(1, n + 1)]
    results = dict(executor.map(_settle_cell_job, work))
    for d in range(2, (n + 1) // 2 + 1):
        for k in range(1, n + 1):
            wlb, source, no_code = results[(n, k, d)]
            if no_code:
                for kappa in range(k, n + 1):
                    table.set(n, kappa, d, INFINITY, NO_CODE)
                break
            table.set(n, k, d, wlb, source)


# ----------------------------------------------------------------------
# overrides


@dataclass(frozen=True)
class Override:
    n: int
    k: int
    d: int
    wlb: int
    citation: str


def read_overrides(text: str) -> list[Override]:
    """Lines ``n k d wlb citation``; ``#`` starts a comment."""
    overrides = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        parts = line.split(None, 4)
        if len(parts) < 5:
            raise ValueError(f'line {lineno}: expected "n k d wlb citation"')
        try:
            n, k, d, wlb = (int(p) for p in parts[:4])
        except ValueError as exc:
            raise ValueError(f'line {lineno}: {exc}') from exc
        overrides.append(Override(n, k, d, wlb, parts[4]))
    return overrides


def load_overrides(path: str | Path) -> list[Override]:
    return read_overrides(Path(path).read_text())


def apply_overrides(table: WeightTable, overrides: list[Override]) -> WeightTable:
    """Raise cells to their documented values; a cell is never lowered."""
    for item in overrides:
        if item.n > table.max_n:
            continue
        if item.wlb > table.wlb(item.n, item.k, item.d):
            table.set(item.n, item.k, item.d, item.wlb, OVERRIDE, item.citation)
        else:
            logger.warning('override %s does not raise the computed cell', item)
    return table


# ----------------------------------------------------------------------
# export


def _fmt(value) -> int | str:
    if value is None:
        return ''
    return 'inf' if value == INFINITY else int(value)


def table_rows(table: WeightTable, upper: dict | None = None) -> list[dict]:
    rows = []
    for (n, k, d), cell in table.items():
        row = {'n': n, 'k': k, 'd': d, 'wlb': _fmt(cell.wlb), 'source': cell.source}
        if upper is not None:
            row['wub'] = _fmt(upper.get((n, k, d)))
        if cell.citation:
            row['citation'] = cell.citation
        rows.append(row)
    return rows


def write_csv(table: WeightTable, stream: IO[str], upper: dict | None = None):
    columns = ['n', 'k', 'd', 'wlb', 'source'] + (['wub'] if upper is not None else [])
    writer = csv.writer(stream)
    writer.writerow(columns)
    for row in table_rows(table, upper):
        writer.writerow([row[c] for c in columns])


def write_json(table: WeightTable, stream: IO[str], upper: dict | None = None):
    json.dump({'max_n': table.max_n, 'cells': table_rows(table, upper)}, stream, indent=2)
    stream.write('\n')


def read_json(stream: IO[str]) -> WeightTable:
    data = json.load(stream)
    table = WeightTable(data['max_n'])
    for row in data['cells']:
        wlb = INFINITY if row['wlb'] == 'inf' else int(row['wlb'])
        table.set(row['n'], row['k'], row['d'], wlb, row['source'], row.get('citation', ''))
    return table


def is_infinite(value) -> bool:
    return value == INFINITY or (isinstance(value, float) and math.isinf(value))
