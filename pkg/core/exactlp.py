"""Exact rational feasibility oracle.

Phase-1 simplex over ``fractions.Fraction`` with Bland's smallest-index rule.
Every answer is re-checked by substitution before it is returned: a feasible
result carries a witness, an infeasible one a Farkas certificate.
"""
from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import IO, Iterable, Sequence

from .exceptions import DimensionError, SolverError

logger = logging.getLogger(__name__)


class Relation(enum.Enum):
    EQ = '='
    GE = '>='
    LE = '<='

    def flipped(self) -> Relation:
        return {Relation.EQ: Relation.EQ, Relation.GE: Relation.LE, Relation.LE: Relation.GE}[self]


class Status(enum.Enum):
    FEASIBLE = 'feasible'
    INFEASIBLE = 'infeasible'


@dataclass(frozen=True)
class Row:
    coefficients: tuple[Fraction, ...]
    relation: Relation
    rhs: Fraction

    def value(self, x: Sequence[Fraction]) -> Fraction:
        return sum((a * v for a, v in zip(self.coefficients, x) if a), Fraction(0))

    def holds(self, x: Sequence[Fraction]) -> bool:
        lhs = self.value(x)
        if self.relation is Relation.EQ:
            return lhs == self.rhs
        if self.relation is Relation.GE:
            return lhs >= self.rhs
        return lhs <= self.rhs

    def upper_form(self) -> tuple[tuple[Fraction, ...], Fraction]:
        """Coefficients and rhs with GE rows negated into ``<=`` form."""
        if self.relation is Relation.GE:
            return tuple(-a for a in self.coefficients), -self.rhs
        return self.coefficients, self.rhs


class LinearProgram:
    """Rows over nonnegative variables ``x_0 .. x_{num_vars-1}``."""

    def __init__(self, num_vars: int, rows: Iterable[Row] = ()):
        if num_vars < 0:
            raise DimensionError('negative variable count')
        self.num_vars = num_vars
        self.rows: list[Row] = []
        for row in rows:
            self.add_row(row.coefficients, row.relation, row.rhs)

    def add_row(self, coefficients: Iterable, relation: Relation, rhs) -> Row:
        coefficients = tuple(Fraction(a) for a in coefficients)
        if len(coefficients) != self.num_vars:
            raise DimensionError(f'row of length {len(coefficients)} for {self.num_vars} variables')
        row = Row(coefficients, relation, Fraction(rhs))
        self.rows.append(row)
        return row

    def add_equality(self, coefficients, rhs) -> Row:
        return self.add_row(coefficients, Relation.EQ, rhs)

    def add_at_least(self, coefficients, rhs) -> Row:
        return self.add_row(coefficients, Relation.GE, rhs)

    def add_at_most(self, coefficients, rhs) -> Row:
        return self.add_row(coefficients, Relation.LE, rhs)

    def copy(self) -> LinearProgram:
        return LinearProgram(self.num_vars, self.rows)

    def __len__(self):
        return len(self.rows)

    def __repr__(self):
        return f'<LinearProgram {self.num_vars} vars, {len(self.rows)} rows>'


@dataclass(frozen=True)
class FeasibilityResult:
    status: Status
    witness: tuple[Fraction, ...] | None = None
    certificate: tuple[Fraction, ...] | None = None
    pivots: int = 0

    @property
    def feasible(self) -> bool:
        return self.status is Status.FEASIBLE


# ----------------------------------------------------------------------
# checks


def verify_witness(lp: LinearProgram, witness: Sequence) -> bool:
    if len(witness) != lp.num_vars:
        raise DimensionError(f'witness of length {len(witness)} for {lp.num_vars} variables')
    x = [Fraction(v) for v in witness]
    return all(v >= 0 for v in x) and all(row.holds(x) for row in lp.rows)


def verify_certificate(lp: LinearProgram, certificate: Sequence) -> bool:
    """Check a Farkas certificate.

    With every row written as ``a x <= b`` (GE rows negated), the multipliers
    must be nonnegative on inequality rows, the combined coefficients
    nonnegative and the combined rhs negative: then ``0 <= lambda A x <=
    lambda b < 0`` for any ``x >= 0``.
    """
    if len(certificate) != len(lp.rows):
        raise DimensionError(f'certificate of length {len(certificate)} for {len(lp.rows)} rows')
    lam = [Fraction(v) for v in certificate]
    combined = [Fraction(0)] * lp.num_vars
    bound = Fraction(0)
    for mult, row in zip(lam, lp.rows):
        if row.relation is not Relation.EQ and mult < 0:
            return False
        if not mult:
            continue
        coefficients, rhs = row.upper_form()
        for j, a in enumerate(coefficients):
            if a:
                combined[j] += mult * a
        bound += mult * rhs
    return all(c >= 0 for c in combined) and bound < 0


# ----------------------------------------------------------------------
# solver


class _Tableau:
    def __init__(self, lp: LinearProgram):
        self.lp = lp
        rows = lp.rows
        nv = lp.num_vars
        self.signs = [-1 if row.rhs < 0 else 1 for row in rows]
        relations = [row.relation.flipped() if s < 0 else row.relation for row, s in zip(rows, self.signs)]

        ncols = nv
        slack = {}
        for i, rel in enumerate(relations):
            if rel is not Relation.EQ:
                slack[i] = ncols
                ncols += 1
        artificial = {}
        for i, rel in enumerate(relations):
            if rel is not Relation.LE:
                artificial[i] = ncols
                ncols += 1
        self.ncols = ncols
        self.artificial = artificial

        zero = Fraction(0)
        self.T: list[list[Fraction]] = []
        self.b: list[Fraction] = []
        self.basis: list[int] = []
        self.initial: list[int] = []
        for i, (row, s, rel) in enumerate(zip(rows, self.signs, relations)):
            line = [s * a if a else zero for a in row.coefficients] + [zero] * (ncols - nv)
            if rel is Relation.LE:
                line[slack[i]] = Fraction(1)
            elif rel is Relation.GE:
                line[slack[i]] = Fraction(-1)
            if i in artificial:
                line[artificial[i]] = Fraction(1)
            start = artificial.get(i, slack.get(i))
            self.T.append(line)
            self.b.append(s * row.rhs)
            self.basis.append(start)
            self.initial.append(start)

        self.cost = [zero] * ncols
        for col in artificial.values():
            self.cost[col] = Fraction(1)
        self.d = list(self.cost)
        self.objective = zero
        for i in artificial:
            for j, v in enumerate(self.T[i]):
                if v:
                    self.d[j] -= v
            self.objective += self.b[i]
        self.pivots = 0

    def pivot(self, r: int, j: int):
        pivot_row = self.T[r]
        piv = pivot_row[j]
        pivot_row = [v / piv if v else v for v in pivot_row]
        self.T[r] = pivot_row
        self.b[r] /= piv
        nonzero = [c for c, v in enumerate(pivot_row) if v]
        for i, line in enumerate(self.T):
            if i == r:
                continue
            f = line[j]
            if f:
                for c in nonzero:
                    line[c] -= f * pivot_row[c]
                self.b[i] -= f * self.b[r]
        f = self.d[j]
        if f:
            for c in nonzero:
                self.d[c] -= f * pivot_row[c]
            self.objective += f * self.b[r]
        self.basis[r] = j
        self.pivots += 1

    def run(self):
        while True:
            entering = next((j for j, v in enumerate(self.d) if v < 0), None)
            if entering is None:
                return
            leaving = None
            best = None
            for i, line in enumerate(self.T):
                a = line[entering]
                if a > 0:
                    ratio = self.b[i] / a
                    if best is None or ratio < best or (ratio == best and self.basis[i] < self.basis[leaving]):
                        best, leaving = ratio, i
            if leaving is None:
                raise SolverError('phase-1 objective unbounded below')
            self.pivot(leaving, entering)

    def witness(self) -> tuple[Fraction, ...]:
        x = [Fraction(0)] * self.lp.num_vars
        for i, col in enumerate(self.basis):
            if col < self.lp.num_vars:
                x[col] = self.b[i]
        return tuple(x)

    def certificate(self) -> tuple[Fraction, ...]:
        lam = []
        for i, row in enumerate(self.lp.rows):
            col = self.initial[i]
            y = self.cost[col] - self.d[col]
            u = y * self.signs[i]
            lam.append(u if row.relation is Relation.GE else -u)
        return tuple(lam)


def feasible(lp: LinearProgram) -> FeasibilityResult:
    tableau = _Tableau(lp)
    tableau.run()
    if tableau.objective == 0:
        witness = tableau.witness()
        if not verify_witness(lp, witness):
            raise SolverError('simplex witness failed substitution check')
        result = FeasibilityResult(Status.FEASIBLE, witness=witness, pivots=tableau.pivots)
    else:
        certificate = tableau.certificate()
        if not verify_certificate(lp, certificate):
            raise SolverError('simplex certificate failed Farkas check')
        result = FeasibilityResult(Status.INFEASIBLE, certificate=certificate, pivots=tableau.pivots)
    logger.debug('%r: %s after %d pivots', lp, result.status.value, result.pivots)
    return result


# ----------------------------------------------------------------------
# audit text format


def dump(lp: LinearProgram, stream: IO[str]):
    """One row per line: coefficients, relation, rhs, all as exact fractions."""
    stream.write(f'# {lp.num_vars} variables, {len(lp.rows)} rows\n')
    stream.write(f'vars {lp.num_vars}\n')
    for row in lp.rows:
        stream.write(' '.join(str(a) for a in row.coefficients))
        stream.write(f' {row.relation.value} {row.rhs}\n')


def load(stream: IO[str]) -> LinearProgram:
    lp = None
    for lineno, raw in enumerate(stream, start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == 'vars':
            lp = LinearProgram(int(tokens[1]))
            continue
        if lp is None:
            raise DimensionError(f'line {lineno}: row before the vars header')
        try:
            relation = Relation(tokens[-2])
            lp.add_row((Fraction(t) for t in tokens[:-2]), relation, Fraction(tokens[-1]))
        except (ValueError, IndexError) as exc:
            raise DimensionError(f'line {lineno}: {exc}') from exc
    if lp is None:
        raise DimensionError('missing vars header')
    return lp
