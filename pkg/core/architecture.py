"""Connectivity-aware weight bounds.

Checks are placed as radius-r balls around chosen qubits of a device graph.
The support of a product of checks is contained in the union of their balls,
which gives cumulative lower bounds on the low-weight part of the enumerator.
"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from math import comb
from pathlib import Path
from typing import Iterable

import networkx as nx

from .bounds import coarse_growth_rows, prefix_row, standard_lp
from .conf import budget, data_path
from .exactlp import LinearProgram, feasible
from .exceptions import BudgetExceeded, DimensionError, GraphParseError
from .pauli import QubitSet
from .stabilizer import INFINITY

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConnectivityGraph:
    num_qubits: int
    edges: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        for u, v in self.edges:
            if u == v:
                raise GraphParseError(f'self-loop on qubit {u}')
            if not (0 <= u < self.num_qubits and 0 <= v < self.num_qubits):
                raise GraphParseError(f'edge ({u}, {v}) outside {self.num_qubits} qubits')

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], num_qubits: int | None = None) -> ConnectivityGraph:
        normalized = frozenset((min(u, v), max(u, v)) for u, v in edges)
        if num_qubits is None:
            num_qubits = 1 + max((v for _, v in normalized), default=-1)
        return cls(num_qubits, normalized)

    @cached_property
    def graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.num_qubits))
        g.add_edges_from(self.edges)
        return g

    def __len__(self):
        return self.num_qubits


def read_graph(text: str) -> ConnectivityGraph:
    """Edge list, one ``u v`` pair per line; ``#`` starts a comment."""
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(f'line {lineno}: expected two qubit indices, got {line!r}')
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f'line {lineno}: qubit indices must be integers') from None
        if u < 0 or v < 0:
            raise GraphParseError(f'line {lineno}: negative qubit index')
        if u == v:
            raise GraphParseError(f'line {lineno}: self-loop on qubit {u}')
        edges.append((u, v))
    return ConnectivityGraph.from_edges(edges)


def load_graph(path: str | Path) -> ConnectivityGraph:
    return read_graph(Path(path).read_text())


def eagle_graph() -> ConnectivityGraph:
    return load_graph(data_path('EAGLE_GRAPH'))


def read_centers(text: str) -> list[int]:
    centers = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        try:
            centers.append(int(line))
        except ValueError:
            raise GraphParseError(f'line {lineno}: expected a qubit index, got {line!r}') from None
    return centers


def load_centers(path: str | Path) -> list[int]:
    return read_centers(Path(path).read_text())


def default_eagle_centers() -> list[int]:
    return load_centers(data_path('EAGLE_CENTERS'))


# ----------------------------------------------------------------------
# placements


def ball(graph: ConnectivityGraph, center: int, r: int) -> QubitSet:
    if not 0 <= center < graph.num_qubits:
        raise DimensionError(f'center {center} outside {graph.num_qubits} qubits')
    if r < 0:
        raise DimensionError('radius must be nonnegative')
    reached = nx.single_source_shortest_path_length(graph.graph, center, cutoff=r)
    return QubitSet.of(reached)


@dataclass(frozen=True)
class CheckPlacement:
    graph: ConnectivityGraph
    centers: tuple[int, ...]
    radius: int
    supports: tuple[QubitSet, ...] = field(default=())

    @property
    def masks(self) -> list[int]:
        return [s.mask for s in self.supports]

    @property
    def max_support(self) -> int:
        return max((len(s) for s in self.supports), default=0)


def place_checks(graph: ConnectivityGraph, centers: Iterable[int], r: int) -> CheckPlacement:
    centers = tuple(centers)
    supports = tuple(ball(graph, c, r) for c in centers)
    return CheckPlacement(graph, centers, r, supports)


@dataclass(frozen=True)
class UbHistogram:
    """Cumulative counts of nonempty check subsets by support-union size."""

    counts: dict[int, int]
    capped: int | None = None

    def count_at_most(self, size: int) -> int:
        best = 0
        for key, value in self.counts.items():
            if key <= size:
                best = max(best, value)
        return best

    def __bool__(self):
        return bool(self.counts)


def _subtree_size(remaining: int, room: int | None) -> int:
    """Subsets of ``remaining`` further checks, at most ``room`` of them."""
    if room is None or room >= remaining:
        return 2 ** remaining
    return sum(comb(remaining, t) for t in range(room + 1))


def ub_histogram(placement: CheckPlacement, cap: int | None = None) -> UbHistogram:
    """Depth-first walk over check subsets carrying the union bitmask.

    Once the remaining checks add no new qubit, the whole subtree shares the
    current union size and is counted in one step.
    """
    masks = placement.masks
    m = len(masks)
    limit = budget('HISTOGRAM_MAX_CENTERS')
    if cap is None and m > limit:
        raise BudgetExceeded(f'{m} centers exceed the histogram budget {limit}; pass a subset-size cap')
    if cap is not None and cap < 1:
        raise DimensionError('subset-size cap must be positive')

    suffix = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        suffix[i] = suffix[i + 1] | masks[i]

    sizes: Counter[int] = Counter()
    # (next index, union, chosen)
    stack = [(j + 1, masks[j], 1) for j in range(m - 1, -1, -1)]
    while stack:
        nxt, union, chosen = stack.pop()
        room = None if cap is None else cap - chosen
        if not suffix[nxt] & ~union:
            sizes[union.bit_count()] += _subtree_size(m - nxt, room)
            continue
        sizes[union.bit_count()] += 1
        if room == 0:
            continue
        for j in range(m - 1, nxt - 1, -1):
            stack.append((j + 1, union | masks[j], chosen + 1))

    counts = {}
    running = 0
    for size in sorted(sizes):
        running += sizes[size]
        counts[size] = running
    logger.debug('histogram over %d centers (cap %s): %d subsets', m, cap, running)
    return UbHistogram(counts, cap)


# ----------------------------------------------------------------------
# LPs


def geometry_lp(n: int, k: int, d: int, hist: UbHistogram, max_support: int | None = None) -> LinearProgram:
    """standard_lp plus one cumulative row per histogram size.

    With ``max_support`` the coarse growth rows for that check weight are
    added as well.
    """
    lp = standard_lp(n, k, d)
    for size, count in sorted(hist.counts.items()):
        lp.add_at_least(prefix_row(n, min(size, n)), count)
    if max_support:
        coarse_growth_rows(lp, n, k, max_support)
    return lp


def radius_feasible(graph, centers, n, k, d, r, cap=None) -> bool:
    placement = place_checks(graph, centers, r)
    hist = ub_histogram(placement, cap)
    result = feasible(geometry_lp(n, k, d, hist, placement.max_support))
    logger.info('radius %d: %s', r, result.status.value)
    return result.feasible


def min_radius(
    graph: ConnectivityGraph,
    centers: Iterable[int],
    n: int,
    k: int,
    d: int,
    r_max: int,
    cap: int | None = None,
) -> int | None:
    """Smallest radius at which the geometry LP becomes feasible, or None.

    Radii are tried in increasing order. A verdict that flips back to
    infeasible at r_max is logged as a warning.
    """
    centers = list(centers)
    if len(centers) != n - k:
        raise DimensionError(f'{len(centers)} centers for {n - k} checks')
    if r_max < 0:
        raise DimensionError('r_max must be nonnegative')
    for r in range(r_max + 1):
        if radius_feasible(graph, centers, n, k, d, r, cap):
            if r < r_max and not radius_feasible(graph, centers, n, k, d, r_max, cap):
                logger.warning('geometry LP feasible at r=%d but not at r=%d; not monotone', r, r_max)
            return r
    return None


def radius_profile(graph, centers, n, k, d, radii: Iterable[int], cap=None) -> list[tuple[int, bool]]:
    centers = list(centers)
    if len(centers) != n - k:
        raise DimensionError(f'{len(centers)} centers for {n - k} checks')
    return [(r, radius_feasible(graph, centers, n, k, d, r, cap)) for r in radii]


def structure_agnostic_weight_lb(n: int, k: int, d: int) -> int | float:
    """Smallest w whose coarse growth rows keep the enumerator LP feasible."""
    if k < 1:
        raise DimensionError('need k >= 1')

    def ok(w):
        lp = coarse_growth_rows(standard_lp(n, k, d), n, k, w)
        verdict = feasible(lp).feasible
        logger.info('coarse rows w=%d: %s', w, 'feasible' if verdict else 'infeasible')
        return verdict

    if not ok(n):
        return INFINITY
    lo, hi = 1, n
    while lo < hi:
        mid = (lo + hi) // 2
        if ok(mid):
            hi = mid
        else:
            lo = mid + 1
    return lo


def radius_for_weight(graph: ConnectivityGraph, w: int | float, centers: Iterable[int] | None = None) -> int | None:
    """Smallest r at which some ball around a center holds at least w qubits.

    Any check of weight w placed on the device needs at least this radius.
    Returns None when no ball ever gets that large.
    """
    centers = list(range(graph.num_qubits)) if centers is None else list(centers)
    if w == INFINITY or not centers:
        return None
    lengths = [nx.single_source_shortest_path_length(graph.graph, c) for c in centers]
    for r in range(graph.num_qubits):
        if max(sum(1 for dist in lens.values() if dist <= r) for lens in lengths) >= w:
            return r
    return None
