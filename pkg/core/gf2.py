"""Incremental GF(2) row space over packed integer vectors."""
from __future__ import annotations

from typing import Any, Callable, Iterable, Iterator


class XorBasis:
    """Echelon basis keyed by leading bit.

    Each row may carry a payload combined with ``combine`` whenever rows are
    XORed, so callers can track which products produced a vector.
    """

    def __init__(self, vectors: Iterable[int] = (), combine: Callable[[Any, Any], Any] | None = None):
        self._rows: dict[int, tuple[int, Any]] = {}
        self._combine = combine
        for v in vectors:
            self.insert(v)

    def __len__(self):
        return len(self._rows)

    def __iter__(self) -> Iterator[int]:
        return (row for row, _ in self._rows.values())

    @property
    def rank(self) -> int:
        return len(self._rows)

    def payloads(self) -> list[Any]:
        return [payload for _, payload in self._rows.values()]

    def reduce(self, vector: int, payload: Any = None) -> tuple[int, Any]:
        """Clear leading bits of ``vector`` until one has no pivot row.

        A zero residual means ``vector`` lies in the span.
        """
        while vector:
            row = self._rows.get(vector.bit_length() - 1)
            if row is None:
                break
            vector ^= row[0]
            if self._combine is not None:
                payload = self._combine(payload, row[1])
        return vector, payload

    def insert(self, vector: int, payload: Any = None) -> bool:
        residual, payload = self.reduce(vector, payload)
        if not residual:
            return False
        self._rows[residual.bit_length() - 1] = (residual, payload)
        return True

    def contains(self, vector: int) -> bool:
        # payloads are left alone; a membership test has none to combine
        while vector:
            row = self._rows.get(vector.bit_length() - 1)
            if row is None:
                return False
            vector ^= row[0]
        return True

    def __contains__(self, vector: int) -> bool:
        return self.contains(vector)


def rank(vectors: Iterable[int]) -> int:
    return len(XorBasis(vectors))


def span(vectors: list[int]) -> Iterator[int]:
    """Every element of the span of independent ``vectors``, zero first, in Gray-code order."""
    current = 0
    yield current
    for i in range(1, 1 << len(vectors)):
        current ^= vectors[(i & -i).bit_length() - 1]
        yield current
