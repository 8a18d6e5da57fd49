"""Symbolic names for the algebra generators: Q_i and the maximal minors."""

from __future__ import annotations


class GeneratorLabel:
    """Either Q(i), the i-th entry of X*y, or Minor(rows), a maximal minor.

    Labels are the element type of the generator poset; the canonical sort
    (all Q's by index, then minors by lexicographic row set) is a linear
    extension of that partial order.
    """

    __slots__ = ("q_index", "rows", "_hash")

    def __init__(self, q_index: int | None = None, rows: tuple[int, ...] | None = None):
        if (q_index is None) == (rows is None):
            raise ValueError("a label is exactly one of Q(i) or Minor(rows)")
        self.q_index = q_index
        self.rows = rows
        self._hash = hash((q_index, rows))

    @property
    def is_q(self) -> bool:
        return self.q_index is not None

    @property
    def text(self) -> str:
        if self.is_q:
            return f"Q{self.q_index}"
        return "[" + ",".join(str(r) for r in self.rows) + "]"

    @property
    def sort_key(self) -> tuple:
        if self.is_q:
            return (0, (self.q_index,))
        return (1, self.rows)

    def __eq__(self, other):
        return (
            isinstance(other, GeneratorLabel)
            and other.q_index == self.q_index
            and other.rows == self.rows
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return self.text


def Q(i: int) -> GeneratorLabel:
    return GeneratorLabel(q_index=i)


def M(rows) -> GeneratorLabel:
    rows = tuple(rows)
    if any(rows[i] >= rows[i + 1] for i in range(len(rows) - 1)):
        raise ValueError(f"minor rows {rows} not strictly increasing")
    return GeneratorLabel(rows=rows)


def canonical_labels(m: int, n: int) -> list[GeneratorLabel]:
    """Q1..Qm followed by the minors in lexicographic row-set order."""
    import itertools

    labels = [Q(i) for i in range(1, m + 1)]
    labels.extend(M(rows) for rows in itertools.combinations(range(1, m + 1), n))
    return labels
