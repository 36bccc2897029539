"""Multicompositions, multipartitions, dominance, and shape moves.

A *multicomposition* of ``n`` with ``r`` components is an ``r``-tuple of
compositions (tuples of non-negative integers) whose parts sum to ``n``.  A
*multipartition* additionally has weakly decreasing positive parts in every
component.  Components are 1-based throughout, matching the usual notation
``lambda = (lambda^(1), ..., lambda^(r))``.

Equality and dominance ignore trailing zero rows, but interior zero rows are
kept: the box-transfer move below can empty the first row of a component
while later rows remain occupied.

>>> lam = Multicomposition(((3, 1), (2, 2), (2, 1, 1)))
>>> lam.size, lam.r
(12, 3)
>>> lam.bar(2)
4
>>> lam.bar_row(1, 2)
6
>>> dominates(Multicomposition(((5,), (2,))), Multicomposition(((2, 2), (2, 1))))
True
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

__all__ = [
    "Multicomposition",
    "Node",
    "normalize_rows",
    "dominates",
    "strictly_dominates",
    "stack",
    "shape_after_shift",
    "shape_after_transfer",
    "shift_indices",
    "transfer_indices",
    "all_multipartitions",
]


class Node(NamedTuple):
    """A box of a Young diagram: row, column, component (all 1-based)."""

    row: int
    col: int
    comp: int


def normalize_rows(rows: tuple[int, ...]) -> tuple[int, ...]:
    """Drop trailing zeros from one component.

    >>> normalize_rows((3, 1, 0, 0))
    (3, 1)
    >>> normalize_rows((0, 2, 0))
    (0, 2)
    """
    end = len(rows)
    while end > 0 and rows[end - 1] == 0:
        end -= 1
    return rows[:end]


@dataclass(frozen=True)
class Multicomposition:
    """An ``r``-tuple of compositions, stored with trailing zeros dropped.

    >>> Multicomposition(((2, 0), (1,))).comps
    ((2,), (1,))
    >>> Multicomposition(((2, 2), (2, 1))).is_multipartition()
    True
    >>> Multicomposition(((1, 2), ())).is_multipartition()
    False
    """

    comps: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        cleaned = tuple(normalize_rows(tuple(c)) for c in self.comps)
        assert all(p >= 0 for c in cleaned for p in c), "negative part"
        object.__setattr__(self, "comps", cleaned)

    @property
    def r(self) -> int:
        return len(self.comps)

    @property
    def size(self) -> int:
        return sum(sum(c) for c in self.comps)

    def component(self, s: int) -> tuple[int, ...]:
        """The ``s``-th component, 1-based."""
        return self.comps[s - 1]

    def row_length(self, s: int, d: int) -> int:
        """Length of row ``d`` of component ``s`` (0 if absent)."""
        comp = self.comps[s - 1]
        return comp[d - 1] if 1 <= d <= len(comp) else 0

    def rows(self, s: int) -> int:
        """Number of rows of component ``s`` (written rho_s)."""
        return len(self.comps[s - 1])

    def bar(self, s: int) -> int:
        """Number of boxes in components strictly before ``s``.

        >>> Multicomposition(((3, 1), (2, 2), (2, 1, 1))).bar(3)
        8
        """
        return sum(sum(self.comps[i]) for i in range(s - 1))

    def bar_row(self, d: int, s: int) -> int:
        """Number of boxes up to and including row ``d`` of component ``s``.

        ``bar_row(0, s) == bar(s)``.
        """
        return self.bar(s) + sum(self.comps[s - 1][:d])

    def is_multipartition(self) -> bool:
        for comp in self.comps:
            if any(p <= 0 for p in comp):
                return False
            if any(comp[i] < comp[i + 1] for i in range(len(comp) - 1)):
                return False
        return True

    def nodes(self) -> Iterator[Node]:
        """Boxes in reading order: component, then row, then column."""
        for s, comp in enumerate(self.comps, start=1):
            for d, width in enumerate(comp, start=1):
                for c in range(1, width + 1):
                    yield Node(d, c, s)

    def node_of_index(self, m: int) -> Node:
        """The box holding ``m`` in the row-filled initial tableau.

        >>> Multicomposition(((5,), (2,))).node_of_index(6)
        Node(row=1, col=1, comp=2)
        """
        assert 1 <= m <= self.size
        for i, node in enumerate(self.nodes(), start=1):
            if i == m:
                return node
        raise AssertionError("unreachable")

    def to_json(self) -> list[list[int]]:
        return [list(c) for c in self.comps]

    @classmethod
    def from_json(cls, data: list[list[int]]) -> "Multicomposition":
        return cls(tuple(tuple(int(p) for p in c) for c in data))

    def pretty(self) -> str:
        """Compact display like ``((2,2),(2,1))``.

        >>> Multicomposition(((2, 2), (2, 1))).pretty()
        '((2,2),(2,1))'
        """
        parts = []
        for comp in self.comps:
            if comp:
                parts.append("(" + ",".join(str(p) for p in comp) + ")")
            else:
                parts.append("()")
        return "(" + ",".join(parts) + ")"


def _prefix_sums(shape: Multicomposition, r: int) -> list[int]:
    """All dominance prefix sums: for each component boundary and each row."""
    sums: list[int] = []
    total = 0
    for s in range(1, r + 1):
        comp = shape.comps[s - 1] if s <= shape.r else ()
        sums.append(total)  # prefix at (s, 0): boxes before component s
        for part in comp:
            total += part
            sums.append(total)
    return sums


def dominates(mu: Multicomposition, lam: Multicomposition) -> bool:
    """True iff ``mu`` dominates ``lam`` (written lam <= mu): every prefix sum
    of ``mu``, taken across components then rows, is at least the matching
    prefix sum of ``lam``.

    Both shapes must have the same number of components and the same size.

    >>> nu = Multicomposition(((5,), (2,)))
    >>> lam = Multicomposition(((2, 2), (2, 1)))
    >>> dominates(nu, lam), dominates(lam, nu)
    (True, False)
    >>> dominates(lam, lam)
    True
    """
    assert mu.r == lam.r, "component counts differ"
    assert mu.size == lam.size, "sizes differ"
    r = mu.r
    for s in range(1, r + 1):
        mu_before = mu.bar(s)
        lam_before = lam.bar(s)
        if mu_before < lam_before:
            return False
        depth = max(mu.rows(s), lam.rows(s))
        mu_run, lam_run = mu_before, lam_before
        for d in range(1, depth + 1):
            mu_run += mu.row_length(s, d)
            lam_run += lam.row_length(s, d)
            if mu_run < lam_run:
                return False
    return True


def strictly_dominates(mu: Multicomposition, lam: Multicomposition) -> bool:
    """True iff ``mu`` dominates ``lam`` and the shapes differ.

    >>> strictly_dominates(Multicomposition(((2,),)), Multicomposition(((2,),)))
    False
    """
    return mu != lam and dominates(mu, lam)


def stack(lam: Multicomposition) -> tuple[int, ...]:
    """Flatten a multicomposition into a single composition by concatenating
    the components in order.

    >>> stack(Multicomposition(((3, 1), (2, 2))))
    (3, 1, 2, 2)
    """
    out: list[int] = []
    for comp in lam.comps:
        out.extend(comp)
    return tuple(out)


def shape_after_shift(lam: Multicomposition, s: int, d: int, t: int) -> Multicomposition:
    """Shape reached by moving ``t`` boxes from row ``d+1`` up to row ``d``
    within component ``s``.

    >>> lam = Multicomposition(((3, 1), (2, 2), (2, 1, 1)))
    >>> shape_after_shift(lam, 2, 1, 2).pretty()
    '((3,1),(4),(2,1,1))'
    """
    assert (s, d, t) in shift_indices(lam), f"invalid shift index {(s, d, t)}"
    comp = list(lam.comps[s - 1])
    comp[d - 1] += t
    comp[d] -= t
    comps = list(lam.comps)
    comps[s - 1] = tuple(comp)
    return Multicomposition(tuple(comps))


def shape_after_transfer(lam: Multicomposition, s2: int) -> Multicomposition:
    """Shape reached by moving the first box of component ``s2 + 1`` to a new
    last row of component ``s2``.

    The source component keeps its remaining rows, so an interior row may
    shrink below the row after it — the result is a multicomposition, not
    necessarily a multipartition.

    >>> lam = Multicomposition(((3, 1), (2, 2), (2, 1, 1)))
    >>> shape_after_transfer(lam, 1).pretty()
    '((3,1,1),(1,2),(2,1,1))'
    """
    assert s2 in transfer_indices(lam), f"invalid transfer index {s2}"
    src = list(lam.comps[s2])
    src[0] -= 1
    dst = list(lam.comps[s2 - 1]) + [1]
    comps = list(lam.comps)
    comps[s2 - 1] = tuple(dst)
    comps[s2] = tuple(src)
    return Multicomposition(tuple(comps))


def shift_indices(lam: Multicomposition) -> list[tuple[int, int, int]]:
    """Valid ``(s, d, t)`` triples for box shifts: component ``s``, a row
    ``d`` strictly above the last row, and ``1 <= t <=`` length of row
    ``d + 1``.

    >>> shift_indices(Multicomposition(((2, 2), (2, 1))))
    [(1, 1, 1), (1, 1, 2), (2, 1, 1)]
    """
    out: list[tuple[int, int, int]] = []
    for s in range(1, lam.r + 1):
        for d in range(1, lam.rows(s)):
            for t in range(1, lam.row_length(s, d + 1) + 1):
                out.append((s, d, t))
    return out


def transfer_indices(lam: Multicomposition) -> list[int]:
    """Valid indices ``s'`` for box transfers: component ``s' + 1`` nonempty.

    >>> transfer_indices(Multicomposition(((2, 2), (2, 1))))
    [1]
    >>> transfer_indices(Multicomposition(((2,), (), (1,))))
    [2]
    """
    return [s2 for s2 in range(1, lam.r) if sum(lam.comps[s2]) > 0]


def _partitions_of(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions_of(n - first, first):
            yield (first,) + rest


def all_multipartitions(n: int, r: int) -> list[Multicomposition]:
    """All multipartitions of ``n`` with ``r`` components, in a fixed order.

    >>> [m.pretty() for m in all_multipartitions(2, 2)]
    ['((2),())', '((1,1),())', '((1),(1))', '((),(2))', '((),(1,1))']
    """

    def split(remaining: int, comps_left: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if comps_left == 1:
            for p in _partitions_of(remaining):
                yield (p,)
            return
        for here in range(remaining, -1, -1):
            for p in _partitions_of(here):
                for rest in split(remaining - here, comps_left - 1):
                    yield (p,) + rest

    return [Multicomposition(c) for c in split(n, r)]


if __name__ == "__main__":
    import doctest

    doctest.testmod()
