"""Tableaux on multicomposition shapes: standard, row-standard, and typed.

A :class:`Tableau` fills the boxes of a multicomposition with the integers
``1..n``; a :class:`TypedTableau` fills them with pairs ``(i, k)`` meaning
"row ``i`` of component ``k``" of a second shape (its *type*).  Typed entries
are ordered component-first:

    (i, k) <= (i', k')   iff   k < k', or k = k' and i <= i'.

The bridge between the two is :func:`lambda_of`: a bijective tableau ``t``
of shape ``nu`` and a type shape ``lam`` give the typed tableau whose entry
at a box ``b`` records which row of ``lam``'s row-filled tableau contains
``t(b)``.

>>> nu = Multicomposition(((5,), (2,)))
>>> lam = Multicomposition(((2, 2), (2, 1)))
>>> len(enumerate_standard(nu))
21
>>> len(enumerate_semistandard(nu, lam))
2
"""

from __future__ import annotations

from dataclasses import dataclass

from .perms import Perm, identity, is_perm
from .shapes import Multicomposition, Node

__all__ = [
    "Tableau",
    "TypedTableau",
    "initial_tableau",
    "initial_typed",
    "entry_le",
    "entry_lt",
    "is_row_standard",
    "is_standard",
    "enumerate_standard",
    "enumerate_semistandard",
    "d_of",
    "tableau_from_d",
    "lambda_of",
    "stack_typed",
    "standard_with_type",
    "transport_tableau",
]

Entry = tuple[int, int]


@dataclass(frozen=True)
class Tableau:
    """A filling of a multicomposition by integers, stored row by row.

    >>> t = initial_tableau(Multicomposition(((2,), (1,))))
    >>> t.rows
    (((1, 2),), ((3,),))
    """

    shape: Multicomposition
    rows: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self) -> None:
        assert len(self.rows) == self.shape.r
        for s in range(1, self.shape.r + 1):
            comp = self.shape.component(s)
            assert len(self.rows[s - 1]) == len(comp)
            for d, row in enumerate(self.rows[s - 1], start=1):
                assert len(row) == comp[d - 1]

    def entry(self, node: Node) -> int:
        return self.rows[node.comp - 1][node.row - 1][node.col - 1]

    def reading_word(self) -> tuple[int, ...]:
        """Entries listed in reading order (component, row, column).

        >>> initial_tableau(Multicomposition(((2,), (2,)))).reading_word()
        (1, 2, 3, 4)
        """
        out: list[int] = []
        for comp in self.rows:
            for row in comp:
                out.extend(row)
        return tuple(out)

    def node_of(self, m: int) -> Node:
        """The box containing ``m``."""
        for node in self.shape.nodes():
            if self.entry(node) == m:
                return node
        raise ValueError(f"entry {m} not present")

    def to_json(self) -> list[list[list[int]]]:
        return [[list(row) for row in comp] for comp in self.rows]

    @classmethod
    def from_json(cls, data: list[list[list[int]]]) -> "Tableau":
        rows = tuple(tuple(tuple(int(x) for x in row) for row in comp) for comp in data)
        shape = Multicomposition(tuple(tuple(len(row) for row in comp) for comp in rows))
        return cls(shape, rows)

    def pretty(self) -> str:
        """One-line display: components bracketed, rows separated by '/'.

        >>> initial_tableau(Multicomposition(((2, 1), (1,)))).pretty()
        '[1 2/3][4]'
        """
        comps = []
        for comp in self.rows:
            comps.append("[" + "/".join(" ".join(str(x) for x in row) for row in comp) + "]")
        return "".join(comps)


@dataclass(frozen=True)
class TypedTableau:
    """A filling of ``shape`` by row-of-``type_shape`` labels ``(i, k)``."""

    shape: Multicomposition
    type_shape: Multicomposition
    rows: tuple[tuple[tuple[Entry, ...], ...], ...]

    def __post_init__(self) -> None:
        assert len(self.rows) == self.shape.r
        for s in range(1, self.shape.r + 1):
            comp = self.shape.component(s)
            assert len(self.rows[s - 1]) == len(comp)
            for d, row in enumerate(self.rows[s - 1], start=1):
                assert len(row) == comp[d - 1]

    def entry(self, node: Node) -> Entry:
        return self.rows[node.comp - 1][node.row - 1][node.col - 1]

    def count_in_row(self, k: int, l: int, entry: Entry) -> int:
        """How many boxes of row ``k``, component ``l`` hold ``entry``.

        >>> S = initial_typed(Multicomposition(((2, 1),)))
        >>> S.count_in_row(1, 1, (1, 1))
        2
        """
        return sum(1 for e in self.rows[l - 1][k - 1] if e == entry)

    def content_ok(self) -> bool:
        """True iff each label ``(i, k)`` appears exactly ``type_shape[k][i]``
        times."""
        counts: dict[Entry, int] = {}
        for comp in self.rows:
            for row in comp:
                for e in row:
                    counts[e] = counts.get(e, 0) + 1
        want: dict[Entry, int] = {}
        for s in range(1, self.type_shape.r + 1):
            for d in range(1, self.type_shape.rows(s) + 1):
                want[(d, s)] = self.type_shape.row_length(s, d)
        return counts == {k: v for k, v in want.items() if v > 0}

    def is_semistandard(self) -> bool:
        """Rows weakly increase, columns strictly increase, and a box in
        component ``c`` may only hold labels ``(i, k)`` with ``k >= c``.

        >>> S = initial_typed(Multicomposition(((2, 2), (2, 1))))
        >>> S.is_semistandard()
        True
        """
        if not self.content_ok():
            return False
        for node in self.shape.nodes():
            e = self.entry(node)
            if e[1] < node.comp:
                return False
            if node.col > 1:
                left = self.rows[node.comp - 1][node.row - 1][node.col - 2]
                if not entry_le(left, e):
                    return False
            if node.row > 1:
                above_row = self.rows[node.comp - 1][node.row - 2]
                if node.col <= len(above_row):
                    if not entry_lt(above_row[node.col - 1], e):
                        return False
        return True

    def to_json(self) -> list[list[list[list[int]]]]:
        return [[[list(e) for e in row] for row in comp] for comp in self.rows]

    @classmethod
    def from_json(
        cls, data: list[list[list[list[int]]]], type_shape: Multicomposition
    ) -> "TypedTableau":
        rows = tuple(
            tuple(tuple((int(e[0]), int(e[1])) for e in row) for row in comp) for comp in data
        )
        shape = Multicomposition(tuple(tuple(len(row) for row in comp) for comp in rows))
        return cls(shape, type_shape, rows)

    def pretty(self) -> str:
        """Rows of ``i.k`` labels.

        >>> initial_typed(Multicomposition(((2,), (1,)))).pretty()
        '[1.1 1.1][1.2]'
        """
        comps = []
        for comp in self.rows:
            comps.append(
                "[" + "/".join(" ".join(f"{i}.{k}" for (i, k) in row) for row in comp) + "]"
            )
        return "".join(comps)


def entry_le(a: Entry, b: Entry) -> bool:
    """Weak order on typed entries: component first, then row.

    >>> entry_le((2, 1), (1, 2)), entry_le((1, 2), (2, 1))
    (True, False)
    """
    return (a[1], a[0]) <= (b[1], b[0])


def entry_lt(a: Entry, b: Entry) -> bool:
    return (a[1], a[0]) < (b[1], b[0])


def initial_tableau(shape: Multicomposition) -> Tableau:
    """The row-filled tableau: 1, 2, ... along rows, component by component.

    >>> initial_tableau(Multicomposition(((2, 2), (2, 1)))).reading_word()
    (1, 2, 3, 4, 5, 6, 7)
    """
    rows: list[tuple[tuple[int, ...], ...]] = []
    counter = 1
    for s in range(1, shape.r + 1):
        comp_rows: list[tuple[int, ...]] = []
        for width in shape.component(s):
            comp_rows.append(tuple(range(counter, counter + width)))
            counter += width
        rows.append(tuple(comp_rows))
    return Tableau(shape, tuple(rows))


def initial_typed(shape: Multicomposition) -> TypedTableau:
    """The typed tableau whose box in row ``i`` of component ``k`` holds
    ``(i, k)`` — the most dominant filling of its own shape."""
    return lambda_of(initial_tableau(shape), shape)


def is_row_standard(t: Tableau) -> bool:
    """Entries are a bijection onto 1..n and increase along rows.

    >>> is_row_standard(initial_tableau(Multicomposition(((3,), (2,)))))
    True
    """
    word = t.reading_word()
    if sorted(word) != list(range(1, len(word) + 1)):
        return False
    for comp in t.rows:
        for row in comp:
            if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
                return False
    return True


def is_standard(t: Tableau) -> bool:
    """Row-standard and strictly increasing down columns; requires a
    multipartition shape.

    >>> is_standard(initial_tableau(Multicomposition(((2, 2),))))
    True
    """
    if not t.shape.is_multipartition():
        return False
    if not is_row_standard(t):
        return False
    for comp in t.rows:
        for d in range(len(comp) - 1):
            upper, lower = comp[d], comp[d + 1]
            if any(upper[c] >= lower[c] for c in range(len(lower))):
                return False
    return True


def enumerate_standard(shape: Multicomposition) -> list[Tableau]:
    """All standard tableaux of a multipartition shape, sorted by reading word.

    >>> [t.pretty() for t in enumerate_standard(Multicomposition(((2,), (1,))))]
    ['[1 2][3]', '[1 3][2]', '[2 3][1]']
    """
    assert shape.is_multipartition(), "standard tableaux need a multipartition shape"
    n = shape.size
    boxes = list(shape.nodes())
    fill: dict[Node, int] = {}
    filled_in_row: dict[tuple[int, int], int] = {}
    out: list[Tableau] = []

    def place(m: int) -> None:
        if m > n:
            rows = tuple(
                tuple(
                    tuple(fill[Node(d, c, s)] for c in range(1, shape.row_length(s, d) + 1))
                    for d in range(1, shape.rows(s) + 1)
                )
                for s in range(1, shape.r + 1)
            )
            out.append(Tableau(shape, rows))
            return
        for node in boxes:
            s, d = node.comp, node.row
            if filled_in_row.get((s, d), 0) != node.col - 1:
                continue
            if d > 1 and filled_in_row.get((s, d - 1), 0) < node.col:
                continue
            if node in fill:
                continue
            fill[node] = m
            filled_in_row[(s, d)] = node.col
            place(m + 1)
            del fill[node]
            filled_in_row[(s, d)] = node.col - 1

    place(1)
    out.sort(key=lambda t: t.reading_word())
    return out


def enumerate_semistandard(mu: Multicomposition, lam: Multicomposition) -> list[TypedTableau]:
    """All semistandard tableaux of shape ``mu`` and type ``lam``, sorted by
    reading word.  Empty unless ``mu`` dominates ``lam``.

    >>> nu = Multicomposition(((5,), (2,)))
    >>> lam = Multicomposition(((2, 2), (2, 1)))
    >>> [S.pretty() for S in enumerate_semistandard(nu, lam)]
    ['[1.1 1.1 2.1 2.1 1.2][1.2 2.2]', '[1.1 1.1 2.1 2.1 2.2][1.2 1.2]']
    """
    assert mu.size == lam.size, "sizes differ"
    assert mu.is_multipartition(), "shape must be a multipartition"
    labels: list[Entry] = []
    remaining: dict[Entry, int] = {}
    for s in range(1, lam.r + 1):
        for d in range(1, lam.rows(s) + 1):
            width = lam.row_length(s, d)
            if width > 0:
                labels.append((d, s))
                remaining[(d, s)] = width
    labels.sort(key=lambda e: (e[1], e[0]))
    boxes = list(mu.nodes())
    entries: dict[Node, Entry] = {}
    out: list[TypedTableau] = []

    def place(idx: int) -> None:
        if idx == len(boxes):
            rows = tuple(
                tuple(
                    tuple(entries[Node(d, c, s)] for c in range(1, mu.row_length(s, d) + 1))
                    for d in range(1, mu.rows(s) + 1)
                )
                for s in range(1, mu.r + 1)
            )
            out.append(TypedTableau(mu, lam, rows))
            return
        node = boxes[idx]
        for e in labels:
            if remaining[e] == 0:
                continue
            if e[1] < node.comp:
                continue
            if node.col > 1:
                left = entries[Node(node.row, node.col - 1, node.comp)]
                if not entry_le(left, e):
                    continue
            if node.row > 1 and node.col <= mu.row_length(node.comp, node.row - 1):
                above = entries[Node(node.row - 1, node.col, node.comp)]
                if not entry_lt(above, e):
                    continue
            entries[node] = e
            remaining[e] -= 1
            place(idx + 1)
            del entries[node]
            remaining[e] += 1

    place(0)
    out.sort(key=lambda S: tuple(e for comp in S.rows for row in comp for e in row))
    return out


def d_of(t: Tableau) -> Perm:
    """The permutation carrying the row-filled tableau of ``t``'s shape to
    ``t``: its one-line notation is the reading word.

    >>> t = Tableau.from_json([[[1, 3]], [[2]]])
    >>> d_of(t)
    (1, 3, 2)
    """
    assert is_row_standard(t), "d_of needs a row-standard tableau"
    word = t.reading_word()
    assert is_perm(word)
    return word


def tableau_from_d(shape: Multicomposition, w: Perm) -> Tableau:
    """Inverse of :func:`d_of`: fill the boxes of ``shape`` in reading order
    with the one-line values of ``w``.

    >>> shape = Multicomposition(((2,), (1,)))
    >>> tableau_from_d(shape, (1, 3, 2)).pretty()
    '[1 3][2]'
    """
    assert len(w) == shape.size
    it = iter(w)
    rows = tuple(
        tuple(
            tuple(next(it) for _ in range(shape.row_length(s, d)))
            for d in range(1, shape.rows(s) + 1)
        )
        for s in range(1, shape.r + 1)
    )
    return Tableau(shape, rows)


def lambda_of(t: Tableau, lam: Multicomposition) -> TypedTableau:
    """Replace each entry of ``t`` by the (row, component) label of the box
    it occupies in the row-filled tableau of ``lam``.

    >>> nu = Multicomposition(((5,), (2,)))
    >>> lam = Multicomposition(((2, 2), (2, 1)))
    >>> t = initial_tableau(nu)
    >>> lambda_of(t, lam).pretty()
    '[1.1 1.1 2.1 2.1 1.2][1.2 2.2]'
    """
    assert lam.size == t.shape.size
    label_of: dict[int, Entry] = {}
    counter = 1
    for s in range(1, lam.r + 1):
        for d in range(1, lam.rows(s) + 1):
            for _ in range(lam.row_length(s, d)):
                label_of[counter] = (d, s)
                counter += 1
    rows = tuple(
        tuple(tuple(label_of[x] for x in row) for row in comp) for comp in t.rows
    )
    return TypedTableau(t.shape, lam, rows)


def stack_typed(S: TypedTableau) -> TypedTableau:
    """Flatten the *type* of a typed tableau: a label ``(i, k)`` becomes the
    row of the stacked one-component composition, so comparisons reduce to the
    one-component case.

    >>> nu = Multicomposition(((5,), (2,)))
    >>> lam = Multicomposition(((2, 2), (2, 1)))
    >>> S = enumerate_semistandard(nu, lam)[0]
    >>> stack_typed(S).pretty()
    '[1.1 1.1 2.1 2.1 3.1][3.1 4.1]'
    """
    from .shapes import stack

    offsets: dict[int, int] = {}
    running = 0
    for k in range(1, S.type_shape.r + 1):
        offsets[k] = running
        running += S.type_shape.rows(k)
    flat_type = Multicomposition((stack(S.type_shape),))
    rows = tuple(
        tuple(tuple((offsets[k] + i, 1) for (i, k) in row) for row in comp) for comp in S.rows
    )
    return TypedTableau(S.shape, flat_type, rows)


def standard_with_type(mu: Multicomposition, lam: Multicomposition, S: TypedTableau) -> list[Tableau]:
    """All standard tableaux ``s`` of shape ``mu`` with ``lambda_of(s, lam) == S``.

    >>> nu = Multicomposition(((5,), (2,)))
    >>> lam = Multicomposition(((2, 2), (2, 1)))
    >>> S1, S2 = enumerate_semistandard(nu, lam)
    >>> [d_of(t) for t in standard_with_type(nu, lam, S1)]
    [(1, 2, 3, 4, 5, 6, 7), (1, 2, 3, 4, 6, 5, 7)]
    >>> [d_of(t) for t in standard_with_type(nu, lam, S2)]
    [(1, 2, 3, 4, 7, 5, 6)]
    """
    return [t for t in enumerate_standard(mu) if lambda_of(t, lam) == S]


def transport_tableau(S: TypedTableau) -> Tableau:
    """The row-standard tableau of shape ``S.type_shape`` induced by ``S``:
    entry ``i`` goes to the row and component named by the label that ``S``
    assigns to the box holding ``i`` in the row-filled tableau of ``S.shape``.

    Rows come out increasing because entries are placed in increasing order.

    >>> nu = Multicomposition(((5,), (2,)))
    >>> lam = Multicomposition(((2, 2), (2, 1)))
    >>> S1, S2 = enumerate_semistandard(nu, lam)
    >>> transport_tableau(S1).pretty()
    '[1 2/3 4][5 6/7]'
    >>> transport_tableau(S2).pretty()
    '[1 2/3 4][6 7/5]'
    """
    lam = S.type_shape
    cells: list[list[list[int]]] = [
        [[] for _ in range(lam.rows(s))] for s in range(1, lam.r + 1)
    ]
    for i, node in enumerate(S.shape.nodes(), start=1):
        d, s = S.entry(node)
        cells[s - 1][d - 1].append(i)
    rows = tuple(tuple(tuple(row) for row in comp) for comp in cells)
    out = Tableau(lam, rows)
    assert is_row_standard(out)
    return out


if __name__ == "__main__":
    import doctest

    doctest.testmod()
