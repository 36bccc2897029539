"""Exact linear algebra over the coefficient modes.

Three tools, all division-light:

* :func:`bareiss_nullspace` — fraction-free (Bareiss) elimination followed by
  back-substitution, for matrices over a specialized field (``Fraction`` or
  :class:`~akspecht.coeffs.CycElem`).
* :func:`generic_echelon` — denominators-cleared, content-stripped row
  echelon form over polynomial entries with pivot columns tracked.  No case
  analysis on the parameters is attempted: a polynomial is treated as zero
  only when it is identically zero.
* :class:`SparseReducer` — an incremental forward-elimination reducer over
  sparse ``dict`` vectors, used for span membership, closure fixpoints and
  coordinate certificates.

>>> from fractions import Fraction as F
>>> rows = [[F(1), F(2), F(3)], [F(2), F(4), F(6)]]
>>> bareiss_nullspace(rows, F(1), F(0))
[[Fraction(-2, 1), Fraction(1, 1), Fraction(0, 1)], [Fraction(-3, 1), Fraction(0, 1), Fraction(1, 1)]]
"""

from __future__ import annotations

import heapq
from fractions import Fraction

from .coeffs import MultiPoly, RatFunc, gcd_fraction


class _MaxKey:
    """Inverts the order of a key so ``heapq`` pops the largest first."""

    __slots__ = ("key",)

    def __init__(self, key):
        self.key = key

    def __lt__(self, other: "_MaxKey") -> bool:
        return other.key < self.key

__all__ = [
    "bareiss_nullspace",
    "bareiss_nullspace_pivots",
    "generic_echelon",
    "generic_nullspace",
    "strip_poly_row",
    "SparseReducer",
]


def bareiss_nullspace(matrix, one, zero):
    """Basis of ``{a : M a = 0}`` for a matrix over an exact field.

    Returns one vector per free column, each of length ``n = len(matrix[0])``,
    with the free coordinate set to 1.  The empty matrix (no rows) has the
    full standard basis as nullspace.

    >>> from fractions import Fraction as F
    >>> M = [[F(1), F(1)], [F(0), F(1)]]
    >>> bareiss_nullspace(M, F(1), F(0))
    []
    """
    basis, _pivots = bareiss_nullspace_pivots(matrix, one, zero)
    return basis


def bareiss_nullspace_pivots(matrix, one, zero):
    """Like :func:`bareiss_nullspace`, but also returns the pivots as a list
    of ``(column, value)`` pairs in elimination order."""
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    M = [list(row) for row in matrix]
    pivots: list[tuple[int, int]] = []
    prev = one
    pr = 0
    for pc in range(n):
        pivot_row = None
        for i in range(pr, m):
            if M[i][pc] != zero and M[i][pc]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        M[pr], M[pivot_row] = M[pivot_row], M[pr]
        lead = M[pr][pc]
        for i in range(pr + 1, m):
            head = M[i][pc]
            for j in range(pc + 1, n):
                M[i][j] = (lead * M[i][j] - head * M[pr][j]) / prev
            M[i][pc] = zero
        prev = lead
        pivots.append((pr, pc))
        pr += 1
        if pr == m:
            break
    pivot_cols = {pc for _, pc in pivots}
    basis = []
    for free in range(n):
        if free in pivot_cols:
            continue
        vec = [zero] * n
        vec[free] = one
        for ri, ci in reversed(pivots):
            acc = zero
            for j in range(ci + 1, n):
                if vec[j]:
                    acc = acc + M[ri][j] * vec[j]
            vec[ci] = -acc / M[ri][ci] if acc else zero
        basis.append(vec)
    return basis, [(pc, M[ri][pc]) for ri, pc in pivots]


def strip_poly_row(row: list[MultiPoly]) -> list[MultiPoly]:
    """Normalize a polynomial row: divide out the joint integer content and
    the joint monomial factor (the ``q`` shift may be negative), and make the
    first nonzero entry's leading coefficient positive.

    >>> q = MultiPoly.q_var(1)
    >>> [p.pretty() for p in strip_poly_row([q * -2, q ** 2 * -4])]
    ['1', '2*q']
    """
    nonzero = [p for p in row if p]
    if not nonzero:
        return list(row)
    content = None
    for p in nonzero:
        c = p.int_content()
        content = c if content is None else gcd_fraction(content, c)
    mins = [p.min_exps() for p in nonzero]
    joint = tuple(-min(col) for col in zip(*mins))
    first = next(p for p in row if p)
    sign = -1 if first.lead()[1] < 0 else 1

    def fix(p: MultiPoly) -> MultiPoly:
        if not p:
            return p
        if any(joint):
            p = p.shift(joint)
        return MultiPoly(
            p.r, {e: Fraction(c) * sign / Fraction(content) for e, c in p.terms.items()}
        )

    return [fix(p) for p in row]


def generic_echelon(matrix: list[list[RatFunc]]):
    """Denominators-cleared, content-stripped row echelon form.

    Returns ``(rows, pivot_cols)`` where ``rows`` are :class:`MultiPoly`
    lists (zero rows dropped) and ``pivot_cols[i]`` is the column of the
    ``i``-th pivot.  Elimination is fraction-free with content stripping
    after every combination; no branching on parameter values occurs.

    >>> from .coeffs import GenericCoeffs
    >>> P = GenericCoeffs(1)
    >>> rows, pivots = generic_echelon([[P.q, P.q ** 2]])
    >>> pivots, [p.pretty() for p in rows[0]]
    ([0], ['1', 'q'])
    """
    cleared: list[list[MultiPoly]] = []
    for row in matrix:
        if all(e.den_is_one() for e in row):
            poly_row = [e.num for e in row]
        else:
            poly_row = []
            for j, e in enumerate(row):
                prod = e.num
                for k, other in enumerate(row):
                    if k != j:
                        prod = prod * other.den
                poly_row.append(prod)
        cleared.append(strip_poly_row(poly_row))
    m = len(cleared)
    n = len(cleared[0]) if m else 0
    pivots: list[int] = []
    pr = 0
    for pc in range(n):
        pivot_row = None
        for i in range(pr, m):
            if cleared[i][pc]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        cleared[pr], cleared[pivot_row] = cleared[pivot_row], cleared[pr]
        lead = cleared[pr][pc]
        for i in range(pr + 1, m):
            head = cleared[i][pc]
            if not head:
                continue
            cleared[i] = strip_poly_row(
                [lead * cleared[i][j] - head * cleared[pr][j] for j in range(n)]
            )
        pivots.append(pc)
        pr += 1
        if pr == m:
            break
    rows = [row for row in cleared[:pr]]
    return rows, pivots


def generic_nullspace(
    rows: list[list[MultiPoly]], pivots: list[int], n: int, coeffs
) -> list[list[RatFunc]]:
    """Nullspace basis read off a :func:`generic_echelon` form, valid wherever
    no pivot polynomial vanishes (the generic point).  One vector per free
    column, free coordinate set to 1; ``coeffs`` supplies zero/one.

    >>> from .coeffs import GenericCoeffs
    >>> P = GenericCoeffs(1)
    >>> rows, pivots = generic_echelon([[P.q, P.q ** 2]])
    >>> [[c.pretty() for c in v] for v in generic_nullspace(rows, pivots, 2, P)]
    [['-q', '1']]
    """

    def lift(p: MultiPoly) -> RatFunc:
        return RatFunc.make(p, MultiPoly.one(p.r))

    pivot_set = set(pivots)
    basis: list[list[RatFunc]] = []
    for free in range(n):
        if free in pivot_set:
            continue
        vec = [coeffs.zero] * n
        vec[free] = coeffs.one
        for i in reversed(range(len(pivots))):
            ci = pivots[i]
            acc = coeffs.zero
            for j in range(ci + 1, n):
                if vec[j] and rows[i][j]:
                    acc = acc + lift(rows[i][j]) * vec[j]
            if acc:
                vec[ci] = -acc / lift(rows[i][ci])
        basis.append(vec)
    return basis


class SparseReducer:
    """Incremental forward elimination over sparse ``dict`` vectors.

    Vectors map hashable, orderable keys to nonzero field coefficients.  Each
    inserted vector either reduces to zero against the current rows or
    contributes a new pivot (its largest remaining key, normalized to
    coefficient 1).  Rows are reduced only against rows present at their
    insertion time — no back-substitution — so a stored row may still contain
    later pivots' keys, but every key of a row is at most its own pivot.
    :meth:`reduce` therefore eliminates pivot keys largest-first until none
    remain, which yields the canonical remainder modulo the row space.

    With ``certificates=True`` every row remembers its expression in terms of
    the originally inserted vectors, and :meth:`reduce` also returns the
    combination ``cert`` such that ``vec = sum(cert[i] * inserted_i) +
    remainder``.

    >>> from fractions import Fraction as F
    >>> red = SparseReducer(certificates=True)
    >>> red.insert({"a": F(2)}) is not None
    True
    >>> red.insert({"a": F(1), "b": F(1)}) is not None
    True
    >>> rem, cert = red.reduce({"b": F(3)})
    >>> rem, sorted(cert.items())
    ({}, [(0, Fraction(-3, 2)), (1, Fraction(3, 1))])
    """

    def __init__(self, certificates: bool = False):
        self.rows: dict = {}  # pivot key -> row dict, coeff 1 at pivot (its max key)
        self.certs: dict = {} if certificates else None
        self.n_inserted = 0

    def __len__(self) -> int:
        return len(self.rows)

    def _eliminate(self, vec: dict, cert: dict | None):
        # Pivot keys are eliminated largest-first.  Because a row only holds
        # keys up to its own pivot, an elimination introduces keys strictly
        # below the pivot just removed, so an eliminated key never reappears;
        # a max-heap with lazy deletion visits each candidate once.
        heap = [_MaxKey(k) for k in vec if k in self.rows]
        heapq.heapify(heap)
        while heap:
            hit = heapq.heappop(heap).key
            coeff = vec.pop(hit, None)
            if coeff is None:
                continue  # cancelled earlier, or a duplicate heap entry
            for k, c in self.rows[hit].items():
                if k == hit:
                    continue
                s = vec.get(k)
                if s is None:
                    vec[k] = -coeff * c
                    if k in self.rows:
                        heapq.heappush(heap, _MaxKey(k))
                else:
                    s = s - coeff * c
                    if s:
                        vec[k] = s
                    else:
                        del vec[k]
            if cert is not None:
                for i, c in self.certs[hit].items():
                    s = cert.get(i)
                    s = coeff * c if s is None else s + coeff * c
                    if s:
                        cert[i] = s
                    else:
                        cert.pop(i, None)
        return vec, cert

    def reduce(self, vec: dict):
        """Canonical remainder of ``vec`` modulo the row space (and the
        certificate when enabled)."""
        work = dict(vec)
        cert: dict | None = {} if self.certs is not None else None
        work, cert = self._eliminate(work, cert)
        if self.certs is not None:
            return work, cert
        return work

    def insert(self, vec: dict):
        """Insert ``vec``; returns the new pivot key, or ``None`` if ``vec``
        was already in the span."""
        index = self.n_inserted
        self.n_inserted += 1
        work = dict(vec)
        cert: dict | None = None
        if self.certs is not None:
            cert = {}
            work, cert = self._eliminate(work, cert)
            # certificate of the remainder as combination of inserted vectors:
            # remainder = inserted - sum(cert); flip to express remainder
            cert = {i: -c for i, c in cert.items()}
            cert[index] = cert.get(index, 0) + 1
            if not cert[index]:
                del cert[index]
        else:
            work, _ = self._eliminate(work, None)
        if not work:
            return None
        pivot = max(work)
        lead = work[pivot]
        if lead != 1:
            work = {k: c / lead for k, c in work.items()}
            if cert is not None:
                cert = {i: c / lead for i, c in cert.items()}
        self.rows[pivot] = work
        if self.certs is not None:
            self.certs[pivot] = cert
        return pivot

    def contains(self, vec: dict) -> bool:
        out = self.reduce(vec)
        rem = out[0] if self.certs is not None else out
        return not rem


if __name__ == "__main__":
    import doctest

    doctest.testmod()
