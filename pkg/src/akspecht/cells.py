"""Permutation modules and their standard-basis quotients.

For a multipartition ``nu`` of ``n``, the right module ``M = m_nu * H`` has a
filtration whose top layer is spanned by the images of ``m_nu * T_{d(t)}`` for
standard tableaux ``t`` of shape ``nu``; the lower layer is spanned by the
doubly-indexed elements attached to strictly more dominant shapes.
:class:`ModuleSpace` reduces an algebra element onto the top layer: the result
is a :class:`SpechtVector`, a finitely supported map from standard tableaux to
coefficients.

Reduction is exact and certified.  A fast path peels off the unique signature
term of each section column and succeeds iff the remainder is exactly zero; in
all other cases a cached echelon of the full module basis (section columns
plus the strictly-dominant columns) produces the coordinates, or proves that
the element does not lie in the module at all.

>>> from .coeffs import GenericCoeffs
>>> from .algebra import AlgebraContext, m_of
>>> from .shapes import Multicomposition
>>> ctx = AlgebraContext(1, 3, GenericCoeffs(1))
>>> lam = Multicomposition(((2, 1),))
>>> space = ModuleSpace(ctx, lam)
>>> [t.pretty() for t in space.standard]
['[1 2/3]', '[1 3/2]']
>>> m = m_of(ctx, lam)
>>> space.specht_reduce(m * ctx.t_gen(1)).pretty()
'(q)*[1 2/3]'
>>> space.specht_reduce(m * ctx.t_gen(2)).pretty()
'(1)*[1 3/2]'

Multiplying by the Jucys-Murphy element ``L_3`` scales the cyclic generator by
the residue of the box its entry occupies:

>>> v = space.specht_reduce(ctx.element(ctx.mul_L(m.terms, 3)))
>>> v == space.unit(space.standard[0]).scale(residue(ctx, lam, 3))
True

The row-reading sum over all of the symmetric group lies in the module but in
its lower layer, so it reduces to zero; elements outside the module raise:

>>> from .algebra import m_of as _m
>>> top = _m(ctx, Multicomposition(((3,),)))
>>> space.specht_reduce(top).is_zero()
True
>>> space.specht_reduce(ctx.one_element())
Traceback (most recent call last):
    ...
ValueError: element does not lie in the permutation module
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .algebra import AlgebraContext, Element, m_of, m_semistandard, u_plus
from .coeffs import coeff_from_json, coeff_pretty, coeff_to_json
from .linalg import SparseReducer
from .perms import reduced_word
from .shapes import Multicomposition, all_multipartitions, strictly_dominates
from .tableaux import Tableau, d_of, enumerate_semistandard, enumerate_standard

__all__ = [
    "SpechtVector",
    "ModuleSpace",
    "residue",
]


def residue(ctx: AlgebraContext, shape: Multicomposition, k: int):
    """The residue ``q^(col - row) * Q_comp`` of box ``k`` in the initial
    tableau of ``shape``.

    >>> from .coeffs import GenericCoeffs
    >>> from .algebra import AlgebraContext
    >>> ctx = AlgebraContext(2, 3, GenericCoeffs(2))
    >>> from .coeffs import coeff_pretty
    >>> coeff_pretty(residue(ctx, Multicomposition(((2,), (1,))), 2))
    'q*Q1'
    >>> coeff_pretty(residue(ctx, Multicomposition(((2,), (1,))), 3))
    'Q2'
    """
    node = shape.node_of_index(k)
    return ctx.coeffs.q_power(node.col - node.row) * ctx.coeffs.Q(node.comp)


@dataclass(eq=False)
class SpechtVector:
    """A coefficient vector supported on the standard tableaux of ``shape``."""

    shape: Multicomposition
    coords: dict

    def is_zero(self) -> bool:
        return not self.coords

    def __bool__(self) -> bool:
        return bool(self.coords)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SpechtVector):
            return NotImplemented
        return self.shape == other.shape and self.coords == other.coords

    def __add__(self, other: "SpechtVector") -> "SpechtVector":
        assert self.shape == other.shape
        out = dict(self.coords)
        for t, c in other.coords.items():
            s = out.get(t)
            s = c if s is None else s + c
            if s:
                out[t] = s
            else:
                out.pop(t, None)
        return SpechtVector(self.shape, out)

    def __sub__(self, other: "SpechtVector") -> "SpechtVector":
        return self + other.scale_int(-1)

    def scale(self, c) -> "SpechtVector":
        if not c:
            return SpechtVector(self.shape, {})
        return SpechtVector(self.shape, {t: v * c for t, v in self.coords.items()})

    def scale_int(self, k: int) -> "SpechtVector":
        if k == 0:
            return SpechtVector(self.shape, {})
        return SpechtVector(self.shape, {t: v * k for t, v in self.coords.items()})

    def sorted_items(self):
        return sorted(self.coords.items(), key=lambda item: item[0].rows)

    def pretty(self) -> str:
        if not self.coords:
            return "0"
        return " + ".join(f"({coeff_pretty(c)})*{t.pretty()}" for t, c in self.sorted_items())

    def to_json(self):
        return {
            "shape": self.shape.to_json(),
            "coords": [[t.to_json(), coeff_to_json(c)] for t, c in self.sorted_items()],
        }

    @classmethod
    def from_json(cls, system, data) -> "SpechtVector":
        shape = Multicomposition.from_json(data["shape"])
        coords = {}
        for t_data, c_data in data["coords"]:
            coords[Tableau.from_json(t_data)] = coeff_from_json(system, c_data)
        return cls(shape, coords)


def _block_cost(ctx: AlgebraContext, mu: Multicomposition, n_semi: int) -> int:
    """Rough size estimate of one strictly-dominant column family, used only
    to order blocks so the echelon grows cheapest-first."""
    x_size = 1
    for s in range(1, mu.r + 1):
        for row in mu.component(s):
            x_size *= math.factorial(row)
    u_size = len(u_plus(ctx, mu).terms)
    return u_size * x_size * max(1, n_semi) * len(enumerate_standard(mu))


class ModuleSpace:
    """Reduction of algebra elements onto the standard basis of a cell
    quotient.

    The fast path handles exact section combinations; everything else goes
    through a lazily grown, certificate-bearing echelon of the module basis.
    """

    def __init__(self, ctx: AlgebraContext, shape: Multicomposition):
        assert shape.is_multipartition(), "module shapes must be multipartitions"
        assert shape.size == ctx.n, "shape size must match the algebra rank"
        self.ctx = ctx
        self.shape = shape
        self.standard: tuple[Tableau, ...] = tuple(enumerate_standard(shape))
        self.m_element = m_of(ctx, shape)
        u = u_plus(ctx, shape)
        a_star = max(key[0] for key in u.terms)
        assert u.terms[(a_star, ctx.id_perm)] == ctx.coeffs.one
        # Section columns m_shape * T_{d(t)}.  Because d(t) is the minimal
        # coset representative, lengths add and the coefficient at the
        # signature key (a_star, d(t)) is exactly 1, and the signature keys of
        # distinct tableaux never collide.
        self._sections: list[tuple[Tableau, dict, tuple]] = []
        for t in self.standard:
            d = d_of(t)
            terms = ctx.mul_word(self.m_element.terms, reduced_word(d))
            sig = (a_star, d)
            assert terms.get(sig) == ctx.coeffs.one
            self._sections.append((t, terms, sig))
        self._reducer: SparseReducer | None = None
        self._tags: list[tuple] = []
        self._blocks: list[tuple[int, Multicomposition, list]] | None = None
        self._next_block = 0

    # -- public API ---------------------------------------------------------

    def zero(self) -> SpechtVector:
        return SpechtVector(self.shape, {})

    def unit(self, t: Tableau) -> SpechtVector:
        return SpechtVector(self.shape, {t: self.ctx.coeffs.one})

    def section(self, t: Tableau) -> Element:
        """The section column ``m_shape * T_{d(t)}`` as an element."""
        for tab, terms, _sig in self._sections:
            if tab == t:
                return Element(self.ctx, dict(terms))
        raise KeyError(t)

    def specht_reduce(self, x) -> SpechtVector:
        """Coordinates of ``x`` in the cell quotient.

        ``x`` must lie in the permutation module; otherwise a ``ValueError``
        is raised.  The result is exact in every coefficient mode.
        """
        terms = x.terms if isinstance(x, Element) else x
        remainder = dict(terms)
        coords: dict = {}
        for t, sec, sig in self._sections:
            c = remainder.get(sig)
            if c is not None:
                coords[t] = c
                self.ctx.add_into(remainder, sec, scale=-c)
        if not remainder:
            return SpechtVector(self.shape, {t: c for t, c in coords.items() if c})
        # The signature coefficients were contaminated by the lower layer;
        # start over with the certified echelon on the original element.
        cert = self._full_reduce(terms)
        coords = {}
        for i, c in cert.items():
            tag = self._tags[i]
            if tag[0] == "s" and c:
                coords[self.standard[tag[1]]] = c
        return SpechtVector(self.shape, coords)

    def contains(self, x) -> bool:
        """Whether ``x`` lies in the permutation module."""
        try:
            self.specht_reduce(x)
        except ValueError:
            return False
        return True

    # -- echelon fallback -----------------------------------------------------

    def _ensure_reducer(self) -> None:
        if self._reducer is not None:
            return
        reducer = SparseReducer(certificates=True)
        for idx, (_t, sec, _sig) in enumerate(self._sections):
            self._tags.append(("s", idx))
            pivot = reducer.insert(sec)
            assert pivot is not None, "section columns must be independent"
        self._reducer = reducer
        blocks = []
        for mu in all_multipartitions(self.ctx.n, self.ctx.r):
            if not strictly_dominates(mu, self.shape):
                continue
            semis = enumerate_semistandard(mu, self.shape)
            if not semis:
                continue
            blocks.append((_block_cost(self.ctx, mu, len(semis)), mu, semis))
        blocks.sort(key=lambda item: (item[0], item[1].comps))
        self._blocks = blocks
        self._next_block = 0

    def _insert_next_block(self) -> bool:
        assert self._blocks is not None and self._reducer is not None
        if self._next_block >= len(self._blocks):
            return False
        _cost, mu, semis = self._blocks[self._next_block]
        self._next_block += 1
        std = enumerate_standard(mu)
        for s_idx, S in enumerate(semis):
            for t_idx, t in enumerate(std):
                col = m_semistandard(self.ctx, S, t)
                self._tags.append(("h", mu, s_idx, t_idx))
                pivot = self._reducer.insert(col.terms)
                assert pivot is not None, "module basis columns must be independent"
        return True

    def _full_reduce(self, terms: dict) -> dict:
        self._ensure_reducer()
        assert self._reducer is not None
        remainder, cert = self._reducer.reduce(terms)
        while remainder:
            if not self._insert_next_block():
                raise ValueError("element does not lie in the permutation module")
            remainder, cert = self._reducer.reduce(terms)
        return cert


if __name__ == "__main__":
    import doctest

    doctest.testmod()
