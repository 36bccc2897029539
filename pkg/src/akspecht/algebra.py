"""Normal-form arithmetic for the cyclotomic Hecke algebra H(r, n).

The algebra is generated by ``T_1..T_{n-1}`` (braid generators with quadratic
relation ``(T_i - q)(T_i + 1) = 0``) together with the commuting elements
``L_1..L_n`` (``L_1`` satisfies ``(L_1 - Q_1)...(L_1 - Q_r) = 0`` and
``L_{k+1} = q^{-1} T_k L_k T_k``).  Every element is kept in the normal form

    sum of  c * L_1^{a_1} ... L_n^{a_n} * T_w,   0 <= a_i < r,  w a permutation,

as a sparse dict mapping ``(exponents, permutation)`` keys to coefficients.
An :class:`AlgebraContext` owns the coefficient system and the rewrite
caches; :class:`Element` is a thin operator wrapper.

>>> from .coeffs import GenericCoeffs
>>> ctx = AlgebraContext(2, 2, GenericCoeffs(2))
>>> T1 = ctx.t_gen(1)
>>> (T1 * T1) == (T1 * ctx.coeffs.qm1 + ctx.one_element() * ctx.coeffs.q)
True
>>> L2 = ctx.l_gen(2)
>>> L1 = ctx.l_gen(1)
>>> L1 * L2 == L2 * L1
True
"""

from __future__ import annotations

import itertools

from .coeffs import coeff_from_json, coeff_pretty, coeff_to_json
from .perms import (
    Perm,
    apply_simple_left,
    apply_simple_right,
    identity,
    inverse,
    left_length_up,
    perm_from_word,
    reduced_word,
    right_length_up,
)
from .shapes import Multicomposition

__all__ = [
    "AlgebraContext",
    "Element",
    "x_of",
    "mul_x",
    "lmul_x",
    "mul_u_plus",
    "u_plus",
    "m_of",
    "coset_sum",
    "descending_word",
    "coset_sum_product",
    "shift_generator",
    "transfer_generator",
    "m_st",
    "m_semistandard",
    "hom_image",
    "m_semistandard_product",
]

Key = tuple[tuple[int, ...], Perm]


class AlgebraContext:
    """Arithmetic engine for ``H(r, n)`` over a fixed coefficient system.

    All rewrite caches (straightening of ``T_w L_k``, the expansion of
    ``L_k^r``, and products of basis words) live on the context;
    :meth:`clear_caches` drops them between large computations.
    """

    def __init__(self, r: int, n: int, coeffs):
        assert coeffs.r == r, "coefficient system has the wrong number of parameters"
        self.r = r
        self.n = n
        self.coeffs = coeffs
        self.zero_exps = (0,) * n
        self.id_perm = identity(n)
        self._push_memo: dict[tuple[Perm, int], dict[Key, object]] = {}
        self._lr_memo: dict[int, dict[Key, object]] = {}
        self._wmul_memo: dict[tuple[Perm, Perm], dict[Perm, object]] = {}
        # memoized simple reflections: besides saving the tuple surgery, the
        # shared result tuples keep big term dicts from holding duplicate
        # copies of the same permutation
        self._sr_memo: dict[tuple[int, Perm], Perm] = {}
        self._sl_memo: dict[tuple[int, Perm], Perm] = {}
        # pool of exponent tuples, for the same reason: exponent patterns are
        # few (entries below r, support bounded by the Q-factor positions), so
        # freshly built tuples are folded onto one shared copy
        self._exps_pool: dict[tuple[int, ...], tuple[int, ...]] = {}

    def clear_caches(self) -> None:
        self._push_memo.clear()
        self._lr_memo.clear()
        self._wmul_memo.clear()
        self._sr_memo.clear()
        self._sl_memo.clear()
        self._exps_pool.clear()

    def _pool_exps(self, e: tuple[int, ...]) -> tuple[int, ...]:
        return self._exps_pool.setdefault(e, e)

    def _simple_right(self, w: Perm, i: int) -> Perm:
        key = (i, w)
        hit = self._sr_memo.get(key)
        if hit is None:
            hit = apply_simple_right(w, i)
            self._sr_memo[key] = hit
        return hit

    def _simple_left(self, w: Perm, i: int) -> Perm:
        key = (i, w)
        hit = self._sl_memo.get(key)
        if hit is None:
            hit = apply_simple_left(w, i)
            self._sl_memo[key] = hit
        return hit

    # -- term-dict helpers ---------------------------------------------------

    def add_term(self, out: dict, key: Key, coeff) -> None:
        s = out.get(key)
        s = coeff if s is None else s + coeff
        if s:
            out[key] = s
        else:
            out.pop(key, None)

    def add_into(self, out: dict, terms: dict, scale=None) -> None:
        for key, c in terms.items():
            self.add_term(out, key, c if scale is None else c * scale)

    def scale_terms(self, terms: dict, c) -> dict:
        if not c:
            return {}
        return {key: v * c for key, v in terms.items()}

    # -- straightening core ----------------------------------------------------

    def _emit(self, out: dict, exps: tuple[int, ...], w: Perm, coeff) -> None:
        """Accumulate ``coeff * L^exps T_w`` into ``out``, rewriting any
        exponent ``>= r`` via the expansion of ``L_p^r`` (highest position
        first, which strictly decreases that exponent)."""
        r = self.r
        p = 0
        for idx in range(self.n - 1, -1, -1):
            if exps[idx] >= r:
                p = idx + 1
                break
        if not p:
            self.add_term(out, (exps, w), coeff)
            return
        base = list(exps)
        base[p - 1] -= r
        for (b, v), cb in self._lr(p).items():
            merged = self._pool_exps(tuple(x + y for x, y in zip(base, b)))
            c = coeff * cb
            for u, cu in self._wmul(v, w).items():
                self._emit(out, merged, u, c * cu)

    def _lr(self, k: int) -> dict[Key, object]:
        """Normal form of ``L_k^r``."""
        hit = self._lr_memo.get(k)
        if hit is not None:
            return hit
        C = self.coeffs
        r, n = self.r, self.n
        if k == 1:
            # (L_1 - Q_1)...(L_1 - Q_r) = 0 expanded by elementary symmetric
            # polynomials: L_1^r = sum_{i<r} (-1)^(r-i+1) e_{r-i}(Q) L_1^i
            elem = [C.one] + [C.zero] * r
            for s in range(1, r + 1):
                Qs = C.Q(s)
                for j in range(s, 0, -1):
                    elem[j] = elem[j] + elem[j - 1] * Qs
            terms: dict[Key, object] = {}
            for i in range(r):
                sign = 1 if (r - i + 1) % 2 == 0 else -1
                c = elem[r - i] * sign
                if c:
                    exps = [0] * n
                    exps[0] = i
                    self.add_term(terms, (tuple(exps), self.id_perm), c)
        else:
            # L_k^r = q^-1 T_{k-1} L_{k-1}^r T_{k-1}
            #         + q^-1 (q-1) sum_{l=1}^{r-1} L_{k-1}^{r-l} L_k^l T_{k-1}
            prev = self._lr(k - 1)
            mid = self.lmul_T(dict(prev), k - 1)
            mid = self.mul_T(mid, k - 1)
            terms = self.scale_terms(mid, C.qinv)
            tail_coeff = C.qinv * C.qm1
            s_word = apply_simple_right(self.id_perm, k - 1)
            for l in range(1, r):
                exps = [0] * n
                exps[k - 2] = r - l
                exps[k - 1] = l
                self.add_term(terms, (tuple(exps), s_word), tail_coeff)
        self._lr_memo[k] = terms
        return terms

    def _push(self, w: Perm, k: int) -> dict[Key, object]:
        """Normal form of ``T_w L_k`` (memoized on ``(w, k)``)."""
        memo_key = (w, k)
        hit = self._push_memo.get(memo_key)
        if hit is not None:
            return hit
        C = self.coeffs
        if w == self.id_perm:
            out: dict[Key, object] = {}
            exps = [0] * self.n
            exps[k - 1] = 1
            self._emit(out, tuple(exps), self.id_perm, C.one)
        else:
            word = reduced_word(w)
            i = word[-1]
            w_prev = apply_simple_right(w, i)
            if k != i and k != i + 1:
                # T_i L_k = L_k T_i
                out = self.mul_T(dict(self._push(w_prev, k)), i)
            elif k == i:
                # T_i L_i = L_{i+1} T_i - (q-1) L_{i+1}
                upper = self._push(w_prev, i + 1)
                out = self.mul_T(dict(upper), i)
                self.add_into(out, upper, -C.qm1)
            else:
                # T_i L_{i+1} = L_i T_i + (q-1) L_{i+1}
                out = self.mul_T(dict(self._push(w_prev, i)), i)
                self.add_into(out, self._push(w_prev, i + 1), C.qm1)
        self._push_memo[memo_key] = out
        return out

    def _wmul(self, v: Perm, w: Perm) -> dict[Perm, object]:
        """Product ``T_v T_w`` as a dict over permutations (memoized)."""
        if v == self.id_perm:
            return {w: self.coeffs.one}
        if w == self.id_perm:
            return {v: self.coeffs.one}
        memo_key = (v, w)
        hit = self._wmul_memo.get(memo_key)
        if hit is not None:
            return hit
        terms = {(self.zero_exps, v): self.coeffs.one}
        for i in reduced_word(w):
            terms = self.mul_T(terms, i)
        out = {key[1]: c for key, c in terms.items()}
        self._wmul_memo[memo_key] = out
        return out

    # -- right multiplication ---------------------------------------------------

    def mul_T(self, terms: dict, i: int) -> dict:
        """Right-multiply a term dict by ``T_i``."""
        assert 1 <= i <= self.n - 1
        C = self.coeffs
        out: dict[Key, object] = {}
        for (a, w), c in terms.items():
            ws = self._simple_right(w, i)
            if right_length_up(w, i):
                self.add_term(out, (a, ws), c)
            else:
                self.add_term(out, (a, ws), c * C.q)
                self.add_term(out, (a, w), c * C.qm1)
        return out

    def mul_word(self, terms: dict, word) -> dict:
        for i in word:
            terms = self.mul_T(terms, i)
        return terms

    def mul_L(self, terms: dict, k: int, power: int = 1) -> dict:
        """Right-multiply a term dict by ``L_k^power``."""
        assert 1 <= k <= self.n
        for _ in range(power):
            out: dict[Key, object] = {}
            for (a, w), c in terms.items():
                for (b, v), cb in self._push(w, k).items():
                    merged = self._pool_exps(tuple(x + y for x, y in zip(a, b)))
                    self._emit(out, merged, v, c * cb)
            terms = out
        return terms

    # -- left multiplication ----------------------------------------------------

    def lmul_T(self, terms: dict, i: int) -> dict:
        """Left-multiply a term dict by ``T_i`` using the straightening rule
        for ``T_i L_i^x L_{i+1}^y``."""
        assert 1 <= i <= self.n - 1
        C = self.coeffs
        out: dict[Key, object] = {}
        for (a, w), c in terms.items():
            x, y = a[i - 1], a[i]
            if x == y:
                swapped = a
            else:
                e = list(a)
                e[i - 1], e[i] = y, x
                swapped = self._pool_exps(tuple(e))
            sw = self._simple_left(w, i)
            if left_length_up(w, i):
                self._emit(out, swapped, sw, c)
            else:
                self._emit(out, swapped, sw, c * C.q)
                self._emit(out, swapped, w, c * C.qm1)
            cq = c * C.qm1
            for p in range(1, y + 1):
                e = list(a)
                e[i - 1], e[i] = y - p, x + p
                self._emit(out, self._pool_exps(tuple(e)), w, cq)
            for j in range(1, x + 1):
                e = list(a)
                e[i - 1], e[i] = x - j, y + j
                self._emit(out, self._pool_exps(tuple(e)), w, -cq)
        return out

    def lmul_word(self, terms: dict, word) -> dict:
        """Left-multiply by ``T_{word}`` (letters applied right to left)."""
        for i in reversed(word):
            terms = self.lmul_T(terms, i)
        return terms

    # -- general products and star ---------------------------------------------

    def mul_terms(self, A: dict, B: dict) -> dict:
        """Product of two term dicts."""
        out: dict[Key, object] = {}
        by_exps: dict[tuple[int, ...], list] = {}
        for (a, w), c in B.items():
            by_exps.setdefault(a, []).append((w, c))
        for a, group in by_exps.items():
            left = A
            for k in range(1, self.n + 1):
                if a[k - 1]:
                    left = self.mul_L(left, k, a[k - 1])
            for w, c in group:
                prod = self.mul_word(left, reduced_word(w)) if w != self.id_perm else left
                self.add_into(out, prod, c)
        return out

    def star_terms(self, terms: dict) -> dict:
        """The anti-automorphism fixing every ``T_i`` and ``L_k``."""
        out: dict[Key, object] = {}
        for (a, w), c in terms.items():
            cur = {(self.zero_exps, inverse(w)): self.coeffs.one}
            for k in range(1, self.n + 1):
                if a[k - 1]:
                    cur = self.mul_L(cur, k, a[k - 1])
            self.add_into(out, cur, c)
        return out

    # -- element constructors ----------------------------------------------------

    def element(self, terms: dict) -> "Element":
        return Element(self, terms)

    def zero_element(self) -> "Element":
        return Element(self, {})

    def one_element(self) -> "Element":
        return Element(self, {(self.zero_exps, self.id_perm): self.coeffs.one})

    def scalar_element(self, c) -> "Element":
        return Element(self, {(self.zero_exps, self.id_perm): c} if c else {})

    def t_gen(self, i: int) -> "Element":
        assert 1 <= i <= self.n - 1
        return Element(
            self, {(self.zero_exps, apply_simple_right(self.id_perm, i)): self.coeffs.one}
        )

    def t_word_element(self, word) -> "Element":
        terms = {(self.zero_exps, self.id_perm): self.coeffs.one}
        return Element(self, self.mul_word(terms, word))

    def t_perm_element(self, w: Perm) -> "Element":
        return Element(self, {(self.zero_exps, w): self.coeffs.one})

    def l_gen(self, k: int) -> "Element":
        """``L_k`` in normal form (already reduced when ``r = 1``)."""
        assert 1 <= k <= self.n
        exps = [0] * self.n
        exps[k - 1] = 1
        out: dict[Key, object] = {}
        self._emit(out, tuple(exps), self.id_perm, self.coeffs.one)
        return Element(self, out)


class Element:
    """An algebra element: a context plus a normal-form term dict.

    Supports ``+``, ``-``, ``*`` (elements and coefficient scalars), ``==``,
    and truthiness.

    >>> from .coeffs import GenericCoeffs
    >>> ctx = AlgebraContext(2, 3, GenericCoeffs(2))
    >>> T1, T2 = ctx.t_gen(1), ctx.t_gen(2)
    >>> T1 * T2 * T1 == T2 * T1 * T2
    True
    """

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: AlgebraContext, terms: dict):
        self.ctx = ctx
        self.terms = terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        assert self.ctx is other.ctx, "elements from different contexts"
        if self.terms.keys() != other.terms.keys():
            return False
        return all(self.terms[k] == other.terms[k] for k in self.terms)

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "Element") -> "Element":
        assert self.ctx is other.ctx
        out = dict(self.terms)
        self.ctx.add_into(out, other.terms)
        return Element(self.ctx, out)

    def __sub__(self, other: "Element") -> "Element":
        assert self.ctx is other.ctx
        out = dict(self.terms)
        self.ctx.add_into(out, other.terms, -self.ctx.coeffs.one)
        return Element(self.ctx, out)

    def __neg__(self) -> "Element":
        return Element(self.ctx, {k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Element):
            assert self.ctx is other.ctx
            return Element(self.ctx, self.ctx.mul_terms(self.terms, other.terms))
        return Element(self.ctx, self.ctx.scale_terms(self.terms, other))

    def __rmul__(self, other):
        # coefficient scalars commute with everything
        return self * other

    def star(self) -> "Element":
        return Element(self.ctx, self.ctx.star_terms(self.terms))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0])

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (a, w), c in self.sorted_terms():
            factors = []
            for k, e in enumerate(a, start=1):
                if e:
                    factors.append(f"L{k}" if e == 1 else f"L{k}^{e}")
            if w != self.ctx.id_perm:
                factors.append("T[" + ",".join(str(i) for i in reduced_word(w)) + "]")
            body = "*".join(factors) if factors else "1"
            parts.append(f"({coeff_pretty(c)})*{body}")
        return " + ".join(parts)

    def to_json(self):
        return {
            "r": self.ctx.r,
            "n": self.ctx.n,
            "terms": [
                [coeff_to_json(c), list(a), list(w)] for (a, w), c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, ctx: AlgebraContext, data) -> "Element":
        assert data["r"] == ctx.r and data["n"] == ctx.n, "context mismatch"
        terms = {}
        for coeff_data, a, w in data["terms"]:
            key = (tuple(int(x) for x in a), tuple(int(x) for x in w))
            terms[key] = coeff_from_json(ctx.coeffs, coeff_data)
        return cls(ctx, {k: c for k, c in terms.items() if c})


# ---------------------------------------------------------------------------
# Structural elements
# ---------------------------------------------------------------------------


def _row_letter_blocks(shape: Multicomposition) -> list[list[int]]:
    """Letters of each row of the row-filled tableau, in reading order."""
    blocks = []
    start = 0
    for comp in shape.comps:
        for row_len in comp:
            blocks.append(list(range(start + 1, start + row_len + 1)))
            start += row_len
    return blocks


def x_of(ctx: AlgebraContext, shape: Multicomposition) -> Element:
    """Sum of ``T_w`` over the row stabilizer of the row-filled tableau.

    >>> from .coeffs import GenericCoeffs
    >>> ctx = AlgebraContext(1, 3, GenericCoeffs(1))
    >>> len(x_of(ctx, Multicomposition(((2, 1),))).terms)
    2
    """
    assert shape.size == ctx.n
    blocks = [b for b in _row_letter_blocks(shape) if len(b) > 1]
    terms: dict[Key, object] = {}
    one = ctx.coeffs.one
    for assignment in itertools.product(*(itertools.permutations(b) for b in blocks)):
        img = list(ctx.id_perm)
        for letters, images in zip(blocks, assignment):
            for x, y in zip(letters, images):
                img[x - 1] = y
        terms[(ctx.zero_exps, tuple(img))] = one
    if not blocks:
        terms[(ctx.zero_exps, ctx.id_perm)] = one
    return Element(ctx, terms)


def _x_factor_words(shape: Multicomposition) -> list[list[tuple[int, ...]]]:
    """The row-stabilizer sum as an ordered product of coset sums.

    For a row on consecutive letters ``a .. a+k-1`` the symmetric group builds
    up one letter at a time, so its ``T``-sum factors as the product over
    ``j = 2..k`` of ``1 + T_{a+j-2} + T_{a+j-2}T_{a+j-3} + ...``; distinct
    rows commute.  Each factor is returned as a list of reduced words.
    """
    factors: list[list[tuple[int, ...]]] = []
    for block in _row_letter_blocks(shape):
        a = block[0]
        for j in range(2, len(block) + 1):
            top = a + j - 2
            words: list[tuple[int, ...]] = [()]
            for t in range(1, j):
                words.append(tuple(range(top, top - t, -1)))
            factors.append(words)
    return factors


def mul_x(ctx: AlgebraContext, terms: dict, shape: Multicomposition) -> dict:
    """Right-multiply a term dict by ``x_of(shape)`` factor by factor.

    Equivalent to multiplying by the expanded stabilizer sum, but the work per
    factor is a handful of short word multiplications, so the cost scales with
    the size of the result rather than with the order of the stabilizer.

    >>> from .coeffs import GenericCoeffs
    >>> ctx = AlgebraContext(1, 4, GenericCoeffs(1))
    >>> shape = Multicomposition(((3, 1),))
    >>> y = ctx.t_gen(2) * ctx.l_gen(3)
    >>> Element(ctx, mul_x(ctx, y.terms, shape)) == y * x_of(ctx, shape)
    True
    """
    for words in _x_factor_words(shape):
        out: dict[Key, object] = {}
        for word in words:
            ctx.add_into(out, ctx.mul_word(terms, word) if word else terms)
        terms = out
    return terms


def lmul_x(ctx: AlgebraContext, terms: dict, shape: Multicomposition) -> dict:
    """Left-multiply a term dict by ``x_of(shape)``, factor by factor in
    reverse order.

    >>> from .coeffs import GenericCoeffs
    >>> ctx = AlgebraContext(1, 4, GenericCoeffs(1))
    >>> shape = Multicomposition(((3, 1),))
    >>> y = ctx.t_gen(2) * ctx.l_gen(3)
    >>> Element(ctx, lmul_x(ctx, y.terms, shape)) == x_of(ctx, shape) * y
    True
    """
    for words in reversed(_x_factor_words(shape)):
        out: dict[Key, object] = {}
        for word in words:
            ctx.add_into(out, ctx.lmul_word(terms, word) if word else terms)
        terms = out
    return terms


def u_plus(ctx: AlgebraContext, shape: Multicomposition) -> Element:
    """Product of ``(L_i - Q_s)`` over ``s = 2..r`` and ``i`` up to the
    number of boxes in components before ``s``.  Pure-``L``, and every
    exponent stays below ``r``.

    >>> from .coeffs import GenericCoeffs
    >>> ctx = AlgebraContext(2, 3, GenericCoeffs(2))
    >>> u = u_plus(ctx, Multicomposition(((2,), (1,))))
    >>> sorted(a for (a, w) in u.terms)
    [(0, 0, 0), (0, 1, 0), (1, 0, 0), (1, 1, 0)]
    """
    assert shape.size == ctx.n and shape.r == ctx.r
    C = ctx.coeffs
    exps_terms: dict[tuple[int, ...], object] = {ctx.zero_exps: C.one}
    for s in range(2, ctx.r + 1):
        Qs = C.Q(s)
        for i in range(1, shape.bar(s) + 1):
            nxt: dict[tuple[int, ...], object] = {}
            for a, c in exps_terms.items():
                up = list(a)
                up[i - 1] += 1
                ku = tuple(up)
                prev = nxt.get(ku)
                nxt[ku] = c if prev is None else prev + c
                low = c * Qs
                prev = nxt.get(a)
                s2 = -low if prev is None else prev - low
                if s2:
                    nxt[a] = s2
                else:
                    nxt.pop(a, None)
            exps_terms = nxt
    return Element(ctx, {(a, ctx.id_perm): c for a, c in exps_terms.items()})


def mul_u_plus(ctx: AlgebraContext, terms: dict, shape: Multicomposition) -> dict:
    """Right-multiply a term dict by ``u_plus(shape)`` factor by factor.

    Each factor ``(L_i - Q_s)`` costs one ``mul_L`` pass plus a scaled merge,
    so the work scales with the size of the running product instead of with
    the number of monomials in the expanded ``u_plus``.

    >>> from .coeffs import GenericCoeffs
    >>> ctx = AlgebraContext(2, 3, GenericCoeffs(2))
    >>> shape = Multicomposition(((2,), (1,)))
    >>> y = ctx.t_gen(1) * ctx.l_gen(2)
    >>> Element(ctx, mul_u_plus(ctx, y.terms, shape)) == y * u_plus(ctx, shape)
    True
    """
    C = ctx.coeffs
    for s in range(2, ctx.r + 1):
        minus_Q = -C.Q(s)
        for i in range(1, shape.bar(s) + 1):
            nxt = ctx.mul_L(terms, i)
            ctx.add_into(nxt, terms, minus_Q)
            terms = nxt
    return terms


def m_of(ctx: AlgebraContext, shape: Multicomposition) -> Element:
    """The standard module generator: ``u_plus(shape) * x_of(shape)``.

    The two factors multiply by a plain cartesian merge (one is pure-``L``
    with identity permutations, the other pure-``T`` with zero exponents).
    """
    u = u_plus(ctx, shape)
    x = x_of(ctx, shape)
    terms: dict[Key, object] = {}
    for (a, _), cu in u.terms.items():
        for (_, w), _cx in x.terms.items():
            terms[(a, w)] = cu
    return Element(ctx, terms)


def coset_sum(ctx: AlgebraContext, m: int, eta: tuple[int, ...]) -> Element:
    """Sum of ``T_w`` over the minimal-length right coset representatives of
    the Young subgroup of shape ``eta`` on the letters ``m+1 .. m+|eta|``.

    Representatives are enumerated as order-preserving distributions of the
    letters into the rows.

    >>> from .coeffs import GenericCoeffs
    >>> ctx = AlgebraContext(1, 3, GenericCoeffs(1))
    >>> sorted(reduced_word(w) for (_, w) in coset_sum(ctx, 0, (2, 1)).terms)
    [(), (2,), (2, 1)]
    """
    sizes = [p for p in eta if p > 0]
    total = sum(sizes)
    assert m + total <= ctx.n
    letters = list(range(m + 1, m + total + 1))
    one = ctx.coeffs.one
    terms: dict[Key, object] = {}

    def distribute(remaining: tuple[int, ...], row: int, images: dict[int, int]):
        if row == len(sizes):
            img = list(ctx.id_perm)
            for x, y in images.items():
                img[x - 1] = y
            terms[(ctx.zero_exps, tuple(img))] = one
            return
        start = m + sum(sizes[:row])
        for chosen in itertools.combinations(remaining, sizes[row]):
            nxt = dict(images)
            for p, y in enumerate(chosen):
                nxt[start + p + 1] = y
            rest = tuple(x for x in remaining if x not in chosen)
            distribute(rest, row + 1, nxt)

    distribute(tuple(letters), 0, {})
    return Element(ctx, terms)


def descending_word(t: int, s: int) -> tuple[int, ...]:
    """The word ``(t-1, t-2, ..., s)``; empty when ``t == s``.

    >>> descending_word(5, 2)
    (4, 3, 2)
    >>> descending_word(3, 3)
    ()
    """
    assert s <= t
    return tuple(range(t - 1, s - 1, -1))


def coset_sum_product(ctx: AlgebraContext, m: int, a: int, b: int) -> Element:
    """Two-row coset sum ``C(m; (a, b))`` built as a sum of products of
    descending words: one term per increasing tuple
    ``m+1 <= i_1 < ... < i_b <= m+a+b``, with the ``k``-th factor the word
    ``T_{m+a+k-1} ... T_{i_k}``.

    Serves as an independent route to :func:`coset_sum` for two-row shapes.
    """
    total = ctx.zero_element()
    for combo in itertools.combinations(range(m + 1, m + a + b + 1), b):
        word: list[int] = []
        for k, i_k in enumerate(combo, start=1):
            word.extend(descending_word(m + a + k, i_k))
        total = total + ctx.t_word_element(tuple(word))
    return total


def shift_generator(ctx: AlgebraContext, shape: Multicomposition, s: int, d: int, t: int) -> Element:
    """The two-row shuffle element attached to rows ``d, d+1`` of component
    ``s``: the coset sum ``C(boxes before row d; (row_d, t))``."""
    assert 1 <= s <= shape.r
    assert 1 <= d < shape.rows(s), "needs a row below to draw boxes from"
    assert 1 <= t <= shape.row_length(s, d + 1), "cannot move more boxes than the row holds"
    m = shape.bar_row(d - 1, s)
    return coset_sum(ctx, m, (shape.row_length(s, d), t))


def transfer_generator(ctx: AlgebraContext, shape: Multicomposition, s: int) -> Element:
    """The element ``L_k - Q_{s+1}`` where ``k`` indexes the first box of
    component ``s + 1``."""
    assert 1 <= s <= shape.r - 1
    assert shape.component(s + 1), "component to transfer from is empty"
    k = shape.bar(s + 1) + 1
    C = ctx.coeffs
    return ctx.l_gen(k) - ctx.scalar_element(C.Q(s + 1))


def m_st(ctx: AlgebraContext, shape: Multicomposition, s_tab, t_tab) -> Element:
    """The cellular-style element ``T*_{d(s)} m_shape T_{d(t)}`` for two
    row-standard tableaux of the given shape."""
    from .tableaux import d_of

    base = m_of(ctx, shape)
    ds = d_of(s_tab)
    terms = ctx.lmul_word(base.terms, reduced_word(inverse(ds)))
    terms = ctx.mul_word(terms, reduced_word(d_of(t_tab)))
    return Element(ctx, terms)


def m_semistandard(ctx: AlgebraContext, typed, t_tab) -> Element:
    """The sum of :func:`m_st` over all standard tableaux whose entry types
    match ``typed``:

        sum_s T_{d(s)^-1} * m_shape * T_{d(t)}.

    Evaluation order matters enormously here.  ``m_shape = u_plus * x`` is
    huge, so the left words are applied to the small pure-L ``u_plus`` factor
    first; the row-stabilizer sum is then multiplied in factor by factor
    (:func:`mul_x`), and the right word last.  Summand by summand this is
    ``T_{d(s)^-1} * u_plus * x * T_{d(t)}``, the defining expression.
    """
    from .tableaux import d_of, standard_with_type

    shape = typed.shape
    lam = typed.type_shape
    u = u_plus(ctx, shape)
    acc: dict = {}
    for s_tab in standard_with_type(shape, lam, typed):
        ds_inv = inverse(d_of(s_tab))
        ctx.add_into(acc, ctx.lmul_word(u.terms, reduced_word(ds_inv)))
    acc = mul_x(ctx, acc, shape)
    return Element(ctx, ctx.mul_word(acc, reduced_word(d_of(t_tab))))


def hom_image(ctx: AlgebraContext, typed) -> Element:
    """The image of the cyclic generator under the basis homomorphism into the
    permutation module of ``typed.shape`` labelled by ``typed``:

        m_shape * sum of T_{d(t)} over standard t with type ``typed``.

    Note the typed side sits on the *right* of ``m_shape`` here, while
    :func:`m_semistandard` places it on the left; the two elements are images
    of each other under the ``*`` involution.

    >>> from .coeffs import GenericCoeffs
    >>> from .shapes import Multicomposition
    >>> from .tableaux import enumerate_semistandard
    >>> nu = Multicomposition(((5,), (2,)))
    >>> lam = Multicomposition(((2, 2), (2, 1)))
    >>> ctx = AlgebraContext(2, 7, GenericCoeffs(2))
    >>> S1, S2 = enumerate_semistandard(nu, lam)
    >>> m = m_of(ctx, nu)
    >>> hom_image(ctx, S1) == m * (ctx.one_element() + ctx.t_gen(5))
    True
    >>> hom_image(ctx, S2) == m * ctx.t_gen(5) * ctx.t_gen(6)
    True
    """
    from .tableaux import d_of, standard_with_type

    shape = typed.shape
    lam = typed.type_shape
    base = m_of(ctx, shape)
    out: dict = {}
    for t_tab in standard_with_type(shape, lam, typed):
        ctx.add_into(out, ctx.mul_word(base.terms, reduced_word(d_of(t_tab))))
    return Element(ctx, out)


def m_semistandard_product(ctx: AlgebraContext, typed) -> Element:
    """Closed product form of the semistandard element at the row-filled
    tableau of ``typed.shape``:

        x_lam * T_w * u_plus(shape) * prod over rows (x, y) of shape of
        coset_sum(bar_row(x-1, y), Gamma(x, y))

    where ``w = d(transport_tableau(typed))`` and ``Gamma(x, y)`` counts, for
    each label from ``(x, y)`` onward (rest of component ``y``, then later
    components), how many boxes of row ``x``, component ``y`` carry it.  The
    coset sums land in disjoint letter blocks, so their order is immaterial;
    they commute with ``u_plus(shape)`` because they only permute letters
    within rows of the row-filled tableau.

    An independent route to the same element as
    ``m_semistandard(ctx, typed, initial_tableau(typed.shape))``.

    >>> from .coeffs import GenericCoeffs
    >>> from .shapes import Multicomposition
    >>> from .tableaux import enumerate_semistandard, initial_tableau
    >>> nu = Multicomposition(((5,), (2,)))
    >>> lam = Multicomposition(((2, 2), (2, 1)))
    >>> ctx = AlgebraContext(2, 7, GenericCoeffs(2))
    >>> for S in enumerate_semistandard(nu, lam):
    ...     assert m_semistandard_product(ctx, S) == m_semistandard(ctx, S, initial_tableau(nu))
    """
    from .tableaux import d_of, transport_tableau

    shape = typed.shape
    lam = typed.type_shape
    labels = [(i, j) for j in range(1, lam.r + 1) for i in range(1, lam.rows(j) + 1)]
    w = d_of(transport_tableau(typed))
    # evaluate right to left: u_plus times the coset sums is cheap (the L's
    # never move past a T), and the leading stabilizer sum goes in last,
    # factor by factor.
    acc = dict(u_plus(ctx, shape).terms)
    for y in range(1, shape.r + 1):
        for x in range(1, shape.rows(y) + 1):
            if shape.row_length(y, x) == 0:
                continue
            tail = [lab for lab in labels if lab[1] > y or (lab[1] == y and lab[0] >= x)]
            gamma = tuple(typed.count_in_row(x, y, lab) for lab in tail)
            csum = coset_sum(ctx, shape.bar_row(x - 1, y), gamma)
            out: dict = {}
            for (_a, v), c in csum.terms.items():
                ctx.add_into(out, ctx.mul_word(acc, reduced_word(v)), c)
            acc = out
    acc = ctx.lmul_word(acc, reduced_word(w))
    return Element(ctx, lmul_x(ctx, acc, lam))


if __name__ == "__main__":
    import doctest

    doctest.testmod()
