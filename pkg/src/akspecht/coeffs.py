"""Exact coefficient arithmetic for the three evaluation modes.

*Generic* mode works over the fraction field of ``Z[q, q^-1, Q_1..Q_r]``:
:class:`MultiPoly` is a sparse Laurent polynomial (the exponent of ``q`` may
be negative, ``Q_i`` exponents are non-negative) and :class:`RatFunc` is a
numerator/denominator pair.  Fractions are *not* reduced to lowest terms —
only integer content, a common monomial factor, and the denominator's sign
are normalized — so equality tests cross-multiply.  In practice almost every
denominator is 1 and the arithmetic short-circuits to plain polynomials.

*Specialized* modes assign rational values (plain :class:`fractions.Fraction`
arithmetic) or work in the cyclotomic field ``Q[x]/Phi_e(x)`` with ``q``
mapped to the class of ``x``, a primitive ``e``-th root of unity
(:class:`CycElem`).

>>> P = GenericCoeffs(2)
>>> (P.q - P.one) + P.one == P.q
True
>>> F = CyclotomicField(3)
>>> F.one + F.x + F.x ** 2
CycElem(0)
>>> specialize(P.q + P.Q(1), {"q": Fraction(2), "Q1": Fraction(3), "Q2": Fraction(1)})
Fraction(5, 1)
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

__all__ = [
    "MultiPoly",
    "RatFunc",
    "CyclotomicField",
    "CycElem",
    "GenericCoeffs",
    "RationalCoeffs",
    "CyclotomicCoeffs",
    "specialize",
    "coeff_to_json",
    "coeff_from_json",
    "coeff_pretty",
]

Coeff = int | Fraction


def _norm_rat(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def _rat_to_json(c: Coeff) -> int | str:
    c = _norm_rat(c)
    return c if isinstance(c, int) else f"{c.numerator}/{c.denominator}"


def _rat_from_json(data: int | str) -> Coeff:
    if isinstance(data, int):
        return data
    return _norm_rat(Fraction(data))


class MultiPoly:
    """Sparse polynomial in ``q, Q_1, ..., Q_r``, Laurent in ``q``.

    Terms map exponent tuples ``(e_q, e_Q1, ..., e_Qr)`` to nonzero rational
    coefficients.  Instances are immutable by convention.

    >>> q = MultiPoly.q_var(1)
    >>> (q - 1) * (q + 1) == q ** 2 - MultiPoly.one(1)
    True
    >>> print((q ** 4 * MultiPoly.Q_var(1, 1) - MultiPoly.q_power(1, -1) * 2).pretty())
    q^4*Q1 - 2*q^-1
    """

    __slots__ = ("r", "terms")

    def __init__(self, r: int, terms: dict[tuple[int, ...], Coeff]):
        self.r = r
        self.terms = {e: _norm_rat(c) for e, c in terms.items() if c}

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, r: int) -> "MultiPoly":
        return cls(r, {})

    @classmethod
    def one(cls, r: int) -> "MultiPoly":
        return cls(r, {(0,) * (r + 1): 1})

    @classmethod
    def const(cls, r: int, c: Coeff) -> "MultiPoly":
        return cls(r, {(0,) * (r + 1): c})

    @classmethod
    def q_var(cls, r: int) -> "MultiPoly":
        return cls.q_power(r, 1)

    @classmethod
    def q_power(cls, r: int, k: int) -> "MultiPoly":
        return cls(r, {(k,) + (0,) * r: 1})

    @classmethod
    def Q_var(cls, r: int, s: int) -> "MultiPoly":
        assert 1 <= s <= r
        exps = [0] * (r + 1)
        exps[s] = 1
        return cls(r, {tuple(exps): 1})

    # -- ring operations ---------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self == MultiPoly.const(self.r, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.r == other.r and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.r, {e: -c for e, c in self.terms.items()})

    def __add__(self, other: "MultiPoly | Coeff") -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.r, other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MultiPoly(self.r, out)

    __radd__ = __add__

    def __sub__(self, other: "MultiPoly | Coeff") -> "MultiPoly":
        return self + (-other)

    def __rsub__(self, other: Coeff) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other: "MultiPoly | Coeff") -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return MultiPoly.zero(self.r)
            return MultiPoly(self.r, {e: c * other for e, c in self.terms.items()})
        if len(other.terms) == 1:
            ((eb, cb),) = other.terms.items()
            return MultiPoly(
                self.r,
                {tuple(x + y for x, y in zip(e, eb)): c * cb for e, c in self.terms.items()},
            )
        if len(self.terms) == 1:
            return other * self
        out: dict[tuple[int, ...], Coeff] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(e, 0) + ca * cb
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return MultiPoly(self.r, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        assert k >= 0
        out = MultiPoly.one(self.r)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    # -- structure ---------------------------------------------------------

    def lead(self) -> tuple[tuple[int, ...], Coeff]:
        """Lexicographically largest term (exponents compared left to right)."""
        e = max(self.terms)
        return e, self.terms[e]

    def int_content(self) -> Coeff:
        """Positive rational ``c`` with ``self / c`` integer-coefficient and
        content 1; 1 for the zero polynomial.

        >>> (MultiPoly.q_var(0) * 6 - 4).int_content()
        2
        """
        if not self.terms:
            return 1
        num_gcd = 0
        den_lcm = 1
        for c in self.terms.values():
            f = Fraction(c)
            num_gcd = gcd(num_gcd, abs(f.numerator))
            den_lcm = den_lcm * f.denominator // gcd(den_lcm, f.denominator)
        return _norm_rat(Fraction(num_gcd, den_lcm))

    def min_exps(self) -> tuple[int, ...]:
        assert self.terms
        cols = zip(*self.terms)
        return tuple(min(col) for col in cols)

    def shift(self, delta: tuple[int, ...]) -> "MultiPoly":
        """Multiply by the monomial with exponent vector ``delta``."""
        return MultiPoly(
            self.r, {tuple(x + d for x, d in zip(e, delta)): c for e, c in self.terms.items()}
        )

    def divide_exact(self, other: "MultiPoly") -> "MultiPoly":
        """Exact polynomial division; asserts there is no remainder.

        >>> q = MultiPoly.q_var(0)
        >>> (q ** 2 - 1).divide_exact(q - 1) == q + 1
        True
        """
        assert other, "division by zero polynomial"
        rem = self
        quot: dict[tuple[int, ...], Coeff] = {}
        le, lc = other.lead()
        while rem:
            re, rc = rem.lead()
            de = tuple(x - y for x, y in zip(re, le))
            assert all(d >= 0 for d in de[1:]), "inexact division (Q exponent)"
            dc = _norm_rat(Fraction(rc) / Fraction(lc))
            quot[de] = dc
            rem = rem - other.shift(de) * dc
        return MultiPoly(self.r, quot)

    def evaluate(self, q_val, Q_vals):
        """Evaluate with ``q -> q_val`` and ``Q_s -> Q_vals[s - 1]``; values
        may live in any field supporting ``+``, ``*`` and division for the
        negative powers of ``q``."""
        total = None
        for e, c in self.terms.items():
            term = q_val ** e[0] if e[0] else None
            for s in range(1, self.r + 1):
                if e[s]:
                    f = Q_vals[s - 1] ** e[s]
                    term = f if term is None else term * f
            term = c if term is None else term * c
            total = term if total is None else total + term
        return 0 if total is None else total

    # -- display -----------------------------------------------------------

    def _term_pretty(self, e: tuple[int, ...], c: Coeff) -> str:
        names = []
        if e[0]:
            names.append("q" if e[0] == 1 else f"q^{e[0]}")
        for s in range(1, self.r + 1):
            if e[s]:
                names.append(f"Q{s}" if e[s] == 1 else f"Q{s}^{e[s]}")
        body = "*".join(names)
        if not body:
            return str(abs(c))
        a = abs(c)
        return body if a == 1 else f"{a}*{body}"

    def pretty(self) -> str:
        """Canonical display, terms in decreasing lexicographic order.

        >>> print((MultiPoly.q_power(1, 4) * MultiPoly.Q_var(1, 1) - MultiPoly.q_var(1)).pretty())
        q^4*Q1 - q
        """
        if not self.terms:
            return "0"
        parts: list[str] = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            body = self._term_pretty(e, c)
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def to_json(self) -> list[list]:
        return [
            [_rat_to_json(self.terms[e]), *e] for e in sorted(self.terms, reverse=True)
        ]

    @classmethod
    def from_json(cls, r: int, data: list[list]) -> "MultiPoly":
        return cls(r, {tuple(int(x) for x in row[1:]): _rat_from_json(row[0]) for row in data})


class RatFunc:
    """Fraction of :class:`MultiPoly` values, normalized by integer content,
    a common monomial factor, and the sign of the denominator's leading term
    (never by polynomial gcd).

    >>> P = GenericCoeffs(1)
    >>> x = P.q - P.one
    >>> x / (P.q ** 2 - P.one) == P.one / (P.q + P.one)
    True
    """

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: MultiPoly):
        self.num = num
        self.den = den

    @classmethod
    def make(cls, num: MultiPoly, den: MultiPoly) -> "RatFunc":
        assert den, "zero denominator"
        r = num.r
        if not num:
            return cls(num, MultiPoly.one(r))
        # q is a unit: shift both parts so the denominator's q-degree starts at 0
        dmin = den.min_exps()
        if dmin[0]:
            delta = (-dmin[0],) + (0,) * r
            den = den.shift(delta)
            num = num.shift(delta)
        # strip a common Q-monomial factor (Q_s are not units, so only joint)
        nmin = num.min_exps()
        dmin = den.min_exps()
        joint = tuple([0] + [-min(a, b) for a, b in zip(nmin[1:], dmin[1:])])
        if any(joint):
            num = num.shift(joint)
            den = den.shift(joint)
        # joint integer content
        g = gcd_fraction(num.int_content(), den.int_content())
        if g != 1:
            num = MultiPoly(
                r, {e: Fraction(c) / Fraction(g) for e, c in num.terms.items()}
            )
            den = MultiPoly(
                r, {e: Fraction(c) / Fraction(g) for e, c in den.terms.items()}
            )
        # sign-normalize by the denominator's leading term
        if den.lead()[1] < 0:
            num = -num
            den = -den
        return cls(num, den)

    # -- predicates --------------------------------------------------------

    @property
    def r(self) -> int:
        return self.num.r

    def den_is_one(self) -> bool:
        return self.den.terms == {(0,) * (self.r + 1): 1}

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.num == self.den * other
        if not isinstance(other, RatFunc):
            return NotImplemented
        if self.den.terms == other.den.terms:
            return self.num == other.num
        return self.num * other.den == other.num * self.den

    __hash__ = None  # type: ignore[assignment]

    # -- field operations ----------------------------------------------------

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __add__(self, other: "RatFunc | int") -> "RatFunc":
        if isinstance(other, int):
            if not other:
                return self
            return self + RatFunc(MultiPoly.const(self.r, other), MultiPoly.one(self.r))
        if not isinstance(other, RatFunc):
            return NotImplemented
        if self.den.terms == other.den.terms:
            num = self.num + other.num
            if not num:
                return RatFunc(num, MultiPoly.one(self.r))
            return RatFunc(num, self.den)
        return RatFunc.make(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other: "RatFunc | int") -> "RatFunc":
        return self + (-other)

    def __rsub__(self, other: int) -> "RatFunc":
        return (-self) + other

    def __mul__(self, other: "RatFunc | int") -> "RatFunc":
        if isinstance(other, int):
            if not other:
                return RatFunc(MultiPoly.zero(self.r), MultiPoly.one(self.r))
            return RatFunc(self.num * other, self.den)
        if not isinstance(other, RatFunc):
            return NotImplemented
        if self.den_is_one() and other.den_is_one():
            return RatFunc(self.num * other.num, self.den)
        return RatFunc.make(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other: "RatFunc | int") -> "RatFunc":
        if isinstance(other, int):
            assert other
            return RatFunc.make(self.num, self.den * other)
        assert other.num, "division by zero"
        return RatFunc.make(self.num * other.den, self.den * other.num)

    def inv(self) -> "RatFunc":
        assert self.num, "inverting zero"
        return RatFunc.make(self.den, self.num)

    def __pow__(self, k: int) -> "RatFunc":
        if k < 0:
            return self.inv() ** (-k)
        return RatFunc(self.num ** k, self.den ** k) if not self.den_is_one() else RatFunc(
            self.num ** k, self.den
        )

    # -- display -----------------------------------------------------------

    def pretty(self) -> str:
        if self.den_is_one():
            return self.num.pretty()
        return f"({self.num.pretty()}) / ({self.den.pretty()})"

    def __repr__(self) -> str:  # pragma: no cover - debug aid
        return f"RatFunc({self.pretty()})"

    def to_json(self):
        if self.den_is_one():
            return self.num.to_json()
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, r: int, data) -> "RatFunc":
        if isinstance(data, dict):
            return cls(MultiPoly.from_json(r, data["num"]), MultiPoly.from_json(r, data["den"]))
        return cls(MultiPoly.from_json(r, data), MultiPoly.one(r))


def gcd_fraction(a: Coeff, b: Coeff) -> Coeff:
    """Positive generator of the fractional ideal (a, b) over the integers:
    gcd of numerators over lcm of denominators.

    >>> gcd_fraction(Fraction(3, 2), 2)
    Fraction(1, 2)
    """
    fa, fb = Fraction(a), Fraction(b)
    num = gcd(fa.numerator, fb.numerator)
    den = fa.denominator * fb.denominator // gcd(fa.denominator, fb.denominator)
    return _norm_rat(Fraction(num, den))


# ---------------------------------------------------------------------------
# Cyclotomic fields
# ---------------------------------------------------------------------------


def _int_poly_div(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials given as coefficient lists
    (lowest degree first)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        assert c % den[-1] == 0
        q = c // den[-1]
        out[k] = q
        for i, d in enumerate(den):
            num[k + i] -= q * d
    assert not any(num), "inexact polynomial division"
    return out


_CYCLOTOMIC_CACHE: dict[int, list[int]] = {}


def cyclotomic_poly(e: int) -> list[int]:
    """Integer coefficients of the ``e``-th cyclotomic polynomial, lowest
    degree first.

    >>> cyclotomic_poly(3)
    [1, 1, 1]
    >>> cyclotomic_poly(6)
    [1, -1, 1]
    """
    if e in _CYCLOTOMIC_CACHE:
        return _CYCLOTOMIC_CACHE[e]
    poly = [-1] + [0] * (e - 1) + [1]  # x^e - 1
    for d in range(1, e):
        if e % d == 0:
            poly = _int_poly_div(poly, cyclotomic_poly(d))
    _CYCLOTOMIC_CACHE[e] = poly
    return poly


class CyclotomicField:
    """The field ``Q[x]/Phi_e(x)``; the class of ``x`` is a primitive
    ``e``-th root of unity.

    >>> F = CyclotomicField(4)
    >>> F.x * F.x
    CycElem(-1)
    >>> (F.x ** -1) * F.x
    CycElem(1)
    """

    def __init__(self, e: int):
        assert e >= 2, "quantum characteristic must be at least 2"
        self.e = e
        mod = cyclotomic_poly(e)
        self.degree = len(mod) - 1
        self.modulus = tuple(Fraction(c) for c in mod)
        self.zero = CycElem(self, (Fraction(0),) * self.degree)
        self.one = self.from_rational(1)
        if self.degree > 1:
            coeffs = [Fraction(0)] * self.degree
            coeffs[1] = Fraction(1)
            self.x = CycElem(self, tuple(coeffs))
        else:  # e == 2: x = -1
            self.x = self.from_rational(-1)

    def from_rational(self, c: Coeff) -> "CycElem":
        coeffs = [Fraction(0)] * self.degree
        coeffs[0] = Fraction(c)
        return CycElem(self, tuple(coeffs))

    def reduce(self, dense: list[Fraction]) -> tuple[Fraction, ...]:
        dense = list(dense)
        d = self.degree
        for k in range(len(dense) - 1, d - 1, -1):
            c = dense[k]
            if c:
                for i in range(d + 1):
                    dense[k - d + i] -= c * self.modulus[i]
        dense = dense[:d] + [Fraction(0)] * max(0, d - len(dense))
        return tuple(dense[:d])

    def inv(self, a: "CycElem") -> "CycElem":
        """Inverse via the extended Euclidean algorithm in ``Q[x]``."""
        assert any(a.coeffs), "inverting zero"

        def degree(p: list[Fraction]) -> int:
            for i in range(len(p) - 1, -1, -1):
                if p[i]:
                    return i
            return -1

        r0 = list(self.modulus)
        r1 = list(a.coeffs)
        t0 = [Fraction(0)]
        t1 = [Fraction(1)]
        while degree(r1) > 0:
            d0, d1 = degree(r0), degree(r1)
            if d0 < d1:
                r0, r1, t0, t1 = r1, r0, t1, t0
                continue
            factor = r0[d0] / r1[d1]
            shift = d0 - d1
            for i in range(d1 + 1):
                r0[shift + i] -= factor * r1[i]
            grown = max(len(t0), len(t1) + shift)
            t0 = t0 + [Fraction(0)] * (grown - len(t0))
            for i in range(len(t1)):
                t0[shift + i] -= factor * t1[i]
            if degree(r0) < degree(r1):
                r0, r1, t0, t1 = r1, r0, t1, t0
        c = r1[degree(r1)]
        assert degree(r1) == 0, "element not invertible (modulus not squarefree?)"
        inv_coeffs = [x / c for x in t1]
        return CycElem(self, self.reduce(inv_coeffs))


class CycElem:
    """An element of a :class:`CyclotomicField`, as a dense coefficient tuple.

    >>> F = CyclotomicField(3)
    >>> (F.x - F.one) * (F.x + F.one) == F.x ** 2 - F.one
    True
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: CyclotomicField, coeffs: tuple[Fraction, ...]):
        self.field = field
        self.coeffs = coeffs

    def _coerce(self, other) -> "CycElem | None":
        if isinstance(other, CycElem):
            assert other.field.e == self.field.e, "cyclotomic order mismatch"
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return None

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    __hash__ = None  # type: ignore[assignment]

    def __neg__(self) -> "CycElem":
        return CycElem(self.field, tuple(-c for c in self.coeffs))

    def __add__(self, other) -> "CycElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycElem(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other) -> "CycElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "CycElem":
        return (-self) + other

    def __mul__(self, other) -> "CycElem":
        if isinstance(other, (int, Fraction)):
            return CycElem(self.field, tuple(c * other for c in self.coeffs))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self.field.degree
        dense = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        dense[i + j] += a * b
        return CycElem(self.field, self.field.reduce(dense))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "CycElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * self.field.inv(o)

    def __rtruediv__(self, other) -> "CycElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.field.inv(self)

    def __pow__(self, k: int) -> "CycElem":
        if k < 0:
            return self.field.inv(self) ** (-k)
        out = self.field.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def pretty(self) -> str:
        if not any(self.coeffs):
            return "0"
        parts: list[str] = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                body = str(abs(c))
            else:
                var = "x" if i == 1 else f"x^{i}"
                body = var if abs(c) == 1 else f"{abs(c)}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"CycElem({self.pretty()})"

    def to_json(self):
        return {"e": self.field.e, "coeffs": [_rat_to_json(c) for c in self.coeffs]}


# ---------------------------------------------------------------------------
# Coefficient systems (one per evaluation mode)
# ---------------------------------------------------------------------------


class GenericCoeffs:
    """Symbolic mode: elements are :class:`RatFunc` over ``r`` parameters.

    >>> P = GenericCoeffs(2)
    >>> (P.q * P.qinv).pretty()
    '1'
    """

    mode = "generic"

    def __init__(self, r: int):
        self.r = r
        one_poly = MultiPoly.one(r)
        self.one = RatFunc(one_poly, one_poly)
        self.zero = RatFunc(MultiPoly.zero(r), one_poly)
        self.q = RatFunc(MultiPoly.q_var(r), one_poly)
        self.qinv = RatFunc(MultiPoly.q_power(r, -1), one_poly)
        self.qm1 = RatFunc(MultiPoly.q_var(r) - 1, one_poly)
        self._Qs = tuple(
            RatFunc(MultiPoly.Q_var(r, s), one_poly) for s in range(1, r + 1)
        )

    def Q(self, s: int) -> RatFunc:
        return self._Qs[s - 1]

    def from_int(self, k: int) -> RatFunc:
        return RatFunc(MultiPoly.const(self.r, k), MultiPoly.one(self.r))

    def q_power(self, k: int) -> RatFunc:
        return RatFunc(MultiPoly.q_power(self.r, k), MultiPoly.one(self.r))

    def quantum_characteristic(self) -> int | None:
        return None

    def params_json(self):
        return {"mode": "generic", "r": self.r}


class RationalCoeffs:
    """Rational specialization: ``q`` and ``Q_1..Q_r`` are fixed rationals,
    elements are plain :class:`fractions.Fraction` values.

    >>> S = RationalCoeffs(2, Fraction(2), (Fraction(3), Fraction(5)))
    >>> S.q + S.Q(2)
    Fraction(7, 1)
    """

    mode = "rational"

    def __init__(self, r: int, q: Fraction, Qs: tuple[Fraction, ...]):
        assert len(Qs) == r
        q = Fraction(q)
        assert q != 0 and q != 1, "q must avoid 0 and 1"
        self.r = r
        self.q_value = q
        self.Q_values = tuple(Fraction(v) for v in Qs)
        self.one = Fraction(1)
        self.zero = Fraction(0)
        self.q = q
        self.qinv = 1 / q
        self.qm1 = q - 1

    def Q(self, s: int) -> Fraction:
        return self.Q_values[s - 1]

    def from_int(self, k: int) -> Fraction:
        return Fraction(k)

    def q_power(self, k: int) -> Fraction:
        return self.q_value ** k

    def quantum_characteristic(self) -> int | None:
        # 1 + q + ... + q^(e-1) = 0 has no rational solution except q = -1.
        return 2 if self.q_value == -1 else None

    def params_json(self):
        return {
            "mode": "rational",
            "r": self.r,
            "q": _rat_to_json(self.q_value),
            "Q": [_rat_to_json(v) for v in self.Q_values],
        }


class CyclotomicCoeffs:
    """Cyclotomic specialization: ``q`` is a primitive ``e``-th root of unity
    in ``Q[x]/Phi_e(x)``; each ``Q_s`` is a rational multiple of a power of
    ``q``.

    >>> C = CyclotomicCoeffs(2, 3, ((Fraction(1), 0), (Fraction(1), 5)))
    >>> C.Q(2) == C.q ** 5
    True
    >>> C.one + C.q + C.q ** 2
    CycElem(0)
    """

    mode = "cyclotomic"

    def __init__(self, r: int, e: int, Q_specs: tuple[tuple[Fraction, int], ...]):
        assert len(Q_specs) == r
        self.r = r
        self.e = e
        self.field = CyclotomicField(e)
        self.q = self.field.x
        self.one = self.field.one
        self.zero = self.field.zero
        self.qinv = self.q ** -1
        self.qm1 = self.q - self.field.one
        self.Q_specs = tuple((Fraction(c), int(k)) for c, k in Q_specs)
        self.Q_values = tuple(self.q ** k * c for c, k in self.Q_specs)

    def Q(self, s: int) -> CycElem:
        return self.Q_values[s - 1]

    def from_int(self, k: int) -> CycElem:
        return self.field.from_rational(k)

    def q_power(self, k: int) -> CycElem:
        return self.q ** k

    def quantum_characteristic(self) -> int | None:
        return self.e

    def params_json(self):
        return {
            "mode": "cyclotomic",
            "r": self.r,
            "e": self.e,
            "Q": [
                {"coeff": _rat_to_json(c), "q_power": k} for c, k in self.Q_specs
            ],
        }


CoeffSystem = GenericCoeffs | RationalCoeffs | CyclotomicCoeffs


def specialize(x: RatFunc, assignment: dict[str, Fraction], e: int | None = None):
    """Evaluate a generic element under ``{"q": v, "Q1": v_1, ...}``.

    With ``e`` given, values are taken in ``Q[x]/Phi_e(x)`` and each
    assignment value may be either a rational or a ``(coeff, q_power)`` pair.
    Raises :class:`ZeroDivisionError` if the denominator vanishes.

    >>> P = GenericCoeffs(1)
    >>> specialize(P.one / (P.q - P.one), {"q": Fraction(3), "Q1": Fraction(1)})
    Fraction(1, 2)
    """
    r = x.r

    if e is None:
        q_val = Fraction(assignment["q"])
        Q_vals = [Fraction(assignment[f"Q{s}"]) for s in range(1, r + 1)]
    else:
        field = CyclotomicField(e)

        def as_elem(v):
            if isinstance(v, tuple):
                c, k = v
                return field.x ** k * Fraction(c)
            return field.from_rational(v)

        q_val = field.x
        Q_vals = [as_elem(assignment[f"Q{s}"]) for s in range(1, r + 1)]

    num = x.num.evaluate(q_val, Q_vals)
    den = x.den.evaluate(q_val, Q_vals)
    if not den:
        raise ZeroDivisionError("denominator vanishes under this assignment")
    if e is None:
        return Fraction(num) / Fraction(den)
    if not isinstance(num, CycElem):
        num = field.from_rational(num)
    if not isinstance(den, CycElem):
        den = field.from_rational(den)
    return num if den == field.one else num / den


# ---------------------------------------------------------------------------
# Mode-agnostic helpers
# ---------------------------------------------------------------------------


def coeff_to_json(c):
    """Serialize a coefficient from any mode."""
    if isinstance(c, RatFunc):
        return c.to_json()
    if isinstance(c, CycElem):
        return c.to_json()
    return _rat_to_json(c)


def coeff_from_json(system: CoeffSystem, data):
    """Parse a coefficient serialized by :func:`coeff_to_json` in ``system``'s
    mode."""
    if isinstance(system, GenericCoeffs):
        return RatFunc.from_json(system.r, data)
    if isinstance(system, CyclotomicCoeffs):
        assert isinstance(data, dict) and data["e"] == system.e
        coeffs = [Fraction(_rat_from_json(v)) for v in data["coeffs"]]
        return CycElem(system.field, tuple(coeffs))
    return Fraction(_rat_from_json(data))


def coeff_pretty(c) -> str:
    """Human-readable form of a coefficient from any mode."""
    if isinstance(c, (RatFunc, CycElem)):
        return c.pretty()
    return str(_norm_rat(c))


if __name__ == "__main__":
    import doctest

    doctest.testmod()
