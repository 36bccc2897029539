"""Permutations of {1, ..., n} in one-line notation.

A permutation ``w`` is a tuple of the values ``w(1), ..., w(n)``, so
``w[i - 1]`` is the image of ``i``.  Composition is left-to-right:
``compose(u, v)`` means "apply ``u``, then ``v``".  With this convention a
product of basis elements ``T_u * T_v`` in the Hecke algebra equals
``T_{compose(u, v)}`` whenever the lengths add, and reduced words simply
concatenate.

Right multiplication by the simple transposition ``s_i`` swaps the *values*
``i`` and ``i + 1``; left multiplication swaps the *positions* ``i`` and
``i + 1``.

>>> u = (2, 1, 3)
>>> v = (1, 3, 2)
>>> compose(u, v)
(3, 1, 2)
>>> length((3, 1, 2))
2
>>> reduced_word((3, 1, 2))
(1, 2)
>>> compose(inverse((3, 1, 2)), (3, 1, 2)) == identity(3)
True
"""

from __future__ import annotations

from itertools import permutations as _itertools_permutations

__all__ = [
    "Perm",
    "identity",
    "is_perm",
    "inverse",
    "compose",
    "length",
    "apply_simple_right",
    "apply_simple_left",
    "right_length_up",
    "left_length_up",
    "reduced_word",
    "perm_from_word",
    "permutations_of_letters",
    "transposition",
]

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    """The identity permutation of {1, ..., n}.

    >>> identity(4)
    (1, 2, 3, 4)
    """
    return tuple(range(1, n + 1))


def is_perm(w: tuple[int, ...]) -> bool:
    """True if ``w`` is a permutation of {1, ..., len(w)} in one-line notation.

    >>> is_perm((2, 3, 1))
    True
    >>> is_perm((1, 1, 2))
    False
    """
    return sorted(w) == list(range(1, len(w) + 1))


def inverse(w: Perm) -> Perm:
    """Inverse permutation.

    >>> inverse((3, 1, 2))
    (2, 3, 1)
    """
    inv = [0] * len(w)
    for pos, val in enumerate(w):
        inv[val - 1] = pos + 1
    return tuple(inv)


def compose(u: Perm, v: Perm) -> Perm:
    """Apply ``u`` first and then ``v``.

    >>> compose((2, 1, 3), (1, 3, 2))
    (3, 1, 2)
    """
    return tuple(v[u[i] - 1] for i in range(len(u)))


def length(w: Perm) -> int:
    """Coxeter length = number of inversions.

    >>> length((1, 2, 3))
    0
    >>> length((3, 2, 1))
    3
    """
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def apply_simple_right(w: Perm, i: int) -> Perm:
    """``w * s_i`` — swap the values ``i`` and ``i + 1`` in ``w``.

    >>> apply_simple_right((1, 2, 3), 1)
    (2, 1, 3)
    """
    pi = w.index(i)
    pj = w.index(i + 1)
    out = list(w)
    out[pi], out[pj] = i + 1, i
    return tuple(out)


def apply_simple_left(w: Perm, i: int) -> Perm:
    """``s_i * w`` — swap the entries at positions ``i`` and ``i + 1``.

    >>> apply_simple_left((3, 1, 2), 1)
    (1, 3, 2)
    """
    out = list(w)
    out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


def right_length_up(w: Perm, i: int) -> bool:
    """True iff ``length(w * s_i) == length(w) + 1``.

    This holds exactly when the value ``i`` appears before ``i + 1``.

    >>> right_length_up((1, 2, 3), 1)
    True
    >>> right_length_up((2, 1, 3), 1)
    False
    """
    return w.index(i) < w.index(i + 1)


def left_length_up(w: Perm, i: int) -> bool:
    """True iff ``length(s_i * w) == length(w) + 1``.

    This holds exactly when ``w(i) < w(i + 1)``.

    >>> left_length_up((1, 3, 2), 2)
    False
    """
    return w[i - 1] < w[i]


_REDUCED_WORD_CACHE: dict[Perm, tuple[int, ...]] = {}


def reduced_word(w: Perm) -> tuple[int, ...]:
    """A reduced word for ``w``: indices ``(i_1, ..., i_l)`` with
    ``w = s_{i_1} * ... * s_{i_l}`` and ``l = length(w)``.

    The word is canonical: at each step the smallest descent is stripped
    from the right.

    >>> reduced_word((1, 2, 3))
    ()
    >>> reduced_word((2, 1, 3))
    (1,)
    >>> w = (3, 1, 2)
    >>> perm_from_word(3, reduced_word(w)) == w
    True
    """
    cached = _REDUCED_WORD_CACHE.get(w)
    if cached is not None:
        return cached
    word: list[int] = []
    cur = w
    n = len(w)
    ident = identity(n)
    while cur != ident:
        for i in range(1, n):
            if cur.index(i) > cur.index(i + 1):
                word.append(i)
                cur = apply_simple_right(cur, i)
                break
    word.reverse()
    result = tuple(word)
    _REDUCED_WORD_CACHE[w] = result
    return result


def perm_from_word(n: int, word: tuple[int, ...] | list[int]) -> Perm:
    """The permutation ``s_{i_1} * ... * s_{i_l}`` of {1, ..., n}.

    >>> perm_from_word(3, (1, 2))
    (3, 1, 2)
    """
    w = identity(n)
    for i in word:
        w = apply_simple_right(w, i)
    return w


def permutations_of_letters(n: int, letters: tuple[int, ...]) -> list[Perm]:
    """All permutations of {1, ..., n} that fix everything outside ``letters``.

    >>> sorted(permutations_of_letters(3, (2, 3)))
    [(1, 2, 3), (1, 3, 2)]
    """
    letters = tuple(sorted(letters))
    base = list(identity(n))
    out: list[Perm] = []
    for images in _itertools_permutations(letters):
        w = base[:]
        for src, dst in zip(letters, images):
            w[src - 1] = dst
        out.append(tuple(w))
    return out


def transposition(n: int, a: int, b: int) -> Perm:
    """The transposition exchanging ``a`` and ``b``.

    >>> transposition(4, 2, 4)
    (1, 4, 3, 2)
    """
    w = list(identity(n))
    w[a - 1], w[b - 1] = b, a
    return tuple(w)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
