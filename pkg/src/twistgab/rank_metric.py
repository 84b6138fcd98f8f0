"""Rank norm and rank distance of words over F_{q^n}.

A word is a plain sequence of :class:`~twistgab.gf.FieldElement`.  Its rank
is the F_q-dimension of the span of its entries.
"""

from __future__ import annotations

from typing import Sequence

from .gf import ExtensionField, FieldElement
from .linalg import rank_mod

Word = Sequence[FieldElement]


def coordinate_matrix(word: Word) -> list[tuple[int, ...]]:
    """One row per entry: its coordinates in the power basis."""
    return [x.coeffs for x in word]


def rank_norm(word: Word) -> int:
    if not word:
        return 0
    return rank_mod(coordinate_matrix(word), word[0].field.q)


def rank_distance(x: Word, y: Word) -> int:
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} != {len(y)}")
    return rank_norm([a - b for a, b in zip(x, y)])


def hamming_weight(word: Word) -> int:
    return sum(1 for x in word if x)


def add_words(x: Word, y: Word) -> list[FieldElement]:
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} != {len(y)}")
    return [a + b for a, b in zip(x, y)]


def random_error(field: ExtensionField, t: int, rng) -> list[FieldElement]:
    """Random length-n error word of rank exactly ``t``.

    The word is u @ M where u holds t F_q-independent elements of F_{q^n}
    and M is a full-rank t x n matrix over F_q; both factors are re-sampled
    until they have rank t.
    """
    length = field.n
    if not 0 <= t <= length:
        raise ValueError(f"error rank {t} out of range [0, {length}]")
    if t == 0:
        return [field.zero] * length
    q = field.q
    while True:
        u = [field.random_element(rng) for _ in range(t)]
        if rank_norm(u) == t:
            break
    while True:
        mat = [[rng.randrange(q) for _ in range(length)] for _ in range(t)]
        if rank_mod(mat, q) == t:
            break
    word = []
    for j in range(length):
        acc = field.zero
        for i in range(t):
            if mat[i][j]:
                acc = acc + u[i] * mat[i][j]
        word.append(acc)
    return word


def word_to_json(word: Word) -> list[list[int]]:
    return [x.to_list() for x in word]


def word_from_json(field: ExtensionField, data) -> list[FieldElement]:
    return [field.element(x) for x in data]
