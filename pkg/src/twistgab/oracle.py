"""Exhaustive ground truth for tiny codes.

Every message is enumerated, so these routines are only usable when
q^(nk) is small.  Message order is lexicographic in (f_0, ..., f_{k-1}) with
each coefficient ordered by :attr:`FieldElement.index`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .exceptions import SizeError
from .linalg import batch_rank_mod


@dataclass(frozen=True)
class OracleBudget:
    max_codewords: int = 10**6
    max_field: int = 2**20

    def __post_init__(self):
        if self.max_codewords <= 0 or self.max_field <= 0:
            raise ValueError("budget caps must be positive")


@dataclass(frozen=True)
class NearestResult:
    message: list
    distance: int
    unique: bool


def _check(code, budget: OracleBudget) -> int:
    size = code.field.order**code.k
    if size > budget.max_codewords:
        raise SizeError(f"{size} codewords exceed the oracle budget of {budget.max_codewords}")
    if code.field.order > budget.max_field:
        raise SizeError(f"field of size {code.field.order} exceeds the oracle budget of {budget.max_field}")
    return size


@lru_cache(maxsize=16)
def _codebook(code):
    elements = list(code.field.elements(force=True))
    messages = list(itertools.product(elements, repeat=code.k))
    coords = np.array(
        [[x.coeffs for x in code.encode(list(m))] for m in messages], dtype=np.int64
    )
    return messages, coords


def _distances(code, word) -> tuple[list, np.ndarray]:
    messages, coords = _codebook(code)
    target = np.array([x.coeffs for x in word], dtype=np.int64)
    return messages, batch_rank_mod(coords - target[None], code.field.q)


def oracle_nearest(code, received, budget: OracleBudget = OracleBudget()) -> NearestResult:
    """First message (in enumeration order) at minimum rank distance."""
    _check(code, budget)
    if len(received) != code.n:
        raise ValueError(f"received word has length {len(received)}, expected {code.n}")
    messages, dist = _distances(code, received)
    best = int(dist.min())
    hits = np.flatnonzero(dist == best)
    return NearestResult(list(messages[hits[0]]), best, len(hits) == 1)


def oracle_min_distance(code, budget: OracleBudget = OracleBudget()) -> int:
    """Minimum rank of a nonzero codeword (the code is F_q-linear)."""
    _check(code, budget)
    _, coords = _codebook(code)
    ranks = batch_rank_mod(coords[1:], code.field.q)  # index 0 is the zero message
    return int(ranks.min())


def oracle_singleton_check(code, budget: OracleBudget = OracleBudget()) -> bool:
    """Whether log_{q^n}(|C|) = k meets n - d + 1 with equality."""
    d = oracle_min_distance(code, budget)
    return code.k == code.n - d + 1
