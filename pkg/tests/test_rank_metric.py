import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import F9, F16, F81, elements
from twistgab import random_error, rank_distance, rank_norm
from twistgab.rank_metric import hamming_weight, word_from_json, word_to_json


def brute_rank_norm(word):
    """Size of the largest F_q-independent subset of the entries.

    A subset is independent when no nonzero coefficient vector over F_q
    combines it to zero; all subsets and all combinations are enumerated.
    """
    q = word[0].field.q
    best = 0
    for size in range(1, len(word) + 1):
        for subset in itertools.combinations(word, size):
            independent = True
            for coeffs in itertools.product(range(q), repeat=size):
                if any(coeffs):
                    acc = word[0].field.zero
                    for c, x in zip(coeffs, subset):
                        acc = acc + c * x
                    if not acc:
                        independent = False
                        break
            if independent:
                best = size
                break
    return best


def words(field, length=None):
    length = field.n if length is None else length
    return st.lists(elements(field), min_size=length, max_size=length)


def test_zero_word():
    assert rank_norm([F81.zero] * 4) == 0


def test_constant_word():
    for c in (F81.gen, F81.one, F81.gen + 2):
        assert rank_norm([c] * 4) == 1


def test_basis_word():
    assert rank_norm(F81.basis()) == 4


@settings(max_examples=150, deadline=None)
@given(st.one_of(words(F9, 3), words(F16, 4), words(F81, 4)))
def test_rank_matches_subset_enumeration(word):
    assert rank_norm(word) == brute_rank_norm(word)


@settings(max_examples=100, deadline=None)
@given(words(F81), elements(F81))
def test_rank_invariant_under_unit_scaling(word, c):
    if c:
        assert rank_norm([c * x for x in word]) == rank_norm(word)
    assert rank_norm(word) <= hamming_weight(word) <= 4


def test_distance_is_a_metric():
    rng = random.Random(0)
    for _ in range(500):
        x, y, z = ([F81.random_element(rng) for _ in range(4)] for _ in range(3))
        assert rank_distance(x, x) == 0
        assert rank_distance(x, y) == rank_distance(y, x)
        assert rank_distance(x, z) <= rank_distance(x, y) + rank_distance(y, z)


def test_distance_length_mismatch():
    with pytest.raises(ValueError):
        rank_distance([F81.one], [F81.one, F81.one])


@pytest.mark.parametrize("field", [F81, F16], ids=repr)
def test_random_error_has_exact_rank(field):
    rng = random.Random(1)
    for t in range(field.n + 1):
        for _ in range(100):
            assert rank_norm(random_error(field, t, rng)) == t


def test_random_error_edges():
    rng = random.Random(2)
    assert random_error(F81, 0, rng) == [F81.zero] * 4
    assert all(random_error(F81, 4, rng))
    with pytest.raises(ValueError):
        random_error(F81, 5, rng)
    with pytest.raises(ValueError):
        random_error(F81, -1, rng)


def test_random_error_is_seeded():
    assert random_error(F81, 2, random.Random(5)) == random_error(F81, 2, random.Random(5))


def test_word_json():
    w = random_error(F81, 2, random.Random(3))
    assert word_from_json(F81, word_to_json(w)) == w
