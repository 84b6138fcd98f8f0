import random

import pytest

from conftest import F9, F16, F81, first_with_norm
from twistgab import (
    ExtensionField,
    GabidulinCode,
    LinearizedPoly,
    NotMRDError,
    SizeError,
    TwistedCode,
    load_code,
    oracle_min_distance,
    oracle_nearest,
    random_error,
    solve_quadratic,
)
from twistgab.linalg import rank_mod
from twistgab.rank_metric import add_words, rank_distance


def scan_roots(c2, c1, c0):
    field = c0.field
    return [z for z in field.elements() if not (c2 * z * z + c1 * z + c0)]


def random_msg(code, rng):
    return [code.field.random_element(rng) for _ in range(code.k)]


# -- construction ---------------------------------------------------------------


def test_eta_zero_accepted(f81):
    code = TwistedCode(f81, 2, f81.zero, 0)
    assert code.minimum_distance == 3


def test_q2_rejects_every_nonzero_eta():
    for eta in F16.elements():
        if eta:
            with pytest.raises(NotMRDError, match="not MRD"):
                TwistedCode(F16, 2, eta, 1)


def test_norm_condition_q3(f81, eta2):
    assert int(eta2.norm()) == 2
    TwistedCode(f81, 2, eta2, 3)
    with pytest.raises(NotMRDError):
        TwistedCode(f81, 2, first_with_norm(f81, 1), 3)


def test_norm_condition_odd_nk():
    field = ExtensionField(3, 3)
    # (-1)^(3*1) = -1 = 2 in F_3
    TwistedCode(field, 1, first_with_norm(field, 1), 1)
    with pytest.raises(NotMRDError):
        TwistedCode(field, 1, first_with_norm(field, 2), 1)


def test_parameter_validation(f81, eta2):
    with pytest.raises(ValueError):
        TwistedCode(f81, 0, eta2, 0)
    with pytest.raises(ValueError):
        TwistedCode(f81, 2, eta2, 4)
    with pytest.raises(ValueError, match="basis"):
        TwistedCode(f81, 2, eta2, 1, (f81.one,) * 4)


# -- encoding -------------------------------------------------------------------


def test_message_poly(f81, eta2):
    code = TwistedCode(f81, 2, eta2, 3)
    assert not code.message_poly([f81.zero, f81.zero])
    c = f81.gen + 1
    assert code.message_poly([f81.zero, c]) == LinearizedPoly.monomial(f81, 1, c)
    assert code.message_poly([f81.one, f81.zero]) == LinearizedPoly(f81, [f81.one, f81.zero, eta2])
    f0 = f81.gen
    assert code.message_poly([f0, f81.zero]).coeff(2) == eta2 * f0.frobenius(3)


def test_encode_is_fq_linear(f81, eta2):
    rng = random.Random(0)
    code = TwistedCode(f81, 2, eta2, 3)
    assert code.encode([f81.zero] * 2) == [f81.zero] * 4
    for _ in range(30):
        m1, m2 = random_msg(code, rng), random_msg(code, rng)
        assert code.encode([a + b for a, b in zip(m1, m2)]) == add_words(code.encode(m1), code.encode(m2))
        for c in range(3):
            assert code.encode([c * a for a in m1]) == [c * y for y in code.encode(m1)]


def test_encode_not_fqn_linear_when_twisted(f81, eta2):
    code = TwistedCode(f81, 2, eta2, 3)
    c = f81.gen
    m = [f81.one, f81.zero]
    assert code.encode([c * a for a in m]) != [c * y for y in code.encode(m)]


# -- interpolation system -------------------------------------------------------


def test_interpolation_system_shape_and_trivial_solution(f81, eta2):
    code = TwistedCode(f81, 2, eta2, 3)
    rows = code.interpolation_system([f81.zero] * 4, 1)
    assert len(rows) == 4
    assert len(rows[0]) == 2 * 4 - 2 * 1 - 2 + 2
    # (P_1, P_2) = (0, x): a-block zero, b_0 = 1
    vec = [f81.zero] * 8
    vec[4 - 1 + 1] = f81.one
    for row in rows:
        acc = f81.zero
        for a, b in zip(row, vec):
            acc = acc + a * b
        assert not acc
    with pytest.raises(ValueError):
        code.interpolation_system([f81.zero] * 4, 2)


def test_nullspace_has_dimension_at_least_two(f81, eta2):
    rng = random.Random(1)
    code = TwistedCode(f81, 2, eta2, 3)
    for _ in range(20):
        word = [f81.random_element(rng) for _ in range(4)]
        sols = code.interpolation_solutions(word, 1)
        assert len(sols) >= 2
        assert len(sols) == 6 - _rank_over_extension(code.interpolation_system(word, 1))


def _rank_over_extension(rows):
    from twistgab.linalg import rref

    return len(rref(rows, rows[0][0].field)[1])


# -- quadratic solver -----------------------------------------------------------


def test_quadratic_examples():
    assert solve_quadratic(F9.one, F9.zero, -F9.one) == [F9.one, F9(2)]
    b = F9.gen
    assert solve_quadratic(F9.one, F9.zero, F9.one) == sorted([b, 2 * b], key=lambda z: z.index)
    assert solve_quadratic(F9.zero, F9(2), F9.one) == [-F9.one / F9(2)]
    assert solve_quadratic(F9.zero, F9.zero, F9.one) == []
    with pytest.raises(ValueError):
        solve_quadratic(F9.zero, F9.zero, F9.zero)


@pytest.mark.parametrize("field", [F9, F16, F81, ExtensionField(2, 5), ExtensionField(5, 2)], ids=repr)
def test_quadratic_matches_exhaustive_scan(field):
    rng = random.Random(field.order)
    for _ in range(150):
        coeffs = [field.random_element(rng) for _ in range(3)]
        if rng.random() < 0.2:
            coeffs[1] = field.zero
        if rng.random() < 0.1:
            coeffs[0] = field.zero
        if not any(coeffs):
            continue
        assert solve_quadratic(*coeffs) == scan_roots(*coeffs)


# -- decoding -------------------------------------------------------------------


@pytest.mark.parametrize("r", range(4))
def test_decode_without_error(f81, eta2, r):
    rng = random.Random(r)
    code = TwistedCode(f81, 2, eta2, r)
    for _ in range(10):
        msg = random_msg(code, rng)
        assert code.decode(code.encode(msg)) == msg


def test_decode_rank_one_r3(f81, eta2):
    rng = random.Random(2)
    code = TwistedCode(f81, 2, eta2, 3)
    for _ in range(60):
        msg = random_msg(code, rng)
        assert code.decode(add_words(code.encode(msg), random_error(f81, 1, rng))) == msg


@pytest.mark.parametrize("r", [0, 1, 2])
def test_decode_rank_one_scan_fallback(f81, eta2, r):
    # r != t + k mod n, so f_0 comes from the exhaustive scan when needed
    rng = random.Random(10 + r)
    code = TwistedCode(f81, 2, eta2, r)
    for _ in range(30):
        msg = random_msg(code, rng)
        assert code.decode(add_words(code.encode(msg), random_error(f81, 1, rng))) == msg


def test_scan_fallback_respects_limit(f81, eta2):
    rng = random.Random(3)
    code = TwistedCode(f81, 2, eta2, 0)
    word = [f81.random_element(rng) for _ in range(4)]
    sols = code.interpolation_solutions(word, 1)
    with pytest.raises(SizeError):
        list(code.f0_candidates(sols, 1, scan_limit=10))


def test_decode_matches_oracle(f81, eta2):
    rng = random.Random(4)
    code = TwistedCode(f81, 2, eta2, 3)
    for _ in range(30):
        msg = random_msg(code, rng)
        word = add_words(code.encode(msg), random_error(f81, 1, rng))
        nearest = oracle_nearest(code, word)
        assert nearest.unique
        assert code.decode(word) == nearest.message == msg


def test_decode_k1():
    field = ExtensionField(3, 4)
    eta = first_with_norm(field, 2)
    # radius floor((4 - 1) / 2) = 1 and r = t + k = 2
    code = TwistedCode(field, 1, eta, 2)
    rng = random.Random(5)
    for _ in range(30):
        msg = random_msg(code, rng)
        assert code.decode(add_words(code.encode(msg), random_error(field, 1, rng))) == msg


def test_decode_n5_radius_two():
    field = ExtensionField(3, 5)
    eta = first_with_norm(field, 1)  # (-1)^(5*1) = 2 is the forbidden norm
    code = TwistedCode(field, 1, eta, 3)  # radius 2, r = t + k
    rng = random.Random(6)
    for t in (0, 1, 2):
        for _ in range(8):
            msg = random_msg(code, rng)
            assert code.decode(add_words(code.encode(msg), random_error(field, t, rng))) == msg


def test_decode_eta_zero_twisted_path(f81):
    rng = random.Random(7)
    code = TwistedCode(f81, 2, f81.zero, 0)
    for _ in range(20):
        msg = random_msg(code, rng)
        assert code.decode(add_words(code.encode(msg), random_error(f81, 1, rng))) == msg


def test_decode_length_checked(f81, eta2):
    with pytest.raises(ValueError):
        TwistedCode(f81, 2, eta2, 3).decode([f81.zero] * 3)


def test_beyond_radius_never_returns_far_codeword(f81, eta2):
    rng = random.Random(8)
    code = TwistedCode(f81, 2, eta2, 3)
    for _ in range(20):
        msg = random_msg(code, rng)
        word = add_words(code.encode(msg), random_error(f81, 2, rng))
        out = code.decode(word)
        if out is not None:
            assert rank_distance(code.encode(out), word) <= 1


def test_step2_root_is_among_step3_roots(f81, eta2):
    # with t above the true error rank every solution satisfies P_1 = P_2 o f,
    # so step II succeeds and step III must reproduce the same f_0
    rng = random.Random(9)
    code = TwistedCode(f81, 2, eta2, 3)
    checked = 0
    for _ in range(60):
        msg = random_msg(code, rng)
        word = code.encode(msg)
        sols = code.interpolation_solutions(word, 1)
        found = [code.divide_candidate(p1, p2, word, 1) for p1, p2 in sols]
        found = [m for m in found if m is not None]
        if found and len(sols) >= 2:
            assert found[0][0] in list(code.f0_candidates(sols, 1))
            checked += 1
    assert checked > 0


# -- MRD structure --------------------------------------------------------------


def test_codeword_kernels_are_small(f81, eta2):
    rng = random.Random(11)
    for r in range(4):
        code = TwistedCode(f81, 2, eta2, r)
        for _ in range(25):
            msg = random_msg(code, rng)
            if not any(msg):
                continue
            assert len(code.message_poly(msg).kernel()) <= code.k - 1


@pytest.mark.parametrize("r", range(4))
def test_exhaustive_mrd(f81, eta2, r):
    code = TwistedCode(f81, 2, eta2, r)
    d = oracle_min_distance(code)
    assert d == 3
    assert code.k == code.n - d + 1


def test_json_round_trip(f81, eta2):
    code = TwistedCode(f81, 2, eta2, 3)
    assert TwistedCode.from_json(code.to_json()) == code
    gab = load_code(TwistedCode(f81, 2, f81.zero, 1).to_json())
    assert isinstance(gab, GabidulinCode) and gab.k == 2
    spec = {"q": 3, "n": 4, "k": 2, "eta": eta2.to_list(), "r": 3}
    assert load_code(spec).alpha == tuple(ExtensionField(3, 4).basis())
