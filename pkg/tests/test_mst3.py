import random

import pytest

from mst3herm.errors import BadMessage, FactorizationFailed, OutOfRange
from mst3herm.hgroup import S, f1_project, f2_project, g_mul, random_element
from mst3herm.mst3 import (
    Ciphertext,
    SchemeParams,
    SecretKey,
    decrypt,
    encrypt,
    keygen,
    projected_evaluate,
    recover_q1,
    recover_q2,
)
from mst3herm.presets import preset_params


@pytest.mark.parametrize("preset", ["toy-3", "toy-5", "paper-3-6"])
def test_round_trip(preset):
    sp = preset_params(preset)
    rng = random.Random(preset)
    for _ in range(30):
        pk, sk = keygen(sp, rng)
        x = random_element(sp.field, rng, "any")
        Q = (rng.randrange(sp.type1.size), rng.randrange(sp.type2.size))
        ct = encrypt(pk, x, Q)
        assert recover_q1(sk, pk, ct) == Q[0]
        assert recover_q2(sk, pk, ct, Q[0]) == Q[1]
        assert decrypt(sk, pk, ct) == x


def test_alternative_types(F27):
    sp = SchemeParams.build(F27, (3,) * 6, (3, 3, 3))
    rng = random.Random(3)
    pk, sk = keygen(sp, rng)
    x = random_element(F27, rng, "any")
    assert decrypt(sk, pk, encrypt(pk, x, rng=rng)) == x


def test_type_sizes_checked(F27):
    with pytest.raises(ValueError):
        SchemeParams.build(F27, (27, 9), (9, 3))
    with pytest.raises(ValueError):
        SchemeParams.build(F27, (27, 9, 3), (9,))


def test_keygen_is_deterministic(toy3):
    a = keygen(toy3, random.Random(5))
    b = keygen(toy3, random.Random(5))
    assert a == b


def test_hinge_enforced(toy3, rng):
    pk, sk = keygen(toy3, rng)
    other = random_element(toy3.field, rng)
    with pytest.raises(ValueError):
        SecretKey(sk.params, sk.v1, sk.v2, sk.tau1, (other,) + sk.tau2[1:])


def test_bad_inputs(toy3, rng):
    pk, _ = keygen(toy3, rng)
    F = toy3.field
    with pytest.raises(BadMessage):
        # bypass the GroupElement guard to reach the encrypt check
        x = object.__new__(type(S(F.one, F.one, F.one)))
        object.__setattr__(x, "a", F.zero)
        object.__setattr__(x, "b", F.one)
        object.__setattr__(x, "c", F.one)
        encrypt(pk, x)
    with pytest.raises(OutOfRange):
        encrypt(pk, S(F.one, F.one, F.one), (toy3.type1.size, 0))


def test_projection_is_rowwise(paper_keys, paper):
    pk, _ = paper_keys
    Q1, Q2 = paper.Q
    row = projected_evaluate(pk.w1, Q1)
    assert row == paper.ciphertext.y3
    assert row != f1_project(pk.w1.evaluate(Q1))
    assert projected_evaluate(pk.w2, Q2) == paper.ciphertext.y4
    assert f2_project(pk.w2.evaluate(Q2)) != paper.ciphertext.y4


def test_paper_decrypt(paper_keys, paper):
    pk, sk = paper_keys
    assert encrypt(pk, paper.message, paper.Q) == paper.ciphertext
    assert decrypt(sk, pk, paper.ciphertext) == paper.message


def _tweak(x, rng):
    F = x.field
    slot = rng.randrange(3)
    parts = list(x)
    delta = F.random(rng, nonzero=True)
    parts[slot] = parts[slot] + delta
    if parts[0].is_zero():
        parts[0] = parts[0] + delta
    return S(*parts)


def test_tamper_fuzz(toy3):
    """Tampering y2, y3 or y4 must be detected; y1 changes only the plaintext."""
    rng = random.Random(11)
    detected = silent = 0
    for _ in range(300):
        pk, sk = keygen(toy3, rng)
        x = random_element(toy3.field, rng, "any")
        ct = encrypt(pk, x, rng=rng)
        i = rng.randrange(1, 4)
        parts = list(ct)
        parts[i] = _tweak(parts[i], rng)
        bad = Ciphertext(*parts)
        try:
            out = decrypt(sk, pk, bad)
        except FactorizationFailed:
            detected += 1
            continue
        # the tweak may land on another valid (Q1, Q2) encoding of the same c-slot
        assert encrypt(pk, out, _indices(sk, pk, bad)) == bad
        silent += 1
    assert detected > 250


def _indices(sk, pk, ct):
    q1 = recover_q1(sk, pk, ct)
    return q1, recover_q2(sk, pk, ct, q1)


def test_y1_tamper_shifts_plaintext(toy3, rng):
    pk, sk = keygen(toy3, rng)
    x = random_element(toy3.field, rng, "any")
    ct = encrypt(pk, x, rng=rng)
    d = random_element(toy3.field, rng, "any")
    ct2 = Ciphertext(g_mul(ct.y1, d), ct.y2, ct.y3, ct.y4)
    assert decrypt(sk, pk, ct2) == g_mul(x, d)
