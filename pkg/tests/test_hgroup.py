import itertools
import random

import pytest

from mst3herm.errors import ContextMismatch, ParseError
from mst3herm.field import norm_q
from mst3herm.hgroup import (
    GroupElement,
    S,
    f1_project,
    f2_project,
    format_element,
    format_powers,
    g_identity,
    g_inv,
    g_inv_member,
    g_mul,
    g_prod,
    halfnorm_element,
    is_member,
    parse_element,
    random_element,
)


def _all_members(F):
    nz = [x for x in F.elements() if not x.is_zero()]
    els = list(F.elements())
    return [S(a, b, c) for a in nz for b in els for c in els if is_member(S(a, b, c))]


def test_member_count_is_group_order(F9):
    q = F9.q
    assert len(_all_members(F9)) == q ** 3 * (q * q - 1)


def test_member_subgroup_exhaustive_f9(F9):
    members = _all_members(F9)
    mset = set(members)
    rng = random.Random(1)
    for x in members:
        assert g_inv(x) in mset
        assert g_inv(x) == g_inv_member(x)
    for x, y in (rng.sample(members, 2) for _ in range(2000)):
        assert g_mul(x, y) in mset


def test_general_inverse_on_non_members(F9, rng):
    e = g_identity(F9)
    for _ in range(500):
        x = random_element(F9, rng, "any")
        assert x * ~x == e and ~x * x == e


def test_member_inverse_differs_off_subgroup(F9):
    x = S(F9.one, F9.zero, F9.one)
    assert not is_member(x)
    assert g_inv_member(x) != g_inv(x)


def test_identity_and_products(F27, rng):
    e = g_identity(F27)
    xs = [random_element(F27, rng, "any") for _ in range(5)]
    assert g_prod([], F27) == e
    assert g_prod(xs, F27) == xs[0] * xs[1] * xs[2] * xs[3] * xs[4]
    for x in xs:
        assert x * e == x and e * x == x


def test_halfnorm_elements_are_members(F27, rng):
    for _ in range(200):
        x = random_element(F27, rng)
        assert is_member(x)
        assert x.c == norm_q(x.b) * F27.scalar(2)  # 1/2 == 2 mod 3


def test_halfnorm_with_kernel_offset(F27):
    k = F27.gen_pow(14)  # (q+1)/2 is in the kernel
    assert is_member(halfnorm_element(F27.one, F27.generator, k))
    assert not is_member(halfnorm_element(F27.one, F27.generator, F27.one))


def test_projections(F27):
    a = F27.generator
    x = S(a ** 5, a ** 7, a ** 9)
    assert f1_project(x) == halfnorm_element(F27.one, a ** 7)
    assert f2_project(x) == S(F27.one, F27.zero, a ** 7)
    assert is_member(f1_project(x))


def test_projection_rules_and_homomorphism(F27, rng):
    # f1 keeps products in the a=1 subgroup; its b-slot is additive
    for _ in range(100):
        x, y = (random_element(F27, rng) for _ in range(2))
        assert (f1_project(x) * f1_project(y)).b == x.b + y.b
        assert (f2_project(x) * f2_project(y)).c == x.b + y.b


def test_zero_a_slot_rejected(F27):
    with pytest.raises(ValueError):
        S(F27.zero, F27.one, F27.one)


def test_mixed_fields(F9, F27):
    with pytest.raises(ContextMismatch):
        g_mul(g_identity(F9), g_identity(F27))


def test_text_forms(F27):
    x = parse_element("(a^1,a^2,a^3)", F27)
    assert x == S(F27.generator, F27.gen_pow(2), F27.gen_pow(3))
    assert parse_element("S(010000,001000,000100)", F27) == x
    assert parse_element(format_element(x), F27) == x
    assert format_powers(x) == "(a^1,a^2,a^3)"
    assert format_powers(S(F27.one, F27.zero, F27.one)) == "(a^0,0,a^0)"
    assert parse_element("(α^1, 0, 1)", F27) == S(F27.generator, F27.zero, F27.one)
    for bad in ("(a^1,a^2)", "(0,1,1)", "(x,1,1)"):
        with pytest.raises(ParseError):
            parse_element(bad, F27)


def test_associativity_exhaustive_small(F9):
    els = [x for x in _all_members(F9)][::37]
    for x, y, z in itertools.product(els, repeat=3):
        assert (x * y) * z == x * (y * z)


def test_group_element_is_hashable_and_frozen(F9):
    x = g_identity(F9)
    assert {x: 1}[g_identity(F9)] == 1
    with pytest.raises(AttributeError):
        x.a = F9.one
    assert isinstance(x, GroupElement)
