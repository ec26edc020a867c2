import itertools
import random

import pytest

from mst3herm.errors import BadTypeForStage, OutOfRange, ReducibleModulus, ResidualNonzero
from mst3herm.field import make_field
from mst3herm.hgroup import is_member
from mst3herm.logsig import (
    LsType,
    Stage,
    compose,
    decompose,
    gen_random_cover,
    gen_tame_ls,
    ls_evaluate,
    ls_factor,
    ls_factor_trace,
)


def test_decompose_examples():
    assert decompose(379, LsType((27, 9, 3), 3)) == (1, 5, 1)
    assert decompose(17, LsType((9, 3), 3)) == (8, 1)
    assert compose((1, 5, 1), LsType((27, 9, 3), 3)) == 379


def test_decompose_round_trip_exhaustive():
    t = LsType((9, 3, 27), 3)
    seen = set()
    for Q in range(t.size):
        d = decompose(Q, t)
        assert compose(d, t) == Q
        seen.add(d)
    assert seen == set(itertools.product(range(9), range(3), range(27)))


def test_decompose_bounds():
    t = LsType((3, 3), 3)
    for bad in (-1, 9):
        with pytest.raises(OutOfRange):
            decompose(bad, t)
    with pytest.raises(OutOfRange):
        compose((3, 0), t)
    with pytest.raises(OutOfRange):
        compose((0,), t)


def test_type_validation():
    t = LsType.parse("27,9,3", 3)
    assert t.exponents == (3, 2, 1) and t.offsets == (0, 3, 5)
    assert str(t) == "27,9,3" and t.num_rows == 39 and t.size == 729
    for bad in ((6,), (1,), ()):
        with pytest.raises(ValueError):
            LsType(bad, 3)


def test_stage_digit_count(F27, rng):
    with pytest.raises(BadTypeForStage):
        gen_tame_ls(LsType((9, 3), 3), Stage.BETA, F27, rng)
    with pytest.raises(BadTypeForStage):
        gen_random_cover(LsType((27, 27), 3), Stage.GAMMA, F27, rng)
    with pytest.raises(BadTypeForStage):
        gen_tame_ls(LsType((5, 5), 5), Stage.BETA, F27, rng)


def test_generated_ls_is_tame(F27, rng):
    for stage, radices in ((Stage.BETA, (27, 9, 3)), (Stage.GAMMA, (9, 3)), (Stage.BETA, (3,) * 6)):
        ls = gen_tame_ls(LsType(radices, 3), stage, F27, rng)
        assert ls.check_tame() == []


def test_check_tame_catches_tampering(paper):
    ls = paper.v1
    vals = [list(b) for b in ls.values]
    vals[1][2] = vals[1][2] + ls.field.generator ** 4  # touches position 4
    bad = type(ls).from_values(ls.ls_type, ls.stage, vals)
    assert bad.check_tame()


def test_paper_trace(paper):
    F = paper.field
    Q, steps = ls_factor_trace(paper.v1, F.gen_pow(32))
    assert Q == 379
    assert [(str(res), str(row)) for _, _, res, row in steps] == [tuple(s) for s in paper.traces["step13"]]
    assert ls_factor(paper.v2, F.gen_pow(2)) == 17


def test_residual_nonzero(F27, rng):
    ls = gen_tame_ls(LsType((9, 3), 3), Stage.GAMMA, F27, rng)
    with pytest.raises(ResidualNonzero):
        ls_factor(ls, F27("000001"))  # outside the gamma value space


def _oracle_table(ls):
    """Direct enumeration: coordinate of the product for every index tuple."""
    table = {}
    for picks in itertools.product(*(range(r) for r in ls.ls_type.radices)):
        prod = ls.blocks[0][picks[0]]
        for k in range(1, len(picks)):
            prod = prod * ls.blocks[k][picks[k]]
        table[compose(picks, ls.ls_type)] = ls.coordinate(prod)
    return table


def _irreducible_modulus(n):
    for low in itertools.product(range(3), repeat=2 * n):
        try:
            make_field(3, n, low + (1,))
            return low + (1,)
        except ReducibleModulus:
            continue


@pytest.mark.parametrize("n,radices,stage", [
    (1, (3, 3), Stage.BETA),
    (2, (3, 3), Stage.GAMMA),
    (2, (9,), Stage.GAMMA),
    (2, (3, 9, 3), Stage.BETA),
    (3, (27, 9, 3), Stage.BETA),
    (3, (3,) * 6, Stage.BETA),
    (3, (9, 3), Stage.GAMMA),
])
def test_oracle_equivalence(n, radices, stage):
    F = make_field(3, n, _irreducible_modulus(n))
    ls = gen_tame_ls(LsType(radices, 3), stage, F, random.Random(7))
    table = _oracle_table(ls)
    assert len(set(table.values())) == len(table)
    for Q, v in table.items():
        assert ls.coordinate(ls_evaluate(ls, Q)) == v
        assert ls_factor(ls, v) == Q


def test_covers_have_expected_shape(F27, rng):
    w1 = gen_random_cover(LsType((27, 9, 3), 3), Stage.BETA, F27, rng)
    w2 = gen_random_cover(LsType((9, 3), 3), Stage.GAMMA, F27, rng)
    assert all(is_member(x) and not x.b.is_zero() for x in w1.rows())
    for x in w2.rows():
        w3 = x.c - x.b ** 28 * F27.scalar(2)
        assert not w3.is_zero() and not any(w3.coeffs[3:])
