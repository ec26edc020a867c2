"""Tame logarithmic signatures, random covers and mixed-radix indexing.

A block array of type (r_1, ..., r_s) is evaluated at an index Q by writing
Q in mixed radix, Q = n_1 + n_2 r_1 + n_3 r_1 r_2 + ..., and multiplying the
selected rows block by block in ascending order.

The tame construction gives block k the digit positions
[o_k, o_k + e_k) where r_k = p^e_k and o_k = e_1 + ... + e_{k-1}.  Row n of
block k carries the base-p digits of n in those positions, random noise in
the positions below, and zeros above.  Factorization peels blocks from the
top down: read block s's digits from the running residual, subtract that
row, continue with block s-1.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from enum import Enum
from typing import Sequence

from .errors import BadTypeForStage, OutOfRange, ResidualNonzero
from .field import FieldElement, FieldParams, half, norm_q
from .hgroup import GroupElement, g_prod, halfnorm_element


class Stage(str, Enum):
    BETA = "beta"
    GAMMA = "gamma"


@dataclass(frozen=True)
class LsType:
    radices: tuple[int, ...]
    p: int
    exponents: tuple[int, ...] = dc_field(init=False)
    offsets: tuple[int, ...] = dc_field(init=False)

    def __post_init__(self):
        radices = tuple(int(r) for r in self.radices)
        if not radices:
            raise ValueError("a type needs at least one block")
        exps = []
        for r in radices:
            e, x = 0, r
            while x > 1 and x % self.p == 0:
                x //= self.p
                e += 1
            if x != 1 or e == 0:
                raise ValueError(f"radix {r} is not a positive power of {self.p}")
            exps.append(e)
        offs, o = [], 0
        for e in exps:
            offs.append(o)
            o += e
        object.__setattr__(self, "radices", radices)
        object.__setattr__(self, "exponents", tuple(exps))
        object.__setattr__(self, "offsets", tuple(offs))

    @classmethod
    def parse(cls, text: str, p: int) -> LsType:
        return cls(tuple(int(r) for r in text.split(",")), p)

    @property
    def total_digits(self) -> int:
        return sum(self.exponents)

    @property
    def size(self) -> int:
        out = 1
        for r in self.radices:
            out *= r
        return out

    @property
    def num_rows(self) -> int:
        return sum(self.radices)

    @property
    def num_blocks(self) -> int:
        return len(self.radices)

    def owned_positions(self, k: int) -> range:
        return range(self.offsets[k], self.offsets[k] + self.exponents[k])

    def __str__(self):
        return ",".join(str(r) for r in self.radices)


def decompose(Q: int, t: LsType) -> tuple[int, ...]:
    if not 0 <= Q < t.size:
        raise OutOfRange(f"index {Q} outside [0, {t.size})")
    out = []
    for r in t.radices:
        Q, d = divmod(Q, r)
        out.append(d)
    return tuple(out)


def compose(digits_: Sequence[int], t: LsType) -> int:
    if len(digits_) != t.num_blocks:
        raise OutOfRange("digit count does not match the type")
    Q, place = 0, 1
    for d, r in zip(digits_, t.radices):
        if not 0 <= d < r:
            raise OutOfRange(f"digit {d} outside [0, {r})")
        Q += d * place
        place *= r
    return Q


def _check_stage(t: LsType, stage: Stage, F: FieldParams):
    if t.p != F.p:
        raise BadTypeForStage(f"type radices are powers of {t.p}, field characteristic is {F.p}")
    need = F.m if stage is Stage.BETA else F.n
    if t.total_digits != need:
        raise BadTypeForStage(
            f"{stage.value} stage needs {need} digits (product {F.p ** need}), type has {t.total_digits}")


@dataclass(frozen=True)
class BlockArray:
    """Typed block array of group elements, evaluated by block products."""

    ls_type: LsType
    stage: Stage
    blocks: tuple[tuple[GroupElement, ...], ...]

    def __post_init__(self):
        if tuple(len(b) for b in self.blocks) != self.ls_type.radices:
            raise ValueError("block sizes do not match the type")

    @property
    def field(self) -> FieldParams:
        return self.blocks[0][0].field

    def rows(self):
        for block in self.blocks:
            yield from block

    def selected(self, Q: int) -> list[GroupElement]:
        return [self.blocks[k][n] for k, n in enumerate(decompose(Q, self.ls_type))]

    def evaluate(self, Q: int) -> GroupElement:
        return g_prod(self.selected(Q), self.field)


class RandomCover(BlockArray):
    pass


@dataclass(frozen=True)
class LogSignature(BlockArray):
    """Tame LS; ``values[k][n]`` is the stage coordinate of block k row n."""

    values: tuple[tuple[FieldElement, ...], ...] = ()

    @classmethod
    def from_values(cls, t: LsType, stage: Stage, values) -> LogSignature:
        values = tuple(tuple(block) for block in values)
        F = values[0][0].field
        if stage is Stage.BETA:
            blocks = tuple(tuple(halfnorm_element(F.one, v) for v in blk) for blk in values)
        else:
            blocks = tuple(tuple(GroupElement(F.one, F.zero, v) for v in blk) for blk in values)
        return cls(t, stage, blocks, values)

    def coordinate(self, x: GroupElement) -> FieldElement:
        return x.b if self.stage is Stage.BETA else x.c

    def value_sum(self, Q: int) -> FieldElement:
        F = self.field
        total = F.zero
        for k, n in enumerate(decompose(Q, self.ls_type)):
            total = total + self.values[k][n]
        return total

    def check_tame(self) -> list[str]:
        """Violations of the block-structure invariant (empty when tame)."""
        problems = []
        t, p = self.ls_type, self.field.p
        for k, block in enumerate(self.values):
            top = t.offsets[k] + t.exponents[k]
            for n, v in enumerate(block):
                owned = [v.coeffs[i] for i in t.owned_positions(k)]
                want = [(n // p ** j) % p for j in range(t.exponents[k])]
                if owned != want:
                    problems.append(f"block {k + 1} row {n}: owned digits {owned} != {want}")
                if any(v.coeffs[top:]):
                    problems.append(f"block {k + 1} row {n}: nonzero digits above position {top - 1}")
        return problems


def ls_evaluate(ls: LogSignature, Q: int) -> GroupElement:
    return ls.evaluate(Q)


def cover_evaluate(cover: BlockArray, Q: int) -> GroupElement:
    return cover.evaluate(Q)


def gen_tame_ls(t: LsType, stage: Stage | str, F: FieldParams, rng: random.Random,
                noise: bool = True) -> LogSignature:
    stage = Stage(stage)
    _check_stage(t, stage, F)
    p, m = F.p, F.m
    values = []
    for k in range(t.num_blocks):
        lo, e = t.offsets[k], t.exponents[k]
        block = []
        for n in range(t.radices[k]):
            coeffs = [0] * m
            if noise:
                for i in range(lo):
                    coeffs[i] = rng.randrange(p)
            for j in range(e):
                coeffs[lo + j] = (n // p ** j) % p
            block.append(F.element(coeffs))
        values.append(block)
    return LogSignature.from_values(t, stage, values)


def ls_factor_trace(ls: LogSignature, target: FieldElement):
    """Block-peeling factorization with its intermediate residuals.

    Returns (Q, steps) where each step is (block index k, row n, residual
    before subtracting, row value).
    """
    t, p = ls.ls_type, ls.field.p
    residual = target
    picks = [0] * t.num_blocks
    steps = []
    for k in reversed(range(t.num_blocks)):
        n = sum(residual.coeffs[i] * p ** j for j, i in enumerate(t.owned_positions(k)))
        row = ls.values[k][n]
        steps.append((k, n, residual, row))
        residual = residual - row
        picks[k] = n
    if not residual.is_zero():
        raise ResidualNonzero(f"residual {residual} is not zero after peeling")
    return compose(picks, t), steps


def ls_factor(ls: LogSignature, target: FieldElement) -> int:
    return ls_factor_trace(ls, target)[0]


def gamma_value(F: FieldParams, rng: random.Random, nonzero: bool = False) -> FieldElement:
    """Random element of the gamma value space: span of the first n monomials."""
    while True:
        low = [rng.randrange(F.p) for _ in range(F.n)]
        if not nonzero or any(low):
            return F.element(low + [0] * (F.m - F.n))


def gen_random_cover(t: LsType, stage: Stage | str, F: FieldParams, rng: random.Random) -> RandomCover:
    stage = Stage(stage)
    _check_stage(t, stage, F)
    blocks = []
    for r in t.radices:
        block = []
        for _ in range(r):
            w1 = F.random(rng, nonzero=True)
            w2 = F.random(rng, nonzero=True)
            if stage is Stage.BETA:
                block.append(halfnorm_element(w1, w2))
            else:
                w3 = gamma_value(F, rng, nonzero=True)
                block.append(GroupElement(w1, w2, half(norm_q(w2)) + w3))
        blocks.append(tuple(block))
    return RandomCover(t, stage, tuple(blocks))
