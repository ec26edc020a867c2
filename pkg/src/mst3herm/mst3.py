"""Key generation, encryption and staged decryption.

Key material for stage l in {1, 2}: a tame LS v_l, a random cover w_l of the
same type, and a chain tau_0(l), ..., tau_s(l) with tau_s(1) = tau_0(2).  The
public arrays are

    g_kn(l) = tau_(k-1)(l)^-1 * f_l(w_kn(l)) * v_kn(l) * tau_k(l)

so a block product g_l(Q_l) telescopes to tau_0^-1 * M_l * tau_s with M_l in
the a = 1 subgroup, where the stage coordinate of M_l is the sum of the
selected f_l(w) and v values.  The projections y3, y4 carry the sum of the
selected f_l(w) parts, and decryption subtracts them to expose v_l(Q_l).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import BadMessage, FactorizationFailed, ResidualNonzero
from .field import FieldParams
from .hgroup import (
    GroupElement,
    f1_project,
    f2_project,
    g_inv,
    g_mul,
    g_prod,
    random_element,
)
from .logsig import (
    BlockArray,
    LogSignature,
    LsType,
    RandomCover,
    Stage,
    gen_random_cover,
    gen_tame_ls,
    ls_factor,
)


@dataclass(frozen=True)
class SchemeParams:
    field: FieldParams
    type1: LsType
    type2: LsType

    def __post_init__(self):
        F = self.field
        if self.type1.size != F.q ** 2:
            raise ValueError(f"type1 must span q^2 = {F.q ** 2}, spans {self.type1.size}")
        if self.type2.size != F.q:
            raise ValueError(f"type2 must span q = {F.q}, spans {self.type2.size}")

    @classmethod
    def build(cls, F: FieldParams, radices1, radices2) -> SchemeParams:
        return cls(F, LsType(tuple(radices1), F.p), LsType(tuple(radices2), F.p))


@dataclass(frozen=True)
class SecretKey:
    params: SchemeParams
    v1: LogSignature
    v2: LogSignature
    tau1: tuple[GroupElement, ...]
    tau2: tuple[GroupElement, ...]

    def __post_init__(self):
        if self.tau1[-1] != self.tau2[0]:
            raise ValueError("tau_s(1) must equal tau_0(2)")
        if len(self.tau1) != self.params.type1.num_blocks + 1:
            raise ValueError("tau1 needs s(1) + 1 elements")
        if len(self.tau2) != self.params.type2.num_blocks + 1:
            raise ValueError("tau2 needs s(2) + 1 elements")


@dataclass(frozen=True)
class PublicKey:
    params: SchemeParams
    w1: RandomCover
    w2: RandomCover
    g1: BlockArray
    g2: BlockArray

    @property
    def field(self) -> FieldParams:
        return self.params.field


@dataclass(frozen=True)
class Ciphertext:
    y1: GroupElement
    y2: GroupElement
    y3: GroupElement
    y4: GroupElement

    def __iter__(self):
        return iter((self.y1, self.y2, self.y3, self.y4))


def _project(stage: Stage):
    return f1_project if stage is Stage.BETA else f2_project


def compute_g(v: LogSignature, w: BlockArray, tau) -> BlockArray:
    """Public array g_kn = tau_(k-1)^-1 f(w_kn) v_kn tau_k."""
    f = _project(v.stage)
    blocks = []
    for k, (vb, wb) in enumerate(zip(v.blocks, w.blocks)):
        left, right = g_inv(tau[k]), tau[k + 1]
        blocks.append(tuple(
            g_mul(g_mul(g_mul(left, f(wr)), vr), right) for vr, wr in zip(vb, wb)))
    return BlockArray(v.ls_type, v.stage, tuple(blocks))


def projected_evaluate(cover: BlockArray, Q: int) -> GroupElement:
    """Product of the projected selected rows, f(w_1 n_1) f(w_2 n_2) ...

    The projections are applied row by row before multiplying, the way the
    public g arrays embed them; projecting the product of the raw rows would
    not cancel during decryption.
    """
    f = _project(cover.stage)
    return g_prod((f(x) for x in cover.selected(Q)), cover.field)


def keygen(sp: SchemeParams, rng: random.Random) -> tuple[PublicKey, SecretKey]:
    F = sp.field
    v1 = gen_tame_ls(sp.type1, Stage.BETA, F, rng)
    v2 = gen_tame_ls(sp.type2, Stage.GAMMA, F, rng)
    w1 = gen_random_cover(sp.type1, Stage.BETA, F, rng)
    w2 = gen_random_cover(sp.type2, Stage.GAMMA, F, rng)
    tau1 = tuple(random_element(F, rng) for _ in range(sp.type1.num_blocks + 1))
    tau2 = (tau1[-1],) + tuple(random_element(F, rng) for _ in range(sp.type2.num_blocks))
    return assemble_keys(sp, v1, v2, w1, w2, tau1, tau2)


def assemble_keys(sp, v1, v2, w1, w2, tau1, tau2) -> tuple[PublicKey, SecretKey]:
    """Derive the public g arrays from explicit key material."""
    g1 = compute_g(v1, w1, tau1)
    g2 = compute_g(v2, w2, tau2)
    return PublicKey(sp, w1, w2, g1, g2), SecretKey(sp, v1, v2, tuple(tau1), tuple(tau2))


def encrypt(pk: PublicKey, x: GroupElement, Q: tuple[int, int] | None = None,
            rng: random.Random | None = None) -> Ciphertext:
    if x.a.is_zero():
        raise BadMessage("message a-slot must be nonzero")
    if Q is None:
        rng = rng or random.SystemRandom()
        Q = (rng.randrange(pk.params.type1.size), rng.randrange(pk.params.type2.size))
    Q1, Q2 = Q
    y1 = g_mul(g_mul(pk.w1.evaluate(Q1), pk.w2.evaluate(Q2)), x)
    y2 = g_mul(pk.g1.evaluate(Q1), pk.g2.evaluate(Q2))
    y3 = projected_evaluate(pk.w1, Q1)
    y4 = projected_evaluate(pk.w2, Q2)
    return Ciphertext(y1, y2, y3, y4)


def stage1_target(sk: SecretKey, ct: Ciphertext) -> GroupElement:
    """y3^-1 * tau_0(1) * y2 * tau_s(2)^-1; its b-slot is v1(Q1)."""
    d1 = g_mul(g_mul(sk.tau1[0], ct.y2), g_inv(sk.tau2[-1]))
    return g_mul(g_inv(ct.y3), d1)


def stage2_target(sk: SecretKey, pk: PublicKey, ct: Ciphertext, Q1: int) -> GroupElement:
    """tau_0(2) * g1(Q1)^-1 y2 * tau_s(2)^-1 * y4^-1; its c-slot is v2(Q2)."""
    y2_1 = g_mul(g_inv(pk.g1.evaluate(Q1)), ct.y2)
    d2 = g_mul(g_mul(sk.tau2[0], y2_1), g_inv(sk.tau2[-1]))
    return g_mul(d2, g_inv(ct.y4))


def recover_q1(sk: SecretKey, pk: PublicKey, ct: Ciphertext) -> int:
    try:
        return ls_factor(sk.v1, stage1_target(sk, ct).b)
    except ResidualNonzero as exc:
        raise FactorizationFailed(f"stage 1: {exc}") from exc


def recover_q2(sk: SecretKey, pk: PublicKey, ct: Ciphertext, Q1: int) -> int:
    target = stage2_target(sk, pk, ct, Q1)
    if not target.b.is_zero() or target.a != target.a.field.one:
        raise FactorizationFailed("stage 2: target is not of the form S(1, 0, v)")
    try:
        return ls_factor(sk.v2, target.c)
    except ResidualNonzero as exc:
        raise FactorizationFailed(f"stage 2: {exc}") from exc


def decrypt(sk: SecretKey, pk: PublicKey, ct: Ciphertext, verify: bool = True) -> GroupElement:
    """Recover x; with verify, the recovered indices must reproduce y2, y3, y4."""
    Q1 = recover_q1(sk, pk, ct)
    Q2 = recover_q2(sk, pk, ct, Q1)
    if verify:
        if (g_mul(pk.g1.evaluate(Q1), pk.g2.evaluate(Q2)) != ct.y2
                or projected_evaluate(pk.w1, Q1) != ct.y3
                or projected_evaluate(pk.w2, Q2) != ct.y4):
            raise FactorizationFailed("recovered indices do not reproduce the ciphertext")
    mask = g_mul(pk.w1.evaluate(Q1), pk.w2.evaluate(Q2))
    return g_mul(g_inv(mask), ct.y1)
