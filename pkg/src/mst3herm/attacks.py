"""Desk-scale brute-force benches for the attack sketches against the scheme.

Each bench enumerates one search space exhaustively and reports its size,
the number of candidates consistent with the public data, and whether the
planted secret (when supplied, white-box) was among them.  Uniqueness and
speed are measured, never asserted.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field
from itertools import product

from .errors import SpaceTooLarge
from .hgroup import GroupElement, f1_project, g_inv, g_mul, halfnorm_element
from .mst3 import Ciphertext, PublicKey, SecretKey, projected_evaluate

DEFAULT_BOUND = 1 << 20


@dataclass
class AttackReport:
    attack_id: str
    q: int
    search_space_size: int
    theoretical_size: str
    candidates_found: int
    candidates: list = dc_field(default_factory=list)
    planted_found: bool | None = None
    recovered_Q: tuple | None = None
    recovered_x: GroupElement | None = None
    extra: dict = dc_field(default_factory=dict)
    wall_time: float = 0.0

    def records(self) -> list[tuple[str, object]]:
        out = [
            ("attack_id", self.attack_id),
            ("q", self.q),
            ("search_space_size", self.search_space_size),
            ("theoretical_size", self.theoretical_size),
            ("candidates_found", self.candidates_found),
            ("planted_found", self.planted_found),
            ("recovered_Q", self.recovered_Q),
            ("recovered_x", self.recovered_x),
        ]
        out += sorted(self.extra.items())
        out.append(("wall_time", f"{self.wall_time:.4f}"))
        return out

    def render_kv(self) -> str:
        return "\n".join(f"{k}={_fmt(v)}" for k, v in self.records())

    def render_text(self) -> str:
        rec = self.records()
        width = max(len(k) for k, _ in rec)
        return "\n".join(f"{k:<{width}}  {_fmt(v)}" for k, v in rec)


def _fmt(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, tuple):
        return ",".join(str(x) for x in v)
    return str(v)


def _guard(size: int, bound: int):
    if size > bound:
        raise SpaceTooLarge(f"search space {size} exceeds bound {bound}")


def attack_exhaust_q(pk: PublicKey, ct: Ciphertext, planted_Q=None, known_x=None,
                     bound: int = DEFAULT_BOUND) -> AttackReport:
    """All (Q1, Q2) whose public block product g1(Q1) g2(Q2) equals y2.

    With known_x (white-box) it also counts the pairs whose cover product
    maps x to y1, the ciphertext-only variant of the same search.
    """
    t0 = time.perf_counter()
    n1, n2 = pk.params.type1.size, pk.params.type2.size
    size = n1 * n2
    _guard(size, bound)
    g1 = [pk.g1.evaluate(i) for i in range(n1)]
    g2 = [pk.g2.evaluate(j) for j in range(n2)]
    hits = [(i, j) for i, j in product(range(n1), range(n2)) if g_mul(g1[i], g2[j]) == ct.y2]
    extra = {}
    if known_x is not None:
        w1 = [pk.w1.evaluate(i) for i in range(n1)]
        w2 = [pk.w2.evaluate(j) for j in range(n2)]
        y1_hits = [(i, j) for i, j in product(range(n1), range(n2))
                   if g_mul(g_mul(w1[i], w2[j]), known_x) == ct.y1]
        extra["y1_candidates"] = len(y1_hits)
    q = pk.field.q
    # a second reading counts this search as q^2; report both
    extra["alt_reading_q2"] = q * q
    return AttackReport(
        "exhaust_q", q, size, "q^3", len(hits), hits,
        planted_found=None if planted_Q is None else tuple(planted_Q) in hits,
        recovered_Q=hits[0] if len(hits) == 1 else None,
        extra=extra, wall_time=time.perf_counter() - t0)


def attack_match_y3(pk: PublicKey, ct: Ciphertext, planted_Q1=None,
                    bound: int = DEFAULT_BOUND) -> AttackReport:
    """All Q1 whose projected cover product has the b-slot of y3."""
    t0 = time.perf_counter()
    size = pk.params.type1.size
    _guard(size, bound)
    hits = [i for i in range(size) if projected_evaluate(pk.w1, i).b == ct.y3.b]
    return AttackReport(
        "match_y3", pk.field.q, size, "q^2", len(hits), hits,
        planted_found=None if planted_Q1 is None else planted_Q1 in hits,
        recovered_Q=(hits[0],) if len(hits) == 1 else None,
        wall_time=time.perf_counter() - t0)


def attack_match_y4(pk: PublicKey, ct: Ciphertext, planted_Q2=None,
                    bound: int = DEFAULT_BOUND) -> AttackReport:
    """All Q2 whose projected cover product has the c-slot of y4."""
    t0 = time.perf_counter()
    size = pk.params.type2.size
    _guard(size, bound)
    hits = [j for j in range(size) if projected_evaluate(pk.w2, j).c == ct.y4.c]
    return AttackReport(
        "match_y4", pk.field.q, size, "q", len(hits), hits,
        planted_found=None if planted_Q2 is None else planted_Q2 in hits,
        recovered_Q=(hits[0],) if len(hits) == 1 else None,
        wall_time=time.perf_counter() - t0)


def attack_strip_y1(pk: PublicKey, ct: Ciphertext, planted_x=None,
                    bound: int = DEFAULT_BOUND) -> AttackReport:
    """Combine the y3 and y4 searches, then strip the cover product from y1.

    Needs q^2 + q trials and no secret at all.
    """
    t0 = time.perf_counter()
    r3 = attack_match_y3(pk, ct, bound=bound)
    r4 = attack_match_y4(pk, ct, bound=bound)
    xs = []
    for i, j in product(r3.candidates, r4.candidates):
        mask = g_mul(pk.w1.evaluate(i), pk.w2.evaluate(j))
        xs.append(((i, j), g_mul(g_inv(mask), ct.y1)))
    recovered = {x for _, x in xs}
    return AttackReport(
        "strip_y1", pk.field.q, r3.search_space_size + r4.search_space_size, "q^2 + q",
        len(xs), [Q for Q, _ in xs],
        planted_found=None if planted_x is None else planted_x in recovered,
        recovered_Q=xs[0][0] if len(xs) == 1 else None,
        recovered_x=xs[0][1] if len(recovered) == 1 else None,
        extra={"distinct_plaintexts": len(recovered)},
        wall_time=time.perf_counter() - t0)


def attack_exhaust_tau(pk: PublicKey, sk: SecretKey, bound: int = DEFAULT_BOUND) -> AttackReport:
    """White-box search over tau_0(1) = S(a, b, b^(q+1)/2) with a, b != 0.

    Given the true v1, each candidate fixes tau_1(1) through row 0 of block 1
    (tau_1 = (f1(w) v)^-1 tau_0 g); the candidate is a hit when that tau_1
    reproduces every other row of the block.
    """
    t0 = time.perf_counter()
    F = pk.field
    size = (F.size - 1) ** 2
    _guard(size, bound)
    mids = [g_mul(f1_project(w), v) for w, v in zip(pk.w1.blocks[0], sk.v1.blocks[0])]
    gs = pk.g1.blocks[0]
    nonzero = [x for x in F.elements() if not x.is_zero()]
    hits = []
    for a, b in product(nonzero, nonzero):
        tau0 = halfnorm_element(a, b)
        tau1 = g_mul(g_mul(g_inv(mids[0]), tau0), gs[0])
        left = g_inv(tau0)
        if all(g_mul(g_mul(left, m), tau1) == g for m, g in zip(mids[1:], gs[1:])):
            hits.append(tau0)
    planted = sk.tau1[0]
    return AttackReport(
        "exhaust_tau", F.q, size, "(q^2)^2", len(hits), hits,
        planted_found=planted in hits,
        wall_time=time.perf_counter() - t0)


ATTACKS = {
    "exhaust_q": attack_exhaust_q,
    "match_y3": attack_match_y3,
    "match_y4": attack_match_y4,
    "strip_y1": attack_strip_y1,
    "exhaust_tau": attack_exhaust_tau,
}
