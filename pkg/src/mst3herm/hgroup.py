"""The three-parameter group of triples S(a, b, c) over F_{q^2}.

    S(a1, b1, c1) * S(a2, b2, c2)
        = S(a1 a2,  a2 b1 + b2,  a2^(q+1) c1 + a2 b2^q b1 + c2)

The law is total and associative on all triples with a != 0.  The
automorphism subgroup H(P_inf) is the set of triples with c^q + c = b^(q+1);
membership is a separate predicate, not a type constraint.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from enum import Enum
from functools import reduce
from typing import Iterable

from .errors import ContextMismatch, ParseError
from .field import FieldElement, FieldParams, digits, frobenius_q, half, norm_q, parse_digits


@dataclass(frozen=True, slots=True)
class GroupElement:
    a: FieldElement
    b: FieldElement
    c: FieldElement

    def __post_init__(self):
        if self.a.is_zero():
            raise ValueError("the a-slot of a group element must be nonzero")
        F = self.a.field
        if not (F.same_as(self.b.field) and F.same_as(self.c.field)):
            raise ContextMismatch("slots belong to different fields")

    @property
    def field(self) -> FieldParams:
        return self.a.field

    def __mul__(self, other: GroupElement) -> GroupElement:
        return g_mul(self, other)

    def __invert__(self) -> GroupElement:
        return g_inv(self)

    def __iter__(self):
        return iter((self.a, self.b, self.c))

    def __str__(self):
        return format_element(self)


def S(a: FieldElement, b: FieldElement, c: FieldElement) -> GroupElement:
    return GroupElement(a, b, c)


def g_mul(x: GroupElement, y: GroupElement) -> GroupElement:
    if not x.a.field.same_as(y.a.field):
        raise ContextMismatch("group elements over different fields")
    q = x.a.field.q
    a2 = y.a
    return GroupElement(
        x.a * a2,
        a2 * x.b + y.b,
        a2 ** (q + 1) * x.c + a2 * (y.b ** q) * x.b + y.c,
    )


def g_inv(x: GroupElement) -> GroupElement:
    # general formula; valid on every triple, not only on members
    a_inv = x.a.inverse()
    s = a_inv ** (x.a.field.q + 1)
    return GroupElement(a_inv, -(a_inv * x.b), s * (norm_q(x.b) - x.c))


def g_inv_member(x: GroupElement) -> GroupElement:
    """Inverse formula S(a^-1, -a^-1 b, a^-(q+1) c^q); agrees with g_inv on members only."""
    a_inv = x.a.inverse()
    return GroupElement(a_inv, -(a_inv * x.b), a_inv ** (x.a.field.q + 1) * frobenius_q(x.c))


def g_identity(F: FieldParams) -> GroupElement:
    return GroupElement(F.one, F.zero, F.zero)


def g_prod(elements: Iterable[GroupElement], F: FieldParams) -> GroupElement:
    """Left-to-right product; the identity for an empty sequence."""
    return reduce(g_mul, elements, g_identity(F))


def is_member(x: GroupElement) -> bool:
    """True iff c^q + c = b^(q+1), i.e. x lies in H(P_inf)."""
    return frobenius_q(x.c) + x.c == norm_q(x.b)


def halfnorm_element(a: FieldElement, b: FieldElement, k: FieldElement | None = None) -> GroupElement:
    """S(a, b, b^(q+1)/2 + k); a member whenever k^q + k = 0."""
    c = half(norm_q(b))
    if k is not None:
        c = c + k
    return GroupElement(a, b, c)


def f1_project(x: GroupElement) -> GroupElement:
    """S(a, b, c) -> S(1, b, b^(q+1)/2)."""
    return halfnorm_element(x.a.field.one, x.b)


def f2_project(x: GroupElement) -> GroupElement:
    """S(a, b, c) -> S(1, 0, b); the b-slot moves into the c-slot."""
    F = x.a.field
    return GroupElement(F.one, F.zero, x.b)


class Constraint(str, Enum):
    MEMBER_WITH_HALFNORM_GAMMA = "member_with_halfnorm_gamma"
    ANY = "any"


def random_element(F: FieldParams, rng: random.Random,
                   constraint: Constraint | str = Constraint.MEMBER_WITH_HALFNORM_GAMMA) -> GroupElement:
    constraint = Constraint(constraint)
    if constraint is Constraint.MEMBER_WITH_HALFNORM_GAMMA:
        return halfnorm_element(F.random(rng, nonzero=True), F.random(rng, nonzero=True))
    return GroupElement(F.random(rng, nonzero=True), F.random(rng), F.random(rng))


# text form

_POWER = re.compile(r"^(?:a|α)\^(-?\d+)$")


def parse_slot(token: str, F: FieldParams) -> FieldElement:
    """Accepts a digit string, ``a^k`` (power of the generator), ``0`` or ``1``."""
    token = token.strip()
    m = _POWER.match(token)
    if m:
        return F.gen_pow(int(m.group(1)))
    if token == "0":
        return F.zero
    if token == "1":
        return F.one
    return parse_digits(token, F)


def parse_element(text: str, F: FieldParams) -> GroupElement:
    body = text.strip()
    if body.startswith("S("):
        body = body[1:]
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    parts = body.split(",")
    if len(parts) != 3:
        raise ParseError(f"expected three comma-separated slots in {text!r}")
    try:
        a, b, c = (parse_slot(t, F) for t in parts)
        return GroupElement(a, b, c)
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(f"bad group element {text!r}: {exc}") from exc


def format_element(x: GroupElement) -> str:
    return f"({digits(x.a)},{digits(x.b)},{digits(x.c)})"


def format_powers(x: GroupElement) -> str:
    """Render each slot as a^k (or 0); requires a dlog table."""
    from .field import dlog

    def slot(e):
        return "0" if e.is_zero() else f"a^{dlog(e)}"

    return f"({slot(x.a)},{slot(x.b)},{slot(x.c)})"
