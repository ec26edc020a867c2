"""Arithmetic in the tower F_p < F_q < F_{q^2} with q = p^n, in polynomial basis.

An element of F_{p^{2n}} is stored as a tuple of 2n coefficients in [0, p),
little-endian (``coeffs[0]`` is the constant term), reduced modulo a monic
irreducible polynomial g(z) of degree 2n.  The canonical product is schoolbook
polynomial multiplication followed by reduction; for desk-scale fields a
discrete-log table over the designated generator is built at construction and
used to accelerate multiplication, powering and inversion.

The special maps the cryptosystem needs are module-level functions:

    frobenius_q(a)   a**q
    norm_q(a)        a**(q+1), always in F_q
    half(a)          a / 2
    dlog(a)          k with generator**k == a
    qtrace_kernel(F) {x : x**q + x == 0}
"""

from __future__ import annotations

import itertools
import random
from typing import Iterable, Iterator, Sequence

from .errors import (
    BadDigit,
    BadLength,
    ContextMismatch,
    DivisionByZero,
    EvenCharacteristic,
    FieldTooLargeForScan,
    FieldTooLargeForTable,
    NonPrimitiveGenerator,
    NotPrime,
    ReducibleModulus,
    ZeroArgument,
)

DEFAULT_TABLE_BOUND = 1 << 24
DEFAULT_SCAN_BOUND = 1 << 20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n by trial division."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _poly_mod(r: list[int], modulus: Sequence[int], p: int) -> list[int]:
    """Reduce r in place modulo a monic polynomial; returns the low part."""
    deg = len(modulus) - 1
    for d in range(len(r) - 1, deg - 1, -1):
        c = r[d]
        if c:
            base = d - deg
            for k in range(deg + 1):
                r[base + k] = (r[base + k] - c * modulus[k]) % p
    return r[:deg]


def _poly_mul(a: Sequence[int], b: Sequence[int], modulus: Sequence[int], p: int) -> tuple:
    r = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    r[i + j] = (r[i + j] + x * y) % p
    return tuple(_poly_mod(r, modulus, p))


def _poly_divides(d: Sequence[int], g: Sequence[int], p: int) -> bool:
    """True iff the monic polynomial d divides g over F_p."""
    r = list(g)
    return not any(_poly_mod(r, d, p))


class FieldParams:
    """Immutable context for F_{p^{2n}} = F_p[z]/(g(z)).

    Construction verifies that p is an odd prime, that g is irreducible
    (exhaustive search for monic factors of degree <= n) and that the
    generator has full multiplicative order.  When p^{2n} <= table_bound a
    discrete-log table is precomputed.
    """

    def __init__(self, p: int, n: int, modulus: Sequence[int],
                 generator: Sequence[int] | None = None,
                 table_bound: int = DEFAULT_TABLE_BOUND):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if p == 2:
            raise EvenCharacteristic("characteristic 2 has no inverse of 2")
        if n < 1:
            raise ValueError("extension degree n must be >= 1")
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != 2 * n + 1 or modulus[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {2 * n}")
        if any(not 0 <= c < p for c in modulus):
            raise ValueError("modulus coefficients must lie in [0, p)")

        self.p = p
        self.n = n
        self.m = 2 * n
        self.q = p ** n
        self.size = p ** (2 * n)
        self.order = self.size - 1
        self.modulus = modulus
        self._check_irreducible()

        if generator is None:
            self._gen = self._default_generator()
        else:
            generator = tuple(int(c) % p for c in generator)
            if len(generator) != self.m:
                raise ValueError(f"generator needs {self.m} coefficients")
            self._gen = generator
            self._check_primitive()

        self._exp: list[tuple] | None = None
        self._log: dict[tuple, int] | None = None
        if self.size <= table_bound:
            self._build_tables()

        self.zero = FieldElement(self, (0,) * self.m)
        self.one = FieldElement(self, (1,) + (0,) * (self.m - 1))
        self.generator = FieldElement(self, self._gen)
        self._half = self.scalar((p + 1) // 2)

    # construction checks

    def _check_irreducible(self):
        p, m = self.p, self.m
        for deg in range(1, m // 2 + 1):
            for low in itertools.product(range(p), repeat=deg):
                if _poly_divides(low + (1,), self.modulus, p):
                    raise ReducibleModulus(
                        f"modulus has a factor of degree {deg}: {low + (1,)}")

    def _raw_pow(self, a: tuple, e: int) -> tuple:
        result = (1,) + (0,) * (self.m - 1)
        while e:
            if e & 1:
                result = _poly_mul(result, a, self.modulus, self.p)
            a = _poly_mul(a, a, self.modulus, self.p)
            e >>= 1
        return result

    def _check_primitive(self):
        if not self._is_primitive(self._gen):
            raise NonPrimitiveGenerator(f"{self._gen} does not have order {self.order}")

    def _is_primitive(self, g: tuple) -> bool:
        one = (1,) + (0,) * (self.m - 1)
        if not any(g) or self._raw_pow(g, self.order) != one:
            return False
        return all(self._raw_pow(g, self.order // r) != one
                   for r in prime_factors(self.order))

    def _default_generator(self) -> tuple:
        # class of z when primitive, else the first primitive element in counting order
        z = (0, 1) + (0,) * (self.m - 2)
        if self._is_primitive(z):
            return z
        for k in range(2, self.size):
            g = tuple((k // self.p ** i) % self.p for i in range(self.m))
            if self._is_primitive(g):
                return g
        raise NonPrimitiveGenerator("no primitive element found")

    def _build_tables(self):
        exp = [None] * self.order
        x = (1,) + (0,) * (self.m - 1)
        for k in range(self.order):
            exp[k] = x
            x = _poly_mul(x, self._gen, self.modulus, self.p)
        self._exp = exp
        self._log = {e: k for k, e in enumerate(exp)}

    @property
    def has_tables(self) -> bool:
        return self._log is not None

    # element constructors

    def __call__(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.field is not self:
                raise ContextMismatch("element from another field")
            return value
        if isinstance(value, int):
            return self.scalar(value)
        if isinstance(value, str):
            return parse_digits(value, self)
        return self.element(value)

    def element(self, coeffs: Iterable[int]) -> FieldElement:
        coeffs = tuple(int(c) % self.p for c in coeffs)
        if len(coeffs) != self.m:
            raise BadLength(f"expected {self.m} coefficients, got {len(coeffs)}")
        return FieldElement(self, coeffs)

    def scalar(self, c: int) -> FieldElement:
        return FieldElement(self, (c % self.p,) + (0,) * (self.m - 1))

    def gen_pow(self, k: int) -> FieldElement:
        """generator**k; any integer k."""
        if self._exp is not None:
            return FieldElement(self, self._exp[k % self.order])
        return FieldElement(self, self._raw_pow(self._gen, k % self.order))

    def random(self, rng: random.Random, nonzero: bool = False) -> FieldElement:
        while True:
            coeffs = tuple(rng.randrange(self.p) for _ in range(self.m))
            if not nonzero or any(coeffs):
                return FieldElement(self, coeffs)

    def elements(self) -> Iterator[FieldElement]:
        """All p^{2n} elements, in little-endian counting order."""
        for digits_ in itertools.product(range(self.p), repeat=self.m):
            yield FieldElement(self, digits_[::-1])

    def from_index(self, k: int) -> FieldElement:
        """Element whose base-p digits (little-endian) are those of k."""
        coeffs = []
        for _ in range(self.m):
            k, d = divmod(k, self.p)
            coeffs.append(d)
        return FieldElement(self, tuple(coeffs))

    def serialize(self) -> str:
        mod = ",".join(str(c) for c in self.modulus)
        return f"FIELD p={self.p} n={self.n} modulus={mod}"

    def same_as(self, other: FieldParams) -> bool:
        return (self.p, self.n, self.modulus, self._gen) == (
            other.p, other.n, other.modulus, other._gen)

    def __eq__(self, other):
        return isinstance(other, FieldParams) and self.same_as(other)

    def __hash__(self):
        return hash((self.p, self.n, self.modulus, self._gen))

    def __repr__(self):
        return f"FieldParams(p={self.p}, n={self.n}, modulus={self.modulus})"


class FieldElement:
    """Immutable element of a FieldParams context."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldParams, coeffs: tuple):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _other(self, other) -> FieldElement:
        if isinstance(other, FieldElement):
            if other.field is not self.field and not other.field.same_as(self.field):
                raise ContextMismatch("operands belong to different fields")
            return other
        if isinstance(other, int):
            return self.field.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        p = self.field.p
        return FieldElement(self.field, tuple((x + y) % p for x, y in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        p = self.field.p
        return FieldElement(self.field, tuple((x - y) % p for x, y in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return self._other(other) - self

    def __neg__(self):
        p = self.field.p
        return FieldElement(self.field, tuple((-x) % p for x in self.coeffs))

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        F = self.field
        if F._log is not None:
            if not any(self.coeffs) or not any(other.coeffs):
                return F.zero
            return FieldElement(F, F._exp[(F._log[self.coeffs] + F._log[other.coeffs]) % F.order])
        return FieldElement(F, _poly_mul(self.coeffs, other.coeffs, F.modulus, F.p))

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        F = self.field
        if not any(self.coeffs):
            raise DivisionByZero("inverse of zero")
        if F._log is not None:
            return FieldElement(F, F._exp[-F._log[self.coeffs] % F.order])
        return FieldElement(F, F._raw_pow(self.coeffs, F.order - 1))

    def __truediv__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._other(other) * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        F = self.field
        if not any(self.coeffs):
            if e == 0:
                return F.one
            if e < 0:
                raise DivisionByZero("negative power of zero")
            return F.zero
        e %= F.order
        if F._log is not None:
            return FieldElement(F, F._exp[F._log[self.coeffs] * e % F.order])
        return FieldElement(F, F._raw_pow(self.coeffs, e))

    def __bool__(self):
        return any(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.coeffs == other.coeffs and self.field.same_as(other.field)
        if isinstance(other, int):
            return self.coeffs == self.field.scalar(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def index(self) -> int:
        """Integer whose little-endian base-p digits are the coefficients."""
        k = 0
        for c in reversed(self.coeffs):
            k = k * self.field.p + c
        return k

    def __repr__(self):
        return f"FieldElement({digits(self)!r})"

    def __str__(self):
        return digits(self)


def make_field(p: int, n: int, modulus: Sequence[int],
               generator: Sequence[int] | None = None,
               table_bound: int = DEFAULT_TABLE_BOUND) -> FieldParams:
    """Validated context for F_{p^{2n}}; see FieldParams."""
    return FieldParams(p, n, modulus, generator=generator, table_bound=table_bound)


def parse_field_line(line: str) -> FieldParams:
    """Inverse of FieldParams.serialize()."""
    parts = line.split()
    if not parts or parts[0] != "FIELD":
        raise ValueError(f"not a FIELD line: {line!r}")
    kv = dict(part.split("=", 1) for part in parts[1:])
    return make_field(int(kv["p"]), int(kv["n"]),
                      [int(c) for c in kv["modulus"].split(",")])


def arith(kind: str, a: FieldElement, b=None) -> FieldElement:
    """Dispatch one of add, sub, neg, mul, div, inv, pow."""
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "neg":
        return -a
    if kind == "mul":
        return a * b
    if kind == "div":
        b = a._other(b)
        if b.is_zero():
            raise DivisionByZero("division by zero")
        return a / b
    if kind == "inv":
        return a.inverse()
    if kind == "pow":
        return a ** b
    raise ValueError(f"unknown operation {kind!r}")


def frobenius_q(a: FieldElement) -> FieldElement:
    return a ** a.field.q


def norm_q(a: FieldElement) -> FieldElement:
    """a**(q+1), the norm down to F_q."""
    return a ** (a.field.q + 1)


def half(a: FieldElement) -> FieldElement:
    return a * a.field._half


def in_subfield(a: FieldElement) -> bool:
    return frobenius_q(a) == a


def dlog(a: FieldElement) -> int:
    F = a.field
    if a.is_zero():
        raise ZeroArgument("dlog of zero")
    if F._log is None:
        raise FieldTooLargeForTable(f"no dlog table for a field of size {F.size}")
    return F._log[a.coeffs]


def qtrace_kernel(F: FieldParams, scan_bound: int = DEFAULT_SCAN_BOUND) -> frozenset:
    """{x : x^q + x = 0} by exhaustive scan of the field."""
    if F.size > scan_bound:
        raise FieldTooLargeForScan(f"field of size {F.size} exceeds scan bound {scan_bound}")
    return frozenset(x for x in F.elements() if (frobenius_q(x) + x).is_zero())


def qtrace_kernel_closed_form(F: FieldParams) -> frozenset:
    """0 together with generator^((q+1)/2 + k(q+1)) for k = 0 .. q-2."""
    q = F.q
    return frozenset([F.zero] + [F.gen_pow((q + 1) // 2 + k * (q + 1)) for k in range(q - 1)])


def digits(a: FieldElement) -> str:
    """Little-endian digit string, constant term first."""
    if a.field.p <= 10:
        return "".join(str(c) for c in a.coeffs)
    return ".".join(str(c) for c in a.coeffs)


def parse_digits(s: str, F: FieldParams) -> FieldElement:
    s = s.strip()
    if F.p <= 10:
        parts = list(s)
    else:
        parts = s.split(".")
    if len(parts) != F.m:
        raise BadLength(f"expected {F.m} digits, got {len(parts)} in {s!r}")
    coeffs = []
    for ch in parts:
        if not ch.isdigit() or int(ch) >= F.p:
            raise BadDigit(f"bad digit {ch!r} for p={F.p}")
        coeffs.append(int(ch))
    return FieldElement(F, tuple(coeffs))
