"""Arithmetic in GF(2^w) defined by an irreducible binary polynomial.

Elements are plain ints holding the polynomial basis coordinates, bit ``i``
being the coefficient of ``x^i``.  ``alpha`` is always the class of ``x``.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Any

from . import gf2poly

TABLE_MAX_W = 16


class AlgebraMismatch(TypeError):
    """Operands belong to different fields or rings."""


@dataclass(frozen=True)
class Element:
    """An algebra element bound to its field or ring.

    The algebras themselves work on raw ints; this wrapper exists for callers
    who want operator syntax and a guard against mixing algebras.
    """

    algebra: Any
    value: int

    def _other(self, other: Element) -> int:
        if not isinstance(other, Element) or other.algebra != self.algebra:
            raise AlgebraMismatch("operands belong to different algebras")
        return other.value

    def __add__(self, other: Element) -> Element:
        return Element(self.algebra, self.algebra.add(self.value, self._other(other)))

    __sub__ = __add__

    def __mul__(self, other: Element) -> Element:
        return Element(self.algebra, self.algebra.mul(self.value, self._other(other)))

    def __truediv__(self, other: Element) -> Element:
        inv = self.algebra.inv(self._other(other))
        return Element(self.algebra, self.algebra.mul(self.value, inv))

    def __pow__(self, k: int) -> Element:
        return Element(self.algebra, self.algebra.pow(self.value, k))

    def __bool__(self) -> bool:
        return self.value != 0

    def inverse(self) -> Element:
        return Element(self.algebra, self.algebra.inv(self.value))

    @property
    def residues(self) -> tuple[int, ...]:
        return self.algebra.split(self.value)

    def __str__(self) -> str:
        return gf2poly.to_hex(self.value)


@dataclass(frozen=True)
class GaloisField:
    """GF(2^w) = GF(2)[x]/(modulus)."""

    w: int
    modulus: int
    order_alpha: int = field(init=False, compare=False)
    _exp: list[int] | None = field(init=False, compare=False, repr=False, default=None)
    _log: list[int] | None = field(init=False, compare=False, repr=False, default=None)
    _alpha_log: int = field(init=False, compare=False, repr=False, default=0)

    zero = 0
    one = 1

    def __post_init__(self):
        if not 2 <= self.w <= 32:
            raise ValueError("w must lie in 2..32, got %d" % self.w)
        if gf2poly.degree(self.modulus) != self.w:
            raise ValueError(
                "modulus %s has degree %d, expected %d"
                % (gf2poly.format_poly(self.modulus), gf2poly.degree(self.modulus), self.w)
            )
        if not gf2poly.is_irreducible(self.modulus):
            raise ValueError("modulus %s is reducible" % gf2poly.format_poly(self.modulus))
        if self.w <= TABLE_MAX_W:
            self._build_tables()
        object.__setattr__(self, "order_alpha", self.element_order(self.alpha))

    def _build_tables(self) -> None:
        q1 = (1 << self.w) - 1
        g = next(c for c in range(2, q1 + 1) if self._slow_order(c) == q1)
        exp = [0] * (2 * q1)
        log = [0] * (q1 + 1)
        x = 1
        for i in range(q1):
            exp[i] = exp[i + q1] = x
            log[x] = i
            x = gf2poly.mulmod(x, g, self.modulus)
        object.__setattr__(self, "_exp", exp)
        object.__setattr__(self, "_log", log)
        object.__setattr__(self, "_alpha_log", log[2])

    def _slow_order(self, a: int) -> int:
        q1 = (1 << self.w) - 1
        order = q1
        for f in gf2poly.prime_factors(q1):
            while order % f == 0 and gf2poly.powmod(a, order // f, self.modulus) == 1:
                order //= f
        return order

    # -- algebra protocol -------------------------------------------------

    @property
    def alpha(self) -> int:
        return 2

    @property
    def size(self) -> int:
        return 1 << self.w

    @property
    def name(self) -> str:
        return "GF(2^%d)/%s" % (self.w, gf2poly.to_hex(self.modulus))

    @property
    def components(self) -> tuple[GaloisField, ...]:
        return (self,)

    def split(self, a: int) -> tuple[int, ...]:
        return (a,)

    def join(self, residues) -> int:
        (a,) = residues
        return a

    def element(self, value: int) -> Element:
        self._check(value)
        return Element(self, value)

    def _check(self, a: int) -> None:
        if not 0 <= a < (1 << self.w):
            raise ValueError("%r does not fit in %d bits" % (a, self.w))

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._log is not None:
            return self._exp[self._log[a] + self._log[b]]
        return gf2poly.mulmod(a, b, self.modulus)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in %s" % self.name)
        if self._log is not None:
            return self._exp[(-self._log[a]) % ((1 << self.w) - 1)]
        return gf2poly.invmod(a, self.modulus)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def is_unit(self, a: int) -> bool:
        return a != 0

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        if a == 0:
            return 1 if k == 0 else 0
        if self._log is not None:
            q1 = (1 << self.w) - 1
            return self._exp[(self._log[a] * k) % q1]
        return gf2poly.powmod(a, k, self.modulus)

    def alpha_pow(self, k: int) -> int:
        """alpha^k for any integer k, exponent reduced modulo O(alpha) first."""
        k %= self.order_alpha
        if self._log is not None:
            return self._exp[(self._alpha_log * k) % ((1 << self.w) - 1)]
        return gf2poly.powmod(2, k, self.modulus)

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        if self._log is not None:
            q1 = (1 << self.w) - 1
            from math import gcd

            return q1 // gcd(self._log[a], q1)
        return self._slow_order(a)

    def alpha_log(self, a: int) -> int:
        """The k in 0..O(alpha)-1 with alpha^k = a; ValueError if a is not a power of alpha."""
        if a == 0:
            raise ValueError("0 is not a power of alpha")
        if self._log is not None:
            q1 = (1 << self.w) - 1
            step = q1 // self.order_alpha
            la = self._log[a]
            if la % step:
                raise ValueError("%x is not a power of alpha" % a)
            # alpha = g^alog, so k * alog == la (mod q1)
            k = (la // step) * pow(self._alpha_log // step, -1, self.order_alpha)
            return k % self.order_alpha
        x = 1
        for k in range(self.order_alpha):
            if x == a:
                return k
            x = gf2poly.mulmod(x, 2, self.modulus)
        raise ValueError("%x is not a power of alpha" % a)

    def __repr__(self) -> str:
        return "GaloisField(w=%d, modulus=0x%x)" % (self.w, self.modulus)


@functools.lru_cache(maxsize=None)
def default_modulus(w: int) -> int:
    """Lexicographically least primitive polynomial of degree ``w``."""
    q1 = (1 << w) - 1
    for f in range((1 << w) | 1, 1 << (w + 1), 2):
        if not gf2poly.is_irreducible(f):
            continue
        order = q1
        for p in gf2poly.prime_factors(q1):
            while order % p == 0 and gf2poly.powmod(2, order // p, f) == 1:
                order //= p
        if order == q1:
            return f
    raise AssertionError("no primitive polynomial of degree %d" % w)


@functools.lru_cache(maxsize=None)
def field_new(w: int, modulus: int | None = None) -> GaloisField:
    """Build (and cache) GF(2^w); the default modulus is primitive."""
    if modulus is None:
        modulus = default_modulus(w)
    return GaloisField(w, modulus)
