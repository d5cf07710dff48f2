"""Arithmetic in GF(2)[x]/(M_p(x)) with M_p(x) = 1 + x + ... + x^(p-1).

The ring splits by the Chinese remainder theorem into a product of fields,
one per irreducible factor of M_p.  Elements are canonical representatives
of degree < p-1; ``split``/``join`` move between a representative and its
per-factor residues.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field

from . import gf2poly
from .galois import Element, GaloisField


def is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


def multiplicative_order(a: int, p: int) -> int:
    k, x = 1, a % p
    while x != 1:
        x = x * a % p
        k += 1
    return k


@dataclass(frozen=True)
class QuotientRing:
    p: int
    modulus: int = field(init=False, compare=False)
    factors: tuple[int, ...] = field(init=False, compare=False)
    components: tuple[GaloisField, ...] = field(init=False, compare=False, repr=False)
    _crt_basis: tuple[int, ...] = field(init=False, compare=False, repr=False)

    zero = 0
    one = 1
    alpha = 2

    def __post_init__(self):
        p = self.p
        if not is_prime(p) or p < 3:
            raise ValueError("p must be an odd prime, got %r" % p)
        mp = gf2poly.cyclotomic_like(p)
        d = multiplicative_order(2, p)
        factors = tuple(gf2poly.equal_degree_factor(mp, d))
        object.__setattr__(self, "modulus", mp)
        object.__setattr__(self, "factors", factors)
        object.__setattr__(
            self, "components", tuple(GaloisField(gf2poly.degree(f), f) for f in factors)
        )
        # e_k = 1 mod f_k, 0 mod f_j (j != k)
        basis = []
        for f in factors:
            cofactor, r = gf2poly.divmod_poly(mp, f)
            assert r == 0
            basis.append(gf2poly.mulmod(cofactor, gf2poly.invmod(cofactor, f), mp))
        object.__setattr__(self, "_crt_basis", tuple(basis))

    @property
    def order_alpha(self) -> int:
        return self.p

    @property
    def name(self) -> str:
        return "GF(2)[x]/M_%d" % self.p

    @property
    def size(self) -> int:
        return 1 << (self.p - 1)

    @property
    def is_field(self) -> bool:
        return len(self.factors) == 1

    def element(self, value: int) -> Element:
        if not 0 <= value < (1 << (self.p - 1)):
            raise ValueError("%r is not a canonical representative mod M_%d" % (value, self.p))
        return Element(self, value)

    def reduce(self, poly: int) -> int:
        return gf2poly.mod(poly, self.modulus)

    def split(self, a: int) -> tuple[int, ...]:
        return tuple(gf2poly.mod(a, f) for f in self.factors)

    def join(self, residues) -> int:
        out = 0
        for r, e in zip(residues, self._crt_basis):
            if r:
                out ^= gf2poly.mulmod(r, e, self.modulus)
        return out

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        return gf2poly.mulmod(a, b, self.modulus)

    def is_unit(self, a: int) -> bool:
        return all(self.split(a))

    def inv(self, a: int) -> int:
        res = self.split(a)
        if not all(res):
            raise ZeroDivisionError("%x is not a unit mod M_%d" % (a, self.p))
        return self.join(F.inv(x) for F, x in zip(self.components, res))

    inv_unit = inv

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        return gf2poly.powmod(a, k, self.modulus)

    def alpha_pow(self, k: int) -> int:
        return gf2poly.powmod(2, k % self.p, self.modulus)

    def alpha_log(self, a: int) -> int:
        for k in range(self.p):
            if self.alpha_pow(k) == a:
                return k
        raise ValueError("%x is not a power of alpha" % a)

    def __repr__(self) -> str:
        return "QuotientRing(p=%d)" % self.p


@functools.lru_cache(maxsize=None)
def ring_new(p: int) -> QuotientRing:
    return QuotientRing(p)
