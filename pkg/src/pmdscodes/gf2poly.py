"""Polynomials over GF(2) packed into Python ints (bit i = coefficient of x^i)."""

from __future__ import annotations

import random


def degree(a: int) -> int:
    """Degree of ``a``; the zero polynomial has degree -1."""
    return a.bit_length() - 1


def clmul(a: int, b: int) -> int:
    """Carry-less product."""
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def divmod_poly(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("polynomial division by zero")
    db = degree(b)
    q = 0
    while degree(a) >= db:
        shift = degree(a) - db
        q |= 1 << shift
        a ^= b << shift
    return q, a


def mod(a: int, m: int) -> int:
    dm = degree(m)
    while degree(a) >= dm:
        a ^= m << (degree(a) - dm)
    return a


def mulmod(a: int, b: int, m: int) -> int:
    # interleaved shift-and-reduce keeps intermediates below 2^deg(m)
    dm = degree(m)
    top = 1 << dm
    a = mod(a, m)
    out = 0
    while b:
        if b & 1:
            out ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= m
    return out


def powmod(a: int, e: int, m: int) -> int:
    if e < 0:
        raise ValueError("negative exponent")
    result = mod(1, m)
    a = mod(a, m)
    while e:
        if e & 1:
            result = mulmod(result, a, m)
        a = mulmod(a, a, m)
        e >>= 1
    return result


def gcd(a: int, b: int) -> int:
    while b:
        a, b = b, mod(a, b)
    return a


def egcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b = g``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod_poly(a, b)
        a, b = b, r
        s0, s1 = s1, s0 ^ clmul(q, s1)
        t0, t1 = t1, t0 ^ clmul(q, t1)
    return a, s0, t0


def invmod(a: int, m: int) -> int:
    g, s, _ = egcd(mod(a, m), m)
    if g != 1:
        raise ZeroDivisionError("polynomial is not invertible modulo %x" % m)
    return mod(s, m)


def prime_factors(n: int) -> list[int]:
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


def is_irreducible(f: int) -> bool:
    """Rabin's irreducibility test."""
    w = degree(f)
    if w < 1:
        return False
    if w == 1:
        return True
    x = 2
    # x^(2^w) == x (mod f)
    y = x
    for _ in range(w):
        y = mulmod(y, y, f)
    if y != mod(x, f):
        return False
    for q in prime_factors(w):
        y = x
        for _ in range(w // q):
            y = mulmod(y, y, f)
        if gcd(y ^ x, f) != 1:
            return False
    return True


def cyclotomic_like(p: int) -> int:
    """M_p(x) = 1 + x + ... + x^(p-1)."""
    return (1 << p) - 1


def equal_degree_factor(f: int, d: int, rng: random.Random | None = None) -> list[int]:
    """Split a squarefree ``f`` whose irreducible factors all have degree ``d``.

    Cantor-Zassenhaus for characteristic 2: the trace map
    a + a^2 + ... + a^(2^(d-1)) takes values in GF(2) on every factor field,
    so its gcd with ``f`` is a nontrivial split about half the time.
    """
    if degree(f) == d:
        return [f]
    if degree(f) % d:
        raise ValueError("degree of f is not a multiple of d")
    rng = rng or random.Random(0)
    n = degree(f)
    while True:
        a = rng.getrandbits(n)
        if degree(a) < 1:
            continue
        t = a
        acc = a
        for _ in range(d - 1):
            t = mulmod(t, t, f)
            acc ^= t
        g = gcd(acc, f)
        if 0 < degree(g) < n:
            h, r = divmod_poly(f, g)
            assert r == 0
            return sorted(equal_degree_factor(g, d, rng) + equal_degree_factor(h, d, rng))


def to_hex(a: int) -> str:
    return format(a, "x")


def from_hex(s: str) -> int:
    s = s.strip().lower()
    if s.startswith("0x"):
        s = s[2:]
    if not s:
        raise ValueError("empty hex token")
    return int(s, 16)


def format_poly(a: int) -> str:
    """Human-readable form, e.g. ``x^4+x+1``."""
    if a == 0:
        return "0"
    terms = []
    for i in range(degree(a), -1, -1):
        if a >> i & 1:
            terms.append("1" if i == 0 else "x" if i == 1 else "x^%d" % i)
    return "+".join(terms)
