"""Exact integer primitives shared by the rest of the package.

Python's ``int`` is arbitrary precision, so it serves directly as the
big-natural type: values like ``2**(2*p) - 1`` for p in the hundreds are
exact and canonical without any extra wrapper.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache


BigNat = int

# Deterministic Miller-Rabin witnesses for every n < 3.3 * 10**24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def mod_pow(base: int, exp: int, modulus: int) -> int:
    if modulus < 2:
        raise ValueError(f"modulus must be >= 2, got {modulus}")
    if exp < 0:
        raise ValueError(f"exponent must be nonnegative, got {exp}")
    return pow(base, exp, modulus)


def is_prime(n: int) -> bool:
    """Deterministic primality test (exact for all n < 2**64)."""
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _require_odd_prime(p: int) -> None:
    if p < 3 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) via Euler's criterion."""
    _require_odd_prime(p)
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Trial-division factorization as ``((prime, exponent), ...)``."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def euler_phi(n: int) -> int:
    result = n
    for q, _ in factorize(n):
        result -= result // q
    return result


def mult_order(a: int, n: int) -> int:
    """Multiplicative order of ``a`` modulo ``n``.

    Starts from phi(n) and strips prime factors while the power stays 1.
    """
    if n < 2:
        raise ValueError(f"modulus must be >= 2, got {n}")
    a %= n
    if math.gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit modulo {n}")
    order = euler_phi(n)
    for q, e in factorize(order):
        for _ in range(e):
            if pow(a, order // q, n) == 1:
                order //= q
            else:
                break
    return order


def is_common_primitive_root(g: int, p: int) -> bool:
    if g % 2 == 0 or math.gcd(g, p) != 1:
        return False
    return mult_order(g, p) == p - 1 and mult_order(g, 2 * p) == p - 1


def find_common_primitive_root(p: int) -> int:
    """Smallest odd g >= 3 generating both Z_p^* and Z_2p^*."""
    _require_odd_prime(p)
    g = 3
    while not is_common_primitive_root(g, p):
        g += 2
    return g


def crt_2p(a: int, b: int, p: int) -> int:
    """The x in [0, 2p) with x = a (mod p) and x = b (mod 2)."""
    if not 0 <= a < p or b not in (0, 1):
        raise ValueError(f"residues out of range: A={a}, B={b}, p={p}")
    return (a * (p + 1) + p * b) % (2 * p)


def big_gcd(a: BigNat, b: BigNat) -> BigNat:
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


@dataclass(frozen=True)
class PrimeParams:
    """Validated (p, g) pair; ``n`` is the period 2p."""

    p: int
    g: int

    def __post_init__(self):
        _require_odd_prime(self.p)
        if not 3 <= self.g <= 2 * self.p - 1:
            raise ValueError(f"g={self.g} must lie in [3, {2 * self.p - 1}]")
        if not is_common_primitive_root(self.g, self.p):
            raise ValueError(
                f"g={self.g} is not an odd common primitive root of {self.p} and {2 * self.p}"
            )

    @property
    def n(self) -> int:
        return 2 * self.p

    @property
    def p_mod_8(self) -> int:
        return self.p % 8

    @classmethod
    def default(cls, p: int) -> "PrimeParams":
        return cls(p, find_common_primitive_root(p))


def primes_between(lo: int, hi: int) -> list[int]:
    return [n for n in range(max(lo, 2), hi + 1) if is_prime(n)]
