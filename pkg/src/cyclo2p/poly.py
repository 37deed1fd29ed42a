"""Dense polynomials over a prime field F_r.

A polynomial a_0 + a_1 x + ... + a_n x^n is a list ``[a_0, ..., a_n]`` of
residues in [0, r) with a_n != 0; the zero polynomial is ``[]``.
"""

from __future__ import annotations

from .ntcore import factorize

FieldPolynomial = list  # list[int], lowest degree first, trimmed


def trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def from_ints(coeffs, r: int) -> list[int]:
    return trim([c % r for c in coeffs])


def degree(a: list[int]) -> int:
    return len(a) - 1


def add(a, b, r):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % r
    return trim(out)


def sub(a, b, r):
    return add(a, [(-c) % r for c in b], r)


def scale(a, c, r):
    c %= r
    return trim([x * c % r for x in a]) if c else []


def mul(a, b, r):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim([c % r for c in out])


def divmod_poly(a, b, r):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    db = len(b) - 1
    inv_lead = pow(b[-1], -1, r)
    if len(rem) <= db:
        return [], trim(rem)
    quot = [0] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k] * inv_lead % r
        if c:
            quot[k - db] = c
            for j in range(db + 1):
                rem[k - db + j] = (rem[k - db + j] - c * b[j]) % r
    return trim(quot), trim(rem[:db])


def mod(a, b, r):
    return divmod_poly(a, b, r)[1]


def monic(a, r):
    if not a:
        return []
    return scale(a, pow(a[-1], -1, r), r)


def gcd(a, b, r):
    """Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0."""
    a, b = trim(list(a)), trim(list(b))
    while b:
        a, b = b, mod(a, b, r)
    return monic(a, r)


def powmod(base, e: int, modulus, r):
    result = [1]
    base = mod(base, modulus, r)
    while e:
        if e & 1:
            result = mod(mul(result, base, r), modulus, r)
        base = mod(mul(base, base, r), modulus, r)
        e >>= 1
    return mod(result, modulus, r)


def x_pow_minus_one(n: int, r: int) -> list[int]:
    """x^n - 1 over F_r."""
    return [r - 1] + [0] * (n - 1) + [1]


def evaluate(a, x: int, r: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % r
    return acc


def is_irreducible(f, r: int) -> bool:
    """Rabin's test for a polynomial of degree >= 1 over F_r."""
    n = degree(f)
    if n < 1:
        return False
    if n == 1:
        return True
    f = monic(f, r)
    x = [0, 1]
    # x^(r^k) mod f, built by repeated r-th powering
    frob = [x]
    for _ in range(n):
        frob.append(powmod(frob[-1], r, f, r))
    if frob[n] != x:
        return False
    for q, _ in factorize(n):
        h = sub(frob[n // q], x, r)
        if degree(gcd(f, h, r)) != 0:
            return False
    return True


def to_str(a, var: str = "x") -> str:
    if not a:
        return "0"
    terms = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not mono:
            terms.append(str(c))
        elif c == 1:
            terms.append(mono)
        else:
            terms.append(f"{c}*{mono}")
    return " + ".join(terms)
