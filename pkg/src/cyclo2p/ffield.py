"""Prime and extension field arithmetic, 2p-th roots of unity, Gauss periods.

Extension fields use a polynomial basis over F_r with a fixed reduction
polynomial (the smallest monic irreducible in counting order), so every
derived value, including the chosen root of unity, is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from . import poly
from .cyclotomy import ClassLabel, CyclotomicTables
from .ntcore import factorize, is_prime, mult_order


class PrimeFieldElement:
    """Residue modulo a prime r with the usual operators."""

    __slots__ = ("value", "r")

    def __init__(self, value: int, r: int):
        self.value = value % r
        self.r = r

    def _coerce(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.r != self.r:
                raise ValueError("elements of different prime fields")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else PrimeFieldElement(self.value + o, self.r)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else PrimeFieldElement(self.value - o, self.r)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else PrimeFieldElement(o - self.value, self.r)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else PrimeFieldElement(self.value * o, self.r)

    __rmul__ = __mul__

    def __neg__(self):
        return PrimeFieldElement(-self.value, self.r)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return PrimeFieldElement(pow(self.value, e, self.r), self.r)

    def inverse(self):
        if self.value == 0:
            raise ZeroDivisionError("zero has no inverse")
        return PrimeFieldElement(pow(self.value, -1, self.r), self.r)

    def is_zero(self) -> bool:
        return self.value == 0

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElement):
            return self.r == other.r and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.r
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.r))

    def __repr__(self):
        return f"{self.value} (mod {self.r})"


@lru_cache(maxsize=None)
def _find_irreducible(r: int, m: int) -> tuple[int, ...]:
    if m == 1:
        return (0, 1)
    # counting order: the integer with base-r digits c_0 (least significant) .. c_{m-1}
    for idx in range(r**m):
        low = [(idx // r**i) % r for i in range(m)]
        if low[0] == 0:
            continue
        f = low + [1]
        if poly.is_irreducible(f, r):
            return tuple(f)
    raise AssertionError(f"no irreducible of degree {m} over F_{r}")  # unreachable


def find_irreducible(r: int, m: int) -> list[int]:
    """Smallest monic irreducible of degree m over F_r.

    Candidates x^m + c_{m-1} x^{m-1} + ... + c_0 are visited as the integer
    sum c_i r^i counts upward, so the constant term varies fastest. For m = 1
    this is x itself.
    """
    if not is_prime(r) or r < 5:
        raise ValueError(f"r must be a prime >= 5, got {r}")
    if m < 1:
        raise ValueError(f"degree must be >= 1, got {m}")
    return list(_find_irreducible(r, m))


@dataclass(frozen=True)
class ExtField:
    """F_{r^m} = F_r[x] / (modulus)."""

    r: int
    m: int
    modulus: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not self.modulus:
            object.__setattr__(self, "modulus", tuple(find_irreducible(self.r, self.m)))
        if len(self.modulus) != self.m + 1 or self.modulus[-1] != 1:
            raise ValueError("reduction polynomial must be monic of degree m")

    @property
    def order(self) -> int:
        return self.r**self.m

    def __call__(self, coeffs) -> "ExtFieldElement":
        if isinstance(coeffs, int):
            coeffs = [coeffs]
        coeffs = [c % self.r for c in coeffs]
        if len(coeffs) > self.m:
            coeffs = poly.mod(poly.trim(coeffs), list(self.modulus), self.r)
        return ExtFieldElement(tuple(coeffs) + (0,) * (self.m - len(coeffs)), self)

    def zero(self):
        return self(0)

    def one(self):
        return self(1)

    def element(self, index: int) -> "ExtFieldElement":
        """Element whose coefficients are the base-r digits of ``index``."""
        return self([(index // self.r**i) % self.r for i in range(self.m)])

    def elements(self):
        for idx in range(self.order):
            yield self.element(idx)

    def reduce_product(self, prod: list[int]) -> tuple[int, ...]:
        r, m, f = self.r, self.m, self.modulus
        for k in range(len(prod) - 1, m - 1, -1):
            c = prod[k] % r
            if c:
                for j in range(m):
                    prod[k - m + j] -= c * f[j]
            prod[k] = 0
        return tuple(c % r for c in prod[:m])


class ExtFieldElement:
    """Element of F_{r^m}; ``coeffs[i]`` multiplies x^i."""

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs: tuple[int, ...], fld: ExtField):
        self.coeffs = coeffs
        self.field = fld

    def _lift(self, other):
        if isinstance(other, ExtFieldElement):
            if other.field is not self.field and other.field != self.field:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, int):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        r = self.field.r
        return ExtFieldElement(
            tuple((a + b) % r for a, b in zip(self.coeffs, o.coeffs)), self.field
        )

    __radd__ = __add__

    def __neg__(self):
        r = self.field.r
        return ExtFieldElement(tuple(-a % r for a in self.coeffs), self.field)

    def __sub__(self, other):
        o = self._lift(other)
        return o if o is NotImplemented else self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        return o if o is NotImplemented else o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        a, b = self.coeffs, o.coeffs
        prod = [0] * (2 * len(a) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        return ExtFieldElement(self.field.reduce_product(prod), self.field)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = self.field.one(), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("zero has no inverse")
        return self ** (self.field.order - 2)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def in_prime_subfield(self) -> bool:
        return not any(self.coeffs[1:])

    def __eq__(self, other):
        if isinstance(other, ExtFieldElement):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == self.field(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.coeffs, self.field.r, self.field.m))

    def __repr__(self):
        return f"GF({self.field.r}^{self.field.m}){list(self.coeffs)}"

    def to_list(self) -> list[int]:
        return list(self.coeffs)


def has_order(x: ExtFieldElement, n: int) -> bool:
    """True iff x has multiplicative order exactly n."""
    if x.is_zero() or x**n != 1:
        return False
    return all(x ** (n // q) != 1 for q, _ in factorize(n))


def field_for(p: int, r: int) -> ExtField:
    """Smallest extension of F_r holding the 2p-th roots of unity."""
    return ExtField(r, mult_order(r, p))


def root_of_unity(fld: ExtField, order: int) -> ExtFieldElement:
    q1 = fld.order - 1
    if q1 % order:
        raise ValueError(f"{order} does not divide {fld.r}^{fld.m} - 1")
    cofactor = q1 // order
    for idx in range(1, fld.order):
        y = fld.element(idx) ** cofactor
        if has_order(y, order):
            return y
    raise AssertionError("multiplicative group is not cyclic?")  # unreachable


@dataclass(frozen=True)
class GaussPeriodPair:
    eta0: ExtFieldElement
    eta1: ExtFieldElement

    def to_dict(self) -> dict:
        return {"eta0": self.eta0.to_list(), "eta1": self.eta1.to_list()}


def gauss_periods(beta: ExtFieldElement, tables: CyclotomicTables) -> GaussPeriodPair:
    n = tables.n
    if not has_order(beta, n):
        raise ValueError(f"beta must have order exactly {n}")
    alpha = beta * beta
    pw = _powers(alpha, tables.p)
    eta0 = sum((pw[i] for i in tables.d0p), beta.field.zero())
    eta1 = sum((pw[i] for i in tables.d1p), beta.field.zero())
    return GaussPeriodPair(eta0, eta1)


def lemma7_checks(pair: GaussPeriodPair, p: int) -> dict[str, bool]:
    """eta0 + eta1 = -1, and the quadratic relation selected by p mod 4."""
    out = {"sum": pair.eta0 + pair.eta1 == -1}
    if p % 4 == 1:
        out["quadratic"] = pair.eta0 * (pair.eta0 + 1) == (p - 1) // 4
    else:
        out["quadratic"] = pair.eta1 * (pair.eta1 + 1) == -((p + 1) // 4)
    return out


def rationality_check(pair: GaussPeriodPair, r: int, p: int) -> bool:
    """True iff both periods lie in the prime subfield F_r."""
    if pair.eta0.field.r != r:
        raise ValueError("pair lives over a different prime field")
    return pair.eta0.in_prime_subfield() and pair.eta1.in_prime_subfield()


def _powers(x: ExtFieldElement, count: int) -> list[ExtFieldElement]:
    out = [x.field.one()]
    for _ in range(count - 1):
        out.append(out[-1] * x)
    return out


def eval_S_at_field_point(seq, x: ExtFieldElement) -> ExtFieldElement:
    """Horner evaluation of S(x) = sum s_i x^i."""
    acc = x.field.zero()
    for bit in reversed(seq.bits):
        acc = acc * x
        if bit:
            acc = acc + 1
    return acc


def eval_S_on_roots(seq, beta: ExtFieldElement) -> list[ExtFieldElement]:
    """[S(beta^k) for k in range(N)] using a table of the N powers of beta."""
    n = seq.n
    pw = _powers(beta, n)
    ones = [i for i, b in enumerate(seq.bits) if b]
    zero = beta.field.zero()
    return [sum((pw[k * i % n] for i in ones), zero) for k in range(n)]


def lemma8_value(k: int, tables: CyclotomicTables, pair: GaussPeriodPair) -> ExtFieldElement:
    """Closed-form S(beta^k) by class of k and p mod 8."""
    p = tables.p
    fld = pair.eta0.field
    lab = tables.label(k)
    if lab is ClassLabel.ZERO:
        return fld(p)
    if lab is ClassLabel.P_ITSELF:
        return fld.one()
    if p % 8 in (1, 7):
        if lab in (ClassLabel.D0_2P, ClassLabel.D1_2P):
            return fld.one()
        if lab is ClassLabel.TWO_D0_P:
            return pair.eta1 * 2 + 1
        return pair.eta0 * 2 + 1
    if lab is ClassLabel.D0_2P:
        return pair.eta0 * -2
    if lab is ClassLabel.D1_2P:
        return pair.eta1 * -2
    return fld.zero()


@dataclass
class Lemma8Row:
    k: int
    label: ClassLabel
    direct: ExtFieldElement
    closed_form: ExtFieldElement

    @property
    def agrees(self) -> bool:
        return self.direct == self.closed_form

    @property
    def unexpected_zero(self) -> bool:
        """Zero of S(beta^k) outside 2D_0^(p) and 2D_1^(p)."""
        return self.direct.is_zero() and self.label not in (
            ClassLabel.TWO_D0_P,
            ClassLabel.TWO_D1_P,
        )

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "class": self.label.value,
            "direct": self.direct.to_list(),
            "closed_form": self.closed_form.to_list(),
            "agrees": self.agrees,
            "unexpected_zero": self.unexpected_zero,
        }


def lemma8_case_table(seq, beta, tables, pair, all_k: bool = False) -> list[Lemma8Row]:
    """Direct S(beta^k) against the closed form.

    With ``all_k`` every k in [0, 2p) is compared; otherwise one
    representative per class (its smallest member).
    """
    values = eval_S_on_roots(seq, beta)
    if all_k:
        ks = range(tables.n)
    else:
        firsts = {}
        for k in range(tables.n):
            firsts.setdefault(tables.label(k), k)
        ks = sorted(firsts.values())
    return [Lemma8Row(k, tables.label(k), values[k], lemma8_value(k, tables, pair)) for k in ks]


__all__ = [
    "ExtField",
    "ExtFieldElement",
    "GaussPeriodPair",
    "Lemma8Row",
    "PrimeFieldElement",
    "eval_S_at_field_point",
    "eval_S_on_roots",
    "field_for",
    "find_irreducible",
    "gauss_periods",
    "has_order",
    "lemma7_checks",
    "lemma8_case_table",
    "lemma8_value",
    "rationality_check",
    "root_of_unity",
]
