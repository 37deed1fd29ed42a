"""Linear complexity over F_r by three independent routes.

* Berlekamp-Massey on two full periods,
* the polynomial gcd d(x) = gcd(x^N - 1, S(x)), giving m(x) = (x^N - 1)/d(x),
* counting the k with S(beta^k) = 0 for a primitive N-th root beta in F_{r^m}.

Minimal polynomials follow the connection convention: m(x) S(x) = 0 modulo
x^N - 1, i.e. sum_i m_i s_{t-i} = 0 for every t (indices mod N).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import poly
from .errors import ConsistencyError
from .ffield import ExtField, PrimeFieldElement, eval_S_on_roots, root_of_unity
from .ntcore import is_prime, mult_order
from .seqgen import BinarySequence

SKIPPED = "SKIPPED"
DEFAULT_M_CAP = 12


def _check_r(seq: BinarySequence, r: int) -> None:
    if r < 5 or not is_prime(r):
        raise ValueError(f"r must be a prime >= 5, got {r}")
    if seq.params is not None and r == seq.params.p:
        raise ValueError("r must differ from p")


def berlekamp_massey_elements(terms, zero, one):
    """Berlekamp-Massey over any field whose elements support + - * and ``inverse()``.

    Returns ``(L, C)`` with C = [c_0 = 1, c_1, ..., c_L] such that
    sum_i c_i s_{n-i} = 0 for all L <= n < len(terms).
    """
    c, b = [one], [one]
    length, shift, last = 0, 1, one
    for n, s_n in enumerate(terms):
        d = s_n
        for i in range(1, length + 1):
            d = d + c[i] * terms[n - i]
        if d.is_zero():
            shift += 1
            continue
        coef = d * last.inverse()
        new = c + [zero] * max(0, len(b) + shift - len(c))
        for i, bi in enumerate(b):
            new[i + shift] = new[i + shift] - coef * bi
        if 2 * length <= n:
            b, last, length, shift = c, d, n + 1 - length, 1
        else:
            shift += 1
        c = new
    c = c[: length + 1] + [zero] * max(0, length + 1 - len(c))
    return length, c


def berlekamp_massey(seq: BinarySequence, r: int) -> tuple[int, list[int]]:
    """Linear complexity and connection polynomial of ``seq`` over F_r.

    Two periods are fed in so the result is the periodic complexity.
    """
    _check_r(seq, r)
    terms = [PrimeFieldElement(b, r) for b in seq.bits * 2]
    length, c = berlekamp_massey_elements(terms, PrimeFieldElement(0, r), PrimeFieldElement(1, r))
    return length, poly.trim([x.value for x in c])


def generating_polynomial(seq: BinarySequence, r: int) -> list[int]:
    return poly.from_ints(seq.bits, r)


def lc_via_gcd(seq: BinarySequence, r: int) -> tuple[int, list[int]]:
    _check_r(seq, r)
    n = seq.n
    xn1 = poly.x_pow_minus_one(n, r)
    d = poly.gcd(xn1, generating_polynomial(seq, r), r)
    minimal, rem = poly.divmod_poly(xn1, d, r)
    if rem:
        raise ConsistencyError("gcd does not divide x^N - 1")
    return n - poly.degree(d), minimal


def root_field(seq: BinarySequence, r: int) -> ExtField:
    return ExtField(r, mult_order(r, seq.n))


def root_zeros(seq: BinarySequence, r: int, cap: int = DEFAULT_M_CAP) -> list[int] | str:
    """Exponents k with S(beta^k) = 0, or SKIPPED when the field is too large."""
    _check_r(seq, r)
    if seq.n % r == 0:
        raise ValueError(f"r={r} divides the period {seq.n}; no primitive N-th root exists")
    m = mult_order(r, seq.n)
    if m > cap:
        return SKIPPED
    fld = ExtField(r, m)
    beta = root_of_unity(fld, seq.n)
    return [k for k, v in enumerate(eval_S_on_roots(seq, beta)) if v.is_zero()]


def lc_via_roots(seq: BinarySequence, r: int, cap: int = DEFAULT_M_CAP) -> int | str:
    zeros = root_zeros(seq, r, cap)
    if zeros == SKIPPED:
        return SKIPPED
    return seq.n - len(zeros)


def theorem1_prediction(p: int) -> int:
    if p < 3 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    return 2 * p if p % 8 in (1, 7) else p + 1


def annihilates(minimal: list[int], seq: BinarySequence, r: int) -> bool:
    """sum_i m_i s_{t-i} = 0 (mod r) for every t over one period."""
    n = seq.n
    bits = seq.bits
    return all(
        sum(c * bits[(t - i) % n] for i, c in enumerate(minimal)) % r == 0 for t in range(n)
    )


def divides_xn_minus_one(minimal: list[int], n: int, r: int) -> bool:
    return not poly.divmod_poly(poly.x_pow_minus_one(n, r), minimal, r)[1]


def minimal_poly_shape(minimal: list[int], seq: BinarySequence, r: int) -> str:
    """Classify m(x) as "x^N-1", "quotient" or "other".

    "quotient" means x^N - 1 divided by prod (x - beta^k) over the nonzero
    even k, which is (x^N - 1)/(1 + x + ... + x^(N/2 - 1)).
    """
    n = seq.n
    if minimal == poly.x_pow_minus_one(n, r):
        return "x^N-1"
    if n % 2 == 0:
        q = poly.divmod_poly(poly.x_pow_minus_one(n, r), [1] * (n // 2), r)[0]
        if minimal == q:
            return "quotient"
    return "other"


@dataclass
class LinComplexityReport:
    p: int | None
    g: int | None
    r: int
    m: int | None
    lc_bm: int
    lc_gcd: int
    lc_roots: int | str
    minimal_poly: list[int]
    predicted: int | None
    connection_poly: list[int] = field(repr=False, default_factory=list)

    @property
    def lc(self) -> int:
        return self.lc_gcd

    @property
    def methods_agree(self) -> bool:
        return self.lc_bm == self.lc_gcd and self.lc_roots in (SKIPPED, self.lc_gcd)

    @property
    def matches_theorem(self) -> bool | None:
        return None if self.predicted is None else self.lc == self.predicted

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "g": self.g,
            "r": self.r,
            "m": self.m,
            "lc": self.lc,
            "minimal_poly": list(self.minimal_poly),
            "predicted": self.predicted,
            "matches_theorem": self.matches_theorem,
            "methods": {"bm": self.lc_bm, "gcd": self.lc_gcd, "roots": self.lc_roots},
            "methods_agree": self.methods_agree,
        }


def analyze_linear(seq: BinarySequence, r: int, cap: int = DEFAULT_M_CAP) -> LinComplexityReport:
    """Run all three methods; disagreement is reported, not raised."""
    lc_bm, conn = berlekamp_massey(seq, r)
    lc_gcd, minimal = lc_via_gcd(seq, r)
    coprime = seq.n % r != 0
    lc_roots = lc_via_roots(seq, r, cap) if coprime else SKIPPED
    params = seq.params
    return LinComplexityReport(
        p=params.p if params else None,
        g=params.g if params else None,
        r=r,
        m=mult_order(r, seq.n) if coprime else None,
        lc_bm=lc_bm,
        lc_gcd=lc_gcd,
        lc_roots=lc_roots,
        minimal_poly=minimal,
        predicted=theorem1_prediction(params.p) if params else None,
        connection_poly=conn,
    )


def require_agreement(report: LinComplexityReport) -> LinComplexityReport:
    if not report.methods_agree:
        raise ConsistencyError(
            f"linear complexity methods disagree for p={report.p}, r={report.r}: "
            f"bm={report.lc_bm} gcd={report.lc_gcd} roots={report.lc_roots}"
        )
    return report
