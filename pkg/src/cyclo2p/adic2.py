"""2-adic complexity of period-2p sequences.

Everything is exact integer arithmetic on Python ints. Residues of the
group ring Z[Z_N] under x -> 2 are plain ints reduced modulo 2^N - 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConsistencyError
from .ntcore import big_gcd, is_prime, legendre
from .seqgen import BinarySequence, eval_S_at_2


def compute_Gp(p: int) -> int:
    """sum_{a=1}^{p-1} (a/p) 2^(2a), reduced into [0, 2^(2p) - 1)."""
    if p < 3 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    modulus = (1 << (2 * p)) - 1
    return sum(legendre(a, p) << (2 * a) for a in range(1, p)) % modulus


@dataclass(frozen=True)
class Lemma9Check:
    s2: int
    s2_rhs: int
    gp: int
    gp_squared: int
    gp_squared_rhs: int

    @property
    def s2_identity(self) -> bool:
        return self.s2 == self.s2_rhs

    @property
    def gp_identity(self) -> bool:
        return self.gp_squared == self.gp_squared_rhs

    @property
    def passed(self) -> tuple[bool, bool]:
        return self.s2_identity, self.gp_identity

    def to_dict(self) -> dict:
        return {
            "s2_mod": str(self.s2),
            "s2_rhs": str(self.s2_rhs),
            "gp": str(self.gp),
            "gp_squared": str(self.gp_squared),
            "gp_squared_rhs": str(self.gp_squared_rhs),
            "s2_identity": self.s2_identity,
            "gp_identity": self.gp_identity,
        }


def lemma9_rhs(p: int, gp: int | None = None) -> tuple[int, int]:
    """Right-hand sides of the S(2) and G_p^2 congruences modulo 2^N - 1.

    Halving uses the inverse 2^(N-1); the third (2^N - 1)/3 is an exact
    integer because 3 always divides 4^p - 1.
    """
    n = 2 * p
    modulus = (1 << n) - 1
    if gp is None:
        gp = compute_Gp(p)
    half = 1 << (n - 1)
    third = modulus // 3
    h = (((1 << p) + 1) * half) % modulus
    s2_rhs = (-h + 1 + h * third - half * (legendre(2, p) * (1 << p) + 1) * gp) % modulus
    gp_sq_rhs = (legendre(-1, p) * (p - third)) % modulus
    return s2_rhs, gp_sq_rhs


def check_lemma9(p: int, seq: BinarySequence) -> Lemma9Check:
    if seq.n != 2 * p:
        raise ValueError("sequence period must be 2p")
    modulus = (1 << (2 * p)) - 1
    gp = compute_Gp(p)
    s2_rhs, gp_sq_rhs = lemma9_rhs(p, gp)
    return Lemma9Check(
        s2=eval_S_at_2(seq) % modulus,
        s2_rhs=s2_rhs,
        gp=gp,
        gp_squared=gp * gp % modulus,
        gp_squared_rhs=gp_sq_rhs,
    )


def gcd_split(s2: int, p: int) -> tuple[int, int]:
    """(gcd(S(2), 2^p - 1), gcd(S(2), 2^p + 1))."""
    return big_gcd(s2, (1 << p) - 1), big_gcd(s2, (1 << p) + 1)


def phi2_floor(n: int, gcd_total: int) -> int:
    """floor(log2((2^N - 1)/gcd)), exact via bit length."""
    q, rem = divmod((1 << n) - 1, gcd_total)
    if rem:
        raise ConsistencyError("gcd does not divide 2^N - 1")
    return q.bit_length() - 1


@dataclass(frozen=True)
class AdicReport:
    p: int | None
    g: int | None
    n: int
    s2: int
    gcd_total: int
    gcd_minus: int | None
    gcd_plus: int | None
    phi2_floor: int
    predicted_phi2_floor: int

    @property
    def matches_theorem2(self) -> bool:
        return self.phi2_floor == self.predicted_phi2_floor

    def to_dict(self) -> dict:
        def dec(v):
            return None if v is None else str(v)

        return {
            "p": self.p,
            "g": self.g,
            "N": self.n,
            "s2": str(self.s2),
            "gcd_minus": dec(self.gcd_minus),
            "gcd_plus": dec(self.gcd_plus),
            "gcd_total": str(self.gcd_total),
            "phi2_floor": self.phi2_floor,
            "predicted": self.predicted_phi2_floor,
            "matches_theorem2": self.matches_theorem2,
        }


def adic_complexity(seq: BinarySequence) -> AdicReport:
    """Exact 2-adic complexity; the prediction is the maximum N - 1.

    Raises ConsistencyError if the split gcds fail to multiply back to the
    total, which would mean a bug rather than a finding.
    """
    n = seq.n
    s2 = eval_S_at_2(seq)
    total = big_gcd(s2, (1 << n) - 1)
    minus = plus = None
    if n % 2 == 0:
        minus, plus = gcd_split(s2, n // 2)
        if minus * plus != total:
            raise ConsistencyError(f"gcd split {minus}*{plus} != {total}")
    params = seq.params
    return AdicReport(
        p=params.p if params else None,
        g=params.g if params else None,
        n=n,
        s2=s2,
        gcd_total=total,
        gcd_minus=minus,
        gcd_plus=plus,
        phi2_floor=phi2_floor(n, total),
        predicted_phi2_floor=n - 1,
    )
