"""Generalized cyclotomic classes of order 2 modulo p and 2p."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .ntcore import PrimeParams


class ClassLabel(enum.Enum):
    D0_2P = "D0_2P"
    D1_2P = "D1_2P"
    TWO_D0_P = "TWO_D0_P"
    TWO_D1_P = "TWO_D1_P"
    P_ITSELF = "P_ITSELF"
    ZERO = "ZERO"


@dataclass(frozen=True)
class CyclotomicTables:
    """Index sets for one (p, g), each a sorted list of residues.

    ``d0p``/``d1p`` live in Z_p; everything else lives in Z_2p.
    """

    params: PrimeParams
    d0p: list[int]
    d1p: list[int]
    d02p: list[int]
    d12p: list[int]
    two_d0p: list[int]
    two_d1p: list[int]
    c0: list[int]
    c1: list[int]
    _labels: tuple[ClassLabel, ...] = field(repr=False, compare=False)

    @property
    def p(self) -> int:
        return self.params.p

    @property
    def n(self) -> int:
        return self.params.n

    def label(self, i: int) -> ClassLabel:
        return self._labels[i]

    def to_dict(self) -> dict:
        return {
            "d0p": list(self.d0p),
            "d1p": list(self.d1p),
            "d02p": list(self.d02p),
            "d12p": list(self.d12p),
            "two_d0p": list(self.two_d0p),
            "two_d1p": list(self.two_d1p),
        }


def build_tables(params: PrimeParams) -> CyclotomicTables:
    if not isinstance(params, PrimeParams):
        raise TypeError("build_tables expects PrimeParams")
    p, g, n = params.p, params.g, params.n
    half = (p - 1) // 2
    d0p = sorted(pow(g, 2 * k, p) for k in range(half))
    d1p = sorted(g * x % p for x in d0p)
    d02p = sorted(pow(g, 2 * k, n) for k in range(half))
    d12p = sorted(g * x % n for x in d02p)
    two_d0p = sorted(2 * x % n for x in d0p)
    two_d1p = sorted(2 * x % n for x in d1p)

    labels = [None] * n
    for members, lab in (
        (d02p, ClassLabel.D0_2P),
        (d12p, ClassLabel.D1_2P),
        (two_d0p, ClassLabel.TWO_D0_P),
        (two_d1p, ClassLabel.TWO_D1_P),
        ([p], ClassLabel.P_ITSELF),
        ([0], ClassLabel.ZERO),
    ):
        for i in members:
            if labels[i] is not None:
                raise ValueError(f"residue {i} falls in two classes")
            labels[i] = lab
    if any(lab is None for lab in labels):
        raise ValueError("cyclotomic classes do not cover Z_2p")

    c0 = sorted(d02p + two_d0p + [p])
    c1 = sorted(d12p + two_d1p + [0])
    return CyclotomicTables(
        params, d0p, d1p, d02p, d12p, two_d0p, two_d1p, c0, c1, tuple(labels)
    )


def classify(i: int, tables: CyclotomicTables) -> ClassLabel:
    if not 0 <= i < tables.n:
        raise ValueError(f"residue {i} outside [0, {tables.n})")
    return tables.label(i)


def check_class_lemmas(tables: CyclotomicTables, sample: int = 8) -> dict[str, bool]:
    """Executable versions of the structural facts about the classes.

    * ``two_location``: 2 lies in D_0^(p) exactly when p = +-1 (mod 8).
    * ``half_location``: same criterion for the inverse of 2 mod p.
    * ``coset_product``: a * D_j^(p) = D_{i+j}^(p) for a in D_i^(p),
      checked for about ``sample`` elements a of each class.
    * ``reduction``: D_i^(2p) mod p = D_i^(p).
    """
    p = tables.p
    d = (set(tables.d0p), set(tables.d1p))
    plus_minus_one = p % 8 in (1, 7)

    half = pow(2, -1, p)
    two = 2 % p

    coset_ok = True
    for i in (0, 1):
        members = tables.d0p if i == 0 else tables.d1p
        for a in members[:: max(1, len(members) // sample)]:
            for j in (0, 1):
                if {a * x % p for x in d[j]} != d[(i + j) % 2]:
                    coset_ok = False
    reduction_ok = (
        {x % p for x in tables.d02p} == d[0] and {x % p for x in tables.d12p} == d[1]
    )
    return {
        "two_location": (two in d[0]) == plus_minus_one and (two in d[1]) != plus_minus_one,
        "half_location": (half in d[0]) == plus_minus_one,
        "coset_product": coset_ok,
        "reduction": reduction_ok,
    }
