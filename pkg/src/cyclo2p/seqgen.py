"""The period-2p binary sequence and its periodic autocorrelation."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .cyclotomy import CyclotomicTables
from .ntcore import PrimeParams


@dataclass(frozen=True)
class BinarySequence:
    """One period of a binary sequence, ``bits[0]`` first.

    ``params`` is None for raw bit strings that did not come from the
    cyclotomic construction.
    """

    bits: tuple[int, ...]
    params: PrimeParams | None = None

    def __len__(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return "".join(map(str, self.bits))

    @property
    def n(self) -> int:
        return len(self.bits)

    @property
    def weight(self) -> int:
        return sum(self.bits)

    @classmethod
    def from_string(cls, text: str, params: PrimeParams | None = None) -> "BinarySequence":
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise ValueError("bit string must be a nonempty run of '0'/'1'")
        return cls(tuple(int(c) for c in text), params)


NOT_COVERED = "NOT_COVERED"


def generate(tables: CyclotomicTables) -> BinarySequence:
    bits = [0] * tables.n
    for i in tables.c1:
        bits[i] = 1
    return BinarySequence(tuple(bits), tables.params)


def eval_S_at_2(seq: BinarySequence) -> int:
    # bit i is the coefficient of 2**i, so reverse before parsing
    if not seq.bits:
        return 0
    return int(str(seq)[::-1], 2)


def autocorrelation(seq: BinarySequence, w: int) -> int:
    n = seq.n
    if not 0 <= w < n:
        raise ValueError(f"shift {w} outside [0, {n})")
    bits = seq.bits
    agree = sum(1 for t in range(n) if bits[t] == bits[(t + w) % n])
    return 2 * agree - n


def autocorr_spectrum(seq: BinarySequence) -> dict[int, int]:
    """Histogram value -> number of shifts w in [0, N) attaining it.

    Each shift is one XOR of the packed period against its rotation:
    C(w) = N - 2 * (number of disagreeing positions).
    """
    n = seq.n
    x = eval_S_at_2(seq)
    mask = (1 << n) - 1
    counts = Counter()
    for w in range(n):
        rotated = ((x >> w) | (x << (n - w))) & mask
        counts[n - 2 * (x ^ rotated).bit_count()] += 1
    return dict(sorted(counts.items(), reverse=True))


def predicted_spectrum(p: int) -> dict[int, int] | str:
    if p % 8 == 1:
        return {2 * p: 1, 2 * p - 4: 1, -2: 2 * p - 2}
    if p % 8 == 3:
        return {2 * p: 1, 2: p - 1, -2: p - 1, -2 * p: 1}
    return NOT_COVERED
