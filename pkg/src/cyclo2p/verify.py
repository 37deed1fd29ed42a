"""Replay of the published worked examples and autocorrelation table.

Every printed value is compared with what this package computes. A
mismatch is reported as a DISCREPANCY with both numbers; it never raises.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .adic2 import adic_complexity
from .cyclotomy import build_tables
from .lincomp import analyze_linear, minimal_poly_shape, require_agreement
from .ntcore import PrimeParams, factorize, find_common_primitive_root, is_common_primitive_root, mult_order, primes_between
from .reference import EXAMPLES, TABLE1_ROWS
from .seqgen import autocorr_spectrum, eval_S_at_2, generate

MATCH = "MATCH"
DISCREPANCY = "DISCREPANCY"

TABLE1_P_MAX = 200


@dataclass
class Check:
    name: str
    stated: object
    computed: object

    @property
    def status(self) -> str:
        return MATCH if self.stated == self.computed else DISCREPANCY

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "stated": _jsonable(self.stated),
            "computed": _jsonable(self.computed),
            "status": self.status,
        }


def _jsonable(v):
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, int) and not isinstance(v, bool) and v.bit_length() > 53:
        return str(v)
    return v


@dataclass
class VerifyRow:
    label: str
    params: dict
    checks: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def status(self) -> str:
        return MATCH if all(c.status == MATCH for c in self.checks) else DISCREPANCY

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "params": self.params,
            "status": self.status,
            "checks": [c.to_dict() for c in self.checks],
            "notes": list(self.notes),
        }


@dataclass
class VerifyOutcome:
    rows: list[VerifyRow]

    def row(self, label: str) -> VerifyRow:
        for r in self.rows:
            if r.label == label:
                return r
        raise KeyError(label)

    @property
    def discrepancies(self) -> list[dict]:
        return [
            {"row": row.label, **c.to_dict()}
            for row in self.rows
            for c in row.checks
            if c.status == DISCREPANCY
        ]

    @property
    def summary(self) -> dict:
        checks = [c for row in self.rows for c in row.checks]
        return {
            "rows": len(self.rows),
            "rows_matching": sum(row.status == MATCH for row in self.rows),
            "checks": len(checks),
            "checks_matching": sum(c.status == MATCH for c in checks),
            "discrepancies": len(checks) - sum(c.status == MATCH for c in checks),
        }

    def to_dict(self) -> dict:
        return {
            "rows": [r.to_dict() for r in self.rows],
            "summary": self.summary,
            "discrepancies": self.discrepancies,
        }

    def to_text(self) -> str:
        lines = []
        for row in self.rows:
            params = ", ".join(f"{k}={v}" for k, v in row.params.items())
            lines.append(f"{row.label} ({params}): {row.status}")
            for c in row.checks:
                stated, computed = _short(c.stated), _short(c.computed)
                mark = "ok" if c.status == MATCH else DISCREPANCY
                lines.append(f"  {c.name:<22} stated={stated:<24} computed={computed:<24} {mark}")
            for note in row.notes:
                lines.append(f"  note: {note}")
        s = self.summary
        lines.append(
            f"summary: {s['checks_matching']}/{s['checks']} checks match, "
            f"{s['discrepancies']} discrepancies, {s['rows_matching']}/{s['rows']} rows clean"
        )
        return "\n".join(lines) + "\n"


def _short(v, width: int = 24) -> str:
    text = str(v)
    return text if len(text) <= width else text[: width - 3] + "..."


def _params_for(row: VerifyRow, p: int, g: int) -> PrimeParams:
    """Use the printed g when valid; otherwise record it and fall back."""
    valid = is_common_primitive_root(g, p)
    row.checks.append(Check("g_primitive_root", True, valid))
    if valid:
        return PrimeParams(p, g)
    fallback = find_common_primitive_root(p)
    row.notes.append(
        f"g={g} has order {mult_order(g, p)} mod {p}, not {p - 1}; replayed with g={fallback}"
    )
    return PrimeParams(p, fallback)


def _common_checks(row: VerifyRow, ex: dict):
    params = _params_for(row, ex["p"], ex["g"])
    tables = build_tables(params)
    for key, printed in ex["sets"].items():
        row.checks.append(Check(key, sorted(printed), getattr(tables, key)))
    seq = generate(tables)
    row.checks.append(Check("sequence", ex["sequence"], str(seq)))
    return seq


def _linear_row(ex: dict) -> VerifyRow:
    row = VerifyRow(f"Example {ex['example']}", {"p": ex["p"], "g": ex["g"], "r": ex["r"]})
    seq = _common_checks(row, ex)
    rep = require_agreement(analyze_linear(seq, ex["r"]))
    row.checks.append(Check("lc", ex["lc"], rep.lc))
    row.checks.append(
        Check("minimal_poly", ex["minimal_poly"], minimal_poly_shape(rep.minimal_poly, seq, ex["r"]))
    )
    row.notes.append(f"methods: bm={rep.lc_bm} gcd={rep.lc_gcd} roots={rep.lc_roots}")
    return row


def _product(xs) -> int:
    out = 1
    for x in xs:
        out *= x
    return out


def _prime_list(n: int) -> list[int]:
    return [q for q, e in factorize(n) for _ in range(e)]


def _adic_row(ex: dict) -> VerifyRow:
    row = VerifyRow(f"Example {ex['example']}", {"p": ex["p"], "g": ex["g"]})
    seq = _common_checks(row, ex)
    s2 = eval_S_at_2(seq)
    row.checks.append(Check("s2", ex["s2"], s2))
    if "s2_factors" in ex:
        row.checks.append(Check("s2_factors", ex["s2_factors"], _prime_list(s2)))
    modulus = (1 << seq.n) - 1
    row.checks.append(Check("modulus_factors", ex["modulus_factors"], _prime_list(modulus)))
    if _product(ex["modulus_factors"]) != modulus:
        row.notes.append(
            f"printed factorization multiplies to {_product(ex['modulus_factors'])}, not {modulus}"
        )
    rep = adic_complexity(seq)
    row.checks.append(Check("gcd_total", ex["gcd_total"], rep.gcd_total))
    row.checks.append(Check("phi2_floor", ex["phi2_floor"], rep.phi2_floor))
    row.notes.append(f"gcd split: with 2^p-1 -> {rep.gcd_minus}, with 2^p+1 -> {rep.gcd_plus}")
    return row


def _table_row(residue: int, p_max: int = TABLE1_P_MAX) -> VerifyRow:
    row = VerifyRow(f"Table 1 (p = {residue} mod 8)", {"p_max": p_max})
    for p in primes_between(3, p_max):
        if p % 8 != residue:
            continue
        seq = generate(build_tables(PrimeParams.default(p)))
        row.checks.append(Check(f"p={p}", TABLE1_ROWS[residue](p), autocorr_spectrum(seq)))
    return row


def verify_paper() -> VerifyOutcome:
    rows = []
    for ex in EXAMPLES:
        rows.append(_linear_row(ex) if "lc" in ex else _adic_row(ex))
    rows.append(_table_row(1))
    rows.append(_table_row(3))
    return VerifyOutcome(rows)
