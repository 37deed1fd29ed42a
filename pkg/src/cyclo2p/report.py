"""Aggregated analyses and scan rows, shaped for JSON/CSV output."""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor

from .adic2 import adic_complexity, check_lemma9
from .cyclotomy import build_tables, check_class_lemmas
from .ffield import (
    field_for,
    gauss_periods,
    lemma7_checks,
    lemma8_case_table,
    rationality_check,
    root_of_unity,
)
from .lincomp import DEFAULT_M_CAP, analyze_linear, require_agreement
from .ntcore import PrimeParams, is_prime, legendre, mult_order, primes_between
from .seqgen import NOT_COVERED, BinarySequence, autocorr_spectrum, generate, predicted_spectrum

CHECKS = ("lc", "adic", "autocorr", "lemmas")


def parametric_sequence(p: int, g: int | None = None) -> BinarySequence:
    params = PrimeParams.default(p) if g is None else PrimeParams(p, g)
    return generate(build_tables(params))


def spectrum_json(spec) -> dict | str:
    if spec == NOT_COVERED:
        return NOT_COVERED
    return {str(v): c for v, c in sorted(spec.items(), reverse=True)}


def autocorr_section(seq: BinarySequence) -> dict:
    spec = autocorr_spectrum(seq)
    out = {"spectrum": spectrum_json(spec)}
    if seq.params is not None:
        pred = predicted_spectrum(seq.params.p)
        out["predicted"] = spectrum_json(pred)
        out["matches"] = None if pred == NOT_COVERED else pred == spec
    return out


def sequence_section(seq: BinarySequence) -> dict:
    out = {}
    if seq.params is not None:
        out["p"] = seq.params.p
        out["g"] = seq.params.g
    out["N"] = seq.n
    out["bits"] = str(seq)
    out["weight"] = seq.weight
    if seq.params is not None:
        out["tables"] = build_tables(seq.params).to_dict()
    return out


def field_lemmas(seq: BinarySequence, r: int, cap: int = DEFAULT_M_CAP, all_k: bool = True) -> dict:
    """Gauss-period identities and the closed-form S(beta^k) table for one r."""
    params = seq.params
    p = params.p
    m = mult_order(r, p)
    out = {"r": r, "m": m}
    if m > cap:
        out["status"] = "SKIPPED"
        return out
    tables = build_tables(params)
    fld = field_for(p, r)
    beta = root_of_unity(fld, 2 * p)
    pair = gauss_periods(beta, tables)
    l7 = lemma7_checks(pair, p)
    rational = rationality_check(pair, r, p)
    rows = lemma8_case_table(seq, beta, tables, pair, all_k=all_k)
    out.update(
        {
            "status": "OK",
            "modulus": list(fld.modulus),
            "beta": beta.to_list(),
            "gauss_periods": pair.to_dict(),
            "lemma7_sum": l7["sum"],
            "lemma7_quadratic": l7["quadratic"],
            "rational": rational,
            "rational_iff_residue": rational == (legendre(r, p) == 1),
            "lemma8_agrees": all(row.agrees for row in rows),
            "unexpected_zeros": [row.k for row in rows if row.unexpected_zero],
        }
    )
    return out


def lemmas_section(seq: BinarySequence, r: int | None, cap: int) -> dict:
    params = seq.params
    out = {"class_lemmas": check_class_lemmas(build_tables(params))}
    l9 = check_lemma9(params.p, seq)
    out["lemma9"] = {"s2_identity": l9.s2_identity, "gp_identity": l9.gp_identity}
    if r is not None:
        out["field"] = field_lemmas(seq, r, cap)
    return out


def analyze(
    seq: BinarySequence,
    r: int | None = None,
    m_cap: int = DEFAULT_M_CAP,
    lemmas: bool = False,
) -> dict:
    doc = {"sequence": sequence_section(seq), "autocorr": autocorr_section(seq)}
    if r is not None:
        doc["linear"] = require_agreement(analyze_linear(seq, r, m_cap)).to_dict()
    doc["adic"] = adic_complexity(seq).to_dict()
    if lemmas and seq.params is not None:
        doc["lemmas"] = lemmas_section(seq, r, m_cap)
    return doc


def scan_rows_for_prime(p: int, r_list: list[int], checks: list[str], m_cap: int) -> list[dict]:
    seq = parametric_sequence(p)
    g = seq.params.g
    base = {"p": p, "p_mod_8": p % 8, "g": g}
    rows = []
    if "autocorr" in checks:
        sec = autocorr_section(seq)
        rows.append({"check": "autocorr", **base, "r": None, **sec})
    if "adic" in checks:
        rep = adic_complexity(seq).to_dict()
        rows.append(
            {
                "check": "adic",
                **base,
                "r": None,
                **{k: v for k, v in rep.items() if k not in ("p", "g")},
            }
        )
    if "lemmas" in checks:
        sec = lemmas_section(seq, None, m_cap)
        ok = all(sec["class_lemmas"].values()) and all(sec["lemma9"].values())
        rows.append({"check": "lemmas", **base, "r": None, **_flatten_lemmas(sec), "all_ok": ok})
    for r in r_list:
        if r == p:
            continue
        if "lc" in checks:
            rep = require_agreement(analyze_linear(seq, r, m_cap))
            rows.append(
                {
                    "check": "lc",
                    **base,
                    "r": r,
                    "m": rep.m,
                    "lc": rep.lc,
                    "bm": rep.lc_bm,
                    "gcd": rep.lc_gcd,
                    "roots": rep.lc_roots,
                    "predicted": rep.predicted,
                    "matches_theorem": rep.matches_theorem,
                }
            )
        if "lemmas" in checks:
            fl = field_lemmas(seq, r, m_cap)
            ok = None
            if fl["status"] == "OK":
                ok = all(
                    fl[k]
                    for k in ("lemma7_sum", "lemma7_quadratic", "rational_iff_residue", "lemma8_agrees")
                )
            rows.append(
                {
                    "check": "lemmas",
                    **base,
                    "r": r,
                    **{k: v for k, v in fl.items() if k not in ("r", "modulus", "beta", "gauss_periods")},
                    "all_ok": ok,
                }
            )
    return rows


def _flatten_lemmas(sec: dict) -> dict:
    out = {f"class_{k}": v for k, v in sec["class_lemmas"].items()}
    out.update({f"lemma9_{k}": v for k, v in sec["lemma9"].items()})
    return out


def _row_key(row: dict):
    return (row["p"], row["r"] or 0, CHECKS.index(row["check"]))


def run_scan(
    p_min: int,
    p_max: int,
    r_list: list[int],
    checks: list[str],
    m_cap: int = DEFAULT_M_CAP,
    jobs: int = 1,
) -> list[dict]:
    """All rows for odd primes in [p_min, p_max], merged in ascending (p, r) order."""
    for c in checks:
        if c not in CHECKS:
            raise ValueError(f"unknown check {c!r}; choose from {', '.join(CHECKS)}")
    for r in r_list:
        if r < 5 or not is_prime(r):
            raise ValueError(f"r must be a prime >= 5, got {r}")
    if p_min < 3:
        raise ValueError("p_min must be >= 3")
    primes = primes_between(max(p_min, 3), p_max)
    if jobs > 1 and len(primes) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = pool.map(
                scan_rows_for_prime,
                primes,
                [r_list] * len(primes),
                [checks] * len(primes),
                [m_cap] * len(primes),
            )
            rows = [row for chunk in chunks for row in chunk]
    else:
        rows = [row for p in primes for row in scan_rows_for_prime(p, r_list, checks, m_cap)]
    return sorted(rows, key=_row_key)


CONCORDANCE_FIELD = {
    "lc": "matches_theorem",
    "adic": "matches_theorem2",
    "autocorr": "matches",
    "lemmas": "all_ok",
}


def summarize(rows: list[dict]) -> dict:
    """Concordance counts per check, keyed by p mod 8."""
    out: dict = {}
    for row in rows:
        check = row["check"]
        flag = row.get(CONCORDANCE_FIELD[check])
        bucket = out.setdefault(check, {}).setdefault(
            str(row["p_mod_8"]), {"rows": 0, "concordant": 0, "discordant": 0, "not_covered": 0}
        )
        bucket["rows"] += 1
        if flag is None:
            bucket["not_covered"] += 1
        elif flag:
            bucket["concordant"] += 1
        else:
            bucket["discordant"] += 1
    return {c: dict(sorted(v.items())) for c, v in sorted(out.items(), key=lambda kv: CHECKS.index(kv[0]))}


def to_json(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def rows_to_csv(rows: list[dict]) -> str:
    """One line per row; nested values (spectra, lists) become JSON strings."""
    if not rows:
        return ""
    columns: list[str] = []
    for row in rows:
        for key in row:
            if key not in columns:
                columns.append(key)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        out = []
        for col in columns:
            v = row.get(col)
            if isinstance(v, (dict, list)):
                v = json.dumps(v, separators=(",", ":"))
            elif v is None:
                v = ""
            out.append(v)
        writer.writerow(out)
    return buf.getvalue()
