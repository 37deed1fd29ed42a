import math

import pytest
import sympy

from cyclo2p.adic2 import (
    adic_complexity,
    check_lemma9,
    compute_Gp,
    gcd_split,
    lemma9_rhs,
    phi2_floor,
)
from cyclo2p.cyclotomy import build_tables
from cyclo2p.errors import ConsistencyError
from cyclo2p.ntcore import PrimeParams, primes_between
from cyclo2p.seqgen import BinarySequence, eval_S_at_2, generate


def seq_for(p, g=None):
    params = PrimeParams.default(p) if g is None else PrimeParams(p, g)
    return generate(build_tables(params))


def test_gp_values():
    assert compute_Gp(5) == 180
    assert compute_Gp(3) == 51
    assert compute_Gp(5) ** 2 % 1023 == 687


def test_gp_rejects_non_prime():
    with pytest.raises(ValueError):
        compute_Gp(9)


def test_lemma9_spot_values_p5():
    assert lemma9_rhs(5) == (217, 687)
    chk = check_lemma9(5, seq_for(5, 3))
    assert chk.passed == (True, True) and chk.s2 == 217


@pytest.mark.parametrize("p", primes_between(3, 61))
def test_lemma9_identities(p):
    chk = check_lemma9(p, seq_for(p))
    assert chk.s2_identity and chk.gp_identity
    d = chk.to_dict()
    assert d["s2_mod"] == d["s2_rhs"]


def test_lemma9_rejects_wrong_period():
    with pytest.raises(ValueError):
        check_lemma9(5, seq_for(7))


def test_gcd_split_values():
    assert gcd_split(13417, 7) == (1, 1)
    assert gcd_split(217, 5) == (31, 1)
    assert gcd_split(0, 5) == (31, 33)


def test_phi2_floor():
    assert phi2_floor(10, 31) == 5
    assert phi2_floor(14, 1) == 13
    with pytest.raises(ConsistencyError):
        phi2_floor(10, 7)


@pytest.mark.parametrize(
    "p, gcd_total, phi2, matches",
    [(7, 1, 13, True), (17, 1, 33, True), (5, 31, 5, False), (3, 7, 3, False)],
)
def test_adic_complexity_values(p, gcd_total, phi2, matches):
    rep = adic_complexity(seq_for(p))
    assert rep.gcd_total == gcd_total and rep.phi2_floor == phi2
    assert rep.matches_theorem2 is matches
    assert rep.predicted_phi2_floor == 2 * p - 1


@pytest.mark.parametrize("p", primes_between(3, 200))
def test_adic_invariants(p):
    seq = seq_for(p)
    rep = adic_complexity(seq)
    n = 2 * p
    modulus = (1 << n) - 1
    s2 = eval_S_at_2(seq)
    assert rep.s2 == s2
    assert rep.gcd_total == math.gcd(s2, modulus) == rep.gcd_minus * rep.gcd_plus
    assert rep.phi2_floor == sympy.integer_log(modulus // rep.gcd_total, 2)[0]
    assert rep.gcd_plus == 1
    if p % 8 in (1, 7):
        assert rep.gcd_total == 1 and rep.matches_theorem2
    else:
        # whole class: S(2) is a multiple of 2^p - 1
        assert rep.gcd_minus == (1 << p) - 1 and not rep.matches_theorem2


def test_report_serialises_big_values_as_decimal_strings():
    d = adic_complexity(seq_for(199)).to_dict()
    assert isinstance(d["s2"], str) and int(d["s2"]) == eval_S_at_2(seq_for(199))
    assert d["gcd_total"] == "1" and d["N"] == 398


def test_raw_sequence():
    rep = adic_complexity(BinarySequence.from_string("1011"))
    assert rep.p is None and rep.s2 == 13
    assert rep.gcd_total == math.gcd(13, 15)
