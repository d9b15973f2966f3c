import dataclasses
import random

import pytest
from hypothesis import given, settings, strategies as st

from siegelcong.arith import primes_up_to
from siegelcong.congruences import (
    CongruenceReport,
    SiegelDims,
    case_of,
    check_cor41,
    check_cor42,
    check_prop34,
    check_thm31,
    check_thm32,
    check_thm33,
)
from siegelcong.elliptic import dim_new
from siegelcong.qseries import c4
from siegelcong.quadforms import class_number
from siegelcong.reptypes import compute_counts
from siegelcong.synthetic import (
    DrawStats,
    FreeCounts,
    SynthRejected,
    draw_free_counts,
    synth_dims,
    synthetic_draws,
)

free_counts = st.builds(FreeCounts, *(st.integers(0, 50) for _ in range(5)))
large_primes = st.sampled_from([p for p in primes_up_to(120) if p >= 5])


def bump_K(dims, by=1):
    return dataclasses.replace(dims, dim_K=dims.dim_K + by)


def test_report_verdict_and_record():
    r = CongruenceReport("T33", 3, 5, None, 1, 3, 2, "computed")
    assert r.passed and r.verdict == "pass"
    r = CongruenceReport("T31i", 3, 5, None, -4, 4, 16, "synthetic", seed=1)
    assert not r.passed
    rec = r.as_record()
    assert rec["record"] == "report" and rec["verdict"] == "fail" and rec["seed"] == 1
    with pytest.raises(ValueError):
        CongruenceReport("T99", 3, 5, None, 0, 0, 2, "computed")
    with pytest.raises(ValueError):
        CongruenceReport("T33", 3, 5, None, 0, 0, 8, "computed")


def test_negative_residues_normalised():
    assert CongruenceReport("T33", 3, 5, None, -3, 1, 2, "computed").passed
    assert CongruenceReport("T31i", 3, 5, None, -20, 12, 16, "computed").passed


def test_siegel_dims_validation():
    with pytest.raises(ValueError):
        SiegelDims(5, 4, -1, 0)
    with pytest.raises(ValueError):
        SiegelDims(5, 4, 0, 0, provenance="made-up")


def test_case_of():
    assert [case_of(p) for p in (5, 13, 7, 23, 11, 19)] == ["i", "i", "ii", "ii", "iii", "iii"]


# synthetic generator ---------------------------------------------------------


def test_synth_all_zero_free_counts():
    dims = synth_dims(4, 5, FreeCounts())
    s = compute_counts(4, 5)
    assert dims.dim_K == s.s_Vb + s.s_VIc == 0
    assert dims.dim_Gamma0 == s.s_P_VIb + s.s_Y_VIb == 1
    assert isinstance(dims.dim_Klingen, int) and dims.dim_Klingen >= 0
    assert dims.provenance == "synthetic"


@given(st.integers(3, 12), large_primes, free_counts)
def test_synth_parity_identity(k, p, free):
    dims = synth_dims(k, p, free)
    s = compute_counts(k, p)
    assert (dims.dim_Gamma0 - dims.dim_K - (s.s_P_VIb + s.s_Y_VIb - s.s_VIc)) % 2 == 0


@given(st.integers(3, 12), large_primes, free_counts)
def test_synth_roundtrip_passes(k, p, free):
    dims = synth_dims(k, p, free)
    assert check_thm31(k, p, dims).passed
    assert check_thm32(k, p, dims).passed


@given(st.integers(3, 12), large_primes, free_counts)
def test_perturbing_dim_K_fails(k, p, free):
    dims = bump_K(synth_dims(k, p, free))
    assert not check_thm31(k, p, dims).passed
    assert not check_thm32(k, p, dims).passed


def test_perturbation_shift_sizes():
    dims = synth_dims(4, 13, FreeCounts(1, 2, 3, 4, 5))
    a, b = check_thm31(4, 13, dims), check_thm31(4, 13, bump_K(dims))
    assert a.modulus == 16 and (b.rhs - a.rhs) == 8
    dims = synth_dims(4, 7, FreeCounts(1, 2, 3, 4, 5))
    a, b = check_thm31(4, 7, dims), check_thm31(4, 7, bump_K(dims))
    assert a.modulus == 4 and (b.rhs - a.rhs) == 2
    dims = synth_dims(4, 11, FreeCounts(1, 2, 3, 4, 5))
    a, b = check_thm32(4, 11, dims), check_thm32(4, 11, bump_K(dims))
    assert a.modulus == 4 and (b.lhs - a.lhs) == 2


def test_rejects_are_reported_not_repaired():
    stats = DrawStats()
    accepted = list(synthetic_draws(5, 13, seed=11, draws=50, stats=stats))
    assert stats.accepted == len(accepted) and stats.accepted + stats.rejected == 50


def test_synth_rejection_signal(monkeypatch):
    from siegelcong import synthetic
    from siegelcong.reptypes import ReprTypeCounts

    monkeypatch.setattr(synthetic, "compute_counts", lambda k, p: ReprTypeCounts(k, p, 0, 0, -3, 0))
    with pytest.raises(SynthRejected):
        synthetic.synth_dims(4, 5, FreeCounts())


def test_draws_are_reproducible():
    a = list(synthetic_draws(6, 17, seed=3, draws=20))
    b = list(synthetic_draws(6, 17, seed=3, draws=20))
    c = list(synthetic_draws(6, 17, seed=4, draws=20))
    assert a == b != c
    free = draw_free_counts(random.Random(0), max_count=0)
    assert free == FreeCounts()


def test_free_counts_non_negative():
    with pytest.raises(ValueError):
        FreeCounts(s_I=-1)


# T31 / T32 ----------------------------------------------------------------------


def test_thm31_odd_k_uses_class_number_term():
    # h(-52) = 2 at p = 13; k odd subtracts 4h on the left in case (i)
    dims = synth_dims(3, 13, FreeCounts())
    r3 = check_thm31(3, 13, dims)
    h = class_number(-52)
    assert r3.lhs == h * h - 4 * h
    r4 = check_thm31(4, 13, synth_dims(4, 13, FreeCounts()))
    assert r4.lhs == -h * h


def test_thm32_case_iii_lhs():
    dims = SiegelDims(11, 4, 3, 7)
    r = check_thm32(4, 11, dims)
    assert r.theorem_id == "T32iii" and r.lhs == 2 * (3 + 7) and r.modulus == 4


@pytest.mark.parametrize("p", [2, 3, 4, 9])
def test_thm31_rejects_small_or_composite_p(p):
    with pytest.raises(ValueError):
        check_thm31(3, p, SiegelDims(p, 3, 0, 0))


def test_dims_must_match_arguments():
    with pytest.raises(ValueError):
        check_thm31(3, 5, SiegelDims(7, 3, 0, 0))


# T33 ---------------------------------------------------------------------------


def test_thm33_examples():
    r = check_thm33(3, 11)
    assert r.passed and r.lhs == dim_new(4, 11) == 2 and r.rhs == 0
    r = check_thm33(3, 5)
    assert r.passed and r.lhs == 1 and r.rhs == 1
    for p in (11, 19, 43, 59, 67, 83):
        for k in range(3, 12):
            assert check_thm33(k, p).rhs == 0


def test_thm33_scan():
    for p in primes_up_to(500):
        if p >= 5:
            for k in range(3, 21):
                assert check_thm33(k, p).passed


# P34 ---------------------------------------------------------------------------


def test_prop34_tables():
    dims = synth_dims(5, 2, FreeCounts())
    r = check_prop34(5, 2, dims)
    assert r.passed and r.rhs == dim_new(8, 2) + 1
    dims = synth_dims(9, 3, FreeCounts(1, 1, 1, 1, 1))
    r = check_prop34(9, 3, dims)
    assert r.passed and r.rhs == dim_new(16, 3)


@pytest.mark.parametrize("p", [2, 3])
def test_prop34_roundtrip_and_perturbation(p):
    for k in range(3, 25):
        for dims in synthetic_draws(k, p, seed=5, draws=20):
            assert check_prop34(k, p, dims).passed
            assert not check_prop34(k, p, bump_K(dims)).passed


def test_prop34_rejects_other_primes():
    with pytest.raises(ValueError):
        check_prop34(3, 5, SiegelDims(5, 3, 0, 0))


# corollaries ------------------------------------------------------------------


def test_cor41_at_13():
    dims = synth_dims(5, 13, FreeCounts(2, 0, 1, 0, 3))
    a, b = check_cor41(5, 1, dims)
    assert c4(1) == 1
    assert a.passed and b.passed and a.n == 1 and a.p == 13
    a, b = check_cor41(5, 1, bump_K(dims))
    assert not a.passed and not b.passed


def test_cor41_is_thm31_with_h_equal_2c4():
    for n in (0, 1, 3, 4):
        p = 8 * n + 5
        assert class_number(-4 * p) == 2 * c4(n)
        for k in range(5, 12):
            dims = synth_dims(k, p, FreeCounts(1, 2, 0, 1, 1))
            t31, t32 = check_thm31(k, p, dims), check_thm32(k, p, dims)
            a, b = check_cor41(k, n, dims)
            # case (i) of both theorems, divided through by 4
            assert 4 * (a.lhs - a.rhs) == t31.lhs - t31.rhs
            assert (4 * (b.lhs - b.rhs) - (t32.lhs - t32.rhs)) % 16 == 0


def test_cor41_preconditions():
    with pytest.raises(ValueError):
        check_cor41(4, 1, SiegelDims(13, 4, 0, 0))
    with pytest.raises(ValueError):
        check_cor41(5, 2, SiegelDims(21, 5, 0, 0))


def test_cor42_examples():
    r = check_cor42(1, 1)
    assert r.passed and (r.lhs, r.rhs) == (1, 3)
    r = check_cor42(1, 3)
    assert r.passed and r.lhs == 3 and r.rhs % 2 == 1
    with pytest.raises(ValueError):
        check_cor42(1, 2)


def test_cor42_scan():
    for n in range(301):
        if all((8 * n + 5) % q for q in range(2, int((8 * n + 5) ** 0.5) + 1)):
            for k in range(1, 11):
                assert check_cor42(k, n).passed
