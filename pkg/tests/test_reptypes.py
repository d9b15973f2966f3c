import pytest

from siegelcong.arith import primes_up_to
from siegelcong.elliptic import dim_new
from siegelcong.reptypes import ReprTypeCounts, compute_counts


def test_k4_p5():
    s = compute_counts(4, 5)
    assert (s.s_Vb, s.s_VIc, s.s_P_VIb, s.s_Y_VIb) == (0, 0, 1, 0)


def test_odd_weight_has_no_Vb():
    for p in primes_up_to(100):
        assert compute_counts(3, p).s_Vb == 0
    assert compute_counts(3, 5).s_VIc == 0


@pytest.mark.parametrize("p", [2, 3])
def test_no_yoshida_at_small_primes(p):
    for k in range(3, 30):
        assert compute_counts(k, p).s_Y_VIb == 0


def test_parity_split_and_sk_lifts():
    for p in primes_up_to(200):
        for k in range(3, 21):
            s = compute_counts(k, p)
            assert isinstance(s, ReprTypeCounts)
            if k % 2:
                assert s.s_Vb == 0 and s.s_P_VIb == 0
            else:
                assert s.s_VIc == 0
                # Saito-Kurokawa lifts exhaust the newforms of weight 2k-2
                assert s.s_Vb + s.s_P_VIb == dim_new(2 * k - 2, p)


def test_small_prime_tables():
    # k = 5: 2k-2 = 8 = 0 (mod 8) so p = 2 gets the extra half
    d = dim_new(8, 2)
    assert compute_counts(5, 2).s_VIc == (d + 1) // 2
    # k = 3 (mod 6) at p = 3: no correction
    assert compute_counts(9, 3).s_VIc * 2 == dim_new(16, 3)


@pytest.mark.parametrize("k, p", [(2, 5), (3, 1), (4, 15)])
def test_invalid_arguments(k, p):
    with pytest.raises(ValueError):
        compute_counts(k, p)


def test_integrality_grid():
    for p in primes_up_to(500):
        for k in range(3, 21):
            s = compute_counts(k, p)
            for v in (s.s_Vb, s.s_VIc, s.s_P_VIb, s.s_Y_VIb):
                assert isinstance(v, int) and v >= 0
