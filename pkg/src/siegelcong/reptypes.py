"""Counts of level-p automorphic representations with closed forms.

Only the Saito-Kurokawa and Yoshida pieces are computable from elliptic
data: ``s_Vb``, ``s_VIc``, the Saito-Kurokawa part of ``s_VIb`` and the
Yoshida part of ``s_VIb``. All arithmetic is over ``Fraction`` and each
count is checked to be a non-negative integer before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import is_prime
from .elliptic import as_count, dim_new
from .quadforms import b_factor, class_number_of_prime_field

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class ReprTypeCounts:
    k: int
    p: int
    s_Vb: int
    s_VIc: int
    s_P_VIb: int
    s_Y_VIb: int


def _small_prime_correction(k: int, p: int) -> Fraction:
    """The extra 1/2 for p = 2, 3, keyed on k mod 4 resp. k mod 6."""
    if p == 2:
        hit = k % 4 in (1, 2)
    else:
        hit = k % 6 in (1, 2, 4, 5)
    return HALF if hit else Fraction(0)


def compute_counts(k: int, p: int) -> ReprTypeCounts:
    if k < 3:
        raise ValueError(f"k must be >= 3, got {k}")
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    d = dim_new(2 * k - 2, p)
    even = k % 2 == 0

    if p in (2, 3):
        main = HALF * d + _small_prime_correction(k, p)
        if even:
            # Saito-Kurokawa lifts split between VIb and Vb; they exhaust the newforms
            s_P, s_VIc = main, 0
            s_Vb = d - main
        else:
            s_P, s_Vb, s_VIc = 0, 0, main
        s_Y = Fraction(0)
    else:
        hb = class_number_of_prime_field(p) * b_factor(p)
        sign = 1 if even else -1
        s_Vb = HALF * d - Fraction(hb, 4) if even else 0
        s_P = HALF * d + Fraction(hb, 4) if even else 0
        s_VIc = 0 if even else HALF * d - Fraction(hb, 4)
        s_Y = (
            HALF * d * dim_new(2, p)
            + Fraction(sign * hb * hb, 8)
            - Fraction(sign * hb, 4)
        )

    where = f"(k={k}, p={p})"
    return ReprTypeCounts(
        k,
        p,
        as_count(s_Vb, f"s_Vb{where}"),
        as_count(s_VIc, f"s_VIc{where}"),
        as_count(s_P, f"s_P_VIb{where}"),
        as_count(s_Y, f"s_Y_VIb{where}"),
    )
