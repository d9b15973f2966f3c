"""Synthetic Siegel dimension triples.

The counts with no closed form (``FreeCounts``) are drawn at random; the
dimensions of S_k(K(p)), S_k(Gamma_0(p)) and S_k(Gamma_0'(p)) are then
assembled from them and the computable counts in ``reptypes``. Any accepted
triple must satisfy every congruence, which makes these a round-trip test of
the checkers.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .arith import is_prime
from .congruences import SiegelDims
from .reptypes import compute_counts

DEFAULT_MAX_FREE = 20


class SynthRejected(ValueError):
    """A draw produced a negative or non-integral dimension."""


@dataclass(frozen=True)
class FreeCounts:
    s_I: int = 0
    s_IIb: int = 0
    s_IIa: int = 0
    s_Va: int = 0
    s_IIIaVIab: int = 0

    def __post_init__(self):
        for name, v in vars(self).items():
            if v < 0:
                raise ValueError(f"{name} must be >= 0, got {v}")


def synth_dims(k: int, p: int, free: FreeCounts) -> SiegelDims:
    """Build the three Siegel dimensions implied by ``free`` at ``(k, p)``.

    Raises ``SynthRejected`` if any dimension comes out negative or fractional.
    """
    if k < 3:
        raise ValueError(f"k must be >= 3, got {k}")
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    s = compute_counts(k, p)
    dim_K = free.s_IIa + 2 * free.s_I + free.s_IIb + s.s_Vb + s.s_VIc
    dim_G = (
        dim_K
        + 2 * (free.s_IIIaVIab + free.s_I + free.s_IIb)
        + s.s_P_VIb
        + s.s_Y_VIb
        - s.s_VIc
    )
    half = Fraction(1, 2)
    dim_Kl = (
        free.s_Va
        + half * dim_G
        + Fraction(3, 2) * dim_K
        - free.s_I
        - free.s_IIb
        - s.s_Vb
        - half * (s.s_P_VIb + s.s_Y_VIb + s.s_VIc)
    )
    for name, v in (("dim_K", dim_K), ("dim_Gamma0", dim_G), ("dim_Klingen", dim_Kl)):
        if v < 0 or Fraction(v).denominator != 1:
            raise SynthRejected(f"{name} = {v} at (k={k}, p={p}) from {free}")
    return SiegelDims(p, k, dim_K, dim_G, int(dim_Kl), provenance="synthetic")


def draw_free_counts(rng: random.Random, max_count: int = DEFAULT_MAX_FREE) -> FreeCounts:
    return FreeCounts(*(rng.randint(0, max_count) for _ in range(5)))


def rng_for(seed: int, k: int, p: int) -> random.Random:
    """Independent, reproducible stream per ``(seed, k, p)``."""
    return random.Random(f"{seed}:{k}:{p}")


@dataclass
class DrawStats:
    accepted: int = 0
    rejected: int = 0


def synthetic_draws(
    k: int,
    p: int,
    seed: int,
    draws: int,
    max_count: int = DEFAULT_MAX_FREE,
    stats: DrawStats | None = None,
) -> Iterator[SiegelDims]:
    """Yield the accepted triples among ``draws`` seeded draws at ``(k, p)``."""
    rng = rng_for(seed, k, p)
    for _ in range(draws):
        free = draw_free_counts(rng, max_count)
        try:
            dims = synth_dims(k, p, free)
        except SynthRejected:
            if stats is not None:
                stats.rejected += 1
            continue
        if stats is not None:
            stats.accepted += 1
        yield dims
