"""Run a congruence family over a grid of weights and primes (or n values)."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Iterable

from .arith import is_prime, primes_up_to
from .congruences import (
    CongruenceReport,
    SiegelDims,
    check_cor41,
    check_cor42,
    check_prop34,
    check_thm31,
    check_thm32,
    check_thm33,
)
from .store import DimStore
from .synthetic import DEFAULT_MAX_FREE, DrawStats, synthetic_draws

# family -> (least k, indexed by n rather than p, needs Siegel dims)
FAMILIES = {
    "T31": (3, False, True),
    "T32": (3, False, True),
    "T33": (3, False, False),
    "P34": (3, False, True),
    "C41": (5, True, True),
    "C42": (1, True, False),
}


def family_of(theorem_id: str) -> str:
    """Map a case id like ``T31ii`` or ``P34_2`` to its family ``T31`` / ``P34``."""
    fam = theorem_id[:3]
    if fam not in FAMILIES:
        raise ValueError(f"unknown theorem id {theorem_id!r}; families are {', '.join(FAMILIES)}")
    return fam


@dataclass(frozen=True)
class Skip:
    theorem_id: str
    k: int
    p: int | None
    n: int | None
    reason: str

    def as_record(self) -> dict:
        rec = asdict(self)
        rec["record"] = "skip"
        return rec


@dataclass
class ScanResult:
    family: str
    reports: list[CongruenceReport] = field(default_factory=list)
    skips: list[Skip] = field(default_factory=list)
    draws_accepted: int = 0
    draws_rejected: int = 0

    @property
    def failures(self) -> list[CongruenceReport]:
        return [r for r in self.reports if not r.passed]

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> dict:
        return {
            "record": "summary",
            "family": self.family,
            "checked": len(self.reports),
            "passed": len(self.reports) - len(self.failures),
            "failed": len(self.failures),
            "skipped": len(self.skips),
            "draws_accepted": self.draws_accepted,
            "draws_rejected": self.draws_rejected,
        }


def _sort_key(item):
    return (item.theorem_id, item.p if item.p is not None else -1, item.k,
            item.n if item.n is not None else -1)  # fmt: skip


def _grid_points(family: str, p_max: int | None, n_max: int | None):
    """Yield ``(p, n, skip_reason)`` for the family's level grid."""
    if FAMILIES[family][1]:
        if n_max is None:
            raise ValueError(f"{family} needs an n range")
        for n in range(0, n_max + 1):
            p = 8 * n + 5
            yield (p, n, None) if is_prime(p) else (None, n, f"8n+5 = {p} is composite")
        return
    if p_max is None:
        raise ValueError(f"{family} needs a p range")
    lo = 2 if family == "P34" else 5
    hi = min(p_max, 3) if family == "P34" else p_max
    for p in primes_up_to(hi):
        if p >= lo:
            yield p, None, None


def scan(
    family: str,
    k_range: Iterable[int],
    *,
    p_max: int | None = None,
    n_max: int | None = None,
    source: str | None = None,
    store: DimStore | None = None,
    draws: int = 100,
    seed: int = 0,
    max_free: int = DEFAULT_MAX_FREE,
) -> ScanResult:
    """Check one family over every applicable grid point.

    ``source`` is ``"synthetic"`` or ``"store"`` for families that need Siegel
    dimensions; missing data becomes an explicit ``Skip``, never a pass.
    """
    family = family_of(family)
    least_k, _, needs_dims = FAMILIES[family]
    if needs_dims and source not in ("synthetic", "store", None):
        raise ValueError(f"unknown dims source {source!r}")
    k_values = list(k_range)
    result = ScanResult(family)
    stats = DrawStats()

    for p, n, reason in _grid_points(family, p_max, n_max):
        for k in k_values:
            if reason is not None:
                result.skips.append(Skip(family, k, p, n, reason))
                continue
            if k < least_k:
                result.skips.append(Skip(family, k, p, n, f"{family} needs k >= {least_k}"))
                continue
            if not needs_dims:
                rep = check_thm33(k, p) if family == "T33" else check_cor42(k, n)
                result.reports.append(rep)
                continue

            if source == "synthetic":
                dims_list: list[SiegelDims] = list(
                    synthetic_draws(k, p, seed, draws, max_free, stats)
                )
                run_seed = seed
            else:
                found = store.siegel_dims(p, k) if store is not None else None
                if found is None:
                    why = "no dims store configured" if store is None else "no ingested dims"
                    result.skips.append(Skip(family, k, p, n, f"{why} for K({p}), Gamma_0({p}) at k={k}"))
                    continue
                dims_list = [found]
                run_seed = None
            for dims in dims_list:
                result.reports.extend(_check(family, k, p, n, dims, run_seed))

    result.reports.sort(key=_sort_key)
    result.skips.sort(key=_sort_key)
    result.draws_accepted = stats.accepted
    result.draws_rejected = stats.rejected
    return result


def _check(family, k, p, n, dims, seed) -> list[CongruenceReport]:
    if family == "T31":
        return [check_thm31(k, p, dims, seed)]
    if family == "T32":
        return [check_thm32(k, p, dims, seed)]
    if family == "P34":
        return [check_prop34(k, p, dims, seed)]
    return list(check_cor41(k, n, dims, seed))
