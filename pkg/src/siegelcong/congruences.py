"""Checkers for the dimension/class-number congruences.

Each checker evaluates both sides exactly and returns a ``CongruenceReport``.
Siegel dimensions are inputs (ingested or synthetic); everything else is
computed here from class numbers, elliptic newform dimensions and 4-core
counts.

Theorem identifiers:

    T31i/T31ii/T31iii  dim K(p) - dim Gamma_0(p), by p mod 8 (mod 16 / 4 / 4)
    T32i/T32ii/T32iii  dim K(p) + dim Gamma_0(p), same case split
    T33                parity of dim S_{2k-2}^new(p)
    P34_2, P34_3       dim K(p) - dim Gamma_0(p) at p = 2, 3 (mod 4)
    C41a, C41b         4-core versions of T31i/T32i at p = 8n+5 (mod 4)
    C42                c_4(n) = dim S_{4k}^new(8n+5) (mod 2)
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from .arith import is_prime
from .elliptic import dim_new
from .qseries import c4
from .quadforms import b_factor, class_number_of_prime_field

THEOREM_IDS = (
    "T31i", "T31ii", "T31iii",
    "T32i", "T32ii", "T32iii",
    "T33", "P34_2", "P34_3",
    "C41a", "C41b", "C42",
)  # fmt: skip

PROVENANCES = ("computed", "ingested", "synthetic")


@dataclass(frozen=True)
class SiegelDims:
    p: int
    k: int
    dim_K: int
    dim_Gamma0: int
    dim_Klingen: int | None = None
    provenance: str = "ingested"

    def __post_init__(self):
        for name in ("dim_K", "dim_Gamma0", "dim_Klingen"):
            v = getattr(self, name)
            if v is not None and v < 0:
                raise ValueError(f"{name} must be >= 0, got {v}")
        if self.provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {self.provenance!r}")


@dataclass(frozen=True)
class CongruenceReport:
    """One instance of a congruence: ``lhs = rhs (mod modulus)``."""

    theorem_id: str
    k: int
    p: int
    n: int | None
    lhs: int
    rhs: int
    modulus: int
    provenance: str
    seed: int | None = None
    verdict: str = field(init=False)

    def __post_init__(self):
        if self.theorem_id not in THEOREM_IDS:
            raise ValueError(f"unknown theorem id {self.theorem_id!r}")
        if self.modulus not in (2, 4, 16):
            raise ValueError(f"modulus must be 2, 4 or 16, got {self.modulus}")
        ok = self.lhs % self.modulus == self.rhs % self.modulus
        object.__setattr__(self, "verdict", "pass" if ok else "fail")

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def as_record(self) -> dict:
        rec = asdict(self)
        rec["record"] = "report"
        return rec


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def _check_k(k: int, least: int = 3) -> None:
    if k < least:
        raise ValueError(f"k must be >= {least}, got {k}")


def _check_large_prime(p: int) -> None:
    if p < 5 or not is_prime(p):
        raise ValueError(f"p must be a prime >= 5, got {p} (p = 2, 3 are handled by P34)")


def _check_dims(dims: SiegelDims, k: int, p: int) -> None:
    if (dims.p, dims.k) != (p, k):
        raise ValueError(f"dims are for (k={dims.k}, p={dims.p}), expected (k={k}, p={p})")


def case_of(p: int) -> str:
    """'i' for p = 1 (mod 4), 'ii' for p = 7 (mod 8), 'iii' for p = 3 (mod 8)."""
    if p % 4 == 1:
        return "i"
    return "ii" if p % 8 == 7 else "iii"


def check_thm31(k: int, p: int, dims: SiegelDims, seed: int | None = None) -> CongruenceReport:
    _check_k(k)
    _check_large_prime(p)
    _check_dims(dims, k, p)
    h = class_number_of_prime_field(p)
    d, d2 = dim_new(2 * k - 2, p), dim_new(2, p)
    e = _sign(k - 1)
    diff = dims.dim_K - dims.dim_Gamma0
    case = case_of(p)
    if case == "i":
        lhs = e * h * h - (4 * h if k % 2 else 0)
        rhs = 4 * (d * d2 - e * d) + 8 * diff
        mod = 16
    elif case == "ii":
        lhs = e * h * h - (2 * h if k % 2 else 0)
        rhs = d * d2 - e * d + 2 * diff
        mod = 4
    else:
        lhs = 2 * diff
        rhs = e * d - d * d2
        mod = 4
    return CongruenceReport("T31" + case, k, p, None, lhs, rhs, mod, dims.provenance, seed)


def check_thm32(k: int, p: int, dims: SiegelDims, seed: int | None = None) -> CongruenceReport:
    _check_k(k)
    _check_large_prime(p)
    _check_dims(dims, k, p)
    h = class_number_of_prime_field(p)
    d, d2 = dim_new(2 * k - 2, p), dim_new(2, p)
    total = dims.dim_K + dims.dim_Gamma0
    case = case_of(p)
    if case == "i":
        lhs = _sign(k) * h * h
        rhs = -4 * (d * d2 + d) + 8 * total
        mod = 16
    elif case == "ii":
        lhs = _sign(k) * h * h
        rhs = -d * d2 - d + 2 * total
        mod = 4
    else:
        lhs = 2 * total
        rhs = d + d * d2
        mod = 4
    return CongruenceReport("T32" + case, k, p, None, lhs, rhs, mod, dims.provenance, seed)


def check_thm33(k: int, p: int) -> CongruenceReport:
    _check_k(k)
    _check_large_prime(p)
    d = dim_new(2 * k - 2, p)
    h = class_number_of_prime_field(p)
    case = case_of(p)
    if case == "i":
        if h % 2:
            raise ArithmeticError(f"h(Q(sqrt(-{p}))) = {h} should be even for p = 1 (mod 4)")
        rhs = h // 2
    elif case == "ii":
        rhs = h
    else:
        rhs = 0
    assert (2 * rhs - h * b_factor(p)) % 4 == 0
    return CongruenceReport("T33", k, p, None, d, rhs, 2, "computed")


def check_prop34(k: int, p: int, dims: SiegelDims, seed: int | None = None) -> CongruenceReport:
    _check_k(k)
    if p not in (2, 3):
        raise ValueError(f"P34 covers p = 2, 3 only, got {p}")
    _check_dims(dims, k, p)
    d = dim_new(2 * k - 2, p)
    r = k % 4 if p == 2 else k % 6
    if p == 2:
        rhs = {0: -d, 1: d + 1, 2: -d - 1, 3: d}[r]
    else:
        rhs = {0: -d, 1: d + 1, 5: d + 1, 2: -d - 1, 4: -d - 1, 3: d}[r]
    lhs = 2 * (dims.dim_K - dims.dim_Gamma0)
    return CongruenceReport(f"P34_{p}", k, p, None, lhs, rhs, 4, dims.provenance, seed)


def _four_core_prime(n: int) -> int:
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    p = 8 * n + 5
    if not is_prime(p):
        raise ValueError(f"8n+5 = {p} is not prime")
    return p


def check_cor41(
    k: int, n: int, dims: SiegelDims, seed: int | None = None
) -> tuple[CongruenceReport, CongruenceReport]:
    _check_k(k, least=5)
    p = _four_core_prime(n)
    _check_dims(dims, k, p)
    c = c4(n)
    d, d2 = dim_new(2 * k - 2, p), dim_new(2, p)
    e = _sign(k - 1)
    diff = dims.dim_K - dims.dim_Gamma0
    first = CongruenceReport(
        "C41a", k, p, n,
        e * c * c - (2 * c if k % 2 else 0) - 2 * diff,
        d * d2 - e * d,
        4, dims.provenance, seed,
    )  # fmt: skip
    second = CongruenceReport(
        "C41b", k, p, n,
        _sign(k) * c * c - 2 * diff,
        -(d * d2 + d),
        4, dims.provenance, seed,
    )  # fmt: skip
    return first, second


def check_cor42(k: int, n: int) -> CongruenceReport:
    _check_k(k, least=1)
    p = _four_core_prime(n)
    return CongruenceReport("C42", k, p, n, c4(n), dim_new(4 * k, p), 2, "computed")
