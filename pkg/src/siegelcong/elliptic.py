"""Dimensions of elliptic cusp form spaces on Gamma_0(p), p prime or 1.

Totals come from the genus/elliptic-point formula, new subspaces by removing
the two copies of level-1 forms, and the plus/minus split by functional
equation sign from the class number of Q(sqrt(-p)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import is_prime, kronecker
from .quadforms import b_factor, class_number_of_prime_field


class IntegralityError(ArithmeticError):
    """An exact formula produced a value that is not a non-negative integer."""


def as_count(x: Fraction | int, what: str) -> int:
    """Convert an exact rational to a non-negative int or raise ``IntegralityError``."""
    x = Fraction(x)
    if x.denominator != 1 or x < 0:
        raise IntegralityError(f"{what} = {x} is not a non-negative integer")
    return int(x)


def _check_weight(k: int) -> None:
    if k < 2 or k % 2:
        raise ValueError(f"weight must be an even integer >= 2, got {k}")


def _check_level(p: int) -> None:
    if p != 1 and not is_prime(p):
        raise ValueError(f"level must be 1 or a prime, got {p}")


def dim_cusp_level1(k: int) -> int:
    """dim S_k(SL_2(Z)) for even ``k >= 2``."""
    _check_weight(k)
    if k == 2:
        return 0
    q, r = divmod(k, 12)
    return q - 1 if r == 2 else q


@dataclass(frozen=True)
class CurveData:
    """Index, elliptic points, cusps and genus of X_0(p)."""

    index: int
    nu2: int
    nu3: int
    cusps: int
    genus: int


def curve_data(p: int) -> CurveData:
    _check_level(p)
    if p == 1:
        index, nu2, nu3, cusps = 1, 1, 1, 1
    else:
        index, cusps = p + 1, 2
        nu2 = 1 if p == 2 else 1 + kronecker(-1, p)
        nu3 = 1 if p == 3 else 1 + kronecker(-3, p)
    g = 1 + Fraction(index, 12) - Fraction(nu2, 4) - Fraction(nu3, 3) - Fraction(cusps, 2)
    return CurveData(index, nu2, nu3, cusps, as_count(g, f"genus of X_0({p})"))


def dim_cusp(k: int, p: int) -> int:
    """dim S_k(Gamma_0(p)) for even ``k >= 2``; ``p = 1`` gives full level."""
    _check_weight(k)
    X = curve_data(p)
    if k == 2:
        return X.genus
    d = (k - 1) * (X.genus - 1) + (k // 4) * X.nu2 + (k // 3) * X.nu3 + (k // 2 - 1) * X.cusps
    return as_count(d, f"dim S_{k}(Gamma_0({p}))")


def dim_new(k: int, p: int) -> int:
    """Dimension of the new subspace of S_k(Gamma_0(p)) for prime ``p``."""
    _check_weight(k)
    if not is_prime(p):
        raise ValueError(f"level must be prime, got {p}")
    return as_count(dim_cusp(k, p) - 2 * dim_cusp_level1(k), f"dim S_{k}^new({p})")


def _sign_correction(k: int, p: int) -> Fraction:
    """The amount by which the plus space exceeds half the new space."""
    if p == 2:
        return Fraction(1, 2) if k % 8 in (0, 2) else Fraction(0)
    if p == 3:
        return Fraction(1, 2) if k % 12 in (0, 2, 6, 8) else Fraction(0)
    delta = 1 if k == 2 else 0
    return Fraction(1, 2) * (Fraction(class_number_of_prime_field(p) * b_factor(p), 2) - delta)


def dim_pm_new(k: int, p: int, sign: int) -> int:
    """Dimension of newforms whose L-function has root number ``sign``."""
    _check_weight(k)
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    if p in (2, 3) and k == 2:
        raise ValueError("the sign split at p = 2, 3 needs k > 2")
    d = dim_new(k, p)
    value = Fraction(d, 2) + sign * _sign_correction(k, p)
    return as_count(value, f"dim S_{k}^{'+' if sign > 0 else '-'},new({p})")


@dataclass(frozen=True)
class EllipticDims:
    k: int
    p: int
    dim_total: int
    dim_new: int
    dim_plus: int | None
    dim_minus: int | None


def elliptic_dims(k: int, p: int) -> EllipticDims:
    """All dimensions at once; the sign split is None where it is undefined."""
    total = dim_cusp(k, p)
    if p == 1:
        return EllipticDims(k, p, total, total, None, None)
    new = dim_new(k, p)
    if p in (2, 3) and k == 2:
        return EllipticDims(k, p, total, new, None, None)
    return EllipticDims(k, p, total, new, dim_pm_new(k, p, 1), dim_pm_new(k, p, -1))
