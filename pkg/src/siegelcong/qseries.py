"""Truncated integer power series and the t-core generating function.

The fast path for ``prod (1 - q^{tn})^t / (1 - q^n)`` never forms the
partition series, whose coefficients outgrow 64 bits long before the
quantities of interest do. Instead it builds ``A(q) = prod (1 - q^n)^t``
by sparse pentagonal shifts and then divides ``A(q^t)`` by Euler's product
through the pentagonal recurrence. Every intermediate is a coefficient of
an eta-quotient of non-negative weight, so int64 suffices for realistic
inputs; a guard detects the cases where it would not, and those fall back
to exact Python integers.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .arith import INT64_MAX

try:
    import numba
except ImportError:  # pragma: no cover - exercised only without numba
    numba = None

log = logging.getLogger(__name__)

# headroom so that a sum of two guarded values still fits
_GUARD = 1 << 62


class QSeries:
    """A power series ``sum c_n q^n`` known exactly for ``0 <= n <= order``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        self.coeffs = tuple(int(c) for c in coeffs)
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, QSeries):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __repr__(self):
        head = ", ".join(map(str, self.coeffs[:8]))
        return f"QSeries([{head}{', ...' if len(self) > 8 else ''}], order={self.order})"

    def truncate(self, order: int) -> QSeries:
        return QSeries(self.coeffs[: order + 1])

    def __add__(self, other: QSeries) -> QSeries:
        n = min(self.order, other.order) + 1
        return QSeries(a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n]))

    def __neg__(self) -> QSeries:
        return QSeries(-c for c in self.coeffs)

    def __sub__(self, other: QSeries) -> QSeries:
        return self + (-other)

    def __mul__(self, other: QSeries) -> QSeries:
        N = min(self.order, other.order)
        out = [0] * (N + 1)
        b = other.coeffs
        for i, a in enumerate(self.coeffs[: N + 1]):
            if a:
                for j in range(N + 1 - i):
                    out[i + j] += a * b[j]
        return QSeries(out)

    def inverse(self) -> QSeries:
        """Multiplicative inverse; needs a unit constant term to stay integral."""
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise ValueError("only series with constant term +-1 have integral inverses")
        a = self.coeffs
        out = [c0]
        for n in range(1, len(a)):
            s = sum(a[j] * out[n - j] for j in range(1, n + 1) if a[j])
            out.append(-s * c0)
        return QSeries(out)

    def substitute_power(self, t: int, order: int) -> QSeries:
        """``f(q^t)`` truncated at ``order``."""
        out = [0] * (order + 1)
        for n in range(0, order // t + 1):
            if n <= self.order:
                out[n * t] = self.coeffs[n]
        if order // t > self.order:
            raise ValueError("series is too short for this substitution")
        return QSeries(out)


def pentagonal_terms(N: int) -> tuple[list[int], list[int]]:
    """Exponents and signs of ``prod (1 - q^n) = sum (-1)^m q^{m(3m-1)/2}``, up to ``N``.

    The constant term is omitted; exponents come out in increasing order.
    """
    exps, signs = [], []
    m = 1
    while m * (3 * m - 1) // 2 <= N:
        s = -1 if m % 2 else 1
        for e in (m * (3 * m - 1) // 2, m * (3 * m + 1) // 2):
            if e <= N:
                exps.append(e)
                signs.append(s)
        m += 1
    return exps, signs


def euler_product(N: int) -> QSeries:
    """``prod_{n>=1} (1 - q^n)`` through ``q^N``."""
    out = [0] * (N + 1)
    out[0] = 1
    for e, s in zip(*pentagonal_terms(N)):
        out[e] = s
    return QSeries(out)


def partition_series(N: int) -> QSeries:
    """``sum p(n) q^n`` through ``q^N`` via the pentagonal recurrence."""
    exps, signs = pentagonal_terms(N)
    p = [1] + [0] * N
    for n in range(1, N + 1):
        s = 0
        for e, sg in zip(exps, signs):
            if e > n:
                break
            s -= sg * p[n - e]
        p[n] = s
    return QSeries(p)


def _euler_power_int64(M: int, t: int) -> np.ndarray | None:
    """Coefficients of ``prod (1 - q^n)^t`` through ``q^M``; None if int64 could overflow."""
    exps, signs = pentagonal_terms(M)
    a = np.zeros(M + 1, dtype=np.int64)
    a[0] = 1
    bound = 1
    for _ in range(t):
        bound *= len(exps) + 1
        if bound > _GUARD:
            return None
        b = a.copy()
        for e, s in zip(exps, signs):
            if s > 0:
                b[e:] += a[: M + 1 - e]
            else:
                b[e:] -= a[: M + 1 - e]
        a = b
        bound = int(np.abs(a).max())
    return a


def _divide_by_euler_py(numer: Sequence[int], exps, signs) -> list[int]:
    out = [0] * len(numer)
    for n in range(len(numer)):
        s = numer[n]
        for e, sg in zip(exps, signs):
            if e > n:
                break
            s -= sg * out[n - e]
        out[n] = s
    return out


if numba is not None:

    @numba.njit(cache=True)
    def _divide_by_euler_nb(numer, exps, signs, out):  # pragma: no cover - compiled
        n_terms = exps.shape[0]
        limit = (1 << 62) // (n_terms + 1)
        maxabs = 0
        for n in range(numer.shape[0]):
            acc = numer[n]
            for i in range(n_terms):
                e = exps[i]
                if e > n:
                    break
                acc -= signs[i] * out[n - e]
            out[n] = acc
            v = acc if acc >= 0 else -acc
            if v > maxabs:
                maxabs = v
                if maxabs > limit:
                    return n
        return -1


def _c_t_int64(N: int, t: int) -> np.ndarray | None:
    M = N // t
    a = _euler_power_int64(M, t)
    if a is None or numba is None:
        return None
    if int(np.abs(a).max()) > _GUARD // 2:
        return None
    numer = np.zeros(N + 1, dtype=np.int64)
    numer[::t] = a[: N // t + 1]
    exps, signs = pentagonal_terms(N)
    out = np.zeros(N + 1, dtype=np.int64)
    stop = _divide_by_euler_nb(
        numer, np.asarray(exps, dtype=np.int64), np.asarray(signs, dtype=np.int64), out
    )
    if stop >= 0:
        log.info("c_t series N=%d t=%d leaves int64 range at n=%d", N, t, stop)
        return None
    return out


def _c_t_exact(N: int, t: int) -> list[int]:
    M = N // t
    a = euler_product(M)
    power = QSeries([1] + [0] * M)
    for _ in range(t):
        power = power * a
    numer = [0] * (N + 1)
    for n in range(M + 1):
        numer[n * t] = power[n]
    return _divide_by_euler_py(numer, *pentagonal_terms(N))


@lru_cache(maxsize=16)
def _c_t_coeffs(N: int, t: int) -> tuple[int, ...]:
    fast = _c_t_int64(N, t)
    if fast is not None:
        return tuple(fast.tolist())
    return tuple(_c_t_exact(N, t))


def c_t_series(N: int, t: int) -> QSeries:
    """Generating function of t-core partition counts, ``sum c_t(n) q^n``, through ``q^N``."""
    if N < 0:
        raise ValueError(f"truncation order must be >= 0, got {N}")
    if t < 1:
        raise ValueError(f"t must be a positive integer, got {t}")
    if N > INT64_MAX:
        raise OverflowError("truncation order too large")
    return QSeries(_c_t_coeffs(N, t))


def c_t(n: int, t: int) -> int:
    """``c_t(n)`` read off a cached series, grown in powers of two."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    N = 1024
    while N < n:
        N *= 2
    return _c_t_coeffs(N, t)[n]


def c4(n: int) -> int:
    return c_t(n, 4)
