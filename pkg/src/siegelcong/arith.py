"""Exact integer arithmetic helpers.

Every function here works on Python ints but refuses arguments outside the
signed 64-bit range, so results agree with a fixed-width implementation and
nothing downstream can depend on values the rest of the library never checks.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import gcd, isqrt

INT64_MAX = (1 << 63) - 1
INT64_MIN = -(1 << 63)


def checked(value: int) -> int:
    """Return ``value`` unchanged, raising ``OverflowError`` outside int64."""
    if not INT64_MIN <= value <= INT64_MAX:
        raise OverflowError(f"{value} does not fit in a signed 64-bit integer")
    return value


def _positive(n: int, name: str = "n") -> int:
    checked(n)
    if n < 1:
        raise ValueError(f"{name} must be a positive integer, got {n}")
    return n


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n).

    Agrees with the Legendre symbol when n is an odd prime and is
    multiplicative in both arguments. ``n = 0`` is rejected.
    """
    checked(a)
    checked(n)
    if n == 0:
        raise ValueError("kronecker symbol is undefined for n = 0")
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -1
    # factor out powers of two from n
    v = (n & -n).bit_length() - 1
    n >>= v
    if v:
        if a % 2 == 0:
            return 0
        if v % 2 and a % 8 in (3, 5):
            result = -result
    # n is now odd and positive: Jacobi symbol
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


# deterministic for n < 3.3e24, which covers the whole int64 range
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    checked(n)
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int) -> int:
    # fixed starting constants keep factorization fully deterministic
    for c in range(1, 100):
        y, r, q, g = 2, 1, 1, 1
        x = ys = 2
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += 128
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"failed to split {n}")


@lru_cache(maxsize=65536)
def _factor_tuple(n: int) -> tuple[tuple[int, int], ...]:
    counts: Counter[int] = Counter()
    for p in (2, 3, 5):
        while n % p == 0:
            counts[p] += 1
            n //= p
    p = 7
    while p * p <= n and p < 10_000:
        while n % p == 0:
            counts[p] += 1
            n //= p
        p += 2
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if is_prime(m):
            counts[m] += 1
            continue
        r = isqrt(m)
        if r * r == m:
            stack += [r, r]
            continue
        d = _pollard_brent(m)
        stack += [d, m // d]
    return tuple(sorted(counts.items()))


def factorize(n: int) -> dict[int, int]:
    """Prime factorization as ``{prime: exponent}``; ``factorize(1) == {}``."""
    _positive(n)
    return dict(_factor_tuple(n))


def divisors(n: int) -> list[int]:
    _positive(n)
    divs = [1]
    for p, e in _factor_tuple(n):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def mobius(n: int) -> int:
    _positive(n)
    f = _factor_tuple(n)
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


def sigma1(n: int) -> int:
    """Sum of the positive divisors of ``n``."""
    _positive(n)
    total = 1
    for p, e in _factor_tuple(n):
        total *= (p ** (e + 1) - 1) // (p - 1)
    return checked(total)


def is_squarefree(n: int) -> bool:
    _positive(n)
    return all(e == 1 for _, e in _factor_tuple(n))


def squarefree_decomposition(n: int) -> tuple[int, int]:
    """Write ``n = s * f**2`` with ``s`` squarefree; returns ``(s, f)``."""
    _positive(n)
    s = f = 1
    for p, e in _factor_tuple(n):
        f *= p ** (e // 2)
        if e % 2:
            s *= p
    return s, f


def primes_up_to(n: int) -> list[int]:
    """All primes ``<= n`` via a plain sieve of Eratosthenes."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytes(len(range(p * p, n + 1, p)))
    return [i for i, flag in enumerate(sieve) if flag]
