"""Class numbers of imaginary quadratic orders.

Class numbers come from an exhaustive enumeration of primitive reduced
binary quadratic forms ``ax^2 + bxy + cy^2``. Hurwitz class numbers are
built from the class number of the fundamental discriminant and the
conductor sum, so the two routes can be checked against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from typing import NamedTuple, Union

from .arith import (
    checked,
    divisors,
    is_prime,
    is_squarefree,
    kronecker,
    mobius,
    sigma1,
    squarefree_decomposition,
)


@dataclass(frozen=True)
class Discriminant:
    """A negative discriminant ``value = fundamental_part * conductor**2``."""

    value: int
    fundamental_part: int
    conductor: int

    @property
    def fundamental(self) -> bool:
        return self.conductor == 1

    @classmethod
    def of(cls, value: int) -> Discriminant:
        checked(value)
        if value >= 0:
            raise ValueError(f"discriminant must be negative, got {value}")
        if value % 4 not in (0, 1):
            raise ValueError(f"{value} is not 0 or 1 mod 4, so it is not a discriminant")
        s, f = squarefree_decomposition(-value)
        # -s is the fundamental part when s = 3 (mod 4); otherwise it is -4s
        # and one factor of 2 moves out of the conductor
        if s % 4 == 3:
            return cls(value, -s, f)
        if f % 2:
            raise ValueError(f"{value} has no decomposition as fundamental * f^2")
        return cls(value, -4 * s, f // 2)

    @property
    def squarefree_part(self) -> int:
        """The squarefree ``n`` with ``fundamental_part`` the discriminant of Q(sqrt(-n))."""
        d = -self.fundamental_part
        return d if d % 4 == 3 else d // 4


DiscLike = Union[int, Discriminant]


def _value(D: DiscLike) -> int:
    return D.value if isinstance(D, Discriminant) else Discriminant.of(D).value


class QuadForm(NamedTuple):
    a: int
    b: int
    c: int

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def is_reduced(self) -> bool:
        a, b, c = self
        if not (abs(b) <= a <= c):
            return False
        if (abs(b) == a or a == c) and b < 0:
            return False
        return True

    def is_primitive(self) -> bool:
        return gcd(gcd(self.a, self.b), self.c) == 1


@dataclass(frozen=True)
class ClassData:
    h: int
    w: int
    hurwitz: Fraction


def is_fundamental(D: int) -> bool:
    if D >= 0 or D % 4 not in (0, 1):
        return False
    return Discriminant.of(D).fundamental


def fundamental_discriminant(n: int) -> Discriminant:
    """Discriminant of Q(sqrt(-n)) for squarefree ``n >= 1``."""
    if n < 1 or not is_squarefree(n):
        raise ValueError(f"n must be a squarefree positive integer, got {n}")
    value = -n if n % 4 == 3 else -4 * n
    return Discriminant(value, value, 1)


def reduced_forms(D: DiscLike) -> list[QuadForm]:
    """All primitive reduced forms of discriminant ``D``.

    Sorted by ``a``, then ``|b|``, with positive ``b`` first.
    """
    D = _value(D)
    forms = []
    # |b| <= a <= sqrt(|D|/3) for reduced forms
    b = D % 2
    bmax = isqrt(-D // 3)
    while b <= bmax:
        m = (b * b - D) // 4  # = a*c
        a = max(b, 1)
        while a * a <= m:
            if m % a == 0:
                c = m // a
                if gcd(gcd(a, b), c) == 1:
                    forms.append(QuadForm(a, b, c))
                    if 0 < b < a < c:
                        forms.append(QuadForm(a, -b, c))
            a += 1
        b += 2
    forms.sort(key=lambda f: (f.a, abs(f.b), -f.b))
    return forms


@lru_cache(maxsize=None)
def _class_number(D: int) -> int:
    return len(reduced_forms(D))


def class_number(D: DiscLike) -> int:
    return _class_number(_value(D))


def units(D: DiscLike) -> int:
    """Number of units in the order of discriminant ``D``."""
    D = _value(D)
    return {-3: 6, -4: 4}.get(D, 2)


def hurwitz(D: DiscLike) -> Fraction:
    """Hurwitz class number ``H(D)`` as an exact fraction."""
    disc = D if isinstance(D, Discriminant) else Discriminant.of(D)
    delta = disc.fundamental_part
    f = disc.conductor
    total = 0
    for d in divisors(f):
        mu = mobius(d)
        if mu:
            total += mu * kronecker(delta, d) * sigma1(f // d)
    return Fraction(2 * class_number(delta), units(delta)) * total


def class_data(D: DiscLike) -> ClassData:
    return ClassData(class_number(D), units(D), hurwitz(D))


def b_factor(p: int) -> int:
    """The class-number scale factor 1, 2 or 4 picked out by ``p`` mod 8."""
    if p in (2, 3):
        raise ValueError("b is only defined for primes p >= 5")
    if p < 5 or not is_prime(p):
        raise ValueError(f"{p} is not a prime >= 5")
    if p % 4 == 1:
        return 1
    return 2 if p % 8 == 7 else 4


def class_number_of_prime_field(p: int) -> int:
    """h of Q(sqrt(-p)) for a prime ``p``."""
    return class_number(fundamental_discriminant(p))
