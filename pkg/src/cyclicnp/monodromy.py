"""Monodromy data (m, a) for cyclic covers of P^1 branched at 0, 1, infinity.

The curve attached to (m, a) is y^m = x^a1 (x - 1)^a2, with local monodromy
a1, a2, a3 at 0, 1, infinity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import gcd

from .arith import element_order, fractional_part


class InvalidDatumError(ValueError):
    condition = "monodromy datum"


class ZeroMonodromyError(InvalidDatumError):
    condition = "a(i) != 0 mod m"


class NonPrimitiveError(InvalidDatumError):
    condition = "gcd(m, a(1), a(2), a(3)) = 1"


class NonZeroSumError(InvalidDatumError):
    condition = "a(1) + a(2) + a(3) = 0 mod m"


@dataclass(frozen=True, order=True)
class MonodromyDatum:
    m: int
    a: tuple[int, int, int]

    def __post_init__(self):
        _check(self.m, self.a)

    def __str__(self):
        return f"m={self.m}, a=({','.join(map(str, self.a))})"

    @property
    def genus(self) -> int:
        return genus(self)

    def excludes(self, n: int) -> bool:
        """True when the order of n divides some a(i); such n carry no slope."""
        d = element_order(n, self.m)
        return any(ai % d == 0 for ai in self.a)


def _check(m: int, a) -> None:
    if m < 2:
        raise InvalidDatumError(f"m must be >= 2, got {m}")
    if len(a) != 3:
        raise InvalidDatumError(f"need three inertia values, got {len(a)}")
    bad = [ai for ai in a if ai % m == 0]
    if bad:
        raise ZeroMonodromyError(f"a(i) = 0 mod {m} for {bad}")
    if any(not 1 <= ai < m for ai in a):
        raise InvalidDatumError(f"a = {tuple(a)} not reduced to [1, {m - 1}]")
    if gcd(m, *a) != 1:
        raise NonPrimitiveError(f"gcd(m, a) = {gcd(m, *a)} for m={m}, a={tuple(a)}")
    if sum(a) % m:
        raise NonZeroSumError(f"a(1)+a(2)+a(3) = {sum(a)} is not 0 mod {m}")


def validate(m: int, a) -> MonodromyDatum:
    """Reduce a mod m and check the three datum conditions.

    Raises a subclass of InvalidDatumError naming the first violated condition.
    """
    a = tuple(int(ai) for ai in a)
    if m < 2:
        raise InvalidDatumError(f"m must be >= 2, got {m}")
    return MonodromyDatum(m, tuple(ai % m for ai in a))


def genus(datum: MonodromyDatum) -> int:
    m, a = datum.m, datum.a
    twice = 2 + m - sum(gcd(ai, m) for ai in a)
    assert twice % 2 == 0
    return twice // 2


@dataclass(frozen=True)
class Signature:
    datum: MonodromyDatum
    f: tuple[int, ...]
    s1: frozenset[int]
    s0: frozenset[int]

    def __getitem__(self, n: int) -> int:
        return self.f[n % self.datum.m - 1] if n % self.datum.m else 0


def signature_value(datum: MonodromyDatum, n: int) -> int:
    m = datum.m
    if n % m == 0:
        return 0
    total = -1 + sum(fractional_part(Fraction(-n * ai, m)) for ai in datum.a)
    if total.denominator != 1 or total not in (0, 1):
        raise ArithmeticError(f"signature value {total} at n={n} for {datum}")
    return int(total)


def signature(datum: MonodromyDatum) -> Signature:
    m = datum.m
    f = tuple(signature_value(datum, n) for n in range(1, m))
    s1, s0 = set(), set()
    for n in range(1, m):
        if datum.excludes(n):
            continue
        (s1 if f[n - 1] else s0).add(n)
    return Signature(datum, f, frozenset(s1), frozenset(s0))


def cm_factors(datum: MonodromyDatum) -> frozenset[int]:
    m = datum.m
    return frozenset(
        d for d in range(2, m + 1) if m % d == 0 and all(ai % d for ai in datum.a)
    )


def _units(m: int) -> list[int]:
    return [u for u in range(1, m) if gcd(u, m) == 1]


def canonical_form(m: int, a) -> MonodromyDatum:
    """Least ascending triple over the orbit of a under (Z/mZ)^* x S_3."""
    datum = validate(m, a)
    best = None
    for u in _units(m):
        t = tuple(sorted(u * ai % m for ai in datum.a))
        if best is None or t < best:
            best = t
    return MonodromyDatum(m, best)


def equivalence_orbit(datum: MonodromyDatum) -> frozenset[tuple[int, int, int]]:
    m = datum.m
    return frozenset(
        perm
        for u in _units(m)
        for perm in permutations(u * ai % m for ai in datum.a)
    )


@lru_cache(maxsize=None)
def enumerate_classes(m: int) -> tuple[MonodromyDatum, ...]:
    if m < 3:
        raise ValueError(f"need m >= 3, got {m}")
    reps = set()
    for a1 in range(1, m):
        for a2 in range(a1, m):
            a3 = (-a1 - a2) % m
            if a3 < a2 or gcd(m, a1, a2, a3) != 1:
                continue
            reps.add(canonical_form(m, (a1, a2, a3)).a)
    return tuple(MonodromyDatum(m, a) for a in sorted(reps))
