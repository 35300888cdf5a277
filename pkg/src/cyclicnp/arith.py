"""Exact residue arithmetic and Frobenius orbits on Z/mZ."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor, gcd

from sympy import isprime


class NotCoprimeError(ValueError):
    """Raised when p (or a class representative) shares a factor with m."""


def _check_modulus(m: int) -> None:
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")


@dataclass(frozen=True, order=True)
class Residue:
    value: int
    modulus: int

    def __post_init__(self):
        _check_modulus(self.modulus)
        if not 0 <= self.value < self.modulus:
            raise ValueError(f"{self.value} is not reduced mod {self.modulus}")

    @classmethod
    def of(cls, x: int, m: int) -> Residue:
        return cls(x % m, m)


def fractional_part(q) -> Fraction:
    q = Fraction(q)
    return q - floor(q)


def multiplicative_order(x: Residue | int, m: int | None = None) -> int:
    """Least k >= 1 with x**k == 1 mod m.

    Accepts either a Residue or a plain integer together with its modulus.
    """
    if isinstance(x, Residue):
        value, m = x.value, x.modulus
    else:
        if m is None:
            raise TypeError("modulus required for integer input")
        _check_modulus(m)
        value = x % m
    if gcd(value, m) != 1:
        raise NotCoprimeError(f"{value} is not a unit mod {m}")
    k, y = 1, value % m
    while y != 1 % m:
        y = y * value % m
        k += 1
    return k


def subgroup_generated(m: int, p: int) -> frozenset[int]:
    """The cyclic subgroup <p mod m> of (Z/mZ)^*."""
    _check_modulus(m)
    if gcd(p, m) != 1:
        raise NotCoprimeError(f"{p} is not coprime to {m}")
    out = {1 % m}
    y = p % m
    while y not in out:
        out.add(y)
        y = y * p % m
    return frozenset(out)


def element_order(n: int, m: int) -> int:
    """Additive order of n in Z/mZ."""
    return m // gcd(n, m)


@dataclass(frozen=True)
class FrobeniusOrbit:
    members: tuple[int, ...]
    modulus: int

    def __post_init__(self):
        if not self.members:
            raise ValueError("empty orbit")

    def __contains__(self, n: int) -> bool:
        return n % self.modulus in self.members

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    @property
    def order(self) -> int:
        return orbit_order(self)

    @property
    def self_dual(self) -> bool:
        return is_self_dual(self)

    def dual(self) -> FrobeniusOrbit:
        m = self.modulus
        return FrobeniusOrbit(tuple(sorted((-n) % m for n in self.members)), m)


@dataclass(frozen=True)
class FrobeniusOrbitPartition:
    m: int
    p: int
    orbits: tuple[FrobeniusOrbit, ...]

    def __iter__(self):
        return iter(self.orbits)

    def __len__(self):
        return len(self.orbits)

    def orbit_of(self, n: int) -> FrobeniusOrbit:
        for o in self.orbits:
            if n in o:
                return o
        raise KeyError(n)


def orbits_under(m: int, h: int) -> tuple[FrobeniusOrbit, ...]:
    """Orbits of multiplication by the unit h on {1, ..., m-1}.

    Orbits come sorted by least member, members in increasing order.
    """
    _check_modulus(m)
    if gcd(h, m) != 1:
        raise NotCoprimeError(f"{h} is not coprime to {m}")
    seen = [False] * m
    orbits = []
    for n in range(1, m):
        if seen[n]:
            continue
        members = []
        y = n
        while not seen[y]:
            seen[y] = True
            members.append(y)
            y = y * h % m
        orbits.append(FrobeniusOrbit(tuple(sorted(members)), m))
    return tuple(orbits)


def frobenius_orbits(m: int, p: int) -> FrobeniusOrbitPartition:
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    return FrobeniusOrbitPartition(m, p, orbits_under(m, p))


def orbit_order(o: FrobeniusOrbit) -> int:
    m = o.modulus
    orders = {element_order(n, m) for n in o.members}
    if len(orders) != 1:
        raise ValueError(f"corrupt orbit {o.members} mod {m}: element orders {sorted(orders)}")
    return orders.pop()


def is_self_dual(o: FrobeniusOrbit) -> bool:
    members = set(o.members)
    return all((-n) % o.modulus in members for n in members)
