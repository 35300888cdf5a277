"""Newton polygons of the Jacobian of y^m = x^a1 (x-1)^a2 at a good prime p.

Each orbit o of multiplication by p on the nonzero residues mod m whose
element order divides no a(i) contributes an isoclinic piece of height #o
and slope #(o & S_1) / #o, where S_1 is the set of n with signature 1.
Orbits with order dividing some a(i) contribute nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable

from sympy import isprime

from .arith import FrobeniusOrbit, NotCoprimeError, multiplicative_order, orbits_under
from .monodromy import MonodromyDatum, signature
from .polygon import NewtonPolygon, amalgamate


@dataclass(frozen=True)
class OrbitSlopeReport:
    orbit: FrobeniusOrbit
    alpha: int
    beta: int
    excluded: bool

    @property
    def slope(self) -> Fraction | None:
        if self.excluded:
            return None
        return Fraction(self.alpha, len(self.orbit))

    def polygon(self) -> NewtonPolygon:
        if self.excluded:
            return NewtonPolygon()
        return NewtonPolygon.isoclinic(self.slope, len(self.orbit))


def _check_prime(datum: MonodromyDatum, p: int) -> None:
    if datum.m % p == 0:
        raise NotCoprimeError(f"p={p} divides m={datum.m}")
    if not isprime(p):
        raise ValueError(f"{p} is not prime")


def orbit_slopes_for_generator(datum: MonodromyDatum, h: int) -> list[OrbitSlopeReport]:
    """Per-orbit data for the subgroup of units generated by h."""
    sig = signature(datum)
    reports = []
    for o in orbits_under(datum.m, h):
        alpha = sum(1 for n in o if n in sig.s1)
        beta = sum(1 for n in o if n in sig.s0)
        excluded = datum.excludes(o.members[0])
        if not excluded and alpha + beta != len(o):
            raise ArithmeticError(f"orbit {o.members} misses S_0 u S_1 for {datum}")
        reports.append(OrbitSlopeReport(o, alpha, beta, excluded))
    return reports


def orbit_slopes(datum: MonodromyDatum, p: int) -> list[OrbitSlopeReport]:
    _check_prime(datum, p)
    return orbit_slopes_for_generator(datum, p)


def _polygon(reports: Iterable[OrbitSlopeReport]) -> NewtonPolygon:
    return amalgamate(r.polygon() for r in reports)


def newton_polygon_at_p(datum: MonodromyDatum, p: int) -> NewtonPolygon:
    return _polygon(orbit_slopes(datum, p))


def newton_polygon_for_class(datum: MonodromyDatum, r: int) -> NewtonPolygon:
    """Polygon shared by every prime p = r mod m."""
    if gcd(r, datum.m) != 1:
        raise NotCoprimeError(f"class {r} is not a unit mod {datum.m}")
    return _polygon(orbit_slopes_for_generator(datum, r))


def subgroup_generator(m: int, subgroup: Iterable[int]) -> int:
    """A generator of a cyclic subgroup of (Z/mZ)^*, given as its set of elements."""
    h = frozenset(x % m for x in subgroup)
    if not h or 1 % m not in h:
        raise ValueError(f"{sorted(h)} does not contain 1 mod {m}")
    for x in h:
        if gcd(x, m) != 1:
            raise NotCoprimeError(f"{x} is not a unit mod {m}")
        for y in h:
            if x * y % m not in h:
                raise ValueError(f"{sorted(h)} is not closed under multiplication mod {m}")
    for x in sorted(h):
        if multiplicative_order(x, m) == len(h):
            return x
    raise ValueError(f"subgroup {sorted(h)} mod {m} is not cyclic")


def newton_polygon_for_subgroup(datum: MonodromyDatum, subgroup: Iterable[int]) -> NewtonPolygon:
    return newton_polygon_for_class(datum, subgroup_generator(datum.m, subgroup))


def supersingular_by_self_duality(datum: MonodromyDatum, p: int) -> bool:
    """True when every contributing orbit is closed under negation.

    Only needs p to be a unit mod m, so it also serves for congruence classes.
    """
    if gcd(p, datum.m) != 1:
        raise NotCoprimeError(f"p={p} divides m={datum.m}")
    return all(o.self_dual for o in orbits_under(datum.m, p) if not datum.excludes(o.members[0]))
