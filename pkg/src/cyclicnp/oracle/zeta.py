"""Point counts, L-polynomials and their p-adic Newton polygons.

This is the independent check on the orbit computation: it never looks at
signatures or Frobenius orbits, only at the curve y^m = x^a1 (x-1)^a2 over
F_p and its extensions.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd

import numpy as np
from sympy import divisors, isprime, mobius

from ..arith import NotCoprimeError
from ..monodromy import MonodromyDatum, genus
from ..polygon import NewtonPolygon, display
from ..shimura import newton_polygon_at_p
from . import kernels
from .field import build_field

DEFAULT_BUDGET = 2_000_000


class BudgetExceededError(RuntimeError):
    pass


class WeilBoundError(ArithmeticError):
    """A point count or power sum violates the Weil bound."""


@dataclass(frozen=True)
class LPolynomial:
    g: int
    p: int
    coefficients: tuple[int, ...]  # c_0 .. c_2g

    def __post_init__(self):
        c = self.coefficients
        if len(c) != 2 * self.g + 1 or c[0] != 1:
            raise ValueError(f"bad L-polynomial coefficients {c}")
        for i in range(self.g + 1):
            if c[2 * self.g - i] != self.p ** (self.g - i) * c[i]:
                raise ValueError(f"functional equation fails at degree {i}: {c}")

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mono = "" if i == 0 else ("T" if i == 1 else f"T^{i}")
            coef = str(abs(c)) if (abs(c) != 1 or i == 0) else ""
            sign = "-" if c < 0 else "+"
            terms.append((sign, coef + mono))
        s = "".join(f" {sg} {t}" for sg, t in terms).strip()
        return s[2:] if s.startswith("+ ") else s


@lru_cache(maxsize=32)
def _log_table(p: int, k: int) -> np.ndarray:
    F = build_field(p, k)
    g = F.primitive_element()
    return kernels.log_table(F.mul_matrix(g), p, F.order)


def _roots_of_pm1(d: int, c: int, p: int, q: int) -> int:
    """#{z in F_q : z^d = c} for c = 1 or -1."""
    G = gcd(d, q - 1)
    if c == 1 or p == 2:
        return G
    return G if (q - 1) % (2 * G) == 0 else 0


def place_degrees(d: int, c: int, p: int, q: int) -> Counter:
    """Degrees of the irreducible factors of z^d - c over F_q (c = +-1)."""
    roots = {j: _roots_of_pm1(d, c, p, q**j) for j in range(1, d + 1)}
    out = Counter()
    for j in range(1, d + 1):
        num = sum(mobius(j // e) * roots[e] for e in divisors(j))
        if num % j or num < 0:
            raise ArithmeticError(f"non-integral place count for z^{d} = {c} over F_{q}")
        if num:
            out[j] = num // j
    if sum(j * n for j, n in out.items()) != d:
        raise ArithmeticError(f"place degrees above branch point do not sum to {d}")
    return out


def branch_fibres(datum: MonodromyDatum) -> list[tuple[str, int, int]]:
    """(name, d, c) per branch point: rational points there are roots of z^d = c."""
    m, (a1, a2, _) = datum.m, datum.a
    return [
        ("0", gcd(m, a1), (-1) ** a2),
        ("1", gcd(m, a2), 1),
        ("inf", gcd(m, a1 + a2), 1),
    ]


def count_points(datum: MonodromyDatum, p: int, k: int = 1, budget: int = DEFAULT_BUDGET) -> int:
    """Points of the smooth projective model over F_{p^k}."""
    m, (a1, a2, _) = datum.m, datum.a
    if m % p == 0:
        raise NotCoprimeError(f"p={p} divides m={m}")
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    q = p**k
    if q > budget:
        raise BudgetExceededError(f"F_{p}^{k} has {q} elements, budget is {budget}")
    G = gcd(m, q - 1)
    affine = kernels.count_affine(_log_table(p, k), p, a1, a2, G) if q > 2 else 0
    ramified = 0
    for _, d, c in branch_fibres(datum):
        place_degrees(d, c, p, q)
        ramified += _roots_of_pm1(d, c, p, q)
    n = affine + ramified
    g = genus(datum)
    if (n - q - 1) ** 2 > 4 * g * g * q:
        raise WeilBoundError(f"N_{k} = {n} violates the Weil bound for {datum}, p={p}")
    return n


def coefficients_from_power_sums(power_sums, p: int, g: int) -> tuple[int, ...]:
    """c_0..c_2g from S_1..S_g via Newton's identities and the functional equation."""
    s = list(power_sums)
    if len(s) < g:
        raise ValueError(f"need {g} power sums, got {len(s)}")
    e = [1]
    for k in range(1, g + 1):
        acc = sum((-1) ** (i - 1) * e[k - i] * s[i - 1] for i in range(1, k + 1))
        if acc % k:
            raise ArithmeticError(f"power sums give non-integral e_{k} = {Fraction(acc, k)}")
        e.append(acc // k)
    c = [(-1) ** i * e[i] for i in range(g + 1)]
    c += [p ** (g - i) * c[i] for i in range(g - 1, -1, -1)]
    return tuple(c)


def l_polynomial_from_counts(counts, p: int, g: int) -> LPolynomial:
    counts = list(counts)
    sums = []
    for k, n in enumerate(counts[:g], start=1):
        s = p**k + 1 - n
        if s * s > 4 * g * g * p**k:
            raise WeilBoundError(f"S_{k} = {s} exceeds 2g p^(k/2)")
        sums.append(s)
    return LPolynomial(g, p, coefficients_from_power_sums(sums, p, g))


def l_polynomial(datum: MonodromyDatum, p: int, budget: int = DEFAULT_BUDGET) -> LPolynomial:
    g = genus(datum)
    cost = sum(p**k for k in range(1, g + 1))
    if cost > budget:
        raise BudgetExceededError(f"counting over F_{p}^1..{g} costs {cost} > budget {budget}")
    counts = [count_points(datum, p, k, budget) for k in range(1, g + 1)]
    return l_polynomial_from_counts(counts, p, g)


def _vp(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def lower_hull(points):
    hull = []
    for pt in sorted(points):
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop hull[-1] when it lies on or above the segment hull[-2] -> pt
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    return hull


def newton_polygon_of_l(lp: LPolynomial, p: int | None = None) -> NewtonPolygon:
    p = lp.p if p is None else p
    pts = [(i, _vp(c, p)) for i, c in enumerate(lp.coefficients) if c]
    hull = lower_hull(pts)
    return NewtonPolygon.from_slopes(
        (Fraction(y2 - y1, x2 - x1), x2 - x1) for (x1, y1), (x2, y2) in zip(hull, hull[1:])
    )


@dataclass(frozen=True)
class CrossCheck:
    datum: MonodromyDatum
    p: int
    shimura: NewtonPolygon
    oracle: NewtonPolygon
    l_poly: LPolynomial
    only_shimura: dict = field(default_factory=dict)
    only_oracle: dict = field(default_factory=dict)

    @property
    def agree(self) -> bool:
        return self.shimura == self.oracle

    def summary(self) -> str:
        verdict = "agree" if self.agree else "MISMATCH"
        return (
            f"{self.datum}, p={self.p}: {verdict}; "
            f"orbits {display(self.shimura)}, L-polynomial {display(self.oracle)}"
        )


def cross_check(datum: MonodromyDatum, p: int, budget: int = DEFAULT_BUDGET) -> CrossCheck:
    st = newton_polygon_at_p(datum, p)
    lp = l_polynomial(datum, p, budget)
    oracle = newton_polygon_of_l(lp, p)
    a, b = Counter(st.as_dict()), Counter(oracle.as_dict())
    return CrossCheck(datum, p, st, oracle, lp, dict(a - b), dict(b - a))
