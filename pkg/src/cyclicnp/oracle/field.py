"""Finite fields F_{p^k} as F_p[x]/(f), elements encoded as base-p integers.

An element sum(c_i x^i) is stored as the integer sum(c_i p^i), so the prime
field sits inside as 0..p-1 and the element 1 is encoded as 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from sympy import isprime, primefactors

Poly = list  # coefficients over F_p, lowest degree first


def _trim(f: Poly) -> Poly:
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_mod(f: Poly, g: Poly, p: int) -> Poly:
    f = _trim([c % p for c in f])
    g = _trim([c % p for c in g])
    if not g:
        raise ZeroDivisionError("polynomial modulus is zero")
    inv = pow(g[-1], -1, p)
    dg = len(g) - 1
    while len(f) - 1 >= dg:
        coef = f[-1] * inv % p
        shift = len(f) - 1 - dg
        for i, gi in enumerate(g):
            f[shift + i] = (f[shift + i] - coef * gi) % p
        _trim(f)
    return f


def poly_mul(f: Poly, g: Poly, p: int) -> Poly:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, fi in enumerate(f):
        if fi:
            for j, gj in enumerate(g):
                out[i + j] = (out[i + j] + fi * gj) % p
    return _trim(out)


def poly_powmod(f: Poly, e: int, mod: Poly, p: int) -> Poly:
    result, base = [1], poly_mod(f, mod, p)
    while e:
        if e & 1:
            result = poly_mod(poly_mul(result, base, p), mod, p)
        base = poly_mod(poly_mul(base, base, p), mod, p)
        e >>= 1
    return poly_mod(result, mod, p)


def poly_gcd(f: Poly, g: Poly, p: int) -> Poly:
    f, g = _trim([c % p for c in f]), _trim([c % p for c in g])
    while g:
        f, g = g, poly_mod(f, g, p)
    if f:
        inv = pow(f[-1], -1, p)
        f = [c * inv % p for c in f]
    return f


def _sub(f: Poly, g: Poly, p: int) -> Poly:
    n = max(len(f), len(g))
    f, g = f + [0] * (n - len(f)), g + [0] * (n - len(g))
    return _trim([(a - b) % p for a, b in zip(f, g)])


def is_irreducible(f: Poly, p: int) -> bool:
    """Rabin's test for a monic polynomial of degree k over F_p."""
    f = _trim([c % p for c in f])
    k = len(f) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    x = [0, 1]
    if _sub(poly_powmod(x, p**k, f, p), x, p):
        return False
    for r in primefactors(k):
        h = _sub(poly_powmod(x, p ** (k // r), f, p), x, p)
        if len(poly_gcd(f, h, p)) != 1:
            return False
    return True


def _digits(e: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        e, r = divmod(e, p)
        out.append(r)
    return out


@dataclass(frozen=True)
class FiniteField:
    p: int
    k: int
    modulus: tuple[int, ...]  # monic, lowest degree first, length k + 1
    _powers: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_powers", tuple(self.p**i for i in range(self.k)))

    @property
    def order(self) -> int:
        return self.p**self.k

    def encode(self, coeffs) -> int:
        coeffs = poly_mod(list(coeffs), list(self.modulus), self.p)
        return sum(c * w for c, w in zip(coeffs, self._powers))

    def decode(self, e: int) -> list[int]:
        return _digits(e, self.p, self.k)

    def add(self, x: int, y: int) -> int:
        p = self.p
        return sum((a + b) % p * w for a, b, w in zip(self.decode(x), self.decode(y), self._powers))

    def neg(self, x: int) -> int:
        p = self.p
        return sum((-a) % p * w for a, w in zip(self.decode(x), self._powers))

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        return self.encode(poly_mul(_trim(self.decode(x)), _trim(self.decode(y)), self.p))

    def pow(self, x: int, e: int) -> int:
        if e < 0:
            raise ValueError("negative exponent")
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, x)
            x = self.mul(x, x)
            e >>= 1
        return result

    def frobenius(self, x: int) -> int:
        return self.pow(x, self.p)

    def mul_matrix(self, g: int) -> np.ndarray:
        """Matrix over F_p of y -> g*y on coefficient vectors."""
        cols = [self.decode(self.mul(g, self._powers[j])) for j in range(self.k)]
        return np.array(cols, dtype=np.int64).T.copy()

    def is_primitive(self, g: int) -> bool:
        n = self.order - 1
        if g == 0:
            return False
        if self.pow(g, n) != 1:
            return False
        return all(self.pow(g, n // r) != 1 for r in primefactors(n)) if n > 1 else True

    def primitive_element(self) -> int:
        for g in range(1, self.order):
            if self.is_primitive(g):
                return g
        raise ArithmeticError(f"no primitive element in F_{self.order}")


def candidate_moduli(p: int, k: int):
    """Monic degree-k polynomials, lower coefficients read as a base-p counter."""
    for n in range(p**k):
        yield tuple(_digits(n, p, k)) + (1,)


@lru_cache(maxsize=64)
def build_field(p: int, k: int = 1) -> FiniteField:
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1:
        raise ValueError("extension degree must be >= 1")
    for f in candidate_moduli(p, k):
        if is_irreducible(list(f), p):
            return FiniteField(p, k, f)
    raise ArithmeticError(f"no irreducible polynomial of degree {k} over F_{p}")
