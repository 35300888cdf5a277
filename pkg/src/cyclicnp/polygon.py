"""Newton polygons as symmetric multisets of rational slopes.

Labels follow the table grammar::

    POLY := TERM (" ⊕ " TERM)*
    TERM := ("ord" | "ss" | "(" FRAC "," FRAC ")") ("^" INT)?
    FRAC := INT "/" INT

``ord`` is slopes 0 and 1 once each, ``ss`` is slope 1/2 twice and
``(s/t,(t-s)/t)`` is slopes s/t and (t-s)/t with multiplicity t each.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, NamedTuple

OPLUS = "⊕"

ZERO = Fraction(0)
HALF = Fraction(1, 2)
ONE = Fraction(1)


@dataclass(frozen=True)
class IsoclinicBlock:
    """G_{c,d}^multiplicity: slope d/(c+d), height (c+d)*multiplicity."""

    c: int
    d: int
    multiplicity: int = 1

    def __post_init__(self):
        if self.c < 0 or self.d < 0 or gcd(self.c, self.d) != 1:
            raise ValueError(f"G_{{{self.c},{self.d}}} needs coprime nonnegative c, d")
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be positive")

    @property
    def slope(self) -> Fraction:
        return Fraction(self.d, self.c + self.d)

    @property
    def height(self) -> int:
        return (self.c + self.d) * self.multiplicity


@dataclass(frozen=True)
class NewtonPolygon:
    # (slope, multiplicity) pairs with strictly increasing slopes
    slopes: tuple[tuple[Fraction, int], ...] = ()

    @classmethod
    def from_slopes(cls, pairs: Iterable[tuple] | dict) -> NewtonPolygon:
        if isinstance(pairs, dict):
            pairs = pairs.items()
        acc: Counter = Counter()
        for s, k in pairs:
            if k < 0:
                raise ValueError("negative multiplicity")
            acc[Fraction(s)] += int(k)
        return cls(tuple((s, acc[s]) for s in sorted(acc) if acc[s]))

    @classmethod
    def isoclinic(cls, slope, height: int) -> NewtonPolygon:
        return cls.from_slopes([(slope, height)])

    @classmethod
    def ord(cls, k: int = 1) -> NewtonPolygon:
        return cls.from_slopes([(0, k), (1, k)])

    @classmethod
    def ss(cls, k: int = 1) -> NewtonPolygon:
        return cls.from_slopes([(HALF, 2 * k)])

    @classmethod
    def pair(cls, s: int, t: int, k: int = 1) -> NewtonPolygon:
        """(s/t, (t-s)/t)^k."""
        return cls.from_slopes([(Fraction(s, t), t * k), (Fraction(t - s, t), t * k)])

    def as_dict(self) -> dict[Fraction, int]:
        return dict(self.slopes)

    def multiplicity(self, slope) -> int:
        return self.as_dict().get(Fraction(slope), 0)

    @property
    def height(self) -> int:
        return sum(k for _, k in self.slopes)

    @property
    def dimension(self) -> Fraction:
        return sum((s * k for s, k in self.slopes), Fraction(0))

    def breakpoints(self) -> list[tuple[int, Fraction]]:
        """Vertices of the piecewise linear polygon, starting at (0, 0)."""
        pts = [(0, Fraction(0))]
        x, y = 0, Fraction(0)
        for s, k in self.slopes:
            x, y = x + k, y + s * k
            pts.append((x, y))
        return pts

    def __add__(self, other: NewtonPolygon) -> NewtonPolygon:
        return amalgamate([self, other])

    def __str__(self):
        return display(self)


def from_blocks(blocks: Iterable[IsoclinicBlock]) -> NewtonPolygon:
    return NewtonPolygon.from_slopes((b.slope, b.height) for b in blocks)


def amalgamate(polys: Iterable[NewtonPolygon]) -> NewtonPolygon:
    return NewtonPolygon.from_slopes(pair for np_ in polys for pair in np_.slopes)


def p_rank(np_: NewtonPolygon) -> int:
    return np_.multiplicity(ZERO)


def is_supersingular(np_: NewtonPolygon) -> bool:
    return len(np_.slopes) == 1 and np_.slopes[0][0] == HALF


class Violation(NamedTuple):
    invariant: str
    detail: str


def validate(np_: NewtonPolygon) -> list[Violation]:
    """Check a polygon; an empty list means it is well formed."""
    out = []
    prev = None
    for s, k in np_.slopes:
        if not isinstance(s, Fraction) or not 0 <= s <= 1:
            out.append(Violation("slope range", f"slope {s} outside [0, 1]"))
        if k <= 0:
            out.append(Violation("multiplicity", f"slope {s} has multiplicity {k}"))
        if prev is not None and s <= prev:
            out.append(Violation("sortedness", f"slope {s} follows {prev}"))
        prev = s
    d = dict(np_.slopes)
    for s, k in np_.slopes:
        if d.get(1 - s, 0) != k:
            out.append(
                Violation("symmetry", f"slope {s} x{k} but slope {1 - s} x{d.get(1 - s, 0)}")
            )
    for x, y in np_.breakpoints():
        if y.denominator != 1:
            out.append(Violation("integral breakpoints", f"breakpoint ({x}, {y})"))
    return out


def _terms(np_: NewtonPolygon) -> list[tuple[Fraction, str]]:
    d = np_.as_dict()
    terms = []
    for s, k in np_.slopes:
        if s > HALF:
            continue
        if s == ZERO:
            if d.get(ONE, 0) != k:
                raise ValueError(f"slope 0 x{k} has no matching slope 1")
            terms.append((s, _power("ord", k)))
        elif s == HALF:
            if k % 2:
                raise ValueError(f"slope 1/2 with odd multiplicity {k}")
            terms.append((s, _power("ss", k // 2)))
        else:
            t = s.denominator
            if k % t or d.get(1 - s, 0) != k:
                raise ValueError(f"slope {s} x{k} is not a whole number of pairs")
            terms.append((s, _power(f"({s},{1 - s})", k // t)))
    if sum(k for s, k in np_.slopes if s >= HALF) != sum(
        k for s, k in np_.slopes if s <= HALF
    ):
        raise ValueError(f"asymmetric polygon {np_.slopes}")
    return terms


def _power(base: str, k: int) -> str:
    return base if k == 1 else f"{base}^{k}"


def display(np_: NewtonPolygon, ascii: bool = False) -> str:
    """Canonical label, factors ordered by increasing least slope."""
    sep = " + " if ascii else f" {OPLUS} "
    return sep.join(label for _, label in _terms(np_))


_TERM = re.compile(
    r"""^\s*(?:
        (?P<ord>ord) |
        (?P<ss>ss) |
        \(\s*(?P<n1>\d+)\s*/\s*(?P<d1>\d+)\s*,\s*(?P<n2>\d+)\s*/\s*(?P<d2>\d+)\s*\)
    )\s*(?:\^\s*\{?\s*(?P<exp>\d+)\s*\}?)?\s*$""",
    re.VERBOSE,
)


def parse(label: str) -> NewtonPolygon:
    """Parse a label; accepts "⊕" or "+" as separator and either slope order in pairs."""
    label = label.strip()
    if not label:
        return NewtonPolygon()
    parts = []
    for raw in re.split(r"⊕|\+|\\oplus", label):
        mt = _TERM.match(raw.replace("$", ""))
        if not mt:
            raise ValueError(f"cannot parse Newton polygon term {raw!r}")
        k = int(mt["exp"] or 1)
        if mt["ord"]:
            parts.append(NewtonPolygon.ord(k))
        elif mt["ss"]:
            parts.append(NewtonPolygon.ss(k))
        else:
            n1, d1, n2, d2 = (int(mt[g]) for g in ("n1", "d1", "n2", "d2"))
            if gcd(n1, d1) != 1 or gcd(n2, d2) != 1:
                raise ValueError(f"non-reduced fraction in {raw!r}")
            s1, s2 = Fraction(n1, d1), Fraction(n2, d2)
            if s1 + s2 != 1 or s1 in (ZERO, HALF, ONE):
                raise ValueError(f"slopes {s1}, {s2} do not form a dual pair")
            s = min(s1, s2)
            parts.append(NewtonPolygon.pair(s.numerator, s.denominator, k))
    return amalgamate(parts)
