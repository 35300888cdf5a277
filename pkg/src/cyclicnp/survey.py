"""Tables of Newton polygons per degree m and congruence-class searches."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable, Iterable

from .arith import multiplicative_order, orbits_under, subgroup_generated
from .monodromy import MonodromyDatum, Signature, enumerate_classes, genus, signature
from .polygon import IsoclinicBlock, NewtonPolygon, display, from_blocks, is_supersingular, p_rank
from .shimura import newton_polygon_for_class


@dataclass(frozen=True)
class ClassGroup:
    """Units mod m that generate the same subgroup; they share every polygon."""

    m: int
    subgroup: frozenset[int]
    members: tuple[int, ...]

    @property
    def generator(self) -> int:
        return self.members[0]

    @property
    def order(self) -> int:
        return len(self.subgroup)

    def label(self) -> str:
        return f"{','.join(map(str, self.members))} mod {self.m}"

    def orbit_label(self) -> str:
        if self.order == 1:
            return "split"
        orbits = orbits_under(self.m, self.generator)
        return ",".join("(" + ",".join(map(str, o.members)) + ")" for o in orbits)


def congruence_classes_grouped(m: int) -> list[ClassGroup]:
    groups: dict[frozenset, list[int]] = {}
    for r in range(1, m):
        if gcd(r, m) == 1:
            groups.setdefault(subgroup_generated(m, r), []).append(r)
    out = [ClassGroup(m, h, tuple(sorted(rs))) for h, rs in groups.items()]
    return sorted(out, key=lambda c: c.members[0])


@dataclass(frozen=True)
class TableRow:
    datum: MonodromyDatum
    signature: Signature
    cells: dict  # ClassGroup -> NewtonPolygon, in column order

    @property
    def genus(self) -> int:
        return genus(self.datum)


def table_for_m(m: int) -> list[TableRow]:
    classes = congruence_classes_grouped(m)
    rows = []
    for datum in enumerate_classes(m):
        cells = {c: newton_polygon_for_class(datum, c.generator) for c in classes}
        rows.append(TableRow(datum, signature(datum), cells))
    return rows


@dataclass(frozen=True)
class SearchHit:
    m: int
    datum: MonodromyDatum | None  # None means every inertia type ("any a")
    residues: tuple[int, ...]
    polygon: NewtonPolygon | None
    genus: int | None

    @property
    def any_a(self) -> bool:
        return self.datum is None

    def describe(self, compress: bool = False) -> str:
        where = "any a" if self.any_a else "a=(" + ",".join(map(str, self.datum.a)) + ")"
        parts = [f"m={self.m}", where]
        if self.genus is not None:
            parts.append(f"g={self.genus}")
        if self.polygon is not None:
            parts.append(display(self.polygon))
        parts.append(format_congruence(self.residues, self.m, compress))
        return ", ".join(parts)


def _units(m: int) -> list[int]:
    return [u for u in range(1, m) if gcd(u, m) == 1]


def compress_congruence(residues: Iterable[int], m: int) -> tuple[int, tuple[int, ...]]:
    """Smallest divisor d of m such that the residue set is the full preimage of
    its reduction mod d inside the units mod m."""
    rs = frozenset(r % m for r in residues)
    units = _units(m)
    for d in range(1, m + 1):
        if m % d:
            continue
        image = {r % d for r in rs}
        if rs == {u for u in units if u % d in image}:
            return d, tuple(sorted(image))
    raise AssertionError("unreachable: d = m always works")


def format_congruence(residues: Iterable[int], m: int, compress: bool = False) -> str:
    residues = tuple(sorted(residues))
    if not compress:
        return f"p ≡ {','.join(map(str, residues))} mod {m}"
    d, image = compress_congruence(residues, m)
    if d == 1:
        return f"all p ∤ {m}"
    # complement phrasing only when no smaller modulus applies
    rest = sorted(set(_units(d)) - set(image)) if d == m else []
    if rest and len(rest) < len(image):
        return f"p ≢ {','.join(map(str, rest))} mod {d}"
    return f"p ≡ {','.join(map(str, image))} mod {d}"


def _scan(m: int, predicate: Callable[[MonodromyDatum, NewtonPolygon], bool]):
    """Per datum: (datum, polygon by class group) and the residues passing the predicate."""
    classes = congruence_classes_grouped(m)
    for datum in enumerate_classes(m):
        cells = [(c, newton_polygon_for_class(datum, c.generator)) for c in classes]
        yield datum, cells, [(c, np_) for c, np_ in cells if predicate(datum, np_)]


def find_supersingular(m_range: Iterable[int]) -> list[SearchHit]:
    """For each m: an "any a" hit over classes where every inertia type is
    supersingular, then one hit per inertia type with its own classes."""
    hits = []
    for m in m_range:
        if m < 3:
            continue
        per_datum = []
        common = None
        for datum, _, passing in _scan(m, lambda d, np_: is_supersingular(np_)):
            res = sorted(r for c, _ in passing for r in c.members)
            common = set(res) if common is None else common & set(res)
            if res:
                g = genus(datum)
                per_datum.append(SearchHit(m, datum, tuple(res), NewtonPolygon.ss(g), g))
        if common:
            genera = {genus(d) for d in enumerate_classes(m)}
            g = genera.pop() if len(genera) == 1 else None
            hits.append(
                SearchHit(m, None, tuple(sorted(common)), NewtonPolygon.ss(g) if g else None, g)
            )
        hits.extend(per_datum)
    return hits


def exact(target: NewtonPolygon) -> Callable:
    return lambda datum, np_: np_ == target


def has_slope(slope) -> Callable:
    s = Fraction(slope)
    return lambda datum, np_: np_.multiplicity(s) > 0


def prank_zero(include_supersingular: bool = False) -> Callable:
    def pred(datum, np_):
        return p_rank(np_) == 0 and (include_supersingular or not is_supersingular(np_))

    return pred


def find_polygon(m_range: Iterable[int], target) -> list[SearchHit]:
    """All (m, inertia type, classes) whose polygon satisfies ``target``.

    ``target`` is a NewtonPolygon (exact match) or a predicate
    ``(datum, polygon) -> bool``. Hits with different polygons for the same
    datum are reported separately.
    """
    pred = exact(target) if isinstance(target, NewtonPolygon) else target
    hits = []
    for m in m_range:
        if m < 3:
            continue
        for datum, _, passing in _scan(m, pred):
            by_poly: dict[NewtonPolygon, list[int]] = {}
            for c, np_ in passing:
                by_poly.setdefault(np_, []).extend(c.members)
            for np_, res in sorted(by_poly.items(), key=lambda kv: min(kv[1])):
                hits.append(SearchHit(m, datum, tuple(sorted(res)), np_, genus(datum)))
    return hits


def amalgamated_target(d: int, g: int) -> NewtonPolygon:
    """(G_{1,d-1} + G_{d-1,1}) + (G_{0,1} + G_{1,0})^(g-d)."""
    if d < 2:
        raise ValueError(f"need d >= 2, got {d}")
    if g < d:
        raise ValueError(f"need g >= d, got g={g} < d={d}")
    blocks = [IsoclinicBlock(1, d - 1), IsoclinicBlock(d - 1, 1)]
    if g > d:
        blocks += [IsoclinicBlock(0, 1, g - d), IsoclinicBlock(1, 0, g - d)]
    return from_blocks(blocks)


def class_order_profile(m: int) -> dict[int, list[int]]:
    """Unit residues mod m grouped by multiplicative order."""
    out: dict[int, list[int]] = {}
    for u in _units(m):
        out.setdefault(multiplicative_order(u, m), []).append(u)
    return out
