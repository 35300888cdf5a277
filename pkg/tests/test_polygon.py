from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cyclicnp.polygon import (
    IsoclinicBlock,
    NewtonPolygon,
    amalgamate,
    display,
    from_blocks,
    is_supersingular,
    p_rank,
    parse,
    validate,
)

from .golden_tables import PRANK0_ROWS, TABLES

ORD, SS = NewtonPolygon.ord(), NewtonPolygon.ss()


def test_from_blocks_examples():
    assert from_blocks([IsoclinicBlock(0, 1), IsoclinicBlock(1, 0)]) == ORD
    assert from_blocks([IsoclinicBlock(1, 1)]) == SS
    assert from_blocks([IsoclinicBlock(1, 4), IsoclinicBlock(4, 1)]).slopes == ((F(1, 5), 5), (F(4, 5), 5))


def test_isoclinic_block_rejects_non_coprime():
    with pytest.raises(ValueError):
        IsoclinicBlock(2, 2)


def test_amalgamate_examples():
    assert amalgamate([NewtonPolygon.ord(2), SS]).slopes == ((F(0), 2), (F(1, 2), 2), (F(1), 2))
    assert amalgamate([]) == NewtonPolygon()
    third = NewtonPolygon.pair(1, 3)
    assert amalgamate([third, third]) == NewtonPolygon.pair(1, 3, 2)


def test_p_rank_and_supersingular():
    assert p_rank(NewtonPolygon.ord(4)) == 4
    assert p_rank(NewtonPolygon.ss(4)) == 0
    assert p_rank(NewtonPolygon.ord(2) + SS) == 2
    assert is_supersingular(NewtonPolygon.ss(5))
    assert not is_supersingular(NewtonPolygon.pair(1, 5))
    assert not is_supersingular(ORD)


def test_validate_examples():
    assert validate(NewtonPolygon.pair(1, 3)) == []
    (v,) = validate(NewtonPolygon.from_slopes([(0, 1)]))
    assert v.invariant == "symmetry"
    assert [v.invariant for v in validate(NewtonPolygon.from_slopes([(F(1, 2), 3)]))] == [
        "integral breakpoints"
    ]
    bad = NewtonPolygon(((F(1), 1), (F(0), 1)))
    assert "sortedness" in {v.invariant for v in validate(bad)}
    assert "slope range" in {v.invariant for v in validate(NewtonPolygon(((F(3, 2), 2),)))}


def test_display_examples():
    assert display(NewtonPolygon.ss(5)) == "ss^5"
    assert display(NewtonPolygon.from_slopes([(F(1, 5), 5), (F(4, 5), 5)])) == "(1/5,4/5)"
    np_ = NewtonPolygon.from_slopes([(0, 2), (F(1, 3), 3), (F(2, 3), 3), (1, 2)])
    assert display(np_) == "ord^2 ⊕ (1/3,2/3)"
    assert display(np_, ascii=True) == "ord^2 + (1/3,2/3)"


def test_parse_variants():
    assert parse("(1/3,2/3) ⊕ ord") == parse("ord ⊕ (1/3,2/3)")
    assert parse("(523/1013, 490/1013)") == NewtonPolygon.pair(490, 1013)
    assert parse("ord^2 + ss") == NewtonPolygon.ord(2) + SS
    assert parse("$ord^3 $") == NewtonPolygon.ord(3)
    for bad in ["(1/3,1/3)", "foo", "(2/6,4/6)", "(1/2,1/2)"]:
        with pytest.raises(ValueError):
            parse(bad)


def all_labels():
    for _, rows in TABLES.values():
        for _, _, cells in rows:
            yield from cells
    for row in PRANK0_ROWS:
        yield row[1]


@pytest.mark.parametrize("label", sorted(set(all_labels())))
def test_table_labels_round_trip(label):
    np_ = parse(label)
    assert validate(np_) == []
    assert parse(display(np_)) == np_
    assert display(parse(display(np_))) == display(np_)


def test_breakpoints():
    assert NewtonPolygon.pair(1, 3).breakpoints() == [(0, 0), (3, 1), (6, 3)]


terms = st.one_of(
    st.integers(1, 4).map(NewtonPolygon.ord),
    st.integers(1, 4).map(NewtonPolygon.ss),
    st.tuples(st.integers(3, 13), st.integers(1, 12), st.integers(1, 3))
    .filter(lambda t: t[1] < t[0] / 2 and F(t[1], t[0]).denominator == t[0])
    .map(lambda t: NewtonPolygon.pair(t[1], t[0], t[2])),
)
polygons = st.lists(terms, max_size=5).map(amalgamate)


@given(polygons)
def test_polygon_invariants(np_):
    assert validate(np_) == []
    assert np_.dimension * 2 == np_.height
    assert parse(display(np_)) == np_


@given(polygons, polygons, polygons)
def test_amalgamate_algebra(x, y, z):
    assert x + y == y + x
    assert (x + y) + z == x + (y + z)
    assert p_rank(amalgamate([x, y, z])) == p_rank(x) + p_rank(y) + p_rank(z)
