from itertools import permutations, product
from math import gcd

import pytest

from cyclicnp.arith import element_order
from cyclicnp.monodromy import (
    InvalidDatumError,
    MonodromyDatum,
    NonPrimitiveError,
    NonZeroSumError,
    ZeroMonodromyError,
    canonical_form,
    cm_factors,
    enumerate_classes,
    genus,
    signature,
    validate,
)


def valid_triples(m):
    for a in product(range(1, m), repeat=3):
        if sum(a) % m == 0 and gcd(m, *a) == 1:
            yield a


def test_validate_examples():
    assert validate(11, (1, 1, 9)) == MonodromyDatum(11, (1, 1, 9))
    with pytest.raises(NonZeroSumError):
        validate(5, (1, 1, 2))
    with pytest.raises(NonPrimitiveError):
        validate(6, (2, 2, 2))
    with pytest.raises(ZeroMonodromyError):
        validate(6, (6, 1, 5))
    with pytest.raises(InvalidDatumError):
        validate(1, (1, 1, 1))


def test_validate_reduces_mod_m():
    assert validate(7, (8, -5, 4)).a == (1, 2, 4)


@pytest.mark.parametrize("m, a, g", [(3, (1, 1, 1), 1), (11, (1, 1, 9), 5), (9, (1, 2, 6), 3)])
def test_genus_examples(m, a, g):
    assert genus(validate(m, a)) == g


def test_signature_examples():
    assert signature(validate(7, (1, 2, 4))).f == (1, 1, 0, 1, 0, 0)
    assert signature(validate(12, (1, 5, 6))).f == (1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0)
    sig = signature(validate(9, (1, 2, 6)))
    assert sig.f == (1, 1, 0, 0, 1, 0, 0, 0)
    assert sig.s1 == {1, 2, 5}
    assert sig.s0 == {4, 7, 8}


def test_cm_factors_examples():
    assert cm_factors(validate(11, (1, 1, 9))) == {11}
    assert cm_factors(validate(6, (1, 2, 3))) == {6}
    assert cm_factors(validate(9, (1, 2, 6))) == {9}


def brute_canonical(m, a):
    images = [
        tuple(sorted(x))
        for u in range(1, m)
        if gcd(u, m) == 1
        for x in permutations(u * ai % m for ai in a)
    ]
    return min(images)


@pytest.mark.parametrize(
    "m, a, expected", [(9, (2, 3, 4), (1, 2, 6)), (7, (1, 2, 4), (1, 2, 4)), (9, (1, 4, 4), (1, 1, 7))]
)
def test_canonical_form_examples(m, a, expected):
    assert brute_canonical(m, a) == expected
    assert canonical_form(m, a).a == expected


def test_enumerate_classes_examples():
    assert [d.a for d in enumerate_classes(7)] == [(1, 1, 5), (1, 2, 4)]
    assert [d.a for d in enumerate_classes(12)] == [(1, 1, 10), (1, 2, 9), (1, 3, 8), (1, 4, 7), (1, 5, 6)]
    assert [d.a for d in enumerate_classes(3)] == [(1, 1, 1)]


def orbit_closure_classes(m):
    """Union-find over valid triples under unit scaling and permutation."""
    triples = list(valid_triples(m))
    parent = {t: t for t in triples}

    def find(t):
        while parent[t] != t:
            parent[t] = parent[parent[t]]
            t = parent[t]
        return t

    for t in triples:
        for u in range(1, m):
            if gcd(u, m) != 1:
                continue
            for s in permutations(u * x % m for x in t):
                parent[find(s)] = find(t)
    return {find(t) for t in triples}, find


@pytest.mark.parametrize("m", range(3, 13))
def test_enumerate_classes_brute_force(m):
    roots, find = orbit_closure_classes(m)
    reps = enumerate_classes(m)
    assert len(reps) == len(roots)
    assert {find(d.a) for d in reps} == roots
    assert [d.a for d in reps] == sorted(d.a for d in reps)


@pytest.mark.parametrize("m", range(3, 16))
def test_datum_invariants(m):
    for a in valid_triples(m):
        d = MonodromyDatum(m, a)
        g = genus(d)
        sig = signature(d)
        contributing = [n for n in range(1, m) if not any(ai % element_order(n, m) == 0 for ai in a)]
        assert 2 * g == len(contributing)
        assert sum(sig.f) == g
        assert sig.s0 | sig.s1 == set(contributing)
        assert not sig.s0 & sig.s1
        for n in range(1, m):
            if n in contributing:
                assert sig[n] + sig[m - n] == 1
            else:
                assert sig[n] == sig[m - n] == 0
        c = canonical_form(m, a)
        assert genus(c) == g
        assert sorted(signature(c).f) == sorted(sig.f)
