"""Ring construction from specs: axioms, units, serialization, and the
matrix-family enumerations built on top."""

import pytest

from frobweight.config import DEFAULT_CAPS, Caps
from frobweight.errors import CapExceeded, NotIrreducible
from frobweight.finring import RingSpec, build_ring
from frobweight.matrices import (
    FamilySpec,
    enumerate_family,
    group_closure,
    is_invertible,
    mat_from_rows,
)
from frobweight.scenarios import RING_SPECS, corpus_ring


@pytest.mark.parametrize(
    "name,size,units",
    [
        ("z2", 2, 1),
        ("z3", 3, 2),
        ("z4", 4, 2),
        ("z6", 6, 2),
        ("f4", 4, 3),
        ("z2xz2", 4, 1),
        ("f2xy", 8, 4),
        ("z24", 24, 8),
    ],
)
def test_corpus_sizes_and_units(name, size, units):
    ring = corpus_ring(name, DEFAULT_CAPS)
    assert ring.size == size
    assert len(ring.units) == units


def test_z24_unit_group():
    ring = corpus_ring("z24", DEFAULT_CAPS)
    assert set(ring.units) == {1, 5, 7, 11, 13, 17, 19, 23}
    for u in ring.units:
        assert ring.mul[u][ring.unit_inverse(u)] == ring.one


def test_ring_axioms_hold_on_corpus():
    for name in RING_SPECS:
        ring = corpus_ring(name, DEFAULT_CAPS)
        n = ring.size
        for a in range(n):
            assert ring.add[a][ring.zero] == a
            assert ring.mul[a][ring.one] == a
            assert ring.add[a][ring.neg[a]] == ring.zero
            for b in range(n):
                assert ring.add[a][b] == ring.add[b][a]


def test_gf4_structure():
    ring = corpus_ring("f4", DEFAULT_CAPS)
    # every nonzero element invertible, multiplicative group cyclic of order 3
    nonzero = [a for a in range(4) if a != ring.zero]
    assert set(ring.units) == set(nonzero)
    g = next(a for a in nonzero if a != ring.one)
    assert ring.mul[g][ring.mul[g][g]] == ring.one


def test_reducible_polynomial_rejected():
    with pytest.raises(NotIrreducible):
        build_ring(RingSpec(kind="gf", p=2, poly=(1, 0, 1)), DEFAULT_CAPS)


def test_quotient_relations():
    ring = corpus_ring("f2xy", DEFAULT_CAPS)
    x = ring.index_of_name("x")
    y = ring.index_of_name("y")
    assert ring.mul[x][x] == ring.zero
    assert ring.mul[y][y] == ring.zero
    assert ring.mul[x][y] == ring.zero
    assert ring.add[x][x] == ring.zero


def test_product_ring_componentwise():
    ring = corpus_ring("z2xz2", DEFAULT_CAPS)
    # the two idempotents multiply to zero and sum to one
    idem = [a for a in range(4) if ring.mul[a][a] == a and a not in (ring.zero, ring.one)]
    assert len(idem) == 2
    e, f = idem
    assert ring.mul[e][f] == ring.zero
    assert ring.add[e][f] == ring.one


def test_matrix_ring_units_are_gl():
    spec = RingSpec(kind="matrix", base=RingSpec(kind="gf", p=2, poly=(1, 1, 1)), k=1)
    ring = build_ring(spec, DEFAULT_CAPS)
    assert ring.size == 4
    m2 = RingSpec(kind="matrix", base=RingSpec(kind="zn", n=2), k=2)
    ring2 = build_ring(m2, DEFAULT_CAPS)
    assert ring2.size == 16
    assert len(ring2.units) == 6


def test_spec_json_round_trip():
    specs = list(RING_SPECS.values()) + [
        RingSpec(kind="matrix", base=RingSpec(kind="zn", n=2), k=2)
    ]
    for spec in specs:
        assert RingSpec.from_json(spec.to_json()) == spec


@pytest.mark.parametrize(
    "kind,count",
    [("GL", 6), ("Mon", 2), ("LT", 2), ("Diag", 1), ("All", 16)],
)
def test_family_sizes_over_z2(kind, count):
    ring = corpus_ring("z2", DEFAULT_CAPS)
    fam = enumerate_family(ring, 2, FamilySpec(kind=kind), DEFAULT_CAPS)
    assert len(fam) == count
    if kind != "All":
        assert all(is_invertible(m, ring) for m in fam)


def test_monomial_family_size_z4():
    ring = corpus_ring("z4", DEFAULT_CAPS)
    fam = enumerate_family(ring, 2, FamilySpec(kind="Mon"), DEFAULT_CAPS)
    assert len(fam) == 8  # 2 placements, 2 units per nonzero entry


def test_group_closure_of_shear():
    ring = corpus_ring("z4", DEFAULT_CAPS)
    shear = mat_from_rows([[ring.one, ring.one], [ring.zero, ring.one]])
    grp = group_closure([shear], ring, DEFAULT_CAPS)
    assert len(grp) == 4  # the shear has additive order 4


def test_caps_enforced():
    with pytest.raises(CapExceeded):
        build_ring(RingSpec(kind="zn", n=10), Caps(ring_size=8))
    ring = corpus_ring("z4", DEFAULT_CAPS)
    with pytest.raises(CapExceeded):
        enumerate_family(ring, 2, FamilySpec(kind="All"), Caps(matrix_family=10))
