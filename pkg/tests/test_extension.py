"""Codes, weight-preserving maps, and global matrix witnesses."""

import pytest

from frobweight.config import Caps, DEFAULT_CAPS
from frobweight.errors import CapExceeded
from frobweight.extension import (
    a_r_matrices,
    enumerate_preserving_maps,
    find_global_matrix,
    linear_map,
    local_matrices,
    map_matrix_agrees,
    span_code,
    witness_index,
    zero_code,
)
from frobweight.frobenius import ring_bimodule
from frobweight.matrices import FamilySpec, enumerate_family, mat_from_rows
from frobweight.scenarios import corpus_ring, pred_hamming
from frobweight.weights import wt_hamming


def bim_of(name):
    return ring_bimodule(corpus_ring(name, DEFAULT_CAPS), DEFAULT_CAPS)


def test_span_code_sizes():
    b = bim_of("z4")
    assert zero_code(b, 2).size == 1
    c = span_code(b, 2, [(0, 2)])
    assert c.size == 2
    assert set(c.elements) == {(0, 0), (0, 2)}
    full = span_code(b, 2, [(1, 0), (0, 1)])
    assert full.size == 16
    assert span_code(b, 2, [(1, 0), (2, 0)]).size == 4  # second generator redundant


def test_minimal_generators_dropped():
    b = bim_of("z4")
    c = span_code(b, 2, [(1, 0), (2, 0)])
    assert c.minimal_gens == ((1, 0),)


def test_hamming_isometries_of_full_space_are_exactly_monomial():
    b = bim_of("z4")
    full = span_code(b, 2, [(1, 0), (0, 1)])
    fam = enumerate_family(b.ring, 2, FamilySpec(kind="Mon"), DEFAULT_CAPS)
    assert len(fam) == 8
    idx = witness_index(full, fam)
    maps = list(enumerate_preserving_maps(full, pred_hamming(b), DEFAULT_CAPS))
    assert len(maps) == len(fam)
    for lm in maps:
        a = find_global_matrix(lm, fam, idx)
        assert a is not None
        assert map_matrix_agrees(lm, a)


def test_injective_flag():
    b = bim_of("z4")
    c = span_code(b, 2, [(1, 0)])
    assert linear_map(c, ((1, 2),)).is_injective()
    assert not linear_map(c, ((2, 0),)).is_injective()


def test_local_but_not_global_matrices():
    # v -> 2v on the cyclic code over Z4 has local monomial representations
    # at every element, and here also a global one
    b = bim_of("z4")
    c = span_code(b, 2, [(1, 1)])
    lm = linear_map(c, ((3, 3),))
    fam = enumerate_family(b.ring, 2, FamilySpec(kind="Mon"), DEFAULT_CAPS)
    rep = local_matrices(lm, fam)
    assert not rep.missing
    assert all(rep.found[tuple(v)] for v in c.elements)
    assert find_global_matrix(lm, fam) is not None


def test_a_r_matrix_witnesses_agree_locally():
    b = bim_of("z4")
    c = span_code(b, 2, [(1, 0), (0, 1)])
    lm = linear_map(c, ((0, 1), (1, 0)))
    fam = enumerate_family(b.ring, 2, FamilySpec(kind="Mon"), DEFAULT_CAPS)
    ar = a_r_matrices(lm, fam, DEFAULT_CAPS)
    assert ar


def test_unit_link_between_equal_cyclic_submodules():
    # classical fact on these commutative rings: xR == yR exactly when y is
    # a unit multiple of x; validates the span machinery independently
    for name in ("z4", "z6", "f4", "z2xz2", "z24"):
        ring = corpus_ring(name, DEFAULT_CAPS)
        b = ring_bimodule(ring, DEFAULT_CAPS)
        for x in range(ring.size):
            row_x = frozenset(ring.mul[x])
            for y in range(ring.size):
                same_ideal = row_x == frozenset(ring.mul[y])
                linked = any(ring.mul[u][x] == y for u in ring.units)
                assert same_ideal == linked, (name, x, y)


def test_preserving_maps_respect_weights():
    b = bim_of("z6")
    c = span_code(b, 2, [(2, 3)])
    for lm in enumerate_preserving_maps(c, pred_hamming(b), DEFAULT_CAPS):
        for v, w in lm.images.items():
            assert wt_hamming(w) == wt_hamming(v)


def test_enumeration_cap():
    b = bim_of("z24")
    full = span_code(b, 2, [(1, 0), (0, 1)])
    with pytest.raises(CapExceeded):
        list(enumerate_preserving_maps(full, pred_hamming(b), Caps(universe=4)))
