"""Generating characters, the Frobenius property, and the structural
bijection/annihilator checks on the corpus."""

import pytest

from frobweight.config import DEFAULT_CAPS
from frobweight.errors import NotFrobenius
from frobweight.frobenius import (
    default_generating_character,
    double_annihilator_check,
    find_generating_characters,
    is_frobenius_ring,
    rhat_bimodule,
    ring_bimodule,
    theta_check,
)
from frobweight.scenarios import RING_SPECS, corpus_ring


@pytest.mark.parametrize(
    "name,count",
    [
        ("z2", 1),
        ("z3", 2),
        ("z4", 2),
        ("z6", 2),
        ("f4", 3),
        ("z2xz2", 1),
        ("f2xy", 0),
        ("z24", 8),
    ],
)
def test_ring_generating_character_counts(name, count):
    ring = corpus_ring(name, DEFAULT_CAPS)
    bim = ring_bimodule(ring, DEFAULT_CAPS)
    found = find_generating_characters(bim)
    assert len(found) == count
    # generating characters of R form a torsor under the unit group
    if count:
        assert count == len(ring.units)


def test_frobenius_flags():
    for name in RING_SPECS:
        ring = corpus_ring(name, DEFAULT_CAPS)
        assert is_frobenius_ring(ring) == (name != "f2xy")


def test_non_frobenius_ring_refused():
    ring = corpus_ring("f2xy", DEFAULT_CAPS)
    with pytest.raises(NotFrobenius):
        default_generating_character(ring_bimodule(ring, DEFAULT_CAPS))


def test_character_module_always_has_generating_character():
    # R-hat is a Frobenius bimodule even when R itself is not Frobenius
    for name in RING_SPECS:
        ring = corpus_ring(name, DEFAULT_CAPS)
        bim = rhat_bimodule(ring, DEFAULT_CAPS)
        assert bim.carrier.size == ring.size
        assert find_generating_characters(bim)


def test_theta_bijective_on_corpus():
    for name in RING_SPECS:
        ring = corpus_ring(name, DEFAULT_CAPS)
        assert theta_check(ring, DEFAULT_CAPS).ok


def test_double_annihilators():
    for name in RING_SPECS:
        ring = corpus_ring(name, DEFAULT_CAPS)
        assert double_annihilator_check(rhat_bimodule(ring, DEFAULT_CAPS), DEFAULT_CAPS).ok
        if is_frobenius_ring(ring):
            assert double_annihilator_check(ring_bimodule(ring, DEFAULT_CAPS), DEFAULT_CAPS).ok
