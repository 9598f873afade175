"""Partitions, their character duals, and orbit partitions of matrix group
actions."""

import pytest

from frobweight.abelian import decompose, power_decomp
from frobweight.config import DEFAULT_CAPS
from frobweight.errors import UniverseMismatch
from frobweight.frobenius import default_generating_character, rhat_bimodule, ring_bimodule
from frobweight.finring import RingSpec, build_ring
from frobweight.matrices import mat_from_rows
from frobweight.partitions import (
    ActionSpec,
    Partition,
    apply_right,
    apply_transpose,
    bidual_partition,
    chi_dual,
    dual_partition,
    is_reflexive,
    is_reflexive_group,
    orbit_partition,
    verify_orbit_duality,
)
from frobweight.scenarios import corpus_ring, hamming_partition


def test_partition_basics():
    p = Partition.from_labels([5, 5, 7, 5, 7])
    assert p.universe == 5
    assert p.block_count == 2
    assert p.blocks() == ((0, 1, 3), (2, 4))
    finer = Partition.from_labels([0, 1, 2, 1, 2])
    assert finer.refines(p)
    assert not p.refines(finer)


def test_dual_of_zero_nonzero_partition():
    ring = corpus_ring("z4", DEFAULT_CAPS)
    dec = decompose(ring.add)
    p = Partition.from_labels([0, 1, 1, 1])
    d = dual_partition(p, dec)
    # the dual separates the trivial character; here it matches p's shape
    assert d.block_count >= p.block_count
    assert bidual_partition(p, dec) == p
    assert is_reflexive_group(p, dec)


def test_dual_never_coarser_and_bidual_refines():
    ring = corpus_ring("z6", DEFAULT_CAPS)
    dec = decompose(ring.add)
    for labels in ([0, 0, 1, 1, 2, 2], [0, 1, 0, 1, 0, 1], [0, 0, 0, 0, 0, 1]):
        p = Partition.from_labels(labels)
        d = dual_partition(p, dec)
        assert p.block_count <= d.block_count
        assert bidual_partition(p, dec).refines(p)


def test_universe_mismatch_rejected():
    ring = corpus_ring("z4", DEFAULT_CAPS)
    dec = decompose(ring.add)
    with pytest.raises(UniverseMismatch):
        dual_partition(Partition.from_labels([0, 1]), dec)


def test_hamming_partition_chi_self_dual():
    ring = corpus_ring("z4", DEFAULT_CAPS)
    bim = rhat_bimodule(ring, DEFAULT_CAPS)
    gc = default_generating_character(bim)
    n = 2
    pm = hamming_partition(bim.carrier.size, n, bim.carrier.zero)
    pr = hamming_partition(ring.size, n, ring.zero)
    for side in ("left", "right"):
        assert chi_dual(pm, bim, gc, n, "module", side, DEFAULT_CAPS) == pr
        assert chi_dual(pr, bim, gc, n, "ring", side, DEFAULT_CAPS) == pm
    assert is_reflexive(pm, bim, gc, n, "module", DEFAULT_CAPS)


def test_matrix_actions():
    ring = corpus_ring("z4", DEFAULT_CAPS)
    bim = ring_bimodule(ring, DEFAULT_CAPS)
    shear = mat_from_rows([[1, 1], [0, 1]])
    # right action: v A with ring arithmetic
    assert apply_right((1, 0), shear, bim) == (1, 1)
    assert apply_right((0, 1), shear, bim) == (0, 1)
    # transpose action uses the transposed matrix
    assert apply_transpose((1, 0), shear, bim) == (1, 0)
    assert apply_transpose((0, 1), shear, bim) == (1, 1)


def test_orbit_duality_on_triangular_group():
    # group {(1 r; 0 u)} over Z4, acting on R^2 and on the character module
    ring = corpus_ring("z4", DEFAULT_CAPS)
    bim = rhat_bimodule(ring, DEFAULT_CAPS)
    gc = default_generating_character(bim)
    mats = [
        mat_from_rows([[ring.one, r], [ring.zero, u]])
        for r in range(ring.size)
        for u in ring.units
    ]
    rep = verify_orbit_duality(bim, gc, 2, mats, DEFAULT_CAPS)
    assert rep.ok
    assert rep.all_reflexive
    assert rep.ring_right_orbits == rep.module_transpose_orbits
    assert rep.ring_transpose_orbits == rep.module_right_orbits


def test_orbit_partition_closed_flag():
    ring = corpus_ring("z4", DEFAULT_CAPS)
    bim = ring_bimodule(ring, DEFAULT_CAPS)
    ident = mat_from_rows([[ring.one, ring.zero], [ring.zero, ring.one]])
    p = orbit_partition(bim, 2, ActionSpec((ident,), "right"), DEFAULT_CAPS, closed=True)
    assert p.block_count == 16  # identity alone fixes everything
