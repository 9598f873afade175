"""Weight functions: Hamming, last-nonzero-position, support, homogeneous
(axioms and closed formula), symmetrized compositions, and submodule
counts."""

from fractions import Fraction

import pytest

from frobweight.config import DEFAULT_CAPS
from frobweight.errors import NotAGroup, NotASubmodule
from frobweight.frobenius import default_generating_character, ring_bimodule
from frobweight.scenarios import corpus_bimodules, corpus_ring
from frobweight.weights import (
    additive_lift,
    cyclic_submodule,
    free_left_module,
    homog_axioms_solve,
    homog_formula,
    homog_formula_left,
    homog_weight_table,
    module_of_bimodule,
    support,
    swc,
    unit_orbit_reps,
    verify_submodule,
    verify_unit_group,
    wt_hamming,
    wt_n,
    wt_rt,
)


def test_elementary_weights():
    assert wt_hamming((0, 3, 0, 1)) == 2
    assert wt_rt((0, 3, 0)) == 2
    assert wt_rt((0, 0, 0)) == 0
    # positions are 1-based, so the largest equals the last-nonzero weight
    assert support((0, 3, 0, 1)) == frozenset({2, 4})
    assert max(support((0, 3, 0, 1))) == wt_rt((0, 3, 0, 1))
    assert wt_hamming(()) == 0 and wt_rt(()) == 0


def test_homog_table_z4():
    ring = corpus_ring("z4", DEFAULT_CAPS)
    bim = ring_bimodule(ring, DEFAULT_CAPS)
    gc = default_generating_character(bim)
    table = homog_weight_table(bim, gc)
    assert table == (Fraction(0), Fraction(1), Fraction(2), Fraction(1))


def test_homog_table_z6():
    ring = corpus_ring("z6", DEFAULT_CAPS)
    bim = ring_bimodule(ring, DEFAULT_CAPS)
    gc = default_generating_character(bim)
    table = homog_weight_table(bim, gc)
    assert table == (
        Fraction(0),
        Fraction(1, 2),
        Fraction(3, 2),
        Fraction(2),
        Fraction(3, 2),
        Fraction(1, 2),
    )


def test_homog_averages_one_over_cyclic_submodules():
    ring = corpus_ring("z24", DEFAULT_CAPS)
    bim = ring_bimodule(ring, DEFAULT_CAPS)
    gc = default_generating_character(bim)
    table = homog_weight_table(bim, gc)
    mod = module_of_bimodule(bim)
    for v in range(1, ring.size):
        sub = cyclic_submodule(mod, v)
        assert sum(table[w] for w in sub) == len(sub)


def test_axioms_agree_with_formula_everywhere():
    for name, alph, bim, gc in corpus_bimodules(DEFAULT_CAPS):
        table = homog_weight_table(bim, gc)
        solved = homog_axioms_solve(module_of_bimodule(bim))
        assert table == solved, (name, alph)


def test_left_and_right_formulas_agree_on_commutative_corpus():
    for name, alph, bim, gc in corpus_bimodules(DEFAULT_CAPS):
        for v in range(bim.carrier.size):
            assert homog_formula(bim, gc, v) == homog_formula_left(bim, gc, v)


def test_additive_lift():
    hamming_on_z2 = (Fraction(0), Fraction(1))
    assert additive_lift(hamming_on_z2, (1, 0)) == 1
    assert additive_lift(hamming_on_z2, (1, 1)) == 2
    assert additive_lift(hamming_on_z2, (0, 0)) == 0


def test_swc_census():
    ring = corpus_ring("z4", DEFAULT_CAPS)
    bim = ring_bimodule(ring, DEFAULT_CAPS)
    reps, orbit_of = unit_orbit_reps(bim, ring.units)
    assert reps == (0, 1, 2)
    assert orbit_of[3] == 1  # 3 = 3*1 sits in the unit orbit of 1
    assert swc(bim, ring.units, (1, 2)) == (0, 1, 1)
    assert swc(bim, ring.units, (0, 0)) == (2, 0, 0)
    # the census always sums to the length
    assert sum(swc(bim, ring.units, (1, 3))) == 2


def test_swc_refines_hamming():
    ring = corpus_ring("z6", DEFAULT_CAPS)
    bim = ring_bimodule(ring, DEFAULT_CAPS)
    reps, _ = unit_orbit_reps(bim, ring.units)
    zero_slot = reps.index(ring.zero)
    for v in ((0, 0), (1, 4), (3, 3), (2, 0)):
        census = swc(bim, ring.units, v)
        assert len(v) - census[zero_slot] == wt_hamming(v)


def test_unit_group_verification():
    ring = corpus_ring("z4", DEFAULT_CAPS)
    assert verify_unit_group(ring, (1, 3)) == (1, 3)
    with pytest.raises(NotAGroup):
        verify_unit_group(ring, (1, 2))


def test_wt_n_counts_coordinates_inside_submodule():
    ring = corpus_ring("z24", DEFAULT_CAPS)
    mod = module_of_bimodule(ring_bimodule(ring, DEFAULT_CAPS))
    sub = [0, 6, 12, 18]
    assert wt_n(mod, sub, (6, 3)) == 1
    assert wt_n(mod, sub, (3, 0)) == 1
    assert wt_n(mod, sub, (3, 1)) == 0
    assert wt_n(mod, sub, (0, 0)) == 2


def test_submodule_verification():
    ring = corpus_ring("z24", DEFAULT_CAPS)
    mod = module_of_bimodule(ring_bimodule(ring, DEFAULT_CAPS))
    assert verify_submodule(mod, [0, 6, 12, 18]) == frozenset({0, 6, 12, 18})
    with pytest.raises(NotASubmodule):
        verify_submodule(mod, [0, 6, 12])


def test_free_module_homog_constant_on_nonzero():
    ring = corpus_ring("z2", DEFAULT_CAPS)
    mod = free_left_module(ring, 2, DEFAULT_CAPS)
    solved = homog_axioms_solve(mod)
    assert solved[0] == 0
    assert all(w == 2 for i, w in enumerate(solved) if i != 0)
