"""Maps linear over a subfield only: subspace enumeration over F2 and the
block-triangular witness family."""

import itertools

from frobweight.config import DEFAULT_CAPS
from frobweight.scenarios import (
    _bits_apply,
    _block_lt_family,
    _f2_basis,
    _f2_subspaces,
    _gl2_f2,
    corpus_ring,
)


def xor(a, b):
    return tuple((x + y) % 2 for x, y in zip(a, b))


def test_subspace_counts():
    # Gaussian binomial totals: 5 subspaces of F2^2, 67 of F2^4
    assert len(_f2_subspaces(2)) == 5
    assert len(_f2_subspaces(4)) == 67


def test_subspaces_are_closed():
    zero = (0, 0, 0, 0)
    for sub in _f2_subspaces(4):
        assert zero in sub
        for a in sub:
            for b in sub:
                assert xor(a, b) in sub


def test_basis_spans():
    zero = (0, 0, 0, 0)
    for sub in _f2_subspaces(4):
        basis = _f2_basis(sorted(sub))
        spanned = {zero}
        for b in basis:
            spanned |= {xor(s, b) for s in spanned}
        assert spanned == set(sub)


def test_block_family_sizes():
    assert len(_gl2_f2()) == 6
    assert len(_block_lt_family(1, 2)) == 6
    # two invertible diagonal blocks and one free 2x2 block below
    assert len(_block_lt_family(2, 2)) == 6 * 6 * 16


def test_block_matrices_invertible():
    for mat in _block_lt_family(2, 2):
        dim = len(mat)
        vectors = list(itertools.product((0, 1), repeat=dim))
        images = {_bits_apply(v, mat) for v in vectors}
        assert len(images) == len(vectors)


def test_bits_apply_is_linear():
    vectors = list(itertools.product((0, 1), repeat=2))
    for mat in _block_lt_family(1, 2):
        for v in vectors:
            for w in vectors:
                assert _bits_apply(xor(v, w), mat) == xor(
                    _bits_apply(v, mat), _bits_apply(w, mat)
                )


def test_squaring_on_gf4_is_additive():
    ring = corpus_ring("f4", DEFAULT_CAPS)
    sq = [ring.mul[a][a] for a in range(4)]
    for a in range(4):
        for b in range(4):
            assert sq[ring.add[a][b]] == ring.add[sq[a]][sq[b]]
    # squaring fixes the prime field and swaps the two other elements
    assert sq[ring.zero] == ring.zero and sq[ring.one] == ring.one
    others = [a for a in range(4) if a not in (ring.zero, ring.one)]
    assert sq[others[0]] == others[1] and sq[others[1]] == others[0]
