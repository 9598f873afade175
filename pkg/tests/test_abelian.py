"""Decomposition, characters, and annihilator duality for finite abelian
groups presented as addition tables."""

import pytest

from frobweight.abelian import (
    all_characters,
    all_subgroups,
    char_count,
    char_eval_exp,
    char_sum,
    character_annihilator,
    character_from_index,
    decode_tuple,
    decompose,
    encode_tuple,
    power_decomp,
    principal_character,
    subgroup_annihilator,
    verify_subgroup,
)
from frobweight.config import DEFAULT_CAPS
from frobweight.errors import NotASubgroup
from frobweight.finring import RingSpec, build_ring


def additive_group(name_spec):
    ring = build_ring(name_spec, DEFAULT_CAPS)
    return decompose(ring.add)


Z4 = RingSpec(kind="zn", n=4)
Z6 = RingSpec(kind="zn", n=6)
Z12 = RingSpec(kind="zn", n=12)
Z2XZ2 = RingSpec(
    kind="product", factors=(RingSpec(kind="zn", n=2), RingSpec(kind="zn", n=2))
)
F2XY = RingSpec(
    kind="quotient", chars=2, gens=("x", "y"), relations=("x^2", "y^2", "x*y")
)


@pytest.mark.parametrize(
    "spec,orders",
    [
        (Z4, (4,)),
        (Z6, (6,)),
        (Z2XZ2, (2, 2)),
        (F2XY, (2, 2, 2)),
    ],
)
def test_invariant_factors(spec, orders):
    dec = additive_group(spec)
    assert dec.orders == orders
    assert dec.exponent == orders[-1]
    # coords against the basis reconstruct every element
    for g in range(dec.size):
        c = dec.coords[g]
        acc = dec.zero
        for b, k in zip(dec.basis, c):
            for _ in range(k):
                acc = dec.add[acc][b]
        assert acc == g


def test_element_orders():
    dec = additive_group(Z12)
    assert dec.element_order(dec.zero) == 1
    orders = sorted(dec.element_order(g) for g in range(dec.size))
    assert orders == [1, 2, 3, 3, 4, 4, 6, 6, 12, 12, 12, 12]


def test_character_count_and_principal():
    dec = additive_group(Z2XZ2)
    assert char_count(dec) == dec.size == 4
    chars = list(all_characters(dec))
    assert len(chars) == 4
    triv = principal_character(dec)
    assert all(char_eval_exp(triv, g, dec) == 0 for g in range(dec.size))


def test_character_orthogonality():
    dec = additive_group(Z6)
    triv = principal_character(dec)
    for chi in all_characters(dec):
        total = char_sum(chi, range(dec.size), dec)
        if chi == triv:
            assert total.as_int() == dec.size
        else:
            assert total.is_zero()


def test_subgroup_annihilator_duality():
    dec = additive_group(Z12)
    subs = all_subgroups(dec)
    assert sorted(len(s) for s in subs) == [1, 2, 3, 4, 6, 12]
    for b in subs:
        ann = subgroup_annihilator(b, dec)
        assert len(b) * len(ann) == dec.size
        assert frozenset(character_annihilator(ann, dec)) == b


def test_subgroup_counts_elementary_abelian():
    dec = additive_group(Z2XZ2)
    assert len(all_subgroups(dec)) == 5


def test_verify_subgroup_rejects_non_closed():
    dec = additive_group(Z4)
    with pytest.raises(NotASubgroup):
        verify_subgroup({0, 1}, dec)


def test_power_decomp():
    dec = additive_group(Z2XZ2)
    pd = power_decomp(dec, 2)
    assert pd.size == 16
    assert pd.orders == (2, 2, 2, 2)
    assert pd.exponent == 2


def test_encode_decode_round_trip():
    for base in (2, 3, 4, 6):
        for n in (1, 2, 3):
            for idx in range(base ** n):
                t = decode_tuple(idx, base, n)
                assert encode_tuple(t, base) == idx


def test_character_indexing_round_trip():
    dec = additive_group(Z6)
    for i in range(dec.size):
        chi = character_from_index(dec, i)
        vals = [char_eval_exp(chi, g, dec) for g in range(dec.size)]
        # characters are additive in exponents
        for a in range(dec.size):
            for b in range(dec.size):
                s = dec.add[a][b]
                assert (vals[a] + vals[b]) % dec.exponent == vals[s] % dec.exponent
