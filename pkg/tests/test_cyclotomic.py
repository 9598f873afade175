"""Exact cyclotomic-integer arithmetic against classical identities and a
sympy polynomial-reduction oracle."""

import random

import pytest
from sympy import Poly, cyclotomic_poly, symbols

from frobweight.cyclotomic import CycInt, cyclotomic_poly as cyc_poly, root_of_unity_sum
from frobweight.errors import NonIntegerSum

x = symbols("x")


def mobius(n: int) -> int:
    # trial division; independent of both the library and sympy
    if n == 1:
        return 1
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def test_integer_round_trip():
    for m in (1, 2, 3, 8, 12):
        c = CycInt.from_int(m, -7)
        assert c.is_integer() and c.as_int() == -7
        assert CycInt.zero(m).is_zero()


def test_power_relations():
    for m in (3, 4, 5, 8, 12):
        one = CycInt.from_int(m, 1)
        z = CycInt.zeta_pow(m, 1)
        acc = one
        for _ in range(m):
            acc = acc * z
        assert acc == one
        for a in range(m):
            for b in range(m):
                assert CycInt.zeta_pow(m, a) * CycInt.zeta_pow(m, b) == CycInt.zeta_pow(m, a + b)


def test_full_residue_sum_vanishes():
    for m in range(2, 17):
        assert root_of_unity_sum(m, range(m)).is_zero()


def test_geometric_sum():
    # sum over k of zeta^(d*k) is m when m divides d, else 0
    for m in (2, 3, 4, 6, 8, 12):
        for d in range(2 * m):
            s = root_of_unity_sum(m, [(d * k) % m for k in range(m)])
            if d % m == 0:
                assert s.is_integer() and s.as_int() == m
            else:
                assert s.is_zero()


def test_primitive_residue_sum_is_mobius():
    import math

    for m in range(1, 31):
        s = root_of_unity_sum(m, [k for k in range(m) if math.gcd(k, m) == 1])
        assert s.is_integer() and s.as_int() == mobius(m)


def test_minimal_polynomial_matches_sympy():
    for m in (1, 2, 3, 4, 6, 8, 9, 12, 15, 24):
        ours = list(cyc_poly(m))
        theirs = list(reversed(Poly(cyclotomic_poly(m, x), x).all_coeffs()))
        assert ours == theirs


def test_reduction_matches_sympy_oracle():
    rng = random.Random(1729)
    for _ in range(40):
        m = rng.choice((3, 4, 5, 6, 8, 9, 12))
        exps = [rng.randrange(3 * m) for _ in range(rng.randint(1, 10))]
        ours = root_of_unity_sum(m, exps)
        phi = Poly(cyclotomic_poly(m, x), x)
        raw = Poly(sum(x ** (e % m) for e in exps), x)
        reduced = raw.rem(phi)
        coeffs = list(reversed(reduced.all_coeffs()))
        coeffs += [0] * (len(ours.coeffs) - len(coeffs))
        assert list(ours.coeffs) == coeffs


def test_non_integer_rejected():
    with pytest.raises(NonIntegerSum):
        CycInt.zeta_pow(3, 1).as_int()


def test_mixed_conductors_rejected():
    with pytest.raises(Exception):
        CycInt.zeta_pow(3, 1) + CycInt.zeta_pow(4, 1)
