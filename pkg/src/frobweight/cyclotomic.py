"""Exact arithmetic in rings of cyclotomic integers Z[zeta_m].

Elements are residues of integer polynomials modulo the m-th cyclotomic
polynomial, stored as coefficient tuples of length deg(Phi_m).  Equality of
reduced coefficient vectors is equality in Z[zeta_m], so character sums can be
compared exactly with no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .config import DEFAULT_CAPS, Caps
from .errors import CapExceeded, DimensionMismatch


def _trim(coeffs: list[int]) -> list[int]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def poly_mul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim(out)


def poly_divmod_monic(a: list[int], d: list[int]) -> tuple[list[int], list[int]]:
    """Divide a by a monic divisor d over the integers."""
    if not d or d[-1] != 1:
        raise DimensionMismatch("divisor must be monic")
    rem = list(a)
    deg_d = len(d) - 1
    quot = [0] * max(len(rem) - deg_d, 0)
    while len(_trim(rem)) - 1 >= deg_d and rem:
        rem = _trim(rem)
        if len(rem) - 1 < deg_d:
            break
        shift = len(rem) - 1 - deg_d
        lead = rem[-1]
        quot[shift] += lead
        for i, di in enumerate(d):
            rem[shift + i] -= lead * di
    return _trim(quot), _trim(rem)


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int, cap: int = DEFAULT_CAPS.conductor) -> tuple[int, ...]:
    """Coefficients of Phi_m, little endian, computed by recursive division.

    Phi_m = (x^m - 1) / prod of Phi_d over proper divisors d of m.
    """
    if m < 1:
        raise DimensionMismatch(f"conductor must be positive, got {m}")
    if m > cap:
        raise CapExceeded(f"conductor {m} exceeds cap {cap}")
    num = [0] * m + [1]
    num[0] = -1
    den = [1]
    for d in range(1, m):
        if m % d == 0:
            den = poly_mul(den, list(cyclotomic_poly(d, cap)))
    quot, rem = poly_divmod_monic(num, den)
    if rem:
        raise AssertionError(f"cyclotomic division left a remainder at m={m}")
    return tuple(quot)


@lru_cache(maxsize=None)
def _zeta_power_table(m: int) -> tuple[tuple[int, ...], ...]:
    """Reduced coefficient vectors of x^e mod Phi_m for e = 0..m-1."""
    phi = list(cyclotomic_poly(m))
    deg = len(phi) - 1
    rows = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(m):
        rows.append(tuple(cur))
        # multiply by x, then reduce once by the monic modulus
        cur = [0] + cur
        if len(cur) > deg:
            lead = cur.pop()
            if lead:
                for i in range(deg):
                    cur[i] -= lead * phi[i]
    return tuple(rows)


@dataclass(frozen=True)
class CycInt:
    """An element of Z[zeta_m], reduced mod Phi_m."""

    m: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        deg = len(cyclotomic_poly(self.m)) - 1
        if len(self.coeffs) != deg:
            raise DimensionMismatch(
                f"expected {deg} coefficients for conductor {self.m}, got {len(self.coeffs)}"
            )

    @staticmethod
    def zero(m: int) -> "CycInt":
        deg = len(cyclotomic_poly(m)) - 1
        return CycInt(m, (0,) * deg)

    @staticmethod
    def from_int(m: int, value: int) -> "CycInt":
        deg = len(cyclotomic_poly(m)) - 1
        return CycInt(m, (value,) + (0,) * (deg - 1))

    @staticmethod
    def zeta_pow(m: int, e: int) -> "CycInt":
        """zeta_m^e as a reduced element."""
        return CycInt(m, _zeta_power_table(m)[e % m])

    def _check(self, other: "CycInt"):
        if self.m != other.m:
            raise DimensionMismatch(f"mixed conductors {self.m} and {other.m}")

    def __add__(self, other: "CycInt") -> "CycInt":
        self._check(other)
        return CycInt(self.m, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "CycInt") -> "CycInt":
        self._check(other)
        return CycInt(self.m, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "CycInt":
        return CycInt(self.m, tuple(-a for a in self.coeffs))

    def __mul__(self, other: "CycInt") -> "CycInt":
        self._check(other)
        prod = poly_mul(list(self.coeffs), list(other.coeffs))
        _, rem = poly_divmod_monic(prod, list(cyclotomic_poly(self.m)))
        deg = len(self.coeffs)
        rem = rem + [0] * (deg - len(rem))
        return CycInt(self.m, tuple(rem))

    def scale(self, k: int) -> "CycInt":
        return CycInt(self.m, tuple(k * a for a in self.coeffs))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coeffs)

    def is_integer(self) -> bool:
        return all(a == 0 for a in self.coeffs[1:])

    def as_int(self) -> int:
        """The value as a rational integer; raises if it is not one."""
        from .errors import NonIntegerSum

        if not self.is_integer():
            raise NonIntegerSum(f"{self} is not a rational integer")
        return self.coeffs[0]

    def to_json(self) -> dict:
        return {"m": self.m, "coeffs": list(self.coeffs)}


def root_of_unity_sum(m: int, exponents) -> CycInt:
    """Sum of zeta_m^e over the given exponents, reduced exactly."""
    table = _zeta_power_table(m)
    deg = len(table[0])
    acc = [0] * deg
    for e in exponents:
        row = table[e % m]
        for i in range(deg):
            acc[i] += row[i]
    return CycInt(m, tuple(acc))
