"""Finite abelian groups given as Cayley tables, and their characters.

A group on elements 0..size-1 is decomposed into a direct sum of cyclic
groups of orders d_1 | d_2 | ... | d_k.  A character is then just a tuple of
exponents (c_1..c_k) against that basis and evaluates through exponents of
zeta_m, m the group exponent, so sums of character values live in Z[zeta_m].
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .config import DEFAULT_CAPS, Caps
from .cyclotomic import CycInt, root_of_unity_sum
from .errors import AxiomViolation, CapExceeded, NotAbelian, NotASubgroup


def _verify_abelian_table(add, zero_hint=None):
    """Return the identity index after checking the table is a finite
    abelian group; raise NotAbelian with a witness otherwise."""
    n = len(add)
    for row in add:
        if len(row) != n or any(not (0 <= x < n) for x in row):
            raise NotAbelian("table is not square over 0..n-1")
    zero = None
    candidates = [zero_hint] if zero_hint is not None else range(n)
    for z in candidates:
        if z is not None and all(add[z][a] == a for a in range(n)):
            zero = z
            break
    if zero is None:
        for z in range(n):
            if all(add[z][a] == a for a in range(n)):
                zero = z
                break
    if zero is None:
        raise NotAbelian("no identity element")
    for a in range(n):
        for b in range(a, n):
            if add[a][b] != add[b][a]:
                raise NotAbelian(f"not commutative at ({a},{b})")
    for a in range(n):
        if all(add[a][b] != zero for b in range(n)):
            raise NotAbelian(f"element {a} has no inverse")
    for a in range(n):
        for b in range(n):
            ab = add[a][b]
            for c in range(n):
                if add[ab][c] != add[a][add[b][c]]:
                    raise NotAbelian(f"not associative at ({a},{b},{c})")
    return zero


@dataclass(frozen=True)
class AbelianDecomp:
    """A finite abelian group with a fixed cyclic decomposition.

    orders multiply to size; exponent is their lcm.  coords maps each element
    to its exponent tuple against basis, and the map is a verified bijection
    onto the full box prod(range(d) for d in orders).  Output of decompose()
    additionally satisfies the divisibility chain d_1 | d_2 | ... | d_k.
    """

    size: int
    add: tuple[tuple[int, ...], ...]
    zero: int
    basis: tuple[int, ...]
    orders: tuple[int, ...]
    coords: tuple[tuple[int, ...], ...]
    exponent: int
    neg: tuple[int, ...] = field(repr=False, default=())

    def add_elems(self, a: int, b: int) -> int:
        return self.add[a][b]

    def smul(self, k: int, a: int) -> int:
        """k-fold sum of a with itself."""
        if k < 0:
            k = k % self.element_order(a)
        out = self.zero
        for _ in range(k):
            out = self.add[out][a]
        return out

    def element_order(self, a: int) -> int:
        cur, k = a, 1
        while cur != self.zero:
            cur = self.add[cur][a]
            k += 1
        return k

    def element_of_coords(self, cs) -> int:
        out = self.zero
        for c, b in zip(cs, self.basis):
            step = b
            cur = self.zero
            for _ in range(c):
                cur = self.add[cur][step]
            out = self.add[out][cur]
        return out

    def index_of_coords(self, cs) -> int:
        """Mixed-radix index of a coordinate tuple, first coordinate least
        significant.  Used to identify the double dual with the group."""
        idx, stride = 0, 1
        for c, d in zip(cs, self.orders):
            idx += c * stride
            stride *= d
        return idx


def _primary_component(add, zero, orders_of, p):
    return [a for a in range(len(add)) if _is_power(orders_of[a], p)]


def _is_power(n, p):
    while n % p == 0:
        n //= p
    return n == 1


def _coset_order(add, zero, subgroup_set, a):
    cur, k = a, 1
    while cur not in subgroup_set:
        cur = add[cur][a]
        k += 1
    return k


def _span(add, zero, gens):
    out = {zero}
    frontier = [zero]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = add[x][g]
            if y not in out:
                out.add(y)
                frontier.append(y)
    return out


def _p_group_basis(add, zero, elems, p):
    """Greedy basis of a finite abelian p-group (subset of a larger table).

    Repeatedly picks an element of maximal order in the current quotient and
    lifts it to a representative of the same order in the group.
    """
    basis = []
    span = {zero}
    span_list = [zero]
    while len(span) < len(elems):
        best, best_k = None, 1
        for a in elems:
            if a in span:
                continue
            k = _coset_order(add, zero, span, a)
            if k > best_k or (k == best_k and (best is None or a < best)):
                best, best_k = a, k
        # lift: some representative of the coset has group order == coset order
        rep = None
        for s in span_list:
            cand = add[best][s]
            cur, k = cand, 1
            while cur != zero:
                cur = add[cur][cand]
                k += 1
            if k == best_k:
                rep = cand
                break
        if rep is None:
            raise AxiomViolation("greedy basis extraction failed to lift a coset")
        basis.append((rep, best_k))
        span = _span(add, zero, [b for b, _ in basis])
        span_list = sorted(span)
    basis.sort(key=lambda t: (-t[1], t[0]))
    return basis  # [(element, order)] by decreasing order


def decompose(add, zero_hint=None, caps: Caps = DEFAULT_CAPS) -> AbelianDecomp:
    """Invariant-factor decomposition of the abelian group on a Cayley table.

    The coordinate map is rebuilt from the chosen basis and verified to be a
    bijection, so a wrong basis cannot slip through.
    """
    n = len(add)
    if n > caps.ring_size:
        raise CapExceeded(f"group of size {n} exceeds cap {caps.ring_size}")
    add = tuple(tuple(row) for row in add)
    zero = _verify_abelian_table(add, zero_hint)
    neg = tuple(next(b for b in range(n) if add[a][b] == zero) for a in range(n))

    orders_of = {}
    for a in range(n):
        cur, k = a, 1
        while cur != zero:
            cur = add[cur][a]
            k += 1
        orders_of[a] = k

    primes = sorted({p for p in range(2, n + 1) if n % p == 0 and _is_prime(p)})
    per_prime = {}
    for p in primes:
        elems = _primary_component(add, zero, orders_of, p)
        if len(elems) > 1:
            per_prime[p] = _p_group_basis(add, zero, elems, p)

    depth = max((len(b) for b in per_prime.values()), default=0)
    factors = []  # largest invariant factor first
    for t in range(depth):
        elem, order = zero, 1
        for p, pbasis in per_prime.items():
            if t < len(pbasis):
                elem = add[elem][pbasis[t][0]]
                order *= pbasis[t][1]
        factors.append((elem, order))
    factors.reverse()  # ascending, d_1 | d_2 | ... | d_k

    basis = tuple(e for e, _ in factors)
    orders = tuple(d for _, d in factors)
    if _prod(orders) != n:
        raise AxiomViolation("basis orders do not multiply to the group size")

    coords_map = {}
    for cs in itertools.product(*(range(d) for d in orders)):
        e = zero
        for c, b in zip(cs, basis):
            cur = zero
            for _ in range(c):
                cur = add[cur][b]
            e = add[e][cur]
        if e in coords_map:
            raise AxiomViolation("coordinate map is not injective")
        coords_map[e] = cs
    if len(coords_map) != n:
        raise AxiomViolation("coordinate map is not surjective")
    coords = tuple(coords_map[a] for a in range(n))
    exponent = orders[-1] if orders else 1
    if exponent > caps.conductor:
        raise CapExceeded(f"group exponent {exponent} exceeds conductor cap")
    return AbelianDecomp(n, add, zero, basis, orders, coords, exponent, neg)


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _prod(xs):
    out = 1
    for x in xs:
        out *= x
    return out


def power_decomp(dec: AbelianDecomp, n: int, caps: Caps = DEFAULT_CAPS) -> AbelianDecomp:
    """The decomposition of the direct power A^n.

    Element index is mixed radix over n copies (coordinate 0 least
    significant); orders are the n-fold concatenation of dec.orders, so the
    divisibility chain is not reordered here.
    """
    size = dec.size ** n
    if size > caps.universe:
        raise CapExceeded(f"universe of size {size} exceeds cap")
    add_rows = []
    for a in range(size):
        da = decode_tuple(a, dec.size, n)
        row = []
        for b in range(size):
            db = decode_tuple(b, dec.size, n)
            row.append(encode_tuple(tuple(dec.add[x][y] for x, y in zip(da, db)), dec.size))
        add_rows.append(tuple(row))
    add = tuple(add_rows)
    zero = encode_tuple((dec.zero,) * n, dec.size)
    basis = []
    for i in range(n):
        for b in dec.basis:
            t = [dec.zero] * n
            t[i] = b
            basis.append(encode_tuple(tuple(t), dec.size))
    orders = dec.orders * n
    coords = []
    for a in range(size):
        da = decode_tuple(a, dec.size, n)
        cs = []
        for x in da:
            cs.extend(dec.coords[x])
        coords.append(tuple(cs))
    neg = tuple(
        encode_tuple(tuple(dec.neg[x] for x in decode_tuple(a, dec.size, n)), dec.size)
        for a in range(size)
    )
    exponent = dec.exponent
    return AbelianDecomp(size, add, zero, tuple(basis), orders, tuple(coords), exponent, neg)


def encode_tuple(t, base: int) -> int:
    idx, stride = 0, 1
    for x in t:
        idx += x * stride
        stride *= base
    return idx


def decode_tuple(idx: int, base: int, n: int) -> tuple[int, ...]:
    out = []
    for _ in range(n):
        out.append(idx % base)
        idx //= base
    return tuple(out)


@dataclass(frozen=True)
class Character:
    """A character as exponents against the cyclic basis of a decomposition."""

    exps: tuple[int, ...]


def char_count(dec: AbelianDecomp) -> int:
    return dec.size


def all_characters(dec: AbelianDecomp):
    """All characters, in mixed-radix index order (exps[0] least significant)."""
    out = []
    for idx in range(dec.size):
        out.append(character_from_index(dec, idx))
    return out


def character_from_index(dec: AbelianDecomp, idx: int) -> Character:
    exps = []
    for d in dec.orders:
        exps.append(idx % d)
        idx //= d
    return Character(tuple(exps))


def character_index(dec: AbelianDecomp, chi: Character) -> int:
    idx, stride = 0, 1
    for c, d in zip(chi.exps, dec.orders):
        idx += (c % d) * stride
        stride *= d
    return idx


def char_eval_exp(chi: Character, elem: int, dec: AbelianDecomp) -> int:
    """Exponent e with chi(elem) = zeta_m^e, m = dec.exponent."""
    m = dec.exponent
    e = 0
    for c, a, d in zip(chi.exps, dec.coords[elem], dec.orders):
        e += c * a * (m // d)
    return e % m


def char_value(chi: Character, elem: int, dec: AbelianDecomp) -> CycInt:
    return CycInt.zeta_pow(dec.exponent, char_eval_exp(chi, elem, dec))


def char_sum(chi: Character, subset, dec: AbelianDecomp) -> CycInt:
    """Exact sum of chi over a subset of element indices."""
    return root_of_unity_sum(dec.exponent, (char_eval_exp(chi, a, dec) for a in subset))


def char_add(dec: AbelianDecomp, a: Character, b: Character) -> Character:
    return Character(tuple((x + y) % d for x, y, d in zip(a.exps, b.exps, dec.orders)))


def principal_character(dec: AbelianDecomp) -> Character:
    return Character((0,) * len(dec.orders))


def dual_decomp(dec: AbelianDecomp) -> AbelianDecomp:
    """The character group of dec as a decomposition over character indices.

    Same orders as dec; element i is the character with exponent tuple equal
    to the mixed-radix digits of i, so coords is the digit map itself.
    """
    size = dec.size
    orders = dec.orders
    coords = tuple(tuple(character_from_index(dec, i).exps) for i in range(size))
    add_rows = []
    for i in range(size):
        ci = coords[i]
        row = []
        for j in range(size):
            cj = coords[j]
            s = tuple((x + y) % d for x, y, d in zip(ci, cj, orders))
            row.append(_index_of_exps(s, orders))
        add_rows.append(tuple(row))
    basis = []
    for j, d in enumerate(orders):
        e = [0] * len(orders)
        e[j] = 1
        basis.append(_index_of_exps(tuple(e), orders))
    neg = tuple(
        _index_of_exps(tuple((-x) % d for x, d in zip(coords[i], orders)), orders)
        for i in range(size)
    )
    return AbelianDecomp(
        size, tuple(add_rows), 0, tuple(basis), orders, coords, dec.exponent, neg
    )


def _index_of_exps(exps, orders):
    idx, stride = 0, 1
    for c, d in zip(exps, orders):
        idx += (c % d) * stride
        stride *= d
    return idx


def verify_subgroup(subset, dec: AbelianDecomp):
    s = set(subset)
    if dec.zero not in s:
        raise NotASubgroup("missing identity")
    for a in s:
        for b in s:
            if dec.add[a][b] not in s:
                raise NotASubgroup(f"not closed at ({a},{b})")
    return s


def subgroup_annihilator(subset, dec: AbelianDecomp) -> list[int]:
    """Character indices of the annihilator B-circ = {chi : B <= ker chi}."""
    s = verify_subgroup(subset, dec)
    out = []
    for idx in range(dec.size):
        chi = character_from_index(dec, idx)
        if all(char_eval_exp(chi, a, dec) == 0 for a in s):
            out.append(idx)
    return out


def character_annihilator(char_indices, dec: AbelianDecomp) -> list[int]:
    """Element indices annihilated by every character in the given set."""
    chis = [character_from_index(dec, i) for i in char_indices]
    out = []
    for a in range(dec.size):
        if all(char_eval_exp(chi, a, dec) == 0 for chi in chis):
            out.append(a)
    return out


def all_subgroups(dec: AbelianDecomp, caps: Caps = DEFAULT_CAPS) -> list[frozenset]:
    """Every subgroup, as the join closure of the cyclic subgroups."""
    cyclic = set()
    for a in range(dec.size):
        sub = [dec.zero]
        cur = a
        while cur != dec.zero:
            sub.append(cur)
            cur = dec.add[cur][a]
        cyclic.add(frozenset(sub))
    subs = set(cyclic)
    frontier = list(cyclic)
    while frontier:
        s = frontier.pop()
        for c in cyclic:
            if c <= s:
                continue
            joined = frozenset(dec.add[x][y] for x in s for y in c)
            if joined not in subs:
                if len(subs) >= caps.closure:
                    raise CapExceeded("subgroup lattice exceeds closure cap")
                subs.add(joined)
                frontier.append(joined)
    return sorted(subs, key=lambda s: (len(s), sorted(s)))
