"""Finite rings with identity, realized as dense index Cayley tables.

Elements are 0..size-1; add and mul are full tables; zero is always index 0.
Construction recipes: Z_N, Galois fields from an irreducible polynomial,
quotients of polynomial rings by monomial relations, finite products, and
matrix rings over any of those.  Every table built here is run through an
axiom verifier before it is returned.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field

from .config import DEFAULT_CAPS, Caps
from .errors import AxiomViolation, CapExceeded, DimensionMismatch, NotIrreducible


@dataclass(frozen=True)
class RingSpec:
    """A constructor recipe for a finite ring; serializable to JSON."""

    kind: str
    n: int = 0
    p: int = 0
    poly: tuple[int, ...] = ()
    chars: int = 0
    gens: tuple[str, ...] = ()
    relations: tuple[str, ...] = ()
    factors: tuple["RingSpec", ...] = ()
    base: "RingSpec | None" = None
    k: int = 0

    @staticmethod
    def from_json(data) -> "RingSpec":
        if isinstance(data, str):
            data = json.loads(data)
        kind = data.get("kind")
        if kind == "zn":
            return RingSpec(kind="zn", n=int(data["n"]))
        if kind == "gf":
            return RingSpec(kind="gf", p=int(data["p"]), poly=tuple(int(c) for c in data["poly"]))
        if kind == "quotient":
            return RingSpec(
                kind="quotient",
                chars=int(data["chars"]),
                gens=tuple(data["gens"]),
                relations=tuple(data["relations"]),
            )
        if kind == "product":
            return RingSpec(
                kind="product", factors=tuple(RingSpec.from_json(f) for f in data["factors"])
            )
        if kind == "matrix":
            return RingSpec(kind="matrix", base=RingSpec.from_json(data["base"]), k=int(data["k"]))
        raise DimensionMismatch(f"unknown ring spec kind {kind!r}")

    def to_json(self) -> dict:
        if self.kind == "zn":
            return {"kind": "zn", "n": self.n}
        if self.kind == "gf":
            return {"kind": "gf", "p": self.p, "poly": list(self.poly)}
        if self.kind == "quotient":
            return {
                "kind": "quotient",
                "chars": self.chars,
                "gens": list(self.gens),
                "relations": list(self.relations),
            }
        if self.kind == "product":
            return {"kind": "product", "factors": [f.to_json() for f in self.factors]}
        if self.kind == "matrix":
            return {"kind": "matrix", "base": self.base.to_json(), "k": self.k}
        raise DimensionMismatch(f"unknown ring spec kind {self.kind!r}")


@dataclass(frozen=True)
class RingTable:
    """A finite ring as dense operation tables over 0..size-1."""

    size: int
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    zero: int
    one: int
    neg: tuple[int, ...]
    units: tuple[int, ...]
    name: str
    elem_names: tuple[str, ...] = field(repr=False, default=())

    def unit_inverse(self, u: int) -> int:
        for v in self.units:
            if self.mul[u][v] == self.one and self.mul[v][u] == self.one:
                return v
        raise AxiomViolation(f"{u} is not a unit")

    def index_of_name(self, label: str) -> int:
        if label in self.elem_names:
            return self.elem_names.index(label)
        raise DimensionMismatch(f"no element named {label!r} in {self.name}")


def _verify_ring_tables(size, add, mul, zero, one, name, caps: Caps):
    for tbl, what in ((add, "add"), (mul, "mul")):
        if len(tbl) != size or any(len(r) != size for r in tbl):
            raise AxiomViolation(f"{name}: {what} table is not {size}x{size}")
        for r in tbl:
            for x in r:
                if not (0 <= x < size):
                    raise AxiomViolation(f"{name}: {what} entry out of range")
    for a in range(size):
        for b in range(size):
            if add[a][b] != add[b][a]:
                raise AxiomViolation(f"{name}: addition not commutative at ({a},{b})")
        if add[zero][a] != a:
            raise AxiomViolation(f"{name}: zero is not an additive identity")
        if mul[one][a] != a or mul[a][one] != a:
            raise AxiomViolation(f"{name}: one is not a multiplicative identity")
        if all(add[a][b] != zero for b in range(size)):
            raise AxiomViolation(f"{name}: element {a} has no negative")

    def check_triple(a, b, c):
        if add[add[a][b]][c] != add[a][add[b][c]]:
            raise AxiomViolation(f"{name}: addition not associative at ({a},{b},{c})")
        if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
            raise AxiomViolation(f"{name}: multiplication not associative at ({a},{b},{c})")
        if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
            raise AxiomViolation(f"{name}: left distributivity fails at ({a},{b},{c})")
        if mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]]:
            raise AxiomViolation(f"{name}: right distributivity fails at ({a},{b},{c})")

    if size ** 3 <= caps.axiom_triples:
        for a in range(size):
            for b in range(size):
                for c in range(size):
                    check_triple(a, b, c)
    else:
        rng = random.Random(0)
        for _ in range(caps.sample_triples):
            check_triple(rng.randrange(size), rng.randrange(size), rng.randrange(size))


def _finish_ring(size, add, mul, zero, one, name, elem_names, caps: Caps) -> RingTable:
    if size > caps.ring_size:
        raise CapExceeded(f"ring {name} of size {size} exceeds cap {caps.ring_size}")
    add = tuple(tuple(r) for r in add)
    mul = tuple(tuple(r) for r in mul)
    _verify_ring_tables(size, add, mul, zero, one, name, caps)
    neg = tuple(next(b for b in range(size) if add[a][b] == zero) for a in range(size))
    units = []
    for a in range(size):
        for b in range(size):
            if mul[a][b] == one and mul[b][a] == one:
                units.append(a)
                break
    return RingTable(
        size, add, mul, zero, one, neg, tuple(units), name, tuple(elem_names)
    )


# ---------------------------------------------------------------- Z_N


def _build_zn(n: int, caps: Caps) -> RingTable:
    if n < 2:
        raise DimensionMismatch("zn requires modulus >= 2")
    add = [[(a + b) % n for b in range(n)] for a in range(n)]
    mul = [[(a * b) % n for b in range(n)] for a in range(n)]
    return _finish_ring(n, add, mul, 0, 1, f"Z{n}", [str(a) for a in range(n)], caps)


# ---------------------------------------------------------------- GF(p^d)


def _poly_mod_p(coeffs, p):
    out = [c % p for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return out


def _poly_mul_p(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_mod_p(out, p)


def _poly_rem_p(a, d, p):
    """Remainder of a modulo d over Z_p; d need not be monic (p prime)."""
    a = _poly_mod_p(a, p)
    d = _poly_mod_p(d, p)
    inv_lead = pow(d[-1], -1, p)
    while len(a) >= len(d):
        shift = len(a) - len(d)
        factor = (a[-1] * inv_lead) % p
        for i, di in enumerate(d):
            a[shift + i] = (a[shift + i] - factor * di) % p
        a = _poly_mod_p(a, p)
        if not a:
            break
    return a


def _is_irreducible(poly, p):
    d = len(poly) - 1
    for deg in range(1, d // 2 + 1):
        for tail in itertools.product(range(p), repeat=deg):
            trial = list(tail) + [1]
            if not _poly_rem_p(poly, trial, p):
                return False
    return True


def _build_gf(p: int, poly, caps: Caps) -> RingTable:
    if not _is_prime(p):
        raise DimensionMismatch(f"gf requires a prime characteristic, got {p}")
    poly = [c % p for c in poly]
    if len(poly) < 2 or poly[-1] != 1:
        raise DimensionMismatch("gf modulus must be monic of degree >= 1")
    d = len(poly) - 1
    if not _is_irreducible(poly, p):
        raise NotIrreducible(f"polynomial {poly} factors over Z_{p}")
    size = p ** d
    elems = [_digits(i, p, d) for i in range(size)]
    add = [
        [_undigits([(x + y) % p for x, y in zip(a, b)], p) for b in elems] for a in elems
    ]
    mul_rows = []
    for a in elems:
        row = []
        for b in elems:
            r = _poly_rem_p(_poly_mul_p(list(a), list(b), p), poly, p)
            r = list(r) + [0] * (d - len(r))
            row.append(_undigits(r, p))
        mul_rows.append(row)
    names = [_poly_name(e, "a") for e in elems]
    return _finish_ring(size, add, mul_rows, 0, 1, f"F{size}", names, caps)


def _digits(i, base, width):
    out = []
    for _ in range(width):
        out.append(i % base)
        i //= base
    return tuple(out)


def _undigits(ds, base):
    idx, stride = 0, 1
    for x in ds:
        idx += x * stride
        stride *= base
    return idx


def _poly_name(coeffs, var):
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            v = var if i == 1 else f"{var}^{i}"
            terms.append(v if c == 1 else f"{c}{v}")
    return "+".join(terms) if terms else "0"


def _is_prime(p):
    if p < 2:
        return False
    q = 2
    while q * q <= p:
        if p % q == 0:
            return False
        q += 1
    return True


# ------------------------------------------- monomial quotient presentations


def _parse_monomial(text, gens):
    exps = [0] * len(gens)
    for tok in text.replace(" ", "").split("*"):
        if "^" in tok:
            name, power = tok.split("^")
            power = int(power)
        else:
            name, power = tok, 1
        if name not in gens:
            raise DimensionMismatch(f"unknown generator {name!r} in relation {text!r}")
        exps[gens.index(name)] += power
    return tuple(exps)


def _is_dead(mono, dead_monos):
    return any(all(m >= r for m, r in zip(mono, rel)) for rel in dead_monos)


def _build_quotient(chars, gens, relations, caps: Caps) -> RingTable:
    if chars < 2:
        raise DimensionMismatch("coefficient characteristic must be >= 2")
    if not (1 <= len(gens) <= 3):
        raise DimensionMismatch("quotient presentations support 1..3 generators")
    rels = [_parse_monomial(r, list(gens)) for r in relations]
    if any(sum(r) == 0 for r in rels):
        raise DimensionMismatch("a relation cannot kill the monomial 1")

    # all monomials not divisible by a relation monomial, found by BFS from 1
    unit_mono = (0,) * len(gens)
    basis = {unit_mono}
    frontier = [unit_mono]
    max_basis = 1
    while chars ** (max_basis + 1) <= caps.ring_size:
        max_basis += 1
    while frontier:
        m = frontier.pop()
        for i in range(len(gens)):
            nxt = tuple(e + (1 if j == i else 0) for j, e in enumerate(m))
            if nxt in basis or _is_dead(nxt, rels):
                continue
            if len(basis) >= max_basis:
                raise CapExceeded("monomial basis exceeds the ring size cap")
            basis.add(nxt)
            frontier.append(nxt)
    basis = sorted(basis, key=lambda m: (sum(m), m))
    bidx = {m: i for i, m in enumerate(basis)}

    # product of two basis monomials: a basis index, or None if it vanishes
    mono_prod = [
        [
            None
            if _is_dead(tuple(x + y for x, y in zip(a, b)), rels)
            else bidx[tuple(x + y for x, y in zip(a, b))]
            for b in basis
        ]
        for a in basis
    ]
    nb = len(basis)
    size = chars ** nb
    coeff_vecs = [_digits(i, chars, nb) for i in range(size)]
    add = [
        [
            _undigits([(x + y) % chars for x, y in zip(a, b)], chars)
            for b in coeff_vecs
        ]
        for a in coeff_vecs
    ]
    mul_rows = []
    for a in coeff_vecs:
        row = []
        for b in coeff_vecs:
            acc = [0] * nb
            for i, ai in enumerate(a):
                if ai == 0:
                    continue
                for j, bj in enumerate(b):
                    if bj == 0:
                        continue
                    t = mono_prod[i][j]
                    if t is not None:
                        acc[t] = (acc[t] + ai * bj) % chars
            row.append(_undigits(acc, chars))
        mul_rows.append(row)
    gens_str = ",".join(gens)
    rel_str = ",".join(relations)
    names = [_quotient_name(v, basis, gens) for v in coeff_vecs]
    return _finish_ring(
        size, add, mul_rows, 0, 1, f"Z{chars}[{gens_str}]/({rel_str})", names, caps
    )


def _mono_name(mono, gens):
    parts = []
    for g, e in zip(gens, mono):
        if e == 1:
            parts.append(g)
        elif e > 1:
            parts.append(f"{g}^{e}")
    return "*".join(parts) if parts else "1"


def _quotient_name(coeffs, basis, gens):
    terms = []
    for c, mono in zip(coeffs, basis):
        if c == 0:
            continue
        mn = _mono_name(mono, gens)
        if mn == "1":
            terms.append(str(c))
        elif c == 1:
            terms.append(mn)
        else:
            terms.append(f"{c}{mn}")
    return "+".join(terms) if terms else "0"


# ---------------------------------------------------------------- products


def _build_product(factors, caps: Caps) -> RingTable:
    if not factors:
        raise DimensionMismatch("product of no rings")
    size = 1
    for f in factors:
        size *= f.size
    if size > caps.ring_size:
        raise CapExceeded("product ring exceeds the size cap")
    sizes = [f.size for f in factors]

    def dec(i):
        out = []
        for s in sizes:
            out.append(i % s)
            i //= s
        return out

    def enc(t):
        idx, stride = 0, 1
        for x, s in zip(t, sizes):
            idx += x * stride
            stride *= s
        return idx

    add = []
    mul = []
    for a in range(size):
        da = dec(a)
        arow, mrow = [], []
        for b in range(size):
            db = dec(b)
            arow.append(enc([f.add[x][y] for f, x, y in zip(factors, da, db)]))
            mrow.append(enc([f.mul[x][y] for f, x, y in zip(factors, da, db)]))
        add.append(arow)
        mul.append(mrow)
    one = enc([f.one for f in factors])
    names = [
        "(" + ",".join(f.elem_names[x] for f, x in zip(factors, dec(a))) + ")"
        for a in range(size)
    ]
    name = "x".join(f.name for f in factors)
    return _finish_ring(size, add, mul, 0, one, name, names, caps)


# ---------------------------------------------------------------- matrix rings


def _build_matrix_ring(base: RingTable, k: int, caps: Caps) -> RingTable:
    if k < 1:
        raise DimensionMismatch("matrix ring needs k >= 1")
    size = base.size ** (k * k)
    if size > caps.ring_size:
        raise CapExceeded(f"matrix ring M_{k}({base.name}) exceeds the size cap")
    nn = k * k
    entries = [_digits(i, base.size, nn) for i in range(size)]

    def enc(es):
        return _undigits(es, base.size)

    add = [
        [enc([base.add[x][y] for x, y in zip(a, b)]) for b in entries] for a in entries
    ]
    mul_rows = []
    for a in entries:
        row = []
        for b in entries:
            out = []
            for i in range(k):
                for j in range(k):
                    acc = base.zero
                    for t in range(k):
                        acc = base.add[acc][base.mul[a[i * k + t]][b[t * k + j]]]
                    out.append(acc)
            row.append(enc(out))
        mul_rows.append(row)
    one_entries = [base.one if i == j else base.zero for i in range(k) for j in range(k)]
    names = [
        "[" + ";".join(
            ",".join(base.elem_names[a[i * k + j]] for j in range(k)) for i in range(k)
        ) + "]"
        for a in entries
    ]
    return _finish_ring(
        size, add, mul_rows, 0, enc(one_entries), f"M{k}({base.name})", names, caps
    )


_RING_CACHE: dict = {}


def build_ring(spec: RingSpec, caps: Caps = DEFAULT_CAPS) -> RingTable:
    """Build (and verify) the ring described by a RingSpec."""
    key = (spec, caps)
    if key in _RING_CACHE:
        return _RING_CACHE[key]
    if spec.kind == "zn":
        ring = _build_zn(spec.n, caps)
    elif spec.kind == "gf":
        ring = _build_gf(spec.p, list(spec.poly), caps)
    elif spec.kind == "quotient":
        ring = _build_quotient(spec.chars, list(spec.gens), list(spec.relations), caps)
    elif spec.kind == "product":
        ring = _build_product([build_ring(f, caps) for f in spec.factors], caps)
    elif spec.kind == "matrix":
        ring = _build_matrix_ring(build_ring(spec.base, caps), spec.k, caps)
    else:
        raise DimensionMismatch(f"unknown ring spec kind {spec.kind!r}")
    _RING_CACHE[key] = ring
    return ring
