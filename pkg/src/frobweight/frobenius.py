"""Bimodules over a finite ring, generating characters, and the structure
maps they induce.

The character group of the ring carries left and right actions through
(r.chi)(a) = chi(ar) and (chi.r)(a) = chi(ra); a bimodule M is Frobenius when
some character of (M,+) has a kernel containing no nonzero submodule on
either side, which forces M to look like the character bimodule from both
sides at once.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .abelian import (
    AbelianDecomp,
    Character,
    char_eval_exp,
    character_from_index,
    decompose,
    dual_decomp,
    encode_tuple,
    decode_tuple,
)
from .config import DEFAULT_CAPS, Caps
from .errors import (
    AxiomViolation,
    CapExceeded,
    DimensionMismatch,
    NotASubmodule,
    NotFrobenius,
    NotGenerating,
)
from .finring import RingTable


@dataclass(frozen=True)
class Bimodule:
    """An (R,R)-bimodule on carrier elements 0..|M|-1.

    left_act[r][v] is r.v and right_act[r][v] is v.r; both tables are
    verified against the bimodule axioms at construction time.
    """

    ring: RingTable
    ring_decomp: AbelianDecomp
    carrier: AbelianDecomp
    left_act: tuple[tuple[int, ...], ...]
    right_act: tuple[tuple[int, ...], ...]
    name: str

    @property
    def size(self) -> int:
        return self.carrier.size

    def madd(self, a: int, b: int) -> int:
        return self.carrier.add[a][b]


def _verify_bimodule(ring, carrier, left_act, right_act, name, caps: Caps):
    nr, nm = ring.size, carrier.size
    if nr * nr * nm > caps.axiom_triples or nr * nm * nm > caps.axiom_triples:
        raise CapExceeded(f"bimodule {name} too large for exhaustive verification")
    for tbl, what in ((left_act, "left"), (right_act, "right")):
        if len(tbl) != nr or any(len(row) != nm for row in tbl):
            raise AxiomViolation(f"{name}: {what} action table has wrong shape")
    zero, one = carrier.zero, ring.one
    for v in range(nm):
        if left_act[one][v] != v or right_act[one][v] != v:
            raise AxiomViolation(f"{name}: identity does not act as identity on {v}")
    for r in range(nr):
        lr, rr = left_act[r], right_act[r]
        for v in range(nm):
            for w in range(nm):
                s = carrier.add[v][w]
                if lr[s] != carrier.add[lr[v]][lr[w]]:
                    raise AxiomViolation(f"{name}: left action not additive in M")
                if rr[s] != carrier.add[rr[v]][rr[w]]:
                    raise AxiomViolation(f"{name}: right action not additive in M")
    for r in range(nr):
        for s in range(nr):
            rs_add = ring.add[r][s]
            rs_mul = ring.mul[r][s]
            for v in range(nm):
                if left_act[rs_add][v] != carrier.add[left_act[r][v]][left_act[s][v]]:
                    raise AxiomViolation(f"{name}: left action not additive in R")
                if right_act[rs_add][v] != carrier.add[right_act[r][v]][right_act[s][v]]:
                    raise AxiomViolation(f"{name}: right action not additive in R")
                if left_act[rs_mul][v] != left_act[r][left_act[s][v]]:
                    raise AxiomViolation(f"{name}: left action not associative")
                if right_act[rs_mul][v] != right_act[s][right_act[r][v]]:
                    raise AxiomViolation(f"{name}: right action not associative")
                if right_act[s][left_act[r][v]] != left_act[r][right_act[s][v]]:
                    raise AxiomViolation(f"{name}: left and right actions do not commute")


def build_bimodule(
    ring: RingTable,
    carrier: AbelianDecomp,
    left_act,
    right_act,
    name: str,
    ring_decomp: AbelianDecomp | None = None,
    caps: Caps = DEFAULT_CAPS,
) -> Bimodule:
    """Assemble and verify a bimodule from explicit action tables."""
    left_act = tuple(tuple(row) for row in left_act)
    right_act = tuple(tuple(row) for row in right_act)
    _verify_bimodule(ring, carrier, left_act, right_act, name, caps)
    if ring_decomp is None:
        ring_decomp = decompose(ring.add, zero_hint=ring.zero, caps=caps)
    return Bimodule(ring, ring_decomp, carrier, left_act, right_act, name)


_BIMODULE_CACHE: dict = {}


def ring_bimodule(ring: RingTable, caps: Caps = DEFAULT_CAPS) -> Bimodule:
    """The ring as a bimodule over itself."""
    key = ("ring", id(ring))
    if key in _BIMODULE_CACHE:
        return _BIMODULE_CACHE[key]
    dec = decompose(ring.add, zero_hint=ring.zero, caps=caps)
    left = ring.mul
    right = tuple(tuple(ring.mul[v][r] for v in range(ring.size)) for r in range(ring.size))
    bim = build_bimodule(ring, dec, left, right, ring.name, ring_decomp=dec, caps=caps)
    _BIMODULE_CACHE[key] = bim
    return bim


def _char_exps_from_values(value_exps, dec: AbelianDecomp):
    """Exponent tuple of the character whose value on basis j is
    zeta_m^(value_exps[j]); each exponent must be a multiple of m/d_j."""
    m = dec.exponent
    out = []
    for e, d in zip(value_exps, dec.orders):
        step = m // d
        if e % step:
            raise AxiomViolation("function is not a character of the decomposition")
        out.append((e // step) % d)
    return tuple(out)


def rhat_bimodule(ring: RingTable, caps: Caps = DEFAULT_CAPS) -> Bimodule:
    """The character bimodule of the ring.

    Carrier element i is the additive character with exponent digits of i;
    the actions are (r.chi)(a) = chi(ar) and (chi.r)(a) = chi(ra).
    """
    key = ("rhat", id(ring))
    if key in _BIMODULE_CACHE:
        return _BIMODULE_CACHE[key]
    rdec = decompose(ring.add, zero_hint=ring.zero, caps=caps)
    carrier = dual_decomp(rdec)
    m = rdec.exponent
    chars = [character_from_index(rdec, i) for i in range(rdec.size)]
    left_rows, right_rows = [], []
    for r in range(ring.size):
        lrow, rrow = [], []
        for i in range(carrier.size):
            chi = chars[i]
            lexps = _char_exps_from_values(
                [char_eval_exp(chi, ring.mul[b][r], rdec) for b in rdec.basis], rdec
            )
            rexps = _char_exps_from_values(
                [char_eval_exp(chi, ring.mul[r][b], rdec) for b in rdec.basis], rdec
            )
            lrow.append(carrier.index_of_coords(lexps))
            rrow.append(carrier.index_of_coords(rexps))
        left_rows.append(tuple(lrow))
        right_rows.append(tuple(rrow))
    bim = build_bimodule(
        ring,
        carrier,
        tuple(left_rows),
        tuple(right_rows),
        f"{ring.name}^",
        ring_decomp=rdec,
        caps=caps,
    )
    _BIMODULE_CACHE[key] = bim
    return bim


@dataclass(frozen=True)
class GenChar:
    """A generating character of a Frobenius bimodule.

    chi is a character of (M,+); its kernel contains no nonzero left
    submodule and no nonzero right submodule of M.
    """

    chi: Character
    index: int
    conductor: int


def _kernel_test(bim: Bimodule, chi: Character) -> bool:
    car = bim.carrier
    for v in range(car.size):
        if v == car.zero:
            continue
        if all(
            char_eval_exp(chi, bim.left_act[r][v], car) == 0 for r in range(bim.ring.size)
        ):
            return False
        if all(
            char_eval_exp(chi, bim.right_act[r][v], car) == 0 for r in range(bim.ring.size)
        ):
            return False
    return True


def find_generating_characters(bim: Bimodule) -> list[GenChar]:
    """All generating characters of the bimodule; empty iff it is not
    Frobenius.  A carrier with a different additive shape than the ring
    cannot be Frobenius, so it short-circuits to the empty list."""
    if bim.carrier.orders != bim.ring_decomp.orders:
        return []
    out = []
    for i in range(bim.carrier.size):
        chi = character_from_index(bim.carrier, i)
        if _kernel_test(bim, chi):
            out.append(GenChar(chi, i, bim.carrier.exponent))
    return out


def is_frobenius_ring(ring: RingTable) -> bool:
    """Whether the ring, as a bimodule over itself, has a generating character."""
    return bool(find_generating_characters(ring_bimodule(ring)))


def default_generating_character(bim: Bimodule) -> GenChar:
    gcs = find_generating_characters(bim)
    if not gcs:
        raise NotFrobenius(f"{bim.name} has no generating character")
    return gcs[0]


def _transport_to_ring_char(bim: Bimodule, gc: GenChar, v: int, act) -> int:
    """Index of the character a -> chi(act(a, v)) of (R,+)."""
    rdec = bim.ring_decomp
    exps = _char_exps_from_values(
        [char_eval_exp(gc.chi, act(b, v), bim.carrier) for b in rdec.basis], rdec
    )
    return rdec.index_of_coords(exps)


def _transport_to_module_char(bim: Bimodule, gc: GenChar, r: int, act) -> int:
    """Index of the character v -> chi(act(r, v)) of (M,+)."""
    car = bim.carrier
    exps = _char_exps_from_values(
        [char_eval_exp(gc.chi, act(r, b), car) for b in car.basis], car
    )
    return car.index_of_coords(exps)


@dataclass(frozen=True)
class PairingMaps:
    """The four pairing maps induced by a generating character, as index
    tables.  beta_l, beta_r map M^n onto characters of R^n; alpha_l, alpha_r
    map R^n onto characters of M^n.  Character tuples are indexed mixed-radix
    with coordinate 0 least significant."""

    n: int
    beta_l: tuple[int, ...]
    beta_r: tuple[int, ...]
    alpha_l: tuple[int, ...]
    alpha_r: tuple[int, ...]


def pairing_maps(
    bim: Bimodule, gc: GenChar, n: int, verify: bool = True, caps: Caps = DEFAULT_CAPS
) -> PairingMaps:
    ring, car = bim.ring, bim.carrier
    nm, nr = car.size ** n, ring.size ** n
    if nm > caps.universe or nr > caps.universe:
        raise CapExceeded("pairing universe exceeds the cap")

    bl_one = [
        _transport_to_ring_char(bim, gc, v, lambda a, v: bim.left_act[a][v])
        for v in range(car.size)
    ]
    br_one = [
        _transport_to_ring_char(bim, gc, v, lambda a, v: bim.right_act[a][v])
        for v in range(car.size)
    ]
    al_one = [
        _transport_to_module_char(bim, gc, r, lambda r, b: bim.right_act[r][b])
        for r in range(ring.size)
    ]
    ar_one = [
        _transport_to_module_char(bim, gc, r, lambda r, b: bim.left_act[r][b])
        for r in range(ring.size)
    ]

    def extend(table, base, count):
        out = []
        for idx in range(base ** n):
            t = decode_tuple(idx, base, n)
            out.append(encode_tuple(tuple(table[x] for x in t), count))
        return tuple(out)

    beta_l = extend(bl_one, car.size, ring.size)
    beta_r = extend(br_one, car.size, ring.size)
    alpha_l = extend(al_one, ring.size, car.size)
    alpha_r = extend(ar_one, ring.size, car.size)

    if verify:
        for tbl, size, what in (
            (beta_l, nm, "beta_l"),
            (beta_r, nm, "beta_r"),
            (alpha_l, nr, "alpha_l"),
            (alpha_r, nr, "alpha_r"),
        ):
            if len(set(tbl)) != size:
                raise NotGenerating(f"{what} is not a bijection")
        if n <= 2:
            _verify_pairing_compat(bim, gc, n, alpha_l, beta_r)
    return PairingMaps(n, beta_l, beta_r, alpha_l, alpha_r)


def _verify_pairing_compat(bim, gc, n, alpha_l, beta_r):
    """alpha_l(r) evaluated at v equals beta_r(v) evaluated at r."""
    ring, car = bim.ring, bim.carrier
    rdec = bim.ring_decomp
    m = car.exponent
    for ri in range(ring.size ** n):
        rt = decode_tuple(ri, ring.size, n)
        chi_m = [character_from_index(car, x) for x in decode_tuple(alpha_l[ri], car.size, n)]
        for vi in range(car.size ** n):
            vt = decode_tuple(vi, car.size, n)
            lhs = sum(char_eval_exp(c, v, car) for c, v in zip(chi_m, vt)) % m
            chi_r = [
                character_from_index(rdec, x)
                for x in decode_tuple(beta_r[vi], ring.size, n)
            ]
            rhs = sum(char_eval_exp(c, r, rdec) for c, r in zip(chi_r, rt)) % rdec.exponent
            if lhs != rhs:
                raise AxiomViolation("pairing compatibility fails")


@dataclass(frozen=True)
class SigmaTauG:
    """sigma(r): v -> v.r; tau(r) = beta_l^-1 Theta(r) beta_l; and the ring
    automorphism g with r.chi = chi.g(r), satisfying sigma = tau after g."""

    sigma: tuple[tuple[int, ...], ...]
    tau: tuple[tuple[int, ...], ...]
    g: tuple[int, ...]


def sigma_tau_g(bim: Bimodule, gc: GenChar) -> SigmaTauG:
    ring, car = bim.ring, bim.carrier
    rdec = bim.ring_decomp

    sigma = tuple(
        tuple(bim.right_act[r][v] for v in range(car.size)) for r in range(ring.size)
    )

    bl = [
        _transport_to_ring_char(bim, gc, v, lambda a, v: bim.left_act[a][v])
        for v in range(car.size)
    ]
    bl_inv = {c: v for v, c in enumerate(bl)}
    if len(bl_inv) != car.size:
        raise NotGenerating("beta_l is not a bijection; character is not generating")

    def theta_on_char(r, chi_idx):
        chi = character_from_index(rdec, chi_idx)
        exps = _char_exps_from_values(
            [char_eval_exp(chi, ring.mul[r][b], rdec) for b in rdec.basis], rdec
        )
        return rdec.index_of_coords(exps)

    tau = tuple(
        tuple(bl_inv[theta_on_char(r, bl[v])] for v in range(car.size))
        for r in range(ring.size)
    )

    g = []
    for r in range(ring.size):
        target = [
            char_eval_exp(gc.chi, bim.right_act[r][v], car) for v in range(car.size)
        ]
        matches = [
            s
            for s in range(ring.size)
            if all(
                char_eval_exp(gc.chi, bim.left_act[s][v], car) == target[v]
                for v in range(car.size)
            )
        ]
        if len(matches) != 1:
            raise NotGenerating(f"r.chi = chi.s has {len(matches)} solutions at r={r}")
        g.append(matches[0])

    if sorted(g) != list(range(ring.size)):
        raise AxiomViolation("g is not a bijection")
    if g[ring.one] != ring.one:
        raise AxiomViolation("g does not fix the identity")
    for a in range(ring.size):
        for b in range(ring.size):
            if g[ring.add[a][b]] != ring.add[g[a]][g[b]]:
                raise AxiomViolation("g is not additive")
            if g[ring.mul[a][b]] != ring.mul[g[a]][g[b]]:
                raise AxiomViolation("g is not multiplicative")
    for r in range(ring.size):
        if sigma[r] != tau[g[r]]:
            raise AxiomViolation("sigma(r) differs from tau(g(r))")
    return SigmaTauG(sigma, tau, tuple(g))


# ---------------------------------------------------------------- annihilators


def left_annihilator(bim: Bimodule, subset) -> list[int]:
    """Ring elements r with r.v = 0 for every v in the subset."""
    z = bim.carrier.zero
    return [
        r
        for r in range(bim.ring.size)
        if all(bim.left_act[r][v] == z for v in subset)
    ]


def right_annihilator(bim: Bimodule, subset) -> list[int]:
    """Ring elements r with v.r = 0 for every v in the subset."""
    z = bim.carrier.zero
    return [
        r
        for r in range(bim.ring.size)
        if all(bim.right_act[r][v] == z for v in subset)
    ]


def killed_by_left(bim: Bimodule, ring_subset) -> list[int]:
    """Module elements v with r.v = 0 for every r in the ring subset."""
    return [
        v
        for v in range(bim.size)
        if all(bim.left_act[r][v] == bim.carrier.zero for r in ring_subset)
    ]


def killed_by_right(bim: Bimodule, ring_subset) -> list[int]:
    return [
        v
        for v in range(bim.size)
        if all(bim.right_act[r][v] == bim.carrier.zero for r in ring_subset)
    ]


def right_submodules(bim: Bimodule, caps: Caps = DEFAULT_CAPS) -> list[frozenset]:
    """All submodules of M under the right action, as join closure of the
    cyclic ones."""
    cyclic = {frozenset(bim.right_act[r][v] for r in range(bim.ring.size)) for v in range(bim.size)}
    return _join_saturate(cyclic, bim.carrier.add, caps)


def left_submodules(bim: Bimodule, caps: Caps = DEFAULT_CAPS) -> list[frozenset]:
    cyclic = {frozenset(bim.left_act[r][v] for r in range(bim.ring.size)) for v in range(bim.size)}
    return _join_saturate(cyclic, bim.carrier.add, caps)


def left_ideals(ring: RingTable, caps: Caps = DEFAULT_CAPS) -> list[frozenset]:
    cyclic = {
        frozenset(ring.mul[s][r] for s in range(ring.size)) for r in range(ring.size)
    }
    return _join_saturate(cyclic, ring.add, caps)


def _join_saturate(cyclic, add, caps: Caps):
    subs = set(cyclic)
    frontier = list(cyclic)
    while frontier:
        s = frontier.pop()
        for c in cyclic:
            if c <= s:
                continue
            joined = frozenset(add[x][y] for x in s for y in c)
            if joined not in subs:
                if len(subs) >= caps.closure:
                    raise CapExceeded("submodule lattice exceeds the closure cap")
                subs.add(joined)
                frontier.append(joined)
    return sorted(subs, key=lambda s: (len(s), sorted(s)))


def verify_left_submodule(bim: Bimodule, subset):
    s = set(subset)
    if bim.carrier.zero not in s:
        raise NotASubmodule("missing zero")
    for a in s:
        for b in s:
            if bim.carrier.add[a][b] not in s:
                raise NotASubmodule("not additively closed")
    for r in range(bim.ring.size):
        for a in s:
            if bim.left_act[r][a] not in s:
                raise NotASubmodule("not closed under the left action")
    return s


@dataclass(frozen=True)
class AnnihilatorReport:
    ok: bool
    right_submodule_count: int
    left_ideal_count: int
    failures: tuple


def double_annihilator_check(bim: Bimodule, caps: Caps = DEFAULT_CAPS) -> AnnihilatorReport:
    """Verify K = (ann_left K) killed and I = ann_left(killed I) over every
    right submodule K of M and every left ideal I of R."""
    failures = []
    rsubs = right_submodules(bim, caps)
    for K in rsubs:
        I = left_annihilator(bim, K)
        K2 = frozenset(killed_by_left(bim, I))
        if K2 != K:
            failures.append(("right_submodule", tuple(sorted(K)), tuple(sorted(K2))))
    ideals = left_ideals(bim.ring, caps)
    for I in ideals:
        V = killed_by_left(bim, I)
        I2 = frozenset(left_annihilator(bim, V))
        if I2 != I:
            failures.append(("left_ideal", tuple(sorted(I)), tuple(sorted(I2))))
    return AnnihilatorReport(not failures, len(rsubs), len(ideals), tuple(failures))


# ---------------------------------------------------------------- Theta


@dataclass(frozen=True)
class ThetaReport:
    ok: bool
    endo_count: int
    ring_size: int
    injective: bool
    surjective: bool


def theta_check(ring: RingTable, caps: Caps = DEFAULT_CAPS) -> ThetaReport:
    """Compare r -> (chi -> chi.r) against the full endomorphism set of the
    left module R-hat, enumerated from scratch."""
    bim = rhat_bimodule(ring, caps)
    car = bim.carrier
    theta_maps = {
        tuple(bim.right_act[r][v] for v in range(car.size)) for r in range(ring.size)
    }
    injective = len(theta_maps) == ring.size

    # all additive maps determined by basis images of matching order,
    # filtered by left-linearity
    pools = []
    for d in car.orders:
        pool = [t for t in range(car.size) if _order_divides(car, t, d)]
        pools.append(pool)
    count = 1
    for p in pools:
        count *= len(p)
    if count > caps.closure:
        raise CapExceeded("endomorphism sweep exceeds the closure cap")
    endos = set()
    for images in itertools.product(*pools):
        table = []
        for v in range(car.size):
            acc = car.zero
            for c, t in zip(car.coords[v], images):
                acc = car.add[acc][car.smul(c, t)]
            table.append(acc)
        ok = True
        for r in range(ring.size):
            lr = bim.left_act[r]
            for v in range(car.size):
                if table[lr[v]] != lr[table[v]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            endos.add(tuple(table))
    surjective = theta_maps == endos
    return ThetaReport(
        injective and surjective, len(endos), ring.size, injective, surjective
    )


def _order_divides(car: AbelianDecomp, t: int, d: int) -> bool:
    return car.smul(d, t) == car.zero
