"""Weight functions on module alphabets: Hamming, Rosenbloom-Tsfasman,
homogeneous (by character formula and by axioms), symmetrized weight
composition, submodule-membership count, and support.

All values are exact: integers, Fractions, count vectors, or index sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .abelian import char_eval_exp
from .config import DEFAULT_CAPS, Caps
from .cyclotomic import root_of_unity_sum
from .errors import (
    AxiomViolation,
    CapExceeded,
    NotAGroup,
    NotASubmodule,
    SingularSystem,
)
from .finring import RingTable
from .frobenius import Bimodule, GenChar


# ------------------------------------------------------------ left modules


@dataclass(frozen=True)
class LeftModule:
    """A finite left module over a ring, as dense tables.

    add[v][w] and act[r][v] index module elements; zero is the additive
    identity.  Verified on construction."""

    ring: RingTable
    size: int
    add: tuple[tuple[int, ...], ...]
    zero: int
    act: tuple[tuple[int, ...], ...]
    name: str = "M"


def _verify_left_module(mod: LeftModule, caps: Caps):
    ring, n = mod.ring, mod.size
    if ring.size * n * max(n, ring.size) > caps.axiom_triples:
        raise CapExceeded("left module too large for exhaustive verification")
    add, act, zero = mod.add, mod.act, mod.zero
    for v in range(n):
        if add[zero][v] != v or act[ring.one][v] != v:
            raise AxiomViolation("module identity fails")
        if act[ring.zero][v] != zero:
            raise AxiomViolation("zero scalar must annihilate")
    for r in range(ring.size):
        for v in range(n):
            for w in range(n):
                if act[r][add[v][w]] != add[act[r][v]][act[r][w]]:
                    raise AxiomViolation("scalar action is not additive")
            for s in range(ring.size):
                if act[r][act[s][v]] != act[ring.mul[r][s]][v]:
                    raise AxiomViolation("scalar action is not associative")
                if add[act[r][v]][act[s][v]] != act[ring.add[r][s]][v]:
                    raise AxiomViolation("scalar action is not distributive")


def left_module(ring: RingTable, add, zero: int, act, name: str = "M",
                caps: Caps = DEFAULT_CAPS) -> LeftModule:
    mod = LeftModule(ring, len(add), tuple(map(tuple, add)), zero,
                     tuple(map(tuple, act)), name)
    _verify_left_module(mod, caps)
    return mod


def module_of_bimodule(bim: Bimodule) -> LeftModule:
    """Forget the right action."""
    car = bim.carrier
    return LeftModule(bim.ring, car.size, car.add, car.zero, bim.left_act,
                      bim.name)


def free_left_module(ring: RingTable, n: int, caps: Caps = DEFAULT_CAPS) -> LeftModule:
    """R^n with componentwise addition and scalar action, elements encoded
    little-endian base |R|."""
    size = ring.size ** n
    if size > caps.universe:
        raise CapExceeded("free module too large")

    def dec(x):
        out = []
        for _ in range(n):
            out.append(x % ring.size)
            x //= ring.size
        return out

    def enc(t):
        x = 0
        for c in reversed(t):
            x = x * ring.size + c
        return x

    add = [[enc([ring.add[a][b] for a, b in zip(dec(v), dec(w))])
            for w in range(size)] for v in range(size)]
    act = [[enc([ring.mul[r][a] for a in dec(v)]) for v in range(size)]
           for r in range(ring.size)]
    mod = LeftModule(ring, size, tuple(map(tuple, add)), 0,
                     tuple(map(tuple, act)), f"{ring.name}^{n}")
    _verify_left_module(mod, caps)
    return mod


# --------------------------------------------------------- simple weights


def wt_hamming(v, zero: int = 0) -> int:
    return sum(1 for c in v if c != zero)


def wt_rt(v, zero: int = 0) -> int:
    """Position of the last nonzero coordinate, 1-based; 0 for the zero
    vector."""
    last = 0
    for i, c in enumerate(v, start=1):
        if c != zero:
            last = i
    return last


def support(v, zero: int = 0) -> frozenset:
    """1-based indices of the nonzero coordinates."""
    return frozenset(i for i, c in enumerate(v, start=1) if c != zero)


def additive_lift(table, v) -> Fraction:
    """Coordinatewise sum of a single-letter weight table."""
    return sum((table[c] for c in v), start=Fraction(0))


# ----------------------------------------------------- homogeneous weight


def homog_formula(bim: Bimodule, gc: GenChar, v: int) -> Fraction:
    """1 - (1/|R*|) * sum of chi(v.alpha) over the units alpha."""
    car = bim.carrier
    m = car.exponent
    exps = [char_eval_exp(gc.chi, bim.right_act[a][v], car) for a in bim.ring.units]
    s = root_of_unity_sum(m, exps).as_int()
    return 1 - Fraction(s, len(bim.ring.units))


def homog_formula_left(bim: Bimodule, gc: GenChar, v: int) -> Fraction:
    """Same weight via the left-action form of the unit sum."""
    car = bim.carrier
    m = car.exponent
    exps = [char_eval_exp(gc.chi, bim.left_act[a][v], car) for a in bim.ring.units]
    s = root_of_unity_sum(m, exps).as_int()
    return 1 - Fraction(s, len(bim.ring.units))


def homog_weight_table(bim: Bimodule, gc: GenChar) -> tuple[Fraction, ...]:
    return tuple(homog_formula(bim, gc, v) for v in range(bim.carrier.size))


def cyclic_submodule(mod: LeftModule, v: int) -> frozenset:
    return frozenset(mod.act[r][v] for r in range(mod.ring.size))


def homog_axioms_solve(mod: LeftModule) -> tuple[Fraction, ...]:
    """Solve the two homogeneous-weight axioms over the rationals.

    Unknowns are one per cyclic submodule (the weight is constant on the
    generators of each); back-substitution runs over submodules in
    increasing size.  The solved table is re-checked against both axioms.
    """
    n = mod.size
    gen_of = [cyclic_submodule(mod, v) for v in range(n)]
    subs = sorted(set(gen_of), key=lambda s: (len(s), sorted(s)))
    value: dict[frozenset, Fraction] = {}
    for sub in subs:
        if sub == frozenset({mod.zero}):
            value[sub] = Fraction(0)
            continue
        # split the submodule by the cyclic submodule each element generates
        counts: dict[frozenset, int] = {}
        for w in sub:
            counts[gen_of[w]] = counts.get(gen_of[w], 0) + 1
        n_top = counts.pop(sub, 0)
        if n_top == 0:
            raise SingularSystem("cyclic submodule without generators")
        rest = sum(value[d] * c for d, c in counts.items())
        value[sub] = (len(sub) - rest) / n_top
    table = tuple(value[gen_of[v]] for v in range(n))
    # re-check axiom (ii) on every nonzero element
    for v in range(n):
        if v == mod.zero:
            continue
        total = sum((table[w] for w in gen_of[v]), start=Fraction(0))
        if total != len(gen_of[v]):
            raise SingularSystem("solved table violates the sum axiom")
    return table


# --------------------------------------------- symmetrized weight and wt_N


def verify_unit_group(ring: RingTable, g) -> tuple[int, ...]:
    gset = set(g)
    if not gset or ring.one not in gset:
        raise NotAGroup("unit subgroup must contain 1")
    for a in gset:
        if a not in ring.units:
            raise NotAGroup("element is not a unit")
        for b in gset:
            if ring.mul[a][b] not in gset:
                raise NotAGroup("set is not closed under multiplication")
    return tuple(sorted(gset))


def unit_orbit_reps(bim: Bimodule, g) -> tuple[tuple[int, ...], dict]:
    """Orbits of the alphabet under v -> v.u for u in the subgroup; the
    representative of each orbit is its least element index."""
    g = verify_unit_group(bim.ring, g)
    rep: dict[int, int] = {}
    for v in range(bim.carrier.size):
        if v in rep:
            continue
        orbit = {bim.right_act[u][v] for u in g}
        r = min(orbit)
        for w in orbit:
            rep[w] = r
    reps = tuple(sorted(set(rep.values())))
    return reps, rep


def swc(bim: Bimodule, g, v) -> tuple[int, ...]:
    """Per-orbit coordinate census of v, ordered by orbit representative."""
    reps, rep = unit_orbit_reps(bim, g)
    pos = {r: i for i, r in enumerate(reps)}
    out = [0] * len(reps)
    for c in v:
        out[pos[rep[c]]] += 1
    return tuple(out)


def verify_submodule(mod: LeftModule, elems) -> frozenset:
    sub = frozenset(elems)
    if mod.zero not in sub:
        raise NotASubmodule("submodule must contain 0")
    for a in sub:
        for b in sub:
            if mod.add[a][b] not in sub:
                raise NotASubmodule("not closed under addition")
        for r in range(mod.ring.size):
            if mod.act[r][a] not in sub:
                raise NotASubmodule("not closed under scalar action")
    return sub


def wt_n(mod: LeftModule, n_elems, v) -> int:
    """Number of coordinates lying in the given left submodule."""
    sub = verify_submodule(mod, n_elems)
    return sum(1 for c in v if c in sub)
