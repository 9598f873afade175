"""Partitions of finite tuple universes, their character-sum duals, and orbit
partitions of matrix group actions.

A partition of a universe 0..N-1 is stored as a canonical block-id vector.
Duality groups points of the opposite universe by exact vectors of block
character sums computed in Z[zeta_m], so two points land in the same dual
block iff the corresponding sums agree exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .abelian import (
    AbelianDecomp,
    character_from_index,
    char_eval_exp,
    decode_tuple,
    dual_decomp,
    encode_tuple,
)
from .config import DEFAULT_CAPS, Caps
from .cyclotomic import _zeta_power_table
from .errors import CapExceeded, DimensionMismatch, UniverseMismatch
from .frobenius import Bimodule, GenChar, ring_bimodule
from .matrices import MatrixR, group_closure, is_invertible


@dataclass(frozen=True)
class Partition:
    """A set partition of 0..universe-1 as a canonical block-id vector.

    Block ids are assigned by first occurrence, so two partitions are equal
    as dataclasses iff they are equal as set partitions."""

    universe: int
    block_of: tuple[int, ...]

    @property
    def block_count(self) -> int:
        return max(self.block_of) + 1 if self.block_of else 0

    @staticmethod
    def from_labels(labels) -> "Partition":
        labels = list(labels)
        ids: dict = {}
        out = []
        for lab in labels:
            if lab not in ids:
                ids[lab] = len(ids)
            out.append(ids[lab])
        return Partition(len(labels), tuple(out))

    @staticmethod
    def singletons(universe: int) -> "Partition":
        return Partition(universe, tuple(range(universe)))

    @staticmethod
    def one_block(universe: int) -> "Partition":
        return Partition(universe, (0,) * universe)

    def blocks(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.block_count)]
        for x, b in enumerate(self.block_of):
            out[b].append(x)
        return tuple(tuple(b) for b in out)

    def refines(self, other: "Partition") -> bool:
        """True when every block of self lies inside a block of other."""
        if self.universe != other.universe:
            raise UniverseMismatch("partitions live on different universes")
        image: dict[int, int] = {}
        for x in range(self.universe):
            mine, theirs = self.block_of[x], other.block_of[x]
            if mine in image and image[mine] != theirs:
                return False
            image[mine] = theirs
        return True


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def _reduce_counts(counts, zeta_rows) -> tuple[int, ...]:
    """Exact coefficients of sum(counts[e] * zeta^e)."""
    deg = len(zeta_rows[0])
    out = [0] * deg
    for e, c in enumerate(counts):
        if c:
            row = zeta_rows[e]
            for i in range(deg):
                out[i] += c * row[i]
    return tuple(out)


def dual_partition(p: Partition, dec: AbelianDecomp) -> Partition:
    """The dual partition on the characters of the group.

    Characters are indexed mixed-radix by their exponent tuples; two
    characters are identified iff all their block sums agree in Z[zeta_m].
    """
    if p.universe != dec.size:
        raise UniverseMismatch("partition does not match the group size")
    m = dec.exponent
    zeta_rows = _zeta_power_table(m)
    blocks = p.blocks()
    # weight vector of each element: coords[j] * (m / d_j), so a character
    # with exponents c evaluates to sum(c_j * w_j) mod m
    weights = [
        tuple((a_j * (m // d)) % m for a_j, d in zip(dec.coords[a], dec.orders))
        for a in range(dec.size)
    ]
    labels = []
    for idx in range(dec.size):
        exps = character_from_index(dec, idx).exps
        sig = []
        for block in blocks:
            counts = [0] * m
            for a in block:
                e = 0
                for c, w in zip(exps, weights[a]):
                    e += c * w
                counts[e % m] += 1
            sig.append(_reduce_counts(counts, zeta_rows))
        labels.append(tuple(sig))
    return Partition.from_labels(labels)


def bidual_partition(p: Partition, dec: AbelianDecomp) -> Partition:
    """Dual of the dual, pulled back to the original group through the
    natural identification a -> evaluation-at-a."""
    q = dual_partition(p, dec)
    ddec = dual_decomp(dec)
    r = dual_partition(q, ddec)
    # evaluation-at-a is the character of the dual group whose exponents are
    # the coordinates of a
    labels = [r.block_of[ddec.index_of_coords(dec.coords[a])] for a in range(dec.size)]
    return Partition.from_labels(labels)


def is_reflexive_group(p: Partition, dec: AbelianDecomp) -> bool:
    return bidual_partition(p, dec) == p


# ------------------------------------------------------------- chi duality


def _pair_exponents(bim: Bimodule, gc: GenChar):
    """exp_left[r][v] for chi(r.v) and exp_right[r][v] for chi(v.r)."""
    car = bim.carrier
    chi_exp = [char_eval_exp(gc.chi, w, car) for w in range(car.size)]
    left = [
        [chi_exp[bim.left_act[r][v]] for v in range(car.size)]
        for r in range(bim.ring.size)
    ]
    right = [
        [chi_exp[bim.right_act[r][v]] for v in range(car.size)]
        for r in range(bim.ring.size)
    ]
    return left, right


def chi_dual(
    p: Partition,
    bim: Bimodule,
    gc: GenChar,
    n: int,
    source: str,
    side: str,
    caps: Caps = DEFAULT_CAPS,
) -> Partition:
    """The chi-left or chi-right dual of a partition of R^n or M^n.

    source says which universe p lives on ("ring" or "module"); the result
    partitions the other one.  The left dual classifies points appearing in
    the second pairing slot, the right dual in the first slot.
    """
    ring, car = bim.ring, bim.carrier
    if source not in ("ring", "module"):
        raise DimensionMismatch("source must be 'ring' or 'module'")
    if side not in ("left", "right"):
        raise DimensionMismatch("side must be 'left' or 'right'")
    src_size = ring.size if source == "ring" else car.size
    dst_size = car.size if source == "ring" else ring.size
    if p.universe != src_size ** n:
        raise UniverseMismatch("partition universe does not match the source")
    if dst_size ** n > caps.universe:
        raise CapExceeded("dual universe exceeds the cap")

    exp_left, exp_right = _pair_exponents(bim, gc)
    m = car.exponent
    zeta_rows = _zeta_power_table(m)

    # per-coordinate exponent table e[b][w]: b from a block tuple, w a
    # classified tuple.  <r,v> uses left actions, <v,r> right actions.
    if source == "ring":
        table = exp_left if side == "left" else exp_right
    else:
        table = exp_right if side == "left" else exp_left
        # classified elements are ring tuples; block elements module tuples

    blocks = p.blocks()
    block_tuples = [
        [decode_tuple(x, src_size, n) for x in block] for block in blocks
    ]
    labels = []
    for w_idx in range(dst_size ** n):
        wt = decode_tuple(w_idx, dst_size, n)
        sig = []
        for btuples in block_tuples:
            counts = [0] * m
            for ut in btuples:
                e = 0
                if source == "ring":
                    for u_i, w_i in zip(ut, wt):
                        e += table[u_i][w_i]
                else:
                    for u_i, w_i in zip(ut, wt):
                        e += table[w_i][u_i]
                counts[e % m] += 1
            sig.append(_reduce_counts(counts, zeta_rows))
        labels.append(tuple(sig))
    return Partition.from_labels(labels)


def chi_bidual(
    p: Partition, bim: Bimodule, gc: GenChar, n: int, source: str, caps: Caps = DEFAULT_CAPS
) -> Partition:
    """Right dual of the left dual, back on the original universe."""
    other = "module" if source == "ring" else "ring"
    q = chi_dual(p, bim, gc, n, source, "left", caps)
    return chi_dual(q, bim, gc, n, other, "right", caps)


def is_reflexive(
    p: Partition, bim: Bimodule, gc: GenChar, n: int, source: str, caps: Caps = DEFAULT_CAPS
) -> bool:
    return chi_bidual(p, bim, gc, n, source, caps) == p


# --------------------------------------------------------------- orbits


def apply_right(vt, u: MatrixR, bim: Bimodule) -> tuple[int, ...]:
    """Row vector of module elements times a ring matrix: (v U)_j."""
    car = bim.carrier
    out = []
    for j in range(u.n):
        acc = car.zero
        for i in range(u.n):
            acc = car.add[acc][bim.right_act[u.at(i, j)][vt[i]]]
        out.append(acc)
    return tuple(out)


def apply_transpose(vt, u: MatrixR, bim: Bimodule) -> tuple[int, ...]:
    """(U v^T)^T: coordinate i is sum_j U_ij . v_j."""
    car = bim.carrier
    out = []
    for i in range(u.n):
        acc = car.zero
        for j in range(u.n):
            acc = car.add[acc][bim.left_act[u.at(i, j)][vt[j]]]
        out.append(acc)
    return tuple(out)


@dataclass(frozen=True)
class ActionSpec:
    """A matrix group acting on a tuple universe from one side.

    side "right": v -> vU; side "transpose": v -> (U v^T)^T.
    """

    generators: tuple[MatrixR, ...]
    side: str

    def __post_init__(self):
        if self.side not in ("right", "transpose"):
            raise DimensionMismatch("side must be 'right' or 'transpose'")


def orbit_partition(
    bim: Bimodule, n: int, action: ActionSpec, caps: Caps = DEFAULT_CAPS, closed: bool = False
) -> Partition:
    """Orbits of the group generated by the action's matrices.

    Pass closed=True when the generator list is already the full group; the
    invertibility of every member is still checked.
    """
    ring, car = bim.ring, bim.carrier
    size = car.size ** n
    if size > caps.universe:
        raise CapExceeded("orbit universe exceeds the cap")
    mats = list(action.generators)
    for g in mats:
        if g.n != n:
            raise DimensionMismatch("matrix size does not match n")
    if closed:
        for g in mats:
            if not is_invertible(g, ring, caps):
                raise DimensionMismatch("group member is not invertible")
    else:
        mats = group_closure(mats, ring, caps)
    uf = UnionFind(size)
    apply = apply_right if action.side == "right" else apply_transpose
    for idx in range(size):
        vt = decode_tuple(idx, car.size, n)
        for u in mats:
            uf.union(idx, encode_tuple(apply(vt, u, bim), car.size))
    return Partition.from_labels(uf.find(i) for i in range(size))


@dataclass(frozen=True)
class OrbitDualityReport:
    """The four orbit partitions of a matrix group and the duality relations
    between them, all computed independently and compared exactly."""

    ring_right_orbits: int
    ring_transpose_orbits: int
    module_right_orbits: int
    module_transpose_orbits: int
    equal_ring_right: bool        # P_{R^n,U}   == right dual of P_{M^n,U^T}
    equal_ring_transpose: bool    # P_{R^n,U^T} == left  dual of P_{M^n,U}
    equal_module_right: bool      # P_{M^n,U}   == right dual of P_{R^n,U^T}
    equal_module_transpose: bool  # P_{M^n,U^T} == left  dual of P_{R^n,U}
    all_reflexive: bool
    partitions: tuple

    @property
    def ok(self) -> bool:
        return (
            self.equal_ring_right
            and self.equal_ring_transpose
            and self.equal_module_right
            and self.equal_module_transpose
            and self.all_reflexive
        )


def verify_orbit_duality(
    bim: Bimodule,
    gc: GenChar,
    n: int,
    group: list[MatrixR],
    caps: Caps = DEFAULT_CAPS,
) -> OrbitDualityReport:
    rbim = ring_bimodule(bim.ring, caps)
    mats = group_closure(group, bim.ring, caps)
    p_r_right = orbit_partition(rbim, n, ActionSpec(tuple(mats), "right"), caps, closed=True)
    p_r_tr = orbit_partition(rbim, n, ActionSpec(tuple(mats), "transpose"), caps, closed=True)
    p_m_right = orbit_partition(bim, n, ActionSpec(tuple(mats), "right"), caps, closed=True)
    p_m_tr = orbit_partition(bim, n, ActionSpec(tuple(mats), "transpose"), caps, closed=True)

    eq1 = p_r_right == chi_dual(p_m_tr, bim, gc, n, "module", "right", caps)
    eq2 = p_r_tr == chi_dual(p_m_right, bim, gc, n, "module", "left", caps)
    eq3 = p_m_right == chi_dual(p_r_tr, bim, gc, n, "ring", "right", caps)
    eq4 = p_m_tr == chi_dual(p_r_right, bim, gc, n, "ring", "left", caps)

    refl = (
        is_reflexive(p_r_right, bim, gc, n, "ring", caps)
        and is_reflexive(p_r_tr, bim, gc, n, "ring", caps)
        and is_reflexive(p_m_right, bim, gc, n, "module", caps)
        and is_reflexive(p_m_tr, bim, gc, n, "module", caps)
    )
    return OrbitDualityReport(
        p_r_right.block_count,
        p_r_tr.block_count,
        p_m_right.block_count,
        p_m_tr.block_count,
        eq1,
        eq2,
        eq3,
        eq4,
        refl,
        (p_r_right, p_r_tr, p_m_right, p_m_tr),
    )
