"""Codes over module alphabets, weight-preserving linear maps, and the
search for global matrices realizing them.

A code is a left submodule of M^n given by generators.  Preserving maps are
enumerated by assigning images to a minimal generating sequence, checking
well-definedness against the relation module, and verifying the
preservation predicate on the whole code.  Witness matrices are drawn from
an explicit family and re-verified on every code element.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .config import DEFAULT_CAPS, Caps
from .errors import CapExceeded, DimensionMismatch, NoLocalRepresentation
from .frobenius import Bimodule
from .matrices import MatrixR
from .partitions import apply_right


# ------------------------------------------------------------------ codes


def vec_add(bim: Bimodule, v, w) -> tuple[int, ...]:
    add = bim.carrier.add
    return tuple(add[a][b] for a, b in zip(v, w))


def vec_scale(bim: Bimodule, r: int, v) -> tuple[int, ...]:
    act = bim.left_act[r]
    return tuple(act[a] for a in v)


def _span(bim: Bimodule, n: int, gens, caps: Caps):
    """All sums of left multiples of the generators, with one representation
    tuple per element and the relation set of the generators."""
    k = len(gens)
    zero = (bim.carrier.zero,) * n
    if bim.ring.size ** k > caps.closure:
        raise CapExceeded("too many generator combinations")
    reps: dict[tuple[int, ...], tuple[int, ...]] = {}
    relations = []
    for coeffs in itertools.product(range(bim.ring.size), repeat=k):
        v = zero
        for r, g in zip(coeffs, gens):
            v = vec_add(bim, v, vec_scale(bim, r, g))
        if v == zero and any(coeffs):
            relations.append(coeffs)
        if v not in reps:
            reps[v] = coeffs
    return reps, tuple(relations)


@dataclass(frozen=True)
class Code:
    """A left submodule of M^n with a minimal generating sequence.

    reps[v] is one coefficient tuple over minimal_gens producing v;
    relations are the nonzero coefficient tuples producing 0."""

    bim: Bimodule
    n: int
    generators: tuple[tuple[int, ...], ...]
    minimal_gens: tuple[tuple[int, ...], ...]
    elements: tuple[tuple[int, ...], ...]
    reps: dict
    relations: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.elements)

    def __eq__(self, other):
        return (
            isinstance(other, Code)
            and self.bim is other.bim
            and self.n == other.n
            and self.elements == other.elements
        )

    def __hash__(self):
        return hash((id(self.bim), self.n, self.elements))


def span_code(bim: Bimodule, n: int, gens, caps: Caps = DEFAULT_CAPS) -> Code:
    gens = tuple(tuple(g) for g in gens)
    for g in gens:
        if len(g) != n:
            raise DimensionMismatch("generator length does not match n")
    reps, _ = _span(bim, n, gens, caps)
    elements = frozenset(reps)
    # greedily drop any generator whose removal keeps the span
    minimal = list(gens)
    i = 0
    while i < len(minimal):
        trial = minimal[:i] + minimal[i + 1:]
        trial_reps, _ = _span(bim, n, tuple(trial), caps)
        if frozenset(trial_reps) == elements:
            minimal = trial
        else:
            i += 1
    minimal_gens = tuple(minimal)
    reps, relations = _span(bim, n, minimal_gens, caps)
    return Code(bim, n, gens, minimal_gens, tuple(sorted(reps)), reps, relations)


def zero_code(bim: Bimodule, n: int, caps: Caps = DEFAULT_CAPS) -> Code:
    return span_code(bim, n, (), caps)


# ------------------------------------------------------------------- maps


@dataclass(frozen=True)
class LinMap:
    """A left-linear map on a code, materialized on every element."""

    code: Code
    gen_images: tuple[tuple[int, ...], ...]
    images: dict

    def __call__(self, v):
        return self.images[tuple(v)]

    def is_injective(self) -> bool:
        return len(set(self.images.values())) == len(self.images)


def _materialize(code: Code, gen_images) -> dict:
    bim, n = code.bim, code.n
    zero = (bim.carrier.zero,) * n
    out = {}
    for v in code.elements:
        w = zero
        for r, img in zip(code.reps[v], gen_images):
            w = vec_add(bim, w, vec_scale(bim, r, img))
        out[v] = w
    return out


def verify_linear(lm: LinMap) -> bool:
    """Exhaustive additivity and scalar-linearity check."""
    code, bim = lm.code, lm.code.bim
    f = lm.images
    for v in code.elements:
        for r in range(bim.ring.size):
            if f[vec_scale(bim, r, v)] != vec_scale(bim, r, f[v]):
                return False
        for w in code.elements:
            if f[vec_add(bim, v, w)] != vec_add(bim, f[v], f[w]):
                return False
    return True


def linear_map(code: Code, gen_images, verify: bool = False) -> LinMap:
    gen_images = tuple(tuple(w) for w in gen_images)
    if len(gen_images) != len(code.minimal_gens):
        raise DimensionMismatch("one image per minimal generator required")
    lm = LinMap(code, gen_images, _materialize(code, gen_images))
    if verify and not verify_linear(lm):
        raise DimensionMismatch("images do not define a linear map")
    return lm


def enumerate_preserving_maps(code: Code, pred, caps: Caps = DEFAULT_CAPS):
    """All linear maps f on the code with pred(v, f(v)) for every element.

    pred takes two coordinate tuples.  Candidate images per generator are
    pre-filtered by preservation on the generator's cyclic span; full
    assignments are then screened by the relation set and the predicate on
    the whole code.
    """
    bim, n = code.bim, code.n
    universe = [
        tuple(t)
        for t in itertools.product(range(bim.carrier.size), repeat=n)
    ]
    k = len(code.minimal_gens)
    if len(universe) ** k > caps.universe:
        raise CapExceeded("image assignment space exceeds the cap")
    if k == 0:
        zero = (bim.carrier.zero,) * n
        if pred(zero, zero):
            yield linear_map(code, ())
        return
    survivors = []
    for g in code.minimal_gens:
        ok = []
        for w in universe:
            if all(
                pred(vec_scale(bim, r, g), vec_scale(bim, r, w))
                for r in range(bim.ring.size)
            ):
                ok.append(w)
        survivors.append(ok)
    rels = code.relations
    zero = (bim.carrier.zero,) * n
    for choice in itertools.product(*survivors):
        well = True
        for rel in rels:
            v = zero
            for r, w in zip(rel, choice):
                v = vec_add(bim, v, vec_scale(bim, r, w))
            if v != zero:
                well = False
                break
        if not well:
            continue
        lm = linear_map(code, choice)
        if all(pred(v, lm.images[v]) for v in code.elements):
            yield lm


# --------------------------------------------------------- matrix search


def map_matrix_agrees(lm: LinMap, a: MatrixR) -> bool:
    bim = lm.code.bim
    return all(lm.images[v] == apply_right(v, a, bim) for v in lm.code.elements)


def witness_index(code: Code, family) -> dict:
    """Group family matrices by their images of the minimal generators."""
    bim = code.bim
    idx: dict = {}
    for a in family:
        key = tuple(apply_right(g, a, bim) for g in code.minimal_gens)
        idx.setdefault(key, []).append(a)
    return idx


def find_global_matrix(lm: LinMap, family, index: dict | None = None):
    """First family matrix realizing the map on the whole code, or None.

    The candidate set is narrowed by the images of the minimal generators;
    every candidate is re-verified on all elements before being returned.
    """
    if index is None:
        index = witness_index(lm.code, family)
    for a in index.get(lm.gen_images, ()):
        if map_matrix_agrees(lm, a):
            return a
    return None


@dataclass(frozen=True)
class LocalReport:
    found: dict
    missing: tuple

    @property
    def ok(self) -> bool:
        return not self.missing


def local_matrices(lm: LinMap, family) -> LocalReport:
    """Per-element matrices A_v in the family with f(v) = v A_v."""
    bim = lm.code.bim
    found, missing = {}, []
    for v in lm.code.elements:
        target = lm.images[v]
        for a in family:
            if apply_right(v, a, bim) == target:
                found[v] = a
                break
        else:
            missing.append(v)
    return LocalReport(found, tuple(missing))


def _pair_module_ring(bim: Bimodule, w, r) -> int:
    """<w, r> = sum of w_i r_i in M (right actions)."""
    acc = bim.carrier.zero
    for wi, ri in zip(w, r):
        acc = bim.carrier.add[acc][bim.right_act[ri][wi]]
    return acc


def a_r_matrices(lm: LinMap, group, caps: Caps = DEFAULT_CAPS) -> dict:
    """For each r in R^n, a group matrix A_r with <f(x), r> = x A_r r^T
    for all x in the code.

    Requires the map to be pointwise representable within the group."""
    bim, n = lm.code.bim, lm.code.n
    ring = bim.ring
    rep = local_matrices(lm, group)
    if not rep.ok:
        raise NoLocalRepresentation("map is not pointwise representable in the group")
    if ring.size ** n > caps.universe:
        raise CapExceeded("too many ring tuples")
    elements = lm.code.elements
    targets = {
        r: tuple(_pair_module_ring(bim, lm.images[x], r) for x in elements)
        for r in itertools.product(range(ring.size), repeat=n)
    }
    out = {}
    for r, want in targets.items():
        for a in group:
            col = tuple(
                _col_entry(ring, a, r, i) for i in range(n)
            )
            got = tuple(_pair_module_ring(bim, x, col) for x in elements)
            if got == want:
                out[r] = a
                break
        else:
            raise NoLocalRepresentation(f"no group matrix works for r = {r}")
    return out


def _col_entry(ring, a: MatrixR, r, i: int) -> int:
    acc = ring.zero
    for j in range(a.n):
        acc = ring.add[acc][ring.mul[a.at(i, j)][r[j]]]
    return acc
