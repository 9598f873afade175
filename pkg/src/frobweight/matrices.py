"""Square matrices over a finite ring, and the matrix families used as
witness pools: GL_n, monomial matrices, invertible lower-triangular, and
invertible diagonal matrices (plus restricted-entry variants of the last two).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .config import DEFAULT_CAPS, Caps
from .errors import CapExceeded, DimensionMismatch, NotAGroup
from .finring import RingTable


@dataclass(frozen=True)
class MatrixR:
    """An n x n matrix as a row-major tuple of ring element indices."""

    n: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != self.n * self.n:
            raise DimensionMismatch("entry count does not match the matrix size")

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.n + j]

    def rows(self):
        return [list(self.entries[i * self.n : (i + 1) * self.n]) for i in range(self.n)]


def mat_from_rows(rows) -> MatrixR:
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DimensionMismatch("matrix rows must form a square")
    return MatrixR(n, tuple(x for r in rows for x in r))


def identity_matrix(ring: RingTable, n: int) -> MatrixR:
    return mat_from_rows(
        [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)]
    )


def transpose(a: MatrixR) -> MatrixR:
    return mat_from_rows([[a.at(j, i) for j in range(a.n)] for i in range(a.n)])


def mat_mul(a: MatrixR, b: MatrixR, ring: RingTable) -> MatrixR:
    if a.n != b.n:
        raise DimensionMismatch("matrix sizes differ")
    n = a.n
    out = []
    for i in range(n):
        for j in range(n):
            acc = ring.zero
            for t in range(n):
                acc = ring.add[acc][ring.mul[a.at(i, t)][b.at(t, j)]]
            out.append(acc)
    return MatrixR(n, tuple(out))


def vec_mat(v, a: MatrixR, ring: RingTable) -> tuple[int, ...]:
    """Row vector times matrix over the ring."""
    n = a.n
    if len(v) != n:
        raise DimensionMismatch("vector length does not match the matrix")
    out = []
    for j in range(n):
        acc = ring.zero
        for i in range(n):
            acc = ring.add[acc][ring.mul[v[i]][a.at(i, j)]]
        out.append(acc)
    return tuple(out)


def _all_vectors(ring: RingTable, n: int, caps: Caps):
    if ring.size ** n > caps.universe:
        raise CapExceeded("vector space too large for exhaustive sweep")
    return itertools.product(range(ring.size), repeat=n)


def is_invertible(a: MatrixR, ring: RingTable, caps: Caps = DEFAULT_CAPS) -> bool:
    """True when right multiplication by a permutes R^n."""
    seen = set()
    for v in _all_vectors(ring, a.n, caps):
        w = vec_mat(v, a, ring)
        if w in seen:
            return False
        seen.add(w)
    return True


def matrix_inverse(a: MatrixR, ring: RingTable, caps: Caps = DEFAULT_CAPS):
    """The two-sided inverse of a, or None.

    Found by inverting the bijection v -> v*a on R^n; the rows of the inverse
    are the preimages of the standard basis rows.
    """
    n = a.n
    preimages = {}
    for v in _all_vectors(ring, n, caps):
        w = vec_mat(v, a, ring)
        if w in preimages:
            return None
        preimages[w] = v
    rows = []
    for i in range(n):
        e = tuple(ring.one if j == i else ring.zero for j in range(n))
        if e not in preimages:
            return None
        rows.append(list(preimages[e]))
    b = mat_from_rows(rows)
    ident = identity_matrix(ring, n)
    if mat_mul(a, b, ring) != ident or mat_mul(b, a, ring) != ident:
        return None
    return b


@dataclass(frozen=True)
class FamilySpec:
    """Which pool of matrices to search.

    kind: one of GL, Mon, MonSub, LT, Diag, DiagSub, All, List.
    subset: for MonSub, the allowed unit entries; for DiagSub, one tuple of
    allowed units per diagonal position.
    """

    kind: str
    subset: tuple = ()
    matrices: tuple = ()

    def label(self) -> str:
        if self.kind == "MonSub":
            return f"Mon_S(n), S={sorted(self.subset)}"
        if self.kind == "DiagSub":
            return f"Diag restricted per position"
        return self.kind


def verify_unit_subgroup(subset, ring: RingTable):
    s = set(subset)
    if not s:
        raise NotAGroup("empty unit subset")
    if not s <= set(ring.units):
        raise NotAGroup("subset contains a non-unit")
    if ring.one not in s:
        raise NotAGroup("subset misses the identity")
    for a in s:
        for b in s:
            if ring.mul[a][b] not in s:
                raise NotAGroup(f"not closed under multiplication at ({a},{b})")
    return sorted(s)


def enumerate_family(ring: RingTable, n: int, fam: FamilySpec, caps: Caps = DEFAULT_CAPS):
    """All matrices in the family, in a fixed deterministic order."""
    if fam.kind == "List":
        return list(fam.matrices)
    if fam.kind == "All":
        total = ring.size ** (n * n)
        if total > caps.matrix_family:
            raise CapExceeded("full matrix sweep exceeds the family cap")
        return [
            MatrixR(n, es) for es in itertools.product(range(ring.size), repeat=n * n)
        ]
    if fam.kind == "GL":
        total = ring.size ** (n * n)
        if total > caps.matrix_family:
            raise CapExceeded("GL sweep exceeds the family cap")
        return [
            m
            for es in itertools.product(range(ring.size), repeat=n * n)
            for m in [MatrixR(n, es)]
            if is_invertible(m, ring, caps)
        ]
    if fam.kind in ("Mon", "MonSub"):
        allowed = (
            verify_unit_subgroup(fam.subset, ring) if fam.kind == "MonSub" else list(ring.units)
        )
        out = []
        for perm in itertools.permutations(range(n)):
            for us in itertools.product(allowed, repeat=n):
                rows = [[ring.zero] * n for _ in range(n)]
                for i in range(n):
                    rows[i][perm[i]] = us[i]
                out.append(mat_from_rows(rows))
        return out
    if fam.kind == "LT":
        # invertible lower triangular: unit diagonal, free below the diagonal
        below = [(i, j) for i in range(n) for j in range(n) if j < i]
        out = []
        for diag in itertools.product(ring.units, repeat=n):
            for fills in itertools.product(range(ring.size), repeat=len(below)):
                rows = [[ring.zero] * n for _ in range(n)]
                for i in range(n):
                    rows[i][i] = diag[i]
                for (i, j), v in zip(below, fills):
                    rows[i][j] = v
                out.append(mat_from_rows(rows))
        return out
    if fam.kind == "Diag":
        return [
            mat_from_rows(
                [[us[i] if i == j else ring.zero for j in range(n)] for i in range(n)]
            )
            for us in itertools.product(ring.units, repeat=n)
        ]
    if fam.kind == "DiagSub":
        pools = [verify_unit_subgroup(s, ring) for s in fam.subset]
        if len(pools) != n:
            raise DimensionMismatch("DiagSub needs one unit pool per position")
        return [
            mat_from_rows(
                [[us[i] if i == j else ring.zero for j in range(n)] for i in range(n)]
            )
            for us in itertools.product(*pools)
        ]
    raise DimensionMismatch(f"unknown family kind {fam.kind!r}")


def group_closure(mats, ring: RingTable, caps: Caps = DEFAULT_CAPS):
    """Closure of the given invertible matrices under multiplication."""
    gens = list(mats)
    if not gens:
        raise NotAGroup("no generators")
    n = gens[0].n
    for g in gens:
        if g.n != n:
            raise DimensionMismatch("mixed matrix sizes")
        if not is_invertible(g, ring, caps):
            raise NotAGroup("generator is not invertible")
    seen = {identity_matrix(ring, n)}
    frontier = list(seen)
    while frontier:
        m = frontier.pop()
        for g in gens:
            nxt = mat_mul(m, g, ring)
            if nxt not in seen:
                if len(seen) >= caps.closure:
                    raise CapExceeded("matrix group closure exceeds the cap")
                seen.add(nxt)
                frontier.append(nxt)
    return sorted(seen, key=lambda m: m.entries)
