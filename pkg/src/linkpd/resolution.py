"""Graded free resolutions, syzygies, minors and acyclicity checks.

A resolution of R/I (or of a cokernel) is built from Schreyer frames: the
Groebner basis of the relations, then iterated syzygies whose S-pair
reductions are read off directly.  The frame is not minimal; ``minimize``
cancels unit entries until none remain.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .ideal import Ideal
from .invariants import NotHomogeneous, codim
from .modules import (MElt, module_groebner, module_reduce, schreyer_frame, top_order)
from .orders import GrevLex
from .poly import Polynomial, PolyRing


def _grevlex_key(ring: PolyRing):
    if isinstance(ring.order, GrevLex):
        return ring.key
    return ring.with_order(GrevLex()).key


def _p(ring):
    return getattr(ring.field, "p", None)


class PolyMatrix:
    """Dense matrix of polynomials with degree twists on rows and columns.

    Column ``j`` is an element of degree ``col_twists[j]`` in the free module
    whose ``i``-th basis vector has degree ``row_twists[i]``.
    """

    def __init__(self, ring: PolyRing, entries: Sequence[Sequence[Polynomial]],
                 row_twists: Sequence[int] | None = None,
                 col_twists: Sequence[int] | None = None, ncols: int | None = None):
        self.ring = ring
        self.entries = [[ring(e) for e in row] for row in entries]
        self.nrows = len(self.entries)
        if ncols is None:
            ncols = len(self.entries[0]) if self.entries else 0
        self.ncols = ncols
        if any(len(row) != ncols for row in self.entries):
            raise ValueError("ragged matrix")
        self.row_twists = list(row_twists) if row_twists is not None else [0] * self.nrows
        if col_twists is None:
            col_twists = self._infer_col_twists()
        self.col_twists = list(col_twists)
        if len(self.row_twists) != self.nrows or len(self.col_twists) != self.ncols:
            raise ValueError("twist vectors do not match the matrix shape")

    def _infer_col_twists(self):
        out = []
        for j in range(self.ncols):
            tw = None
            for i in range(self.nrows):
                e = self.entries[i][j]
                if e:
                    d = e.homogeneous_degree()
                    if d is None:
                        raise NotHomogeneous(f"entry ({i},{j}) is not homogeneous")
                    tw = d + self.row_twists[i]
                    break
            out.append(tw if tw is not None else 0)
        return out

    @classmethod
    def from_columns(cls, ring, columns: Sequence[dict], nrows: int, row_twists, col_twists):
        entries = [[{} for _ in columns] for _ in range(nrows)]
        for j, col in enumerate(columns):
            for (i, e), c in col.items():
                entries[i][j][e] = c
        return cls(ring, [[Polynomial(ring, d) for d in row] for row in entries],
                   row_twists, col_twists, ncols=len(columns))

    def column_vector(self, j: int) -> dict:
        out = {}
        for i in range(self.nrows):
            for e, c in self.entries[i][j]._d.items():
                out[(i, e)] = c
        return out

    def columns(self) -> list[dict]:
        return [self.column_vector(j) for j in range(self.ncols)]

    def is_graded(self) -> bool:
        for i in range(self.nrows):
            for j in range(self.ncols):
                e = self.entries[i][j]
                if e and e.homogeneous_degree() != self.col_twists[j] - self.row_twists[i]:
                    return False
        return True

    def is_zero(self) -> bool:
        return all(not e for row in self.entries for e in row)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"cannot compose {self.nrows}x{self.ncols} with {other.nrows}x{other.ncols}")
        R = self.ring
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = R.zero()
                for k in range(self.ncols):
                    a = self.entries[i][k]
                    if a:
                        b = other.entries[k][j]
                        if b:
                            acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix(R, out, self.row_twists, other.col_twists, ncols=other.ncols)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix(self.ring, [[self.entries[i][j] for j in cols] for i in rows],
                          [self.row_twists[i] for i in rows], [self.col_twists[j] for j in cols],
                          ncols=len(cols))

    def __eq__(self, other):
        return (isinstance(other, PolyMatrix) and self.entries == other.entries
                and self.row_twists == other.row_twists and self.col_twists == other.col_twists)

    def __repr__(self):
        rows = ["[" + ", ".join(str(e) for e in row) + "]" for row in self.entries]
        return f"PolyMatrix({self.nrows}x{self.ncols}: " + "; ".join(rows) + ")"


@dataclass
class FreeResolution:
    """F_0 <- F_1 <- ... with ``maps[i]`` the matrix of F_{i+1} -> F_i."""

    ring: PolyRing
    maps: list[PolyMatrix]
    f0_twists: list[int]
    minimal: bool = False

    @property
    def twists(self) -> list[list[int]]:
        out = [list(self.f0_twists)]
        out.extend(list(m.col_twists) for m in self.maps)
        return out

    @property
    def ranks(self) -> list[int]:
        return [len(t) for t in self.twists]

    @property
    def length(self) -> int:
        ranks = self.ranks
        last = 0
        for i, r in enumerate(ranks):
            if r:
                last = i
        return last

    def composites_vanish(self) -> bool:
        return all((a @ b).is_zero() for a, b in zip(self.maps, self.maps[1:]))


@dataclass
class BettiTable:
    """Graded Betti numbers beta[i, j]: rank of R(-j) in F_i."""

    table: dict = field(default_factory=dict)

    @classmethod
    def from_twists(cls, twists: Sequence[Sequence[int]]) -> "BettiTable":
        t: dict = {}
        for i, tw in enumerate(twists):
            for j in tw:
                t[(i, j)] = t.get((i, j), 0) + 1
        return cls(t)

    @property
    def pd(self) -> int:
        return max((i for (i, _), v in self.table.items() if v), default=0)

    def total(self) -> list[int]:
        if not self.table:
            return []
        n = max(i for i, _ in self.table)
        return [sum(v for (i, _), v in self.table.items() if i == k) for k in range(n + 1)]

    def __str__(self):
        if not self.table:
            return "0"
        cols = max(i for i, _ in self.table) + 1
        rows = sorted({j - i for i, j in self.table})
        width = max(len(str(v)) for v in self.table.values()) + 1
        lines = ["total:" + "".join(f"{v:>{width}}" for v in self.total())]
        for r in rows:
            cells = []
            for i in range(cols):
                v = self.table.get((i, i + r), 0)
                cells.append(f"{(v if v else '.'):>{width}}")
            lines.append(f"{r:>5}:" + "".join(cells))
        return "\n".join(lines)


# -- resolutions -----------------------------------------------------------------

def _frame_to_resolution(ring: PolyRing, levels, f0_twists: list[int]) -> FreeResolution:
    maps = []
    prev_twists = list(f0_twists)
    for basis, _key in levels:
        cols = [g.d for g in basis]
        twists = [sum(g.lm[1]) + prev_twists[g.lm[0]] for g in basis]
        maps.append(PolyMatrix.from_columns(ring, cols, len(prev_twists), prev_twists, twists))
        prev_twists = twists
    return FreeResolution(ring, maps, list(f0_twists))


def resolve(I: Ideal) -> FreeResolution:
    """A (non-minimal) graded free resolution of R/I."""
    if not I.is_homogeneous():
        raise NotHomogeneous("resolve needs a homogeneous ideal")
    R = I.ring
    if I.is_zero():
        return FreeResolution(R, [], [0])
    if isinstance(R.order, GrevLex):
        gb = I.gb()
    else:
        G = R.with_order(GrevLex())
        gb = Ideal(G, [g.to_ring(G) for g in I.gens]).gb()
    key = top_order(_grevlex_key(R), [0])
    first = [MElt((0, g.lm), {(0, e): c for e, c in g._d.items()}) for g in gb]
    levels = schreyer_frame(first, key, _p(R), R.nvars)
    res = _frame_to_resolution(R, levels, [0])
    if len(res.maps) > R.nvars + 1:
        raise RuntimeError("resolution longer than the Hilbert syzygy bound; this is a bug")
    return res


def resolve_module(P: PolyMatrix) -> FreeResolution:
    """A graded free resolution of coker(P)."""
    if not P.is_graded():
        raise NotHomogeneous("presentation matrix is not graded-consistent")
    R = P.ring
    tw = list(P.row_twists)
    if P.nrows == 0:
        return FreeResolution(R, [], [])
    key = top_order(_grevlex_key(R), tw)
    gb = module_groebner(P.columns(), key, R.field, tw)
    if not gb:
        return FreeResolution(R, [], tw)
    levels = schreyer_frame(gb, key, _p(R), R.nvars)
    return _frame_to_resolution(R, levels, tw)


def minimize(res: FreeResolution) -> FreeResolution:
    """Cancel unit entries (row-major scan, lowest map first) until none remain."""
    R = res.ring
    fld = R.field
    maps = [[list(row) for row in m.entries] for m in res.maps]
    ncols = [m.ncols for m in res.maps]
    tw = res.twists

    def find_unit():
        for k, M in enumerate(maps):
            src, dst = tw[k + 1], tw[k]
            for r, row in enumerate(M):
                for c, e in enumerate(row):
                    if dst[r] == src[c] and e and e.is_unit():
                        return k, r, c
        return None

    while True:
        hit = find_unit()
        if hit is None:
            break
        k, r, c = hit
        M = maps[k]
        u_inv = fld.inv(M[r][c].lc)
        pivot_row = M[r]
        new = []
        for i, row in enumerate(M):
            if i == r:
                continue
            factor = row[c]
            if factor:
                factor = factor.scale(u_inv)
                newrow = [row[j] - factor * pivot_row[j] if pivot_row[j] else row[j]
                          for j in range(ncols[k]) if j != c]
            else:
                newrow = [row[j] for j in range(ncols[k]) if j != c]
            new.append(newrow)
        maps[k] = new
        ncols[k] -= 1
        if k + 1 < len(maps):
            del maps[k + 1][c]
        if k > 0:
            for row in maps[k - 1]:
                del row[r]
            ncols[k - 1] -= 1
        del tw[k][r]
        del tw[k + 1][c]

    out = []
    for k, M in enumerate(maps):
        out.append(PolyMatrix(R, M, tw[k], tw[k + 1], ncols=ncols[k]))
    while out and out[-1].ncols == 0:
        out.pop()
    return FreeResolution(R, out, tw[0], minimal=True)


def betti(res: FreeResolution) -> BettiTable:
    return BettiTable.from_twists(res.twists)


def pd_quotient(I: Ideal) -> int:
    """Projective dimension of R/I (length of its minimal graded resolution)."""
    res = minimize(resolve(I))
    if res.length > I.ring.nvars:
        raise RuntimeError("projective dimension exceeds the number of variables; this is a bug")
    return res.length


def pd_module(P: PolyMatrix) -> int:
    """Projective dimension of coker(P); the zero module reports 0."""
    res = minimize(resolve_module(P))
    return res.length


# -- syzygies and presentations --------------------------------------------------

def _augmented_basis(M: PolyMatrix) -> tuple[list[MElt], int]:
    R = M.ring
    r = M.nrows
    tw = list(M.row_twists) + list(M.col_twists)
    key = top_order(_grevlex_key(R), tw, elim_below=r)
    zero = R.zero_exp
    vecs = []
    for j in range(M.ncols):
        v = M.column_vector(j)
        v[(r + j, zero)] = 1 if _p(R) is not None else R.field.coerce(1)
        vecs.append(v)
    return module_groebner(vecs, key, R.field, tw), key


def syzygies(M: PolyMatrix) -> PolyMatrix:
    """Columns generating the kernel of M (a Groebner basis of it)."""
    if not M.is_graded():
        raise NotHomogeneous("syzygies needs a graded-consistent matrix")
    R = M.ring
    r = M.nrows
    gb, _ = _augmented_basis(M)
    cols, twists = [], []
    for g in gb:
        c, e = g.lm
        if c < r:
            continue
        cols.append({(cc - r, ee): v for (cc, ee), v in g.d.items()})
        twists.append(sum(e) + M.col_twists[c - r])
    return PolyMatrix.from_columns(R, cols, M.ncols, M.col_twists, twists)


def express_in(gens: Sequence[Polynomial], targets: Sequence[Polynomial]) -> list[list[Polynomial]]:
    """Cofactors: for each target b, polynomials c with b = sum c_i gens_i.

    Uses the extended normal form of the augmented module (gens_i, e_i);
    raises ValueError when some target is not in the ideal of ``gens``.
    """
    R = gens[0].ring
    row = PolyMatrix(R, [list(gens)], [0])
    gb, key = _augmented_basis(row)
    p = _p(R)
    out = []
    for b in targets:
        vec = {(0, e): c for e, c in b._d.items()}
        rem = module_reduce(vec, gb, key, p)
        if any(c == 0 for c, _ in rem):
            raise ValueError(f"{b} is not in the ideal")
        coeffs = [dict() for _ in gens]
        for (c, e), v in rem.items():
            coeffs[c - 1][e] = (-v % p) if p is not None else -v
        out.append([Polynomial(R, d) for d in coeffs])
    return out


def subquotient_presentation(A: Ideal, B: Ideal) -> PolyMatrix:
    """Presentation of A/B over the generators of A: syzygies of A's generators
    plus the coordinate vectors of B's generators."""
    if not A.contains_ideal(B):
        raise ValueError("subquotient needs B ⊆ A")
    if not A.is_homogeneous() or not B.is_homogeneous():
        raise NotHomogeneous("subquotient needs homogeneous ideals")
    R = A.ring
    gens = list(A.gens)
    if not gens:
        return PolyMatrix(R, [], [], [], ncols=0)
    degs = [g.homogeneous_degree() for g in gens]
    row = PolyMatrix(R, [gens], [0], degs)
    S = syzygies(row)
    cols = S.columns()
    twists = list(S.col_twists)
    if B.gens:
        for b, coeffs in zip(B.gens, express_in(gens, B.gens)):
            cols.append({(i, e): c for i, f in enumerate(coeffs) for e, c in f._d.items()})
            twists.append(b.homogeneous_degree())
    return PolyMatrix.from_columns(R, cols, len(gens), degs, twists)


# -- minors, rank, acyclicity ----------------------------------------------------

class _Dets:
    """Memoized Laplace expansion of minors of one matrix."""

    def __init__(self, M: PolyMatrix):
        self.M = M
        self.memo: dict = {}

    def det(self, rows: tuple, cols: tuple) -> Polynomial:
        if not rows:
            return self.M.ring.one()
        hit = self.memo.get((rows, cols))
        if hit is not None:
            return hit
        r0 = rows[0]
        rest = rows[1:]
        acc = self.M.ring.zero()
        for k, c in enumerate(cols):
            a = self.M.entries[r0][c]
            if not a:
                continue
            sub = self.det(rest, cols[:k] + cols[k + 1:])
            if sub:
                acc = acc - a * sub if k % 2 else acc + a * sub
        self.memo[(rows, cols)] = acc
        return acc


def _minor_index(M: PolyMatrix, r: int):
    """(rows, cols) pairs ordered by the degree of the minor, then lexicographically."""
    subs = [(sum(M.col_twists[j] for j in cs) - sum(M.row_twists[i] for i in rs), rs, cs)
            for rs in combinations(range(M.nrows), r) for cs in combinations(range(M.ncols), r)]
    subs.sort()
    return subs


def iter_minors(M: PolyMatrix, r: int):
    if not 1 <= r <= min(M.nrows, M.ncols):
        raise ValueError(f"minor size {r} outside 1..{min(M.nrows, M.ncols)}")
    dets = _Dets(M)
    for _, rs, cs in _minor_index(M, r):
        d = dets.det(rs, cs)
        if d:
            yield d


def minors(M: PolyMatrix, r: int) -> Ideal:
    """Ideal of all r x r minors."""
    return Ideal(M.ring, list(iter_minors(M, r)))


def rank(M: PolyMatrix) -> int:
    """Largest r with a nonvanishing r x r minor."""
    best = 0
    for r in range(1, min(M.nrows, M.ncols) + 1):
        if next(iter_minors(M, r), None) is None:
            break
        best = r
    return best


@dataclass
class BEStep:
    index: int
    expected_rank: int
    rank_ok: bool
    codim: int | None
    ok: bool


def check_buchsbaum_eisenbud(res: FreeResolution | Sequence[PolyMatrix]) -> tuple[bool, list[BEStep]]:
    """Buchsbaum-Eisenbud acyclicity test of F_0 <- F_1 <- ... <- F_m.

    Expected ranks r_m = rank F_m, r_i = rank F_i - r_{i+1}.  A nonzero
    r_i-minor of every map together with vanishing composites pins the
    ranks; the ideal of r_i-minors is then grown in degree order until its
    codimension reaches i.
    """
    maps = list(res.maps if isinstance(res, FreeResolution) else res)
    for a, b in zip(maps, maps[1:]):
        if a.ncols != b.nrows:
            raise ValueError("maps are not composable")
    steps: list[BEStep] = []
    if not all((a @ b).is_zero() for a, b in zip(maps, maps[1:])):
        return False, steps
    m = len(maps)
    expected = [0] * (m + 2)
    for i in range(m, 0, -1):
        expected[i] = maps[i - 1].ncols - expected[i + 1]
    ok_all = True
    for i in range(1, m + 1):
        M = maps[i - 1]
        r = expected[i]
        if r < 0 or r > min(M.nrows, M.ncols):
            steps.append(BEStep(i, r, False, None, False))
            ok_all = False
            continue
        if r == 0:
            fine = M.is_zero()
            steps.append(BEStep(i, 0, fine, None, fine))
            ok_all &= fine
            continue
        found: list[Polynomial] = []
        c = -1
        last_deg = None
        dets = _Dets(M)
        for deg, rs, cs in _minor_index(M, r):
            if found and deg != last_deg:
                c = codim(Ideal(M.ring, found))
                if c >= i:
                    break
            last_deg = deg
            d = dets.det(rs, cs)
            if d:
                found.append(d)
        else:
            if found:
                c = codim(Ideal(M.ring, found))
        rank_ok = bool(found)
        step_ok = rank_ok and c >= i
        steps.append(BEStep(i, r, rank_ok, c if found else None, step_ok))
        ok_all &= step_ok
    return ok_all, steps
