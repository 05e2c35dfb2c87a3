"""Free-module Groebner machinery: module bases, division with quotients and
Schreyer syzygy frames.

A vector of a free module is a dict ``{(component, exponent): coeff}``.
A module order is a ``key`` function on ``(component, exponent)`` pairs
whose tuple values compare like the order.
"""

from __future__ import annotations

import heapq
from typing import Callable, Sequence

from .groebner import _divides, _lcm, _mask

Key = Callable[[tuple], tuple]


class MElt:
    """Monic module element with cached leading data."""

    __slots__ = ("lm", "deg", "mask", "d", "idx")

    def __init__(self, lm: tuple, d: dict, idx: int = -1):
        self.lm = lm  # (component, exponent)
        self.deg = sum(lm[1])
        self.mask = _mask(lm[1])
        self.d = d
        self.idx = idx


def leading(vec: dict, key: Key) -> tuple:
    return max(vec, key=key)


def make_monic(vec: dict, key: Key, field) -> tuple[tuple, dict]:
    lm = leading(vec, key)
    c = vec[lm]
    if c != 1:
        inv = field.inv(c)
        p = getattr(field, "p", None)
        if p is None:
            vec = {m: v * inv for m, v in vec.items()}
        else:
            vec = {m: v * inv % p for m, v in vec.items()}
    return lm, vec


def shift(vec: dict, t: tuple, c=1, p=None) -> dict:
    """x^t * c * vec."""
    if c == 1:
        return {(comp, tuple(a + b for a, b in zip(e, t))): v for (comp, e), v in vec.items()}
    if p is None:
        return {(comp, tuple(a + b for a, b in zip(e, t))): v * c for (comp, e), v in vec.items()}
    return {(comp, tuple(a + b for a, b in zip(e, t))): v * c % p for (comp, e), v in vec.items()}


def add_into(acc: dict, vec: dict, c, p) -> None:
    """acc += c * vec, in place."""
    for m, v in vec.items():
        w = acc.get(m, 0) + c * v
        if p is not None:
            w %= p
        if w:
            acc[m] = w
        else:
            acc.pop(m, None)


def _by_comp(basis: Sequence[MElt]) -> dict:
    table: dict = {}
    for g in basis:
        table.setdefault(g.lm[0], []).append(g)
    return table


def module_reduce(vec: dict, basis: Sequence[MElt] | dict, key: Key, p,
                  full: bool = True, quotients: dict | None = None) -> dict:
    """Divide ``vec`` by the monic ``basis``, largest terms first.

    When ``quotients`` is a dict, ``quotients[g.idx]`` accumulates the
    polynomial multiplier (``{exp: coeff}``) used for each basis element.
    """
    table = basis if isinstance(basis, dict) else _by_comp(basis)
    rem = dict(vec)
    heap = [(_neg(key(m)), m) for m in rem]
    heapq.heapify(heap)
    out: dict = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = rem.get(m)
        if c is None:
            continue
        comp, e = m
        g = None
        cands = table.get(comp)
        if cands:
            deg = sum(e)
            mk = _mask(e)
            for h in cands:
                if h.deg <= deg and not (h.mask & ~mk) and _divides(h.lm[1], e):
                    g = h
                    break
        del rem[m]
        if g is None:
            out[m] = c
            if not full:
                out.update(rem)
                return out
            continue
        t = tuple(a - b for a, b in zip(e, g.lm[1]))
        if quotients is not None:
            q = quotients.setdefault(g.idx, {})
            w = q.get(t, 0) + c
            if p is not None:
                w %= p
            if w:
                q[t] = w
            else:
                q.pop(t, None)
        glm = g.lm
        for (gc, ge), gv in g.d.items():
            if (gc, ge) == glm:
                continue
            mm = (gc, tuple(a + b for a, b in zip(ge, t)))
            old = rem.get(mm)
            if old is None:
                w = -c * gv
                if p is not None:
                    w %= p
                if w:
                    rem[mm] = w
                    heapq.heappush(heap, (_neg(key(mm)), mm))
            else:
                w = old - c * gv
                if p is not None:
                    w %= p
                if w:
                    rem[mm] = w
                else:
                    del rem[mm]
    return out


def _neg(k: tuple) -> tuple:
    # module keys are flat int tuples; negating reverses the order for heapq
    return tuple(-x for x in k)


def module_groebner(vecs: Sequence[dict], key: Key, field, twists: Sequence[int]) -> list[MElt]:
    """Reduced Groebner basis of the submodule generated by ``vecs``.

    Pairs are taken by smallest degree of their lcm (monomial degree plus
    the twist of the component), pruned by the chain criterion.
    """
    p = getattr(field, "p", None)
    elts: list[MElt] = []
    active: list[int] = []
    heap: list = []
    live: set = set()

    def pdeg(comp, lcm):
        return sum(lcm) + twists[comp]

    def install(h: MElt):
        nonlocal active
        hi = len(elts)
        h.idx = hi
        elts.append(h)
        comp, hm = h.lm
        cand = []
        for gi in active:
            g = elts[gi]
            if g.lm[0] == comp:
                cand.append((gi, _lcm(hm, g.lm[1])))
        keep = []
        for a, (gi, l) in enumerate(cand):
            if any(_divides(l2, l) and (l2 != l or b < a)
                   for b, (_, l2) in enumerate(cand) if b != a):
                continue
            keep.append((gi, l))
        dead = set()
        for (i, j) in live:
            if elts[i].lm[0] != comp:
                continue
            lij = _lcm(elts[i].lm[1], elts[j].lm[1])
            if (_divides(hm, lij) and _lcm(elts[i].lm[1], hm) != lij
                    and _lcm(elts[j].lm[1], hm) != lij):
                dead.add((i, j))
        live.difference_update(dead)
        for gi, l in keep:
            live.add((gi, hi))
            heapq.heappush(heap, (pdeg(comp, l), key((comp, l)), gi, hi))
        active = [gi for gi in active
                  if not (elts[gi].lm[0] == comp and _divides(hm, elts[gi].lm[1]))]
        active.append(hi)

    start = []
    for v in vecs:
        if v:
            lm, v = make_monic(v, key, field)
            start.append(MElt(lm, v))
    start.sort(key=lambda e: (pdeg(e.lm[0], e.lm[1]), key(e.lm)))
    for s in start:
        r = module_reduce(s.d, [elts[i] for i in active], key, p)
        if r:
            lm, r = make_monic(r, key, field)
            install(MElt(lm, r))
    while heap:
        _, _, i, j = heapq.heappop(heap)
        if (i, j) not in live:
            continue
        live.discard((i, j))
        f, g = elts[i], elts[j]
        l = _lcm(f.lm[1], g.lm[1])
        s = shift(f.d, tuple(a - b for a, b in zip(l, f.lm[1])))
        add_into(s, shift(g.d, tuple(a - b for a, b in zip(l, g.lm[1]))), -1, p)
        if not s:
            continue
        r = module_reduce(s, [elts[a] for a in active], key, p)
        if r:
            lm, r = make_monic(r, key, field)
            install(MElt(lm, r))
    return interreduce_module([elts[i] for i in active], key, p)


def interreduce_module(basis: list[MElt], key: Key, p) -> list[MElt]:
    basis = sorted(basis, key=lambda e: key(e.lm))
    minimal: list[MElt] = []
    for g in basis:
        if not any(h.lm[0] == g.lm[0] and _divides(h.lm[1], g.lm[1]) for h in minimal):
            minimal.append(g)
    out = []
    for g in minimal:
        others = [h for h in minimal if h is not g]
        tail = dict(g.d)
        c = tail.pop(g.lm)
        r = module_reduce(tail, others, key, p)
        r[g.lm] = c
        out.append(MElt(g.lm, r))
    out.sort(key=lambda e: key(e.lm), reverse=True)
    for i, e in enumerate(out):
        e.idx = i
    return out


# -- orders ---------------------------------------------------------------------

def top_order(ring_key, twists: Sequence[int], elim_below: int | None = None) -> Key:
    """Degree-first term-over-position order on a free module.

    With ``elim_below`` set, every component ``< elim_below`` dominates every
    component ``>= elim_below`` (an elimination order on the leading block).
    """
    cache: dict = {}

    def key(m):
        k = cache.get(m)
        if k is None:
            c, e = m
            k = (sum(e) + twists[c], ring_key(e), -c)
            if elim_below is not None:
                k = (1 if c < elim_below else 0,) + k
            cache[m] = k
        return k

    return key


def schreyer_order(prev_key: Key, lms: Sequence[tuple]) -> Key:
    """Order on F_{k+1} induced by elements with leading monomials ``lms`` in F_k:
    x^a E_j compares as LM(x^a g_j), ties broken in favour of smaller j."""
    cache: dict = {}

    def key(m):
        k = cache.get(m)
        if k is None:
            j, a = m
            c, e = lms[j]
            k = cache[m] = prev_key((c, tuple(x + y for x, y in zip(e, a)))) + (-j,)
        return k

    return key


# -- Schreyer frames ------------------------------------------------------------

def _lex_sorted(basis: list[MElt]) -> list[MElt]:
    # within a component, lex-descending leading monomials; this is what
    # bounds the frame length by the number of variables
    return sorted(basis, key=lambda g: (g.lm[0], tuple(-x for x in g.lm[1])))


def schreyer_syzygies(basis: list[MElt], key: Key, p, nvars: int) -> list[MElt]:
    """Groebner basis, for the induced Schreyer order, of the syzygies of a
    Groebner basis ``basis`` (indexed by position).  Only pairs whose leading
    term is minimal among those sharing the first index are formed."""
    table = _by_comp(basis)
    for i, g in enumerate(basis):
        g.idx = i
    out: list[MElt] = []
    n = len(basis)
    for i in range(n):
        gi = basis[i]
        comp, mi = gi.lm
        quots = {}
        for j in range(i + 1, n):
            gj = basis[j]
            if gj.lm[0] != comp:
                continue
            l = _lcm(mi, gj.lm[1])
            q = tuple(a - b for a, b in zip(l, mi))
            if q not in quots:
                quots[q] = j
        qs = sorted(quots, key=sum)
        minimal: list[tuple] = []
        for q in qs:
            if not any(_divides(r, q) for r in minimal):
                minimal.append(q)
        for q in minimal:
            j = quots[q]
            gj = basis[j]
            l = tuple(a + b for a, b in zip(q, mi))
            qj = tuple(a - b for a, b in zip(l, gj.lm[1]))
            s = shift(gi.d, q)
            add_into(s, shift(gj.d, qj), -1, p)
            quo: dict = {}
            rem = module_reduce(s, table, key, p, quotients=quo)
            if rem:
                raise ArithmeticError("S-vector did not reduce to zero: input is not a Groebner basis")
            syz = {(i, q): 1}
            w = syz.get((j, qj), 0) - 1
            syz[(j, qj)] = w % p if p is not None else w
            for idx, qd in quo.items():
                for e, c in qd.items():
                    m = (idx, e)
                    w = syz.get(m, 0) - c
                    if p is not None:
                        w %= p
                    if w:
                        syz[m] = w
                    else:
                        syz.pop(m, None)
            out.append(MElt((i, q), syz))
    return out


def schreyer_frame(first: list[MElt], key: Key, p, nvars: int, max_len: int | None = None):
    """Iterate Schreyer syzygies starting from the Groebner basis ``first``.

    Returns a list of levels; level k is ``(elements, key)`` with elements
    written in the basis of level k-1 (level 0 lives in the ambient module).
    """
    levels = []
    basis = _lex_sorted(first)
    for i, g in enumerate(basis):
        g.idx = i
    levels.append((basis, key))
    cap = max_len if max_len is not None else nvars + 1
    while basis:
        if len(levels) > cap:
            raise RuntimeError(f"Schreyer frame exceeded length {cap}; this is a bug")
        nxt_key = schreyer_order(key, [g.lm for g in basis])
        syz = schreyer_syzygies(basis, key, p, nvars)
        if not syz:
            break
        basis = _lex_sorted(syz)
        for i, g in enumerate(basis):
            g.idx = i
        key = nxt_key
        levels.append((basis, key))
    return levels
