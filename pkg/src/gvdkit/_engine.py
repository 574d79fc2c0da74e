"""Integer-coefficient Buchberger core over packed monomials.

Monomials (and module terms) are packed into Python ints: one 16-bit field per
variable, highest-priority variable in the most significant field, and an
optional position field above all of them.  Integer comparison of packed
monomials is then lex (position-over-term for module elements), products are
additions and divisibility is a single guarded subtraction.

Polynomials here are lists of ``(monomial, coefficient)`` pairs sorted by
decreasing monomial, with integer coefficients.
"""

from __future__ import annotations

import heapq
from math import gcd

WIDTH = 16
FIELD = (1 << WIDTH) - 1
LIMIT = 1 << (WIDTH - 1)


class Packer:
    """Packs exponent tuples under the lex priority ``perm``."""

    def __init__(self, nvars: int, perm: tuple[int, ...] | None = None):
        self.n = nvars
        self.perm = tuple(range(nvars)) if perm is None else tuple(perm)
        self.shift = nvars * WIDTH
        self.guard = sum(1 << (WIDTH * i + WIDTH - 1) for i in range(nvars))
        self.expmask = (1 << self.shift) - 1

    def pack(self, exp, pos: int = 0) -> int:
        v = pos
        for i in self.perm:
            k = exp[i]
            if k >= LIMIT:
                raise OverflowError("exponent exceeds packed field width")
            v = (v << WIDTH) | k
        return v

    def unpack(self, m: int) -> tuple[int, tuple[int, ...]]:
        exp = [0] * self.n
        for i in reversed(self.perm):
            exp[i] = m & FIELD
            m >>= WIDTH
        return m, tuple(exp)

    def fields(self, m: int) -> list[int]:
        out = []
        for _ in range(self.n):
            out.append(m & FIELD)
            m >>= WIDTH
        return out

    def degree(self, m: int) -> int:
        return sum(self.fields(m & self.expmask))

    def lcm(self, a: int, b: int) -> int:
        pos = a >> self.shift
        v = 0
        for i in range(self.n - 1, -1, -1):
            s = WIDTH * i
            x = (a >> s) & FIELD
            y = (b >> s) & FIELD
            v = (v << WIDTH) | (x if x > y else y)
        return (pos << self.shift) | v

    def coprime(self, a: int, b: int) -> bool:
        for i in range(self.n):
            s = WIDTH * i
            if (a >> s) & FIELD and (b >> s) & FIELD:
                return False
        return True


class Engine:
    """Buchberger's algorithm with Gebauer-Moeller pair management."""

    def __init__(self, packer: Packer, module: bool = False):
        self.p = packer
        self.shift = packer.shift
        self.guard = packer.guard
        # the product criterion is only valid for ring elements
        self.module = module

    # -- monomial helpers ---------------------------------------------
    def divides(self, a: int, b: int) -> bool:
        if (a >> self.shift) != (b >> self.shift):
            return False
        g = self.guard
        return (((b | g) - a) & g) == g

    def check(self, m: int) -> int:
        if m & self.guard:
            raise OverflowError("exponent overflow in packed monomial")
        return m

    # -- polynomial helpers -------------------------------------------
    @staticmethod
    def primitive(f: list) -> list:
        g = 0
        for _, c in f:
            g = gcd(g, c)
            if g == 1:
                break
        if f[0][1] < 0:
            g = -g
        if g == 1:
            return f
        return [(m, c // g) for m, c in f]

    def reduce(self, f: list, basis: list, full: bool = True) -> list:
        """Normal form of ``f`` modulo ``basis`` (fraction-free, primitive result).

        With ``full=False`` only the leading term is reduced.
        """
        if not f:
            return f
        work = dict(f)
        heap = [-m for m in work]
        heapq.heapify(heap)
        rem: list = []
        divides = self.divides
        leads = [g[0][0] for g in basis]
        check = self.check
        while heap:
            m = -heapq.heappop(heap)
            c = work.pop(m, 0)
            if not c:
                continue
            for j, lm in enumerate(leads):
                if divides(lm, m):
                    break
            else:
                rem.append((m, c))
                if not full:
                    rest = sorted(((k, v) for k, v in work.items() if v), reverse=True)
                    return self.primitive(rem + rest)
                continue
            g = basis[j]
            lc = g[0][1]
            d = gcd(c, lc)
            a = lc // d
            b = c // d
            if a < 0:
                a, b = -a, -b
            if a != 1:
                for k in work:
                    work[k] *= a
                rem = [(mm, cc * a) for mm, cc in rem]
            q = m - lm
            for gm, gc in g[1:]:
                t = q + gm
                if t & self.guard:
                    check(t)
                v = work.get(t)
                if v is None:
                    work[t] = -b * gc
                    heapq.heappush(heap, -t)
                else:
                    v -= b * gc
                    if v:
                        work[t] = v
                    else:
                        del work[t]
        if not rem:
            return rem
        return self.primitive(rem)

    def spoly(self, f: list, g: list, lcm: int) -> list:
        (mf, cf), (mg, cg) = f[0], g[0]
        d = gcd(cf, cg)
        a, b = cg // d, cf // d
        qf, qg = lcm - mf, lcm - mg
        out: dict = {}
        for m, c in f[1:]:
            out[qf + m] = a * c
        for m, c in g[1:]:
            t = qg + m
            v = out.get(t, 0) - b * c
            if v:
                out[t] = v
            else:
                out.pop(t, None)
        for t in out:
            if t & self.guard:
                self.check(t)
        return sorted(out.items(), reverse=True)

    # -- Buchberger ---------------------------------------------------
    def _pair_key(self, lcm: int, i: int, j: int):
        return (self.p.degree(lcm), lcm, j, i)

    def groebner(self, polys: list[list]) -> list[list]:
        """Reduced Groebner basis (primitive integer polynomials, positive leads)."""
        G: list[list] = []
        active: list[int] = []
        pairs: list = []
        lcm_of = self.p.lcm
        inputs = sorted((self.primitive(f) for f in polys if f), key=lambda f: (self.p.degree(f[0][0]), f[0][0]))
        for f in inputs:
            h = self.reduce(f, [G[i] for i in active])
            if h:
                if not (h[0][0] & self.p.expmask) and not self.module:
                    return [[(0, 1)]]
                self._update(G, active, pairs, h)
        while pairs:
            _, _, j, i = heapq.heappop(pairs)
            lcm = lcm_of(G[i][0][0], G[j][0][0])
            s = self.spoly(G[i], G[j], lcm)
            if not s:
                continue
            h = self.reduce(s, [G[k] for k in active])
            if h:
                if not (h[0][0] & self.p.expmask) and not self.module:
                    return [[(0, 1)]]
                self._update(G, active, pairs, h)
        return self.interreduce([G[k] for k in active])

    def _update(self, G, active, pairs, h):
        lcm_of = self.p.lcm
        divides = self.divides
        shift = self.shift
        k = len(G)
        G.append(h)
        lh = h[0][0]
        ph = lh >> shift
        cand = []
        for i in active:
            lg = G[i][0][0]
            if (lg >> shift) != ph:
                continue
            cand.append((i, lcm_of(lg, lh)))
        # chain criterion among new pairs (Gebauer-Moeller M and F)
        kept = []
        for idx, (i, l) in enumerate(cand):
            lg = G[i][0][0]
            if not self.module and self.p.coprime(lg, lh):
                kept.append((i, l, True))
                continue
            redundant = False
            for jdx, (j, l2) in enumerate(cand):
                if jdx == idx:
                    continue
                if l2 != l and divides(l2, l):
                    redundant = True
                    break
                if l2 == l and jdx < idx:
                    redundant = True
                    break
            if not redundant:
                kept.append((i, l, False))
        # B criterion on old pairs
        if pairs:
            new_pairs = []
            for item in pairs:
                _, l, j, i = item
                if divides(lh, l):
                    lig = lcm_of(G[i][0][0], lh)
                    ljg = lcm_of(G[j][0][0], lh)
                    if lig != l and ljg != l:
                        continue
                new_pairs.append(item)
            if len(new_pairs) != len(pairs):
                pairs[:] = new_pairs
                heapq.heapify(pairs)
        for i, l, cop in kept:
            if cop:
                continue
            heapq.heappush(pairs, self._pair_key(l, i, k))
        active[:] = [i for i in active if not divides(lh, G[i][0][0])]
        active.append(k)

    def interreduce(self, basis: list[list]) -> list[list]:
        # minimalize leads, then tail-reduce each element by the others
        basis = sorted(basis, key=lambda f: f[0][0])
        minimal = []
        for f in basis:
            if not any(self.divides(g[0][0], f[0][0]) for g in minimal):
                minimal.append(f)
        out = []
        for i, f in enumerate(minimal):
            others = minimal[:i] + minimal[i + 1:]
            r = self.reduce(f, others)
            out.append(r)
        out.sort(key=lambda f: f[0][0], reverse=True)
        return out
