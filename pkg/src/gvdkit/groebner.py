"""Reduced Groebner bases, normal forms, S-polynomials and elimination."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from ._engine import Engine, Packer
from .poly import MonomialOrder, Polynomial, PolynomialError, Ring, leading_term


@dataclass(frozen=True)
class GroebnerBasis:
    ring: Ring
    order: MonomialOrder
    elements: tuple[Polynomial, ...]
    reduced: bool = True

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def is_unit(self) -> bool:
        return len(self.elements) == 1 and self.elements[0].is_constant()

    def leading_monomials(self) -> list[tuple[int, ...]]:
        return [leading_term(g, self.order)[1] for g in self.elements]


def _to_engine(f: Polynomial, packer: Packer) -> list:
    if not f.terms:
        return []
    den = 1
    for c in f.terms.values():
        if c.denominator != 1:
            den = den * c.denominator // gcd(den, c.denominator)
    items = [(packer.pack(e), int(c * den)) for e, c in f.terms.items()]
    items.sort(reverse=True)
    return items


def _from_engine(f: list, ring: Ring, packer: Packer, monic: bool) -> Polynomial:
    if not f:
        return ring.zero()
    lc = f[0][1]
    terms = {}
    for m, c in f:
        _, e = packer.unpack(m)
        terms[e] = Fraction(c, lc) if monic else Fraction(c)
    return Polynomial(ring, terms)


_cache: dict = {}
_cache_lock = threading.Lock()
_CACHE_LIMIT = 200_000


def _cache_key(ring: Ring, order: MonomialOrder, polys: Sequence[Polynomial]):
    return (ring.variables, order.permutation, frozenset(p.key() for p in polys if p))


def buchberger(generators: Iterable[Polynomial], order: MonomialOrder | None = None,
               ring: Ring | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``generators``.

    Zero generators are discarded; elements come back monic and sorted by
    decreasing leading monomial.
    """
    gens = [g for g in generators]
    if ring is None:
        if not gens:
            raise PolynomialError("cannot infer ring from an empty generator list")
        ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise PolynomialError(f"ring mismatch: {g.ring} vs {ring}")
    order = order or MonomialOrder.default(ring)
    key = _cache_key(ring, order, gens)
    hit = _cache.get(key)
    if hit is not None:
        return hit
    packer = Packer(ring.nvars, order.permutation)
    engine = Engine(packer)
    basis = engine.groebner([_to_engine(g, packer) for g in gens if g])
    elements = tuple(_from_engine(b, ring, packer, monic=True) for b in basis)
    gb = GroebnerBasis(ring, order, elements, True)
    with _cache_lock:
        if len(_cache) > _CACHE_LIMIT:
            _cache.clear()
        _cache[key] = gb
        # the reduced basis is its own fixed point
        _cache.setdefault(_cache_key(ring, order, elements), gb)
    return gb


def clear_cache():
    with _cache_lock:
        _cache.clear()


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder | None = None) -> Polynomial:
    if f.is_zero() or g.is_zero():
        raise PolynomialError("S-polynomial of a zero polynomial")
    if f.ring != g.ring:
        raise PolynomialError("ring mismatch")
    order = order or MonomialOrder.default(f.ring)
    cf, ef = leading_term(f, order)
    cg, eg = leading_term(g, order)
    lcm = tuple(max(a, b) for a, b in zip(ef, eg))
    mf = tuple(a - b for a, b in zip(lcm, ef))
    mg = tuple(a - b for a, b in zip(lcm, eg))
    return f.mul_monomial(mf, 1 / cf) - g.mul_monomial(mg, 1 / cg)


def normal_form(f: Polynomial, basis: GroebnerBasis | Sequence[Polynomial],
                order: MonomialOrder | None = None) -> Polynomial:
    """Remainder of multivariate division of ``f`` by ``basis``.

    No term of the result is divisible by a leading monomial of the basis and
    ``f`` minus the result lies in the ideal the basis generates.
    """
    if isinstance(basis, GroebnerBasis):
        order = basis.order
        elements = basis.elements
    else:
        elements = [b for b in basis if b]
        order = order or MonomialOrder.default(f.ring)
    for b in elements:
        if b.ring != f.ring:
            raise PolynomialError("ring mismatch in normal form")
    return _division_remainder(f, [g.monic(order) for g in elements], order)


def _division_remainder(f: Polynomial, basis: Sequence[Polynomial], order: MonomialOrder) -> Polynomial:
    leads = [leading_term(g, order)[1] for g in basis]
    work = dict(f.terms)
    rem = {}
    key = order.key
    while work:
        e = max(work, key=key)
        c = work.pop(e)
        for g, lm in zip(basis, leads):
            if all(a <= b for a, b in zip(lm, e)):
                q = tuple(b - a for a, b in zip(lm, e))
                for ge, gc in g.terms.items():
                    if ge == lm:
                        continue
                    t = tuple(x + y for x, y in zip(ge, q))
                    v = work.get(t, 0) - c * gc
                    if v:
                        work[t] = v
                    else:
                        work.pop(t, None)
                break
        else:
            rem[e] = c
    return Polynomial(f.ring, rem)


def reduces_to_zero(f: Polynomial, basis: GroebnerBasis) -> bool:
    """Fast membership test: ``f`` reduces to zero modulo a Groebner basis."""
    if f.is_zero():
        return True
    if basis.ring != f.ring:
        raise PolynomialError("ring mismatch in normal form")
    packer = Packer(f.ring.nvars, basis.order.permutation)
    engine = Engine(packer)
    ints = [_to_engine(g, packer) for g in basis.elements]
    return not engine.reduce(_to_engine(f, packer), ints)


def is_groebner(basis: Sequence[Polynomial], order: MonomialOrder) -> bool:
    """Buchberger criterion: every S-pair reduces to zero."""
    basis = [b for b in basis if b]
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            s = s_polynomial(basis[i], basis[j], order)
            if _division_remainder(s, [b.monic(order) for b in basis], order).terms:
                return False
    return True


def elimination_ideal_generators(generators: Sequence[Polynomial], ring: Ring,
                                 drop: Sequence[str]) -> tuple[Ring, list[Polynomial]]:
    """Generators of the ideal intersected with the subring without ``drop``."""
    for d in drop:
        ring.index(d)
    order = MonomialOrder.lex(ring, drop)
    gb = buchberger(generators, order, ring=ring)
    dropped = {ring.index(d) for d in drop}
    keep = [v for v in ring.variables if v not in set(drop)]
    sub = Ring(tuple(keep))
    out = []
    for g in gb.elements:
        if all(e[i] == 0 for e in g.terms for i in dropped):
            out.append(g.substitute_ring(sub))
    return sub, out


def initial_monomials(generators: Sequence[Polynomial], ring: Ring,
                      order: MonomialOrder | None = None) -> list[tuple[int, ...]]:
    gb = buchberger(generators, order, ring=ring)
    return gb.leading_monomials()
