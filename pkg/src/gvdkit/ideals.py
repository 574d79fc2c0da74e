"""Ideals: sums, intersections, quotients, saturation, radical membership,
dimension and the combinatorial monomial-ideal paths."""

from __future__ import annotations

from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .groebner import (
    GroebnerBasis,
    buchberger,
    elimination_ideal_generators,
    reduces_to_zero,
)
from .poly import (
    MonomialOrder,
    Polynomial,
    PolynomialError,
    Ring,
    contract_to_subring,
    leading_term,
    parse_polynomial_list,
)


class Ideal:
    """An ideal of ``ring`` given by generators; equality is ideal equality."""

    def __init__(self, ring: Ring, generators: Iterable[Polynomial] = ()):
        gens = []
        seen = set()
        for g in generators:
            if isinstance(g, (int,)):
                g = ring.constant(g)
            if g.ring != ring:
                raise PolynomialError(f"generator lives in {g.ring}, not {ring}")
            if g and g.key() not in seen:
                seen.add(g.key())
                gens.append(g)
        self.ring = ring
        self.generators: tuple[Polynomial, ...] = tuple(gens)
        self._gb: dict[MonomialOrder, GroebnerBasis] = {}

    @classmethod
    def parse(cls, ring: Ring | str, text: str) -> Ideal:
        if isinstance(ring, str):
            ring = Ring.parse(ring)
        return cls(ring, parse_polynomial_list(text, ring))

    @classmethod
    def unit(cls, ring: Ring) -> Ideal:
        return cls(ring, [ring.one()])

    # -- Groebner data --------------------------------------------------
    def gb(self, order: MonomialOrder | None = None) -> GroebnerBasis:
        order = order or MonomialOrder.default(self.ring)
        hit = self._gb.get(order)
        if hit is None:
            hit = buchberger(self.generators, order, ring=self.ring)
            self._gb[order] = hit
        return hit

    def basis(self) -> tuple[Polynomial, ...]:
        """Reduced Groebner basis under the ring's default lex order."""
        return self.gb().elements

    @cached_property
    def canonical_key(self) -> tuple:
        """Ring-independent canonical form keyed by variable names."""
        names = self.ring.variables
        out = []
        for g in self.basis():
            out.append(tuple(sorted(
                (tuple((names[i], k) for i, k in enumerate(e) if k), c) for e, c in g.terms.items()
            )))
        return tuple(out)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return ideal_equality(self, other)

    def __hash__(self):
        return hash((self.ring, self.canonical_key))

    def __contains__(self, f: Polynomial) -> bool:
        return reduces_to_zero(f, self.gb())

    def contains_ideal(self, other: Ideal) -> bool:
        _same_ring(self, other)
        return all(g in self for g in other.generators)

    # -- simple predicates ------------------------------------------------
    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        if any(g.is_constant() for g in self.generators):
            return True
        return self.gb().is_unit()

    def is_proper(self) -> bool:
        return not self.is_unit()

    def is_homogeneous(self) -> bool:
        if all(g.is_homogeneous() for g in self.generators):
            return True
        return all(g.is_homogeneous() for g in self.basis())

    def support(self) -> set[str]:
        out: set[str] = set()
        for g in self.basis():
            out |= g.support()
        return out

    def is_principal(self) -> bool:
        return len(self.generators) <= 1 or len(self.basis()) <= 1

    # -- constructions ------------------------------------------------------
    def __add__(self, other: Ideal) -> Ideal:
        _same_ring(self, other)
        return Ideal(self.ring, self.generators + other.generators)

    def __mul__(self, other: Ideal) -> Ideal:
        _same_ring(self, other)
        return Ideal(self.ring, [f * g for f in self.generators for g in other.generators])

    def with_generators(self, extra: Iterable[Polynomial]) -> Ideal:
        return Ideal(self.ring, list(self.generators) + list(extra))

    def contract(self, y: str) -> Ideal:
        """The same generators in the ring without ``y`` (they must be ``y``-free)."""
        sub = self.ring.drop(y)
        return Ideal(sub, [contract_to_subring(g, y, sub) for g in self.generators])

    def to_ring(self, ring: Ring) -> Ideal:
        return Ideal(ring, [g.substitute_ring(ring) for g in self.generators])

    def trimmed(self) -> tuple[Polynomial, ...]:
        """An irredundant generating subset (greedy, lowest degree first)."""
        gens = sorted(self.generators, key=lambda g: (g.total_degree(), len(g.terms)))
        kept: list[Polynomial] = []
        for g in gens:
            if not kept or g not in Ideal(self.ring, kept):
                kept.append(g)
        changed = True
        while changed and len(kept) > 1:
            changed = False
            for i in range(len(kept) - 1, -1, -1):
                rest = kept[:i] + kept[i + 1:]
                if kept[i] in Ideal(self.ring, rest):
                    kept = rest
                    changed = True
                    break
        return tuple(kept)

    def __str__(self):
        return "ideal(" + ", ".join(str(g) for g in self.generators) + ")"

    def __repr__(self):
        return f"Ideal({self.ring.variables!r}, {str(self)!r})"


def _same_ring(a: Ideal, b: Ideal):
    if a.ring != b.ring:
        raise PolynomialError(f"ring mismatch: {a.ring} vs {b.ring}")


def ideal_equality(a: Ideal, b: Ideal) -> bool:
    _same_ring(a, b)
    if a.generators == b.generators:
        return True
    return a.basis() == b.basis()


def _extend(ring: Ring) -> tuple[Ring, str]:
    t = ring.fresh_name("t")
    return Ring((t,) + ring.variables), t


def elimination_ideal(ideal: Ideal, drop: Sequence[str]) -> Ideal:
    sub, gens = elimination_ideal_generators(ideal.generators, ideal.ring, list(drop))
    return Ideal(sub, gens)


def initial_ideal(ideal: Ideal, order: MonomialOrder | None = None) -> Ideal:
    gb = ideal.gb(order)
    return Ideal(ideal.ring, [ideal.ring.monomial(e) for e in gb.leading_monomials()])


def intersection(a: Ideal, b: Ideal) -> Ideal:
    """``a`` meet ``b`` as the ``t``-free part of ``t*a + (1-t)*b``."""
    _same_ring(a, b)
    if a.is_zero() or b.is_zero():
        return Ideal(a.ring)
    if _all_monomial(a.generators) and _all_monomial(b.generators):
        return _monomial_intersection(a, b)
    big, t = _extend(a.ring)
    tt = big.var(t)
    gens = [tt * g.substitute_ring(big) for g in a.generators]
    gens += [(1 - tt) * g.substitute_ring(big) for g in b.generators]
    sub, out = elimination_ideal_generators(gens, big, [t])
    return Ideal(a.ring, [g.substitute_ring(a.ring) for g in out])


def quotient(ideal: Ideal, f: Polynomial) -> Ideal:
    """``ideal : f`` computed as ``(ideal meet <f>) / f``."""
    if f.is_zero():
        raise PolynomialError("quotient by the zero polynomial")
    if f.is_constant():
        return ideal
    meet = intersection(ideal, Ideal(ideal.ring, [f]))
    return Ideal(ideal.ring, [_exact_divide(g, f) for g in meet.generators])


def _exact_divide(g: Polynomial, f: Polynomial) -> Polynomial:
    order = MonomialOrder.default(g.ring)
    lcf, lef = leading_term(f, order)
    q = g.ring.zero()
    r = g
    while r:
        c, e = leading_term(r, order)
        d = tuple(a - b for a, b in zip(e, lef))
        if min(d) < 0:
            raise PolynomialError("inexact division")
        step = g.ring.monomial(d, c / lcf)
        q = q + step
        r = r - step * f
    return q


def saturation(ideal: Ideal, f: Polynomial) -> Ideal:
    """``ideal : f^infinity`` as the ``t``-free part of ``ideal + <1 - t f>``."""
    if f.is_zero():
        raise PolynomialError("saturation by the zero polynomial")
    if f.is_constant() or ideal.is_zero():
        return ideal
    big, t = _extend(ideal.ring)
    gens = [g.substitute_ring(big) for g in ideal.generators]
    gens.append(1 - big.var(t) * f.substitute_ring(big))
    _, out = elimination_ideal_generators(gens, big, [t])
    return Ideal(ideal.ring, [g.substitute_ring(ideal.ring) for g in out])


def radical_membership(f: Polynomial, ideal: Ideal) -> bool:
    """Rabinowitsch: ``f`` is in the radical iff ``1`` is in ``ideal + <1 - t f>``."""
    if f.is_zero() or f in ideal:
        return True
    if ideal.is_zero():
        return False
    big, t = _extend(ideal.ring)
    gens = [g.substitute_ring(big) for g in ideal.generators]
    gens.append(1 - big.var(t) * f.substitute_ring(big))
    return buchberger(gens, MonomialOrder.default(big), ring=big).is_unit()


def radical_equality(a: Ideal, b: Ideal) -> bool:
    _same_ring(a, b)
    return (all(radical_membership(g, b) for g in a.generators)
            and all(radical_membership(g, a) for g in b.generators))


# -- dimension ---------------------------------------------------------------

def _max_independent_set(n: int, supports: list[int]) -> int:
    """Largest variable subset containing no generator support (bitmasks)."""
    if 0 in supports:
        return -1
    for size in range(n, 0, -1):
        for combo in combinations(range(n), size):
            mask = 0
            for i in combo:
                mask |= 1 << i
            if all((s & mask) != s for s in supports):
                return size
    return 0


def _support_mask(e: tuple[int, ...]) -> int:
    m = 0
    for i, k in enumerate(e):
        if k:
            m |= 1 << i
    return m


def dimension(ideal: Ideal) -> int:
    """Krull dimension of ``R/I`` via the initial ideal; ``-1`` for the unit ideal."""
    if ideal.is_unit():
        return -1
    leads = ideal.gb().leading_monomials()
    supports = _minimal_masks([_support_mask(e) for e in leads])
    return _max_independent_set(ideal.ring.nvars, supports)


def codimension(ideal: Ideal) -> int:
    if ideal.is_unit():
        return ideal.ring.nvars + 1
    return ideal.ring.nvars - dimension(ideal)


def _minimal_masks(masks: list[int]) -> list[int]:
    masks = sorted(set(masks), key=lambda m: bin(m).count("1"))
    out: list[int] = []
    for m in masks:
        if not any((s & m) == s for s in out):
            out.append(m)
    return out


# -- monomial ideals ---------------------------------------------------------

def _all_monomial(gens: Sequence[Polynomial]) -> bool:
    return all(g.is_monomial() for g in gens)


def is_monomial(ideal: Ideal) -> bool:
    if _all_monomial(ideal.generators):
        return True
    return _all_monomial(ideal.basis())


def minimal_monomial_generators(ideal: Ideal) -> list[tuple[int, ...]]:
    if not is_monomial(ideal):
        raise PolynomialError("not a monomial ideal")
    gens = ideal.generators if _all_monomial(ideal.generators) else ideal.basis()
    exps = sorted({next(iter(g.terms)) for g in gens}, key=sum)
    out: list[tuple[int, ...]] = []
    for e in exps:
        if not any(all(a <= b for a, b in zip(m, e)) for m in out):
            out.append(e)
    return out


def _monomial_intersection(a: Ideal, b: Ideal) -> Ideal:
    ga = minimal_monomial_generators(a)
    gb_ = minimal_monomial_generators(b)
    lcms = [tuple(max(x, y) for x, y in zip(p, q)) for p in ga for q in gb_]
    return Ideal(a.ring, [a.ring.monomial(e) for e in _minimalize(lcms)])


def _minimalize(exps: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []
    for e in sorted(set(exps), key=sum):
        if not any(all(x <= y for x, y in zip(m, e)) for m in out):
            out.append(e)
    return out


def is_squarefree(ideal: Ideal) -> bool:
    return all(max(e) <= 1 for e in minimal_monomial_generators(ideal))


def _minimal_covers(n: int, supports: list[int]) -> list[int]:
    """Minimal vertex covers of the hypergraph with edge bitmasks ``supports``."""
    covers: set[int] = set()

    def expand(chosen: int, remaining: list[int]):
        for s in remaining:
            if not (s & chosen):
                for i in range(n):
                    if s >> i & 1:
                        expand(chosen | (1 << i), [r for r in remaining if not (r & (chosen | (1 << i)))])
                return
        covers.add(chosen)

    expand(0, supports)
    return _minimal_masks(list(covers))


def minimal_primes_monomial(ideal: Ideal) -> list[Ideal]:
    exps = minimal_monomial_generators(ideal)
    ring = ideal.ring
    if any(sum(e) == 0 for e in exps):
        return []
    covers = _minimal_covers(ring.nvars, _minimal_masks([_support_mask(e) for e in exps]))
    out = []
    for c in sorted(covers):
        out.append(Ideal(ring, [ring.gens()[i] for i in range(ring.nvars) if c >> i & 1]))
    return out


def is_unmixed_monomial(ideal: Ideal) -> bool:
    """All minimal primes share a height and no embedded primes occur."""
    exps = minimal_monomial_generators(ideal)
    ring = ideal.ring
    if any(sum(e) == 0 for e in exps):
        return True
    if not exps:
        return True
    covers = _minimal_covers(ring.nvars, _minimal_masks([_support_mask(e) for e in exps]))
    heights = {bin(c).count("1") for c in covers}
    if len(heights) > 1:
        return False
    if all(max(e) <= 1 for e in exps):
        return True
    # the minimal primary component at P sets the variables outside P to 1
    components = []
    for c in covers:
        comp = _minimalize([tuple(k if c >> i & 1 else 0 for i, k in enumerate(e)) for e in exps])
        components.append(comp)
    meet = components[0]
    for comp in components[1:]:
        meet = _minimalize([tuple(max(x, y) for x, y in zip(p, q)) for p in meet for q in comp])
    return sorted(meet) == sorted(exps)


def is_generated_by_variables(ideal: Ideal) -> bool:
    """The reduced basis consists of single variables (true for the zero ideal)."""
    for g in ideal.basis():
        if len(g.terms) != 1:
            return False
        (e, c), = g.terms.items()
        if sum(e) != 1:
            return False
    return True
