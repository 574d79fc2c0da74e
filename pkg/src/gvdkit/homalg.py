"""Syzygies, free resolutions and Ext, used for the unmixed, Cohen-Macaulay
and radical side conditions of the decomposition checks."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from ._engine import Engine, Packer
from .ideals import (
    Ideal,
    codimension,
    initial_ideal,
    intersection,
    is_monomial,
    is_squarefree,
    is_unmixed_monomial,
    minimal_monomial_generators,
    radical_membership,
)
from .outcome import CheckOutcome, Verdict
from .poly import MonomialOrder, Polynomial, PolynomialError, Ring

Column = tuple[Polynomial, ...]


@dataclass(frozen=True)
class FreeModuleMap:
    """``R^source_rank -> R^target_rank`` stored by columns."""

    ring: Ring
    target_rank: int
    columns: tuple[Column, ...]

    @property
    def source_rank(self) -> int:
        return len(self.columns)

    @property
    def matrix(self) -> list[list[Polynomial]]:
        return [[col[i] for col in self.columns] for i in range(self.target_rank)]

    @classmethod
    def from_rows(cls, ring: Ring, rows: Sequence[Sequence[Polynomial]]) -> FreeModuleMap:
        if not rows:
            return cls(ring, 0, ())
        ncols = len(rows[0])
        return cls(ring, len(rows), tuple(tuple(r[j] for r in rows) for j in range(ncols)))

    def transpose(self) -> FreeModuleMap:
        return FreeModuleMap(self.ring, self.source_rank,
                             tuple(tuple(col[i] for col in self.columns) for i in range(self.target_rank)))

    def compose(self, other: FreeModuleMap) -> FreeModuleMap:
        """``self`` after ``other``."""
        if other.target_rank != self.source_rank:
            raise PolynomialError("incompatible maps")
        zero = self.ring.zero()
        cols = []
        for oc in other.columns:
            out = [zero] * self.target_rank
            for k, coeff in enumerate(oc):
                if coeff:
                    for i in range(self.target_rank):
                        if self.columns[k][i]:
                            out[i] = out[i] + coeff * self.columns[k][i]
            cols.append(tuple(out))
        return FreeModuleMap(self.ring, self.target_rank, tuple(cols))

    def is_zero(self) -> bool:
        return all(not e for col in self.columns for e in col)

    def __str__(self):
        return "\n".join(" ".join(str(e) for e in row) for row in self.matrix)


@dataclass(frozen=True)
class ModulePresentation:
    generators: FreeModuleMap
    relations: FreeModuleMap


# -- module Groebner machinery ------------------------------------------------

class _Module:
    """Submodule of ``R^rank`` generated by columns, with a cached GB."""

    def __init__(self, ring: Ring, rank: int, columns: Sequence[Column], positions: Sequence[int] | None = None):
        self.ring = ring
        self.rank = rank
        self.packer = Packer(ring.nvars)
        self.engine = Engine(self.packer, module=True)
        # component i sits at position positions[i]; larger positions lead
        self.positions = list(positions) if positions is not None else [rank - 1 - i for i in range(rank)]
        self.columns = [c for c in columns if any(c)]
        self._gb = None

    def encode(self, col: Column) -> list:
        den = 1
        for e in col:
            for c in e.terms.values():
                den = den * c.denominator // gcd(den, c.denominator)
        items = []
        pack = self.packer.pack
        for i, e in enumerate(col):
            p = self.positions[i]
            for ex, c in e.terms.items():
                items.append((pack(ex, p), int(c * den)))
        items.sort(reverse=True)
        return items

    def decode(self, v: list) -> Column:
        byp: dict[int, dict] = {}
        for m, c in v:
            p, e = self.packer.unpack(m)
            byp.setdefault(p, {})[e] = Fraction(c)
        return tuple(Polynomial(self.ring, byp.get(p, {})) for p in self.positions)

    def gb(self) -> list:
        if self._gb is None:
            self._gb = self.engine.groebner([self.encode(c) for c in self.columns])
        return self._gb

    def contains(self, col: Column) -> bool:
        if not any(col):
            return True
        if not self.columns:
            return False
        return not self.engine.reduce(self.encode(col), self.gb())


def _column_degree(col: Column, shifts: Sequence[int]) -> int:
    return max((e.total_degree() + s for e, s in zip(col, shifts) if e), default=0)


def _column_key(col: Column) -> tuple:
    """Key identifying a column up to a nonzero scalar."""
    lead = next(e for e in col if e)
    c = max(lead.terms.items())[1]
    return tuple(e.scale(1 / c).key() for e in col)


def _trim_columns(ring: Ring, rank: int, cols: list[Column], shifts: Sequence[int]) -> list[Column]:
    """Irredundant generating subset, processed by increasing shifted degree."""
    seen = set()
    uniq = []
    for c in cols:
        if not any(c):
            continue
        key = _column_key(c)
        if key in seen:
            continue
        seen.add(key)
        uniq.append(c)
    uniq.sort(key=lambda c: (_column_degree(c, shifts), sum(len(e.terms) for e in c)))
    kept: list[Column] = []
    for c in uniq:
        if kept and _Module(ring, rank, kept).contains(c):
            continue
        kept.append(c)
    return kept


def syzygies(m: FreeModuleMap, trim: bool = True, shifts: Sequence[int] | None = None) -> FreeModuleMap:
    """A map whose image is the kernel of ``m``.

    Uses a position-over-term module Groebner basis of ``[m ; identity]``: the
    basis elements with vanishing top block are a basis of the syzygy module.
    """
    ring, r, k = m.ring, m.target_rank, m.source_rank
    if k == 0:
        return FreeModuleMap(ring, 0, ())
    zero = ring.zero()
    one = ring.one()
    stacked = []
    for j, col in enumerate(m.columns):
        stacked.append(tuple(col) + tuple(one if i == j else zero for i in range(k)))
    positions = [k + r - 1 - i for i in range(r)] + [k - 1 - j for j in range(k)]
    mod = _Module(ring, r + k, stacked, positions)
    out = []
    for v in mod.gb():
        lead_pos = v[0][0] >> mod.packer.shift
        if lead_pos < k:
            out.append(mod.decode(v)[r:])
    if trim:
        src_shifts = [_column_degree(c, shifts or [0] * r) for c in m.columns]
        out = _trim_columns(ring, k, out, src_shifts)
    return FreeModuleMap(ring, k, tuple(out))


def module_contains(ring: Ring, rank: int, generators: Sequence[Column], v: Column) -> bool:
    return _Module(ring, rank, generators).contains(v)


# -- resolutions --------------------------------------------------------------

def _first_map(ideal: Ideal) -> FreeModuleMap:
    gens = ideal.trimmed() if len(ideal.generators) > 1 else ideal.generators
    return FreeModuleMap(ideal.ring, 1, tuple((g,) for g in gens))


def free_resolution(ideal: Ideal, max_length: int | None = None) -> list[FreeModuleMap]:
    """Maps ``d_1, d_2, ...`` of a free resolution of ``R/I`` (``d_1`` is the generator row).

    Stops when the kernel vanishes or after ``max_length`` maps.
    """
    n = ideal.ring.nvars
    if max_length is None:
        max_length = n
    if max_length > n + 1:
        raise ValueError("resolution length beyond the syzygy bound")
    if ideal.is_zero():
        return []
    maps = [_first_map(ideal)]
    target_shifts = [0]
    while len(maps) < max_length:
        d = maps[-1]
        nxt = syzygies(d, shifts=target_shifts)
        target_shifts = [_column_degree(c, target_shifts) for c in d.columns]
        if nxt.source_rank == 0:
            break
        maps.append(nxt)
    return maps


def ranks(resolution: Sequence[FreeModuleMap]) -> list[int]:
    return [1] + [d.source_rank for d in resolution]


def _ext_data(resolution: list[FreeModuleMap], i: int, ring: Ring, complete: bool):
    """Kernel generators of ``d_{i+1}^T`` and image generators of ``d_i^T`` in ``R^{b_i}``."""
    b = ranks(resolution)
    if i >= len(b):
        return None
    bi = b[i]
    if bi == 0:
        return None
    zero, one = ring.zero(), ring.one()
    if i + 1 < len(b):
        kernel = syzygies(resolution[i].transpose()).columns
    elif complete:
        kernel = tuple(tuple(one if r == j else zero for r in range(bi)) for j in range(bi))
    else:
        raise ValueError("resolution too short for this Ext index")
    image = resolution[i - 1].matrix if i >= 1 else []
    image = [tuple(row) for row in image]
    return bi, kernel, image


def _resolution_for(ideal: Ideal, length: int):
    n = ideal.ring.nvars
    cap = min(length, n + 1)
    res = free_resolution(ideal, cap)
    complete = len(res) < cap
    return res, complete


def ext_is_zero(ideal: Ideal, i: int, resolution: list[FreeModuleMap] | None = None) -> bool:
    """``Ext^i(R/I, R) = 0``, by homology of the dualized resolution."""
    if ideal.is_unit():
        return True
    if ideal.is_zero():
        return i != 0
    if resolution is None:
        res, complete = _resolution_for(ideal, i + 1)
    else:
        res, complete = resolution, True
    data = _ext_data(res, i, ideal.ring, complete)
    if data is None:
        return True
    bi, kernel, image = data
    if not kernel:
        return True
    mod = _Module(ideal.ring, bi, image)
    return all(mod.contains(k) for k in kernel)


def projective_dimension(ideal: Ideal) -> int:
    """``pd(R/I) = max{i : Ext^i(R/I, R) != 0}``."""
    if ideal.is_unit():
        raise PolynomialError("projective dimension of the zero module")
    if ideal.is_zero():
        return 0
    n = ideal.ring.nvars
    res = free_resolution(ideal, n + 1)
    top = min(len(res), n)
    for i in range(top, 0, -1):
        if not ext_is_zero(ideal, i, res):
            return i
    return 0


def unmixed_part(ideal: Ideal) -> Ideal:
    """Equidimensional hull: annihilator of ``Ext^c(R/I, R)`` with ``c = codim I``."""
    if ideal.is_unit():
        raise PolynomialError("unmixed part of the unit ideal")
    c = codimension(ideal)
    if c == 0:
        return ideal
    res, complete = _resolution_for(ideal, c + 1)
    data = _ext_data(res, c, ideal.ring, complete)
    ring = ideal.ring
    if data is None:
        return Ideal.unit(ring)
    bi, kernel, image = data
    ann = None
    for k in kernel:
        if _Module(ring, bi, image).contains(k):
            continue
        syz = syzygies(FreeModuleMap(ring, bi, (tuple(k),) + tuple(image)), trim=False)
        part = Ideal(ring, [col[0] for col in syz.columns])
        ann = part if ann is None else intersection(ann, part)
    return ann if ann is not None else Ideal.unit(ring)


# -- side conditions -------------------------------------------------------------

def is_complete_intersection(ideal: Ideal) -> bool:
    c = codimension(ideal)
    return min(len(ideal.generators), len(ideal.basis())) == c or len(ideal.trimmed()) == c


def is_unmixed(ideal: Ideal) -> CheckOutcome:
    if ideal.is_unit() or ideal.is_zero():
        return CheckOutcome(Verdict.TRUE, ["trivial ideal"])
    if is_monomial(ideal):
        return CheckOutcome(Verdict.of(is_unmixed_monomial(ideal)), ["monomial ideal"])
    if ideal.is_principal():
        return CheckOutcome(Verdict.TRUE, ["principal ideal"])
    if is_complete_intersection(ideal):
        return CheckOutcome(Verdict.TRUE, ["complete intersection"])
    return CheckOutcome(Verdict.of(ideal == unmixed_part(ideal)), ["equidimensional hull"])


def is_cm(ideal: Ideal, accept_inhomogeneous: bool = False) -> CheckOutcome:
    """Cohen-Macaulay test ``pd(R/I) = codim I``."""
    if ideal.is_unit():
        raise PolynomialError("Cohen-Macaulay test of the unit ideal")
    if ideal.is_zero():
        return CheckOutcome(Verdict.TRUE, ["zero ideal"])
    if is_complete_intersection(ideal):
        return CheckOutcome(Verdict.TRUE, ["complete intersection"])
    flag = projective_dimension(ideal) == codimension(ideal)
    if flag:
        # pd = codim forces depth = dim at every maximal ideal
        return CheckOutcome(Verdict.TRUE, ["pd = codim"])
    if ideal.is_homogeneous() or accept_inhomogeneous:
        return CheckOutcome(Verdict.FALSE, ["pd > codim"])
    if is_unmixed(ideal).is_true:
        return CheckOutcome(Verdict.FALSE, ["pd > codim on an unmixed ideal"])
    return CheckOutcome(Verdict.UNKNOWN, [
        "pd-codim criterion applied to inhomogeneous input",
        "criterion says false",
    ])


def _partial(f: Polynomial, i: int) -> Polynomial:
    terms = {}
    for e, c in f.terms.items():
        if e[i]:
            d = list(e)
            d[i] -= 1
            terms[tuple(d)] = c * e[i]
    return Polynomial(f.ring, terms)


def _determinant(rows: list[list[Polynomial]]) -> Polynomial:
    if len(rows) == 1:
        return rows[0][0]
    total = rows[0][0].ring.zero()
    for j, entry in enumerate(rows[0]):
        if entry:
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            term = entry * _determinant(minor)
            total = total + term if j % 2 == 0 else total - term
    return total


JACOBIAN_MINOR_LIMIT = 5000


def jacobian_radical_test(ideal: Ideal, batch: int = 40) -> Verdict:
    """Exact radicality for an unmixed proper ideal in characteristic zero.

    With every associated prime of height ``c``, ``I`` is radical iff it is
    generically reduced, iff the ``c``-minors of the Jacobian matrix lie in no
    minimal prime, iff ``codim(I + minors) > c``.  Returns UNKNOWN when the
    number of minors exceeds ``JACOBIAN_MINOR_LIMIT``.
    """
    from itertools import combinations
    from math import comb

    ring = ideal.ring
    gens = list(ideal.trimmed())
    c = codimension(ideal)
    if c == 0:
        return Verdict.TRUE
    cols = [i for i in range(ring.nvars) if any(e[i] for g in gens for e in g.terms)]
    if comb(len(gens), c) * comb(len(cols), c) > JACOBIAN_MINOR_LIMIT:
        return Verdict.UNKNOWN
    jac = [[_partial(g, i) for i in cols] for g in gens]
    current = ideal
    pending = []
    for rs in combinations(range(len(gens)), c):
        for cs in combinations(range(len(cols)), c):
            m = _determinant([[jac[r][k] for k in cs] for r in rs])
            if m:
                pending.append(m)
            if len(pending) >= batch:
                current = current.with_generators(pending)
                pending = []
                if codimension(current) > c:
                    return Verdict.TRUE
    current = current.with_generators(pending)
    return Verdict.of(codimension(current) > c)


def _squarefree_monomial_part(ring: Ring, g: Polynomial) -> Polynomial:
    """``g`` with its monomial content replaced by that content's support."""
    common = None
    for e in g.terms:
        common = e if common is None else tuple(min(a, b) for a, b in zip(common, e))
    reduced = tuple(min(k, 1) for k in common)
    diff = tuple(a - b for a, b in zip(common, reduced))
    return type(g)(ring, {tuple(x - d for x, d in zip(e, diff)): c for e, c in g.terms.items()})


def radical_orders(ring: Ring) -> list[MonomialOrder]:
    n = ring.nvars
    out = [MonomialOrder.default(ring)]
    for k in range(1, n):
        out.append(MonomialOrder(tuple(list(range(k, n)) + list(range(k)))))
    return out


def is_radical_tiered(ideal: Ideal, unmixed: bool | None = None) -> CheckOutcome:
    """Three-valued radicality.

    Tiers: squarefree monomial ideal, squarefree initial ideal under a few lex
    orders, the Jacobian criterion when ``I`` is unmixed (pass ``unmixed`` if
    already known), then a search for a witness in the radical but not in ``I``.
    """
    ring = ideal.ring
    if ideal.is_unit() or ideal.is_zero():
        return CheckOutcome(Verdict.TRUE, ["trivial ideal"])
    if is_monomial(ideal):
        if is_squarefree(ideal):
            return CheckOutcome(Verdict.TRUE, ["squarefree monomial ideal"])
        for e in minimal_monomial_generators(ideal):
            if max(e) > 1:
                w = ring.monomial(tuple(min(k, 1) for k in e))
                return CheckOutcome(Verdict.FALSE, [f"witness {w} in radical but not in ideal"])
    tried = []
    for order in radical_orders(ring):
        init = initial_ideal(ideal, order)
        tried.append(">".join(order.names(ring)))
        if is_squarefree(init):
            return CheckOutcome(Verdict.TRUE, [f"squarefree initial ideal under lex {tried[-1]}"])
    if unmixed is None:
        unmixed = is_unmixed(ideal).is_true
    if unmixed:
        v = jacobian_radical_test(ideal)
        if v is not Verdict.UNKNOWN:
            return CheckOutcome(v, ["Jacobian criterion on an unmixed ideal"])
    candidates = [_squarefree_monomial_part(ring, g) for g in ideal.basis()]
    candidates += ring.gens()
    for w in candidates:
        if w not in ideal and radical_membership(w, ideal):
            return CheckOutcome(Verdict.FALSE, [f"witness {w} in radical but not in ideal"])
    return CheckOutcome(Verdict.UNKNOWN, ["no certificate found; tried lex orders " + ", ".join(tried)])
