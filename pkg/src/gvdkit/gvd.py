"""Geometric vertex decompositions and the recursive decomposability checks."""

from __future__ import annotations

import enum
import threading
import time
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations
from typing import Sequence

from .groebner import GroebnerBasis, reduces_to_zero
from .homalg import is_cm, is_radical_tiered, is_unmixed
from .ideals import Ideal, intersection, is_generated_by_variables, radical_equality
from .outcome import CheckOutcome, TraceStep, Verdict
from .poly import MonomialOrder, Polynomial, initial_y_form, y_split


class Degeneracy(enum.Enum):
    DEGENERATE = "degenerate"
    NONDEGENERATE = "nondegenerate"


class Strategy(enum.Enum):
    DECLARATION_ORDER = "declaration"
    FEWEST_OCCURRENCES = "fewest"


@dataclass(frozen=True)
class GVDConfig:
    assume_unmixed: bool = False
    assume_radical: bool = False
    assume_cm: bool = False
    variable_strategy: Strategy = Strategy.DECLARATION_ORDER
    # accept pd = codim as the CM verdict for inhomogeneous ideals
    accept_inhomogeneous_cm: bool = False

    def key(self) -> tuple:
        return (self.assume_unmixed, self.assume_radical, self.assume_cm,
                self.variable_strategy.value, self.accept_inhomogeneous_cm)


class OneStepResult:
    """Outcome of a single geometric vertex decomposition attempt at ``pivot``."""

    def __init__(self, ideal: Ideal, pivot: str, is_gvd: bool, C: Ideal, N: Ideal,
                 split: list[tuple[Polynomial, int]], in_y: GroebnerBasis):
        self.ideal = ideal
        self.pivot = pivot
        self.is_gvd = is_gvd
        self.C = C
        self.N = N
        self.split_data = split
        self.in_y_basis = in_y

    @property
    def in_y(self) -> Ideal:
        return Ideal(self.ideal.ring, self.in_y_basis.elements)

    @cached_property
    def degeneracy(self) -> Degeneracy:
        if self.C.is_unit() or radical_equality(self.C, self.N):
            return Degeneracy.DEGENERATE
        return Degeneracy.NONDEGENERATE

    @property
    def degenerate(self) -> bool:
        return self.degeneracy is Degeneracy.DEGENERATE

    def contracted(self) -> tuple[Ideal, Ideal]:
        return self.C.contract(self.pivot), self.N.contract(self.pivot)

    def as_tuple(self) -> tuple[bool, Ideal, Ideal]:
        return self.is_gvd, self.C, self.N

    def __repr__(self):
        return f"OneStepResult({self.is_gvd}, C={self.C}, N={self.N})"


_lock = threading.Lock()
_one_step_memo: dict = {}
_check_memo: dict = {}
_MEMO_LIMIT = 100_000


def _remember(table: dict, key, value):
    with _lock:
        if len(table) > _MEMO_LIMIT:
            table.clear()
        table[key] = value


def clear_memo():
    with _lock:
        _one_step_memo.clear()
        _check_memo.clear()


def one_step_gvd(ideal: Ideal, y: str) -> OneStepResult:
    """Test ``in_y(I) = C ∩ (N + <y>)`` using lex with ``y`` greatest.

    ``C`` and ``N`` are extended from the ``y``-free subring and ``N ⊆ C``, so
    ``C ∩ (N + <y>) = N + y*C``; as ``in_y(I) ⊆ N + y*C`` always holds, the
    decomposition exists iff ``y*q`` lies in ``in_y(I)`` for every split
    ``g = q*y^d + r`` with ``d >= 2``.  The initial ``y``-forms of the basis
    are themselves a Groebner basis of ``in_y(I)``.
    """
    ring = ideal.ring
    ring.index(y)
    mkey = (ring.variables, ideal.canonical_key, y)
    hit = _one_step_memo.get(mkey)
    if hit is not None:
        return hit
    order = MonomialOrder.lex(ring, [y])
    gb = ideal.gb(order)
    split = [y_split(g, y) for g in gb.elements]
    C = Ideal(ring, [q for q, _ in split])
    N = Ideal(ring, [q for q, d in split if d == 0])
    in_y = GroebnerBasis(ring, order, tuple(initial_y_form(g, y) for g in gb.elements), reduced=False)
    yv = ring.var(y)
    ok = all(reduces_to_zero(yv * q, in_y) for q, d in split if d >= 2)
    result = OneStepResult(ideal, y, ok, C, N, split, in_y)
    _remember(_one_step_memo, mkey, result)
    return result


def literal_decomposition_holds(result: OneStepResult) -> bool:
    """Recheck a one-step result straight from the definition, via intersection."""
    ring = result.ideal.ring
    rhs = intersection(result.C, result.N + Ideal(ring, [ring.var(result.pivot)]))
    return result.in_y == rhs


def CyI(ideal: Ideal, y: str) -> Ideal:
    return one_step_gvd(ideal, y).C


def NyI(ideal: Ideal, y: str) -> Ideal:
    return one_step_gvd(ideal, y).N


def find_one_step_gvd(ideal: Ideal) -> list[str]:
    return [y for y in ideal.ring.variables if one_step_gvd(ideal, y).is_gvd]


# -- recursive checks ----------------------------------------------------------

class CheckTimeout(Exception):
    pass


def _is_base(ideal: Ideal) -> bool:
    return ideal.is_unit() or is_generated_by_variables(ideal)


def _pivots(ideal: Ideal, strategy: Strategy) -> list[str]:
    # a variable absent from I only re-poses I in a smaller ring
    support = ideal.support()
    names = [v for v in ideal.ring.variables if v in support]
    if strategy is Strategy.FEWEST_OCCURRENCES:
        counts = {v: sum(1 for g in ideal.basis() if v in g.support()) for v in names}
        names.sort(key=lambda v: counts[v])
    return names


class _Checker:
    def __init__(self, kind: str, config: GVDConfig, timeout: float | None):
        self.kind = kind
        self.config = config
        self.deadline = None if timeout is None else time.monotonic() + timeout

    def tick(self):
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise CheckTimeout()

    def memo_key(self, ideal: Ideal, extra=()):
        return (self.kind, self.config.key(), ideal.ring.variables, ideal.canonical_key, extra)

    def prelude(self, ideal: Ideal) -> CheckOutcome | None:
        ring = ideal.ring.variables
        if _is_base(ideal):
            return CheckOutcome(Verdict.TRUE, [], [TraceStep(ring, None, "base")])
        if not self.config.assume_unmixed:
            um = is_unmixed(ideal)
            if um.is_false:
                return CheckOutcome(Verdict.FALSE, [f"not unmixed in {ideal.ring}"])
            if um.is_unknown:
                return CheckOutcome(Verdict.UNKNOWN, ["unmixedness undecided"] + um.reasons)
        return None

    # plain GVD
    def gvd(self, ideal: Ideal) -> CheckOutcome:
        self.tick()
        key = self.memo_key(ideal)
        hit = _check_memo.get(key)
        if hit is not None:
            return hit
        out = self.prelude(ideal)
        if out is None:
            out = self._gvd_search(ideal)
        _remember(_check_memo, key, out)
        return out

    def _gvd_search(self, ideal: Ideal) -> CheckOutcome:
        ring = ideal.ring.variables
        reasons: list[str] = []
        for y in _pivots(ideal, self.config.variable_strategy):
            r = one_step_gvd(ideal, y)
            if not r.is_gvd:
                continue
            C, N = r.contracted()
            oc = self.gvd(C)
            if oc.is_false:
                continue
            on = self.gvd(N)
            if on.is_false:
                continue
            if oc.is_true and on.is_true:
                step = TraceStep(ring, y, "both", r.degenerate)
                return CheckOutcome(Verdict.TRUE, [], [step] + oc.trace + on.trace)
            reasons.append(f"pivot {y}: undecided branch")
            reasons += oc.reasons + on.reasons
        if reasons:
            return CheckOutcome(Verdict.UNKNOWN, reasons)
        return CheckOutcome(Verdict.FALSE, [f"no pivot decomposes {ideal} in {ideal.ring}"])

    # weak GVD
    def weak(self, ideal: Ideal) -> CheckOutcome:
        self.tick()
        key = self.memo_key(ideal)
        hit = _check_memo.get(key)
        if hit is not None:
            return hit
        out = self.prelude(ideal)
        if out is None:
            out = self._weak_search(ideal)
        _remember(_check_memo, key, out)
        return out

    def _weak_search(self, ideal: Ideal) -> CheckOutcome:
        ring = ideal.ring.variables
        cfg = self.config
        reasons: list[str] = []
        for y in _pivots(ideal, cfg.variable_strategy):
            r = one_step_gvd(ideal, y)
            if not r.is_gvd:
                continue
            C, N = r.contracted()
            notes: list[str] = []
            if r.degenerate:
                sub = self.weak(N)
                step = TraceStep(ring, y, "N", True)
            else:
                cm_out = None if cfg.assume_cm else is_cm(N, cfg.accept_inhomogeneous_cm)
                cm = Verdict.TRUE if cm_out is None else cm_out.verdict
                if cm is Verdict.FALSE:
                    continue
                if cfg.assume_radical:
                    rad = Verdict.TRUE
                else:
                    # Cohen-Macaulay ideals are unmixed
                    rad = is_radical_tiered(N, unmixed=True if cm_out is not None and cm_out.is_true else None).verdict
                if rad is Verdict.FALSE:
                    continue
                if rad is Verdict.UNKNOWN:
                    notes.append(f"pivot {y}: radicality of N undecided")
                if cm is Verdict.UNKNOWN:
                    notes.append(f"pivot {y}: Cohen-Macaulayness of N undecided")
                sub = self.weak(C)
                step = TraceStep(ring, y, "C", False)
            if sub.is_false:
                continue
            if sub.is_true and not notes:
                return CheckOutcome(Verdict.TRUE, [], [step] + sub.trace)
            reasons += notes + sub.reasons
        if reasons:
            return CheckOutcome(Verdict.UNKNOWN, reasons)
        return CheckOutcome(Verdict.FALSE, [f"no pivot weakly decomposes {ideal} in {ideal.ring}"])

    # lex-compatible GVD
    def lex(self, ideal: Ideal, order: tuple[str, ...]) -> CheckOutcome:
        self.tick()
        key = self.memo_key(ideal, order)
        hit = _check_memo.get(key)
        if hit is not None:
            return hit
        out = self.prelude(ideal)
        if out is None:
            y = order[0]
            r = one_step_gvd(ideal, y)
            if not r.is_gvd:
                out = CheckOutcome(Verdict.FALSE, [f"no decomposition at forced pivot {y} in {ideal.ring}"])
            else:
                C, N = r.contracted()
                oc = self.lex(C, order[1:])
                on = self.lex(N, order[1:]) if not oc.is_false else oc
                if oc.is_true and on.is_true:
                    step = TraceStep(ideal.ring.variables, y, "both", r.degenerate)
                    out = CheckOutcome(Verdict.TRUE, [], [step] + oc.trace + on.trace)
                elif oc.is_false or on.is_false:
                    out = CheckOutcome(Verdict.FALSE, (oc.reasons if oc.is_false else on.reasons))
                else:
                    out = CheckOutcome(Verdict.UNKNOWN, oc.reasons + on.reasons)
        _remember(_check_memo, key, out)
        return out


def _run(fn, *args) -> CheckOutcome:
    try:
        return fn(*args)
    except CheckTimeout:
        return CheckOutcome(Verdict.UNKNOWN, ["timeout"])


def is_gvd(ideal: Ideal, config: GVDConfig | None = None, timeout: float | None = None) -> CheckOutcome:
    """Geometric vertex decomposability, searching pivots recursively."""
    return _run(_Checker("gvd", config or GVDConfig(), timeout).gvd, ideal)


def is_weakly_gvd(ideal: Ideal, config: GVDConfig | None = None, timeout: float | None = None) -> CheckOutcome:
    return _run(_Checker("weak", config or GVDConfig(), timeout).weak, ideal)


def _check_order(ideal: Ideal, order: Sequence[str]) -> tuple[str, ...]:
    order = tuple(order)
    if sorted(order) != sorted(ideal.ring.variables):
        raise ValueError(f"{list(order)} is not a permutation of the ring variables {list(ideal.ring.variables)}")
    return order


def is_lex_compatibly_gvd(ideal: Ideal, order: Sequence[str], config: GVDConfig | None = None,
                          timeout: float | None = None) -> CheckOutcome:
    """GVD with the pivot forced to the largest remaining variable of ``order``."""
    order = _check_order(ideal, order)
    return _run(_Checker("lex", config or GVDConfig(), timeout).lex, ideal, order)


class OrderBoundExceeded(ValueError):
    pass


def find_lex_compatibly_gvd_orders(ideal: Ideal, max_variables: int = 8,
                                   config: GVDConfig | None = None) -> list[tuple[str, ...]]:
    """Every lex order (largest variable first) under which ``ideal`` is compatibly GVD.

    Orders are explored as a prefix tree; a failure for some pending ideal at a
    prefix prunes every order extending it.
    """
    ring = ideal.ring
    if ring.nvars > max_variables:
        raise OrderBoundExceeded(
            f"{ring.nvars} variables exceeds the bound {max_variables}; pass max_variables to override")
    checker = _Checker("lex", config or GVDConfig(), None)
    step_memo: dict = {}

    def step(J: Ideal, y: str):
        k = (J.ring.variables, J.canonical_key, y)
        if k in step_memo:
            return step_memo[k]
        res = None
        pre = checker.prelude(J)
        if pre is not None and not pre.is_true:
            res = None
        else:
            r = one_step_gvd(J, y)
            if r.is_gvd:
                res = [K for K in r.contracted() if not _is_base(K)]
        step_memo[k] = res
        return res

    results: list[tuple[str, ...]] = []
    search_memo: dict = {}

    def search(state: tuple[Ideal, ...], remaining: tuple[str, ...]) -> list[tuple[str, ...]]:
        if not state:
            return list(permutations(remaining))
        skey = (remaining, frozenset(J.canonical_key for J in state))
        if skey in search_memo:
            return search_memo[skey]
        out = []
        for y in remaining:
            nxt: dict = {}
            for J in state:
                children = step(J, y)
                if children is None:
                    break
                for K in children:
                    nxt.setdefault(K.canonical_key, K)
            else:
                rest = tuple(v for v in remaining if v != y)
                out += [(y,) + tail for tail in search(tuple(nxt.values()), rest)]
        search_memo[skey] = out
        return out

    start = () if _is_base(ideal) else (ideal,)
    results = search(start, ring.variables)
    return results


def replay(ideal: Ideal, outcome: CheckOutcome, kind: str = "gvd") -> bool:
    """Follow the recorded pivots of a True outcome without searching."""
    steps = list(outcome.trace)
    pos = 0

    def rec(J: Ideal) -> bool:
        nonlocal pos
        if pos >= len(steps):
            return False
        s = steps[pos]
        pos += 1
        if s.ring != J.ring.variables:
            return False
        if s.branch == "base":
            return _is_base(J)
        if not is_unmixed(J).is_true:
            return False
        r = one_step_gvd(J, s.pivot)
        if not r.is_gvd:
            return False
        C, N = r.contracted()
        if s.branch == "both":
            return rec(C) and rec(N)
        if s.branch == "N":
            return r.degenerate and rec(N)
        if s.branch == "C":
            return (not r.degenerate and not is_radical_tiered(N).is_false
                    and not is_cm(N).is_false and rec(C))
        return False

    return outcome.is_true and rec(ideal) and pos == len(steps)
