from itertools import permutations

import pytest

from gvdkit.groebner import buchberger
from gvdkit.gvd import (
    CyI,
    Degeneracy,
    GVDConfig,
    NyI,
    OrderBoundExceeded,
    Strategy,
    find_lex_compatibly_gvd_orders,
    find_one_step_gvd,
    is_gvd,
    is_lex_compatibly_gvd,
    is_weakly_gvd,
    literal_decomposition_holds,
    one_step_gvd,
    replay,
)
from gvdkit.ideals import Ideal
from gvdkit.outcome import Verdict
from gvdkit.poly import MonomialOrder, Ring, y_split

from corpus import CYCLE5, I_TEXT, J_TEXT, corpus

RA = Ring.parse("a..f")


@pytest.fixture
def I():
    return Ideal.parse(RA, I_TEXT)


@pytest.fixture
def J():
    return Ideal.parse(RA, J_TEXT)


class TestOneStep:
    def test_pivot_b(self, I):
        r = one_step_gvd(I, "b")
        assert r.is_gvd
        assert r.C == Ideal.parse(RA, "a*c*d*e + c^2*d*e + d^2*e^2 + d*e*f^2, d*e, a^2 - c*f")
        assert r.N == Ideal.parse(RA, "a*c*d*e + c^2*d*e + d^2*e^2 + d*e*f^2")
        assert r.degeneracy is Degeneracy.NONDEGENERATE

    def test_pivot_c_verdict_and_n(self, I):
        r = one_step_gvd(I, "c")
        assert not r.is_gvd
        assert r.N == Ideal.parse(RA, "b*d*e")
        assert NyI(I, "c") == Ideal.parse(RA, "b*d*e")

    def test_pivot_c_c_from_definition(self, I):
        # the top c-coefficient of c^2*d*e + a*c*d*e + ... is d*e
        assert CyI(I, "c") == Ideal.parse(RA, "d*e, b*f")

    def test_single_variable(self):
        r = Ring(("x", "y"))
        res = one_step_gvd(Ideal.parse(r, "x"), "x")
        assert res.is_gvd and res.C.is_unit() and res.N.is_zero()
        assert res.degeneracy is Degeneracy.DEGENERATE
        assert NyI(Ideal.parse(r, "x"), "x").is_zero()

    def test_absent_pivot(self):
        res = one_step_gvd(Ideal.parse(Ring(("x", "y", "z", "w")), "x*y - z^2"), "w")
        assert res.is_gvd and res.C == res.N and res.degenerate

    def test_unknown_pivot(self, I):
        with pytest.raises(ValueError):
            one_step_gvd(I, "q")

    def test_find_one_step(self, I):
        assert find_one_step_gvd(I) == ["b"]
        assert find_one_step_gvd(Ideal(RA, [])) == list("abcdef")
        r5 = Ring.parse("a..e")
        assert find_one_step_gvd(Ideal.parse(r5, CYCLE5)) == list("abcde")

    def test_literal_definition_agrees(self, I, J):
        for ideal in (I, J):
            for y in RA.variables:
                r = one_step_gvd(ideal, y)
                assert literal_decomposition_holds(r) == r.is_gvd


def _c_n_under(ideal, y, order):
    gb = buchberger(ideal.generators, order, ring=ideal.ring)
    split = [y_split(g, y) for g in gb.elements]
    return Ideal(ideal.ring, [q for q, _ in split]), Ideal(ideal.ring, [q for q, d in split if d == 0])


CORPUS = corpus()


@pytest.mark.parametrize("ideal", CORPUS, ids=str)
def test_one_step_properties(ideal):
    ring = ideal.ring
    for y in ring.variables:
        r = one_step_gvd(ideal, y)
        assert r.C.contains_ideal(r.N)
        for g in r.C.generators + r.N.generators:
            assert g.degree_in(y) == 0
        # C and N do not depend on how the variables below y are ordered
        rest = [v for v in ring.variables if v != y]
        other = MonomialOrder.lex(ring, [y] + rest[::-1])
        C2, N2 = _c_n_under(ideal, y, other)
        assert C2 == r.C and N2 == r.N
        if r.is_gvd:
            assert literal_decomposition_holds(r)


@pytest.mark.parametrize("ideal", CORPUS, ids=str)
def test_gvd_implies_weak_and_replays(ideal):
    g = is_gvd(ideal)
    w = is_weakly_gvd(ideal)
    assert not g.is_unknown
    if g.is_true:
        assert w.is_true
        assert replay(ideal, g)
    if w.is_true:
        assert replay(ideal, w, "weak")


class TestRecursive:
    def test_sample_ideal(self, I):
        assert is_gvd(I).is_true
        assert is_weakly_gvd(I).is_true
        assert is_lex_compatibly_gvd(I, list("fedcba")).is_false

    def test_counterexample_pair(self, J):
        assert is_weakly_gvd(J).is_true
        assert is_gvd(J).is_false

    def test_linear_hypersurface(self):
        r = Ring(("x", "y"))
        out = is_gvd(Ideal.parse(r, "x - y"))
        assert out.is_true
        assert out.trace[0].pivot == "x"

    def test_trivial_ideals(self):
        r = Ring(("x", "y"))
        for text in ("0", "1", "x", "x, y"):
            assert is_gvd(Ideal.parse(r, text)).is_true
        assert is_gvd(Ideal(Ring(()), [])).is_true

    def test_not_unmixed(self):
        r = Ring(("x", "y", "z"))
        out = is_gvd(Ideal.parse(r, "x*y, x*z"))
        assert out.is_false and "unmixed" in out.reasons[0]

    def test_assume_unmixed_config(self):
        r = Ring(("x", "y", "z"))
        cfg = GVDConfig(assume_unmixed=True)
        assert is_gvd(Ideal.parse(r, "x*y, x*z"), cfg).is_true

    def test_strategies_agree(self, I, J):
        cfg = GVDConfig(variable_strategy=Strategy.FEWEST_OCCURRENCES)
        for ideal in (I, J):
            assert is_gvd(ideal, cfg).verdict is is_gvd(ideal).verdict
            assert is_weakly_gvd(ideal, cfg).verdict is is_weakly_gvd(ideal).verdict

    def test_timeout_gives_unknown(self, I, fresh_memo):
        out = is_gvd(I, timeout=-1.0)
        assert out.is_unknown and out.reasons == ["timeout"]
        assert is_gvd(I).is_true

    def test_memo_is_transparent(self, I, fresh_memo):
        first = is_gvd(I)
        second = is_gvd(I)
        assert first.verdict is second.verdict
        assert first.trace == second.trace

    def test_replay_rejects_forged_trace(self, J):
        forged = is_gvd(Ideal.parse(RA, I_TEXT))
        assert not replay(J, forged)

    def test_weak_trace_branches(self, J):
        out = is_weakly_gvd(J)
        assert [s.branch for s in out.trace if s.branch != "base"]
        assert all(s.branch in ("C", "N") for s in out.trace if s.branch != "base")


class TestLexCompatible:
    def test_zero_ideal(self):
        r = Ring(("x", "y"))
        assert is_lex_compatibly_gvd(Ideal(r, []), ["y", "x"]).is_true

    def test_five_cycle(self):
        r = Ring.parse("a..e")
        ideal = Ideal.parse(r, CYCLE5)
        # after the first pivot the deletion is a path, and only its two ends shed
        edges = {frozenset(p) for p in ("ab", "bc", "cd", "de", "ea")}
        expected = {p for p in permutations("abcde") if frozenset(p[:2]) not in edges}
        assert len(expected) == 60
        assert is_lex_compatibly_gvd(ideal, list("acbde")).is_true
        assert is_lex_compatibly_gvd(ideal, list("abcde")).is_false
        assert set(find_lex_compatibly_gvd_orders(ideal)) == expected
        brute = {p for p in permutations("abcde") if is_lex_compatibly_gvd(ideal, p).is_true}
        assert brute == expected

    def test_invalid_order(self, I):
        with pytest.raises(ValueError):
            is_lex_compatibly_gvd(I, list("abcde"))

    def test_sample_ideal_has_no_order(self, I):
        assert find_lex_compatibly_gvd_orders(I) == []

    def test_principal_variable(self):
        r = Ring(("x", "y"))
        assert sorted(find_lex_compatibly_gvd_orders(Ideal.parse(r, "x"))) == [("x", "y"), ("y", "x")]

    def test_search_agrees_with_exhaustive(self):
        r = Ring(("x", "y", "z", "w"))
        for text in ("x*z - y^2, x*w - y*z, y*w - z^2", "x*y - z*w", "x*y, z*w", "x^2 - y*z"):
            ideal = Ideal.parse(r, text)
            found = set(find_lex_compatibly_gvd_orders(ideal))
            brute = {p for p in permutations(r.variables) if is_lex_compatibly_gvd(ideal, p).is_true}
            assert found == brute
            if found:
                assert is_gvd(ideal).is_true

    def test_bound(self):
        r = Ring.parse("a..i")
        ideal = Ideal.parse(r, "a*b")
        with pytest.raises(OrderBoundExceeded):
            find_lex_compatibly_gvd_orders(ideal)
        assert len(find_lex_compatibly_gvd_orders(Ideal.parse(Ring.parse("a..c"), "a*b"), max_variables=3)) == 6


def test_unknown_side_condition_never_becomes_false(monkeypatch):
    from gvdkit import gvd as gvd_module
    from gvdkit.outcome import CheckOutcome

    def undecided(ideal, unmixed=None):
        return CheckOutcome(Verdict.UNKNOWN, ["forced"])

    monkeypatch.setattr(gvd_module, "is_radical_tiered", undecided)
    gvd_module.clear_memo()
    try:
        out = is_weakly_gvd(Ideal.parse(RA, J_TEXT))
        assert out.is_unknown
    finally:
        gvd_module.clear_memo()
