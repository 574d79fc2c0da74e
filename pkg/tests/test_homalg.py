import pytest

from gvdkit.homalg import (
    FreeModuleMap,
    ext_is_zero,
    free_resolution,
    is_cm,
    is_radical_tiered,
    is_unmixed,
    jacobian_radical_test,
    module_contains,
    projective_dimension,
    ranks,
    syzygies,
    unmixed_part,
)
from gvdkit.ideals import Ideal, codimension, is_monomial, is_unmixed_monomial
from gvdkit.outcome import Verdict
from gvdkit.poly import Ring, parse_polynomial

from corpus import corpus

XYZ = Ring(("x", "y", "z"))


def I(text, ring=XYZ):
    return Ideal.parse(ring, text)


def row(*texts, ring=XYZ):
    return FreeModuleMap.from_rows(ring, [[parse_polynomial(t, ring) for t in texts]])


def is_syzygy(m: FreeModuleMap, col) -> bool:
    for r in range(m.target_rank):
        total = m.ring.zero()
        for j, c in enumerate(m.columns):
            total = total + c[r] * col[j]
        if total:
            return False
    return True


class TestSyzygies:
    def test_koszul_pair(self):
        m = row("x", "y")
        s = syzygies(m)
        assert s.source_rank == 1
        assert module_contains(XYZ, 2, s.columns, (parse_polynomial("y", XYZ), parse_polynomial("-x", XYZ)))

    def test_non_coprime_pair(self):
        m = row("x^2", "x*y")
        s = syzygies(m)
        assert s.source_rank == 1
        assert module_contains(XYZ, 2, s.columns, (parse_polynomial("y", XYZ), parse_polynomial("-x", XYZ)))

    def test_identity_has_no_kernel(self):
        one, zero = XYZ.one(), XYZ.zero()
        m = FreeModuleMap(XYZ, 2, ((one, zero), (zero, one)))
        assert syzygies(m).source_rank == 0

    def test_degree_bounded_kernel_search(self):
        # every syzygy of (x^2, xy, y^2) up to degree 2 lies in the computed module
        m = row("x^2", "x*y", "y^2")
        s = syzygies(m)
        mons = [parse_polynomial(t, XYZ) for t in ["0", "1", "x", "y", "z"]]
        for a in mons:
            for b in mons:
                for c in mons:
                    col = (a, b, c)
                    if is_syzygy(m, col):
                        assert module_contains(XYZ, 3, s.columns, col)
        for col in s.columns:
            assert is_syzygy(m, col)


class TestResolutions:
    @pytest.mark.parametrize("gens, expected_ranks, pd", [
        ("x", [1, 1], 1),
        ("x, y", [1, 2, 1], 2),
        ("x, y, z", [1, 3, 3, 1], 3),
    ])
    def test_koszul(self, gens, expected_ranks, pd):
        res = free_resolution(I(gens))
        assert ranks(res) == expected_ranks
        assert projective_dimension(I(gens)) == pd

    def test_five_cycle_gorenstein_shape(self):
        r = Ring.parse("a..e")
        res = free_resolution(Ideal.parse(r, "a*b, b*c, c*d, d*e, e*a"))
        assert ranks(res) == [1, 5, 5, 1]

    @pytest.mark.parametrize("ideal", corpus(include_toric=False), ids=str)
    def test_complex_property(self, ideal):
        if not ideal.is_proper() or ideal.is_zero():
            return
        res = free_resolution(ideal)
        for a, b in zip(res, res[1:]):
            assert a.compose(b).is_zero()


class TestExtAndUnmixed:
    def test_grade_vanishing_examples(self):
        assert [ext_is_zero(I("x, y"), i) for i in range(3)] == [True, True, False]

    def test_unmixed_part_micro_oracle(self):
        assert unmixed_part(I("x*y, x*z")) == I("x")
        assert is_unmixed(I("x*y, x*z")).is_false

    def test_embedded_component_removed(self):
        assert unmixed_part(I("x^2, x*y")) == I("x")

    @pytest.mark.parametrize("ideal", corpus(), ids=str)
    def test_pd_at_least_codim(self, ideal):
        if ideal.is_proper():
            assert projective_dimension(ideal) >= codimension(ideal)

    @pytest.mark.parametrize("ideal", corpus(include_toric=False), ids=str)
    def test_grade_vanishing(self, ideal):
        if ideal.is_proper() and not ideal.is_zero():
            c = codimension(ideal)
            assert all(ext_is_zero(ideal, i) for i in range(c))

    @pytest.mark.parametrize("ideal", [i for i in corpus(include_toric=False) if is_monomial(i)], ids=str)
    def test_monomial_agrees_with_ext(self, ideal):
        if ideal.is_proper() and not ideal.is_zero():
            assert is_unmixed_monomial(ideal) == (ideal == unmixed_part(ideal))

    def test_non_monomial_mixed(self):
        # a line union a plane, not unmixed
        r = Ring(("x", "y", "z"))
        ideal = Ideal.parse(r, "x*y - x, x*z")
        assert is_unmixed(ideal).is_false


class TestCohenMacaulay:
    @pytest.mark.parametrize("gens, expected", [
        ("x, y", Verdict.TRUE),
        ("x*y, x*z", Verdict.FALSE),
        ("x*y, y*z, x*z", Verdict.TRUE),
        ("x^2, x*y", Verdict.FALSE),
    ])
    def test_examples(self, gens, expected):
        assert is_cm(I(gens)).verdict is expected

    def test_twisted_cubic(self):
        r = Ring(("x", "y", "z", "w"))
        ideal = Ideal.parse(r, "x*z - y^2, x*w - y*z, y*w - z^2")
        assert is_cm(ideal).is_true

    def test_two_skew_lines_not_cm(self):
        r = Ring(("x", "y", "z", "w"))
        ideal = Ideal.parse(r, "x*z, x*w, y*z, y*w")
        assert is_cm(ideal).is_false

    def test_inhomogeneous_disjoint_components(self):
        # a point union a disjoint line: CM but pd > codim, so left undecided
        ideal = I("x*y, x*z, x*(x - 1)")
        out = is_cm(ideal)
        assert out.is_unknown
        assert "inhomogeneous" in out.reasons[0]

    def test_inhomogeneous_pd_equals_codim(self):
        assert is_cm(I("x*y - 1")).is_true


class TestRadical:
    def test_squarefree_monomial(self):
        assert is_radical_tiered(I("x*y, y*z")).is_true

    def test_monomial_witness(self):
        out = is_radical_tiered(I("x^2, y*z"))
        assert out.is_false and "witness" in out.reasons[0]

    def test_squarefree_initial(self):
        assert is_radical_tiered(I("x*y - z^2, x - y")).verdict is not Verdict.FALSE

    def test_jacobian_principal(self):
        r = Ring.parse("a..f")
        assert jacobian_radical_test(Ideal.parse(r, "d*e*(a^2 + f^2 + d*e)")) is Verdict.TRUE
        assert jacobian_radical_test(Ideal.parse(r, "d*e*(a^2 + f^2 + d*e)^2")) is Verdict.FALSE

    def test_nonradical_binomial(self):
        out = is_radical_tiered(I("(x - y)^2, z"))
        assert out.is_false

    def test_unit_and_zero(self):
        assert is_radical_tiered(Ideal.unit(XYZ)).is_true
        assert is_radical_tiered(I("0")).is_true
