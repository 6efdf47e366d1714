import pytest
from hypothesis import given, strategies as st

from conftest import genus2_multicurves
from dtcohom.errors import InvalidMulticurve, InvalidSurface, StructuralError
from dtcohom.surface import (
    DTMulticurve,
    PantsDecomposition,
    SurfaceSpec,
    intersection_with_pants_curve,
    primitive,
    scale,
    standard_pants,
    twist,
    validate_multicurve,
)


def mc(m, t):
    return DTMulticurve(m, t)


class TestSpecAndPants:
    def test_needs_a_pants_curve(self):
        with pytest.raises(InvalidSurface):
            SurfaceSpec(0, 3)
        assert SurfaceSpec(2, 0).n_curves == 3
        assert SurfaceSpec(2, 0).n_pants == 2

    @pytest.mark.parametrize("g,r", [(2, 0), (3, 0), (1, 1), (0, 4), (1, 2), (2, 3), (4, 1)])
    def test_standard_pants_is_valid(self, g, r):
        p = standard_pants(g, r)
        assert p.n_curves == 3 * g + r - 3
        assert len(p.pants) == 2 * g - 2 + r
        assert len(p.boundary_labels) == r

    def test_curve_must_fill_two_slots(self):
        with pytest.raises(InvalidSurface, match="g3 occurs in 1"):
            PantsDecomposition(
                SurfaceSpec(2, 0),
                ("g1", "g2", "g3"),
                (("P1", ("g1", "g2", "g3")), ("P2", ("g1", "g2", "g2"))),
            )


class TestValidate:
    def test_even_sums_ok(self, pants):
        assert validate_multicurve(pants, (1, 1, 0), (0, 0, 0)) == []

    def test_odd_sum_named_per_pants(self, pants):
        v = validate_multicurve(pants, (1, 0, 0), (0, 0, 0))
        assert v == ["odd m-sum 1 at pants P1", "odd m-sum 1 at pants P2"]

    def test_negative_twist_on_unmet_curve(self, pants):
        assert validate_multicurve(pants, (0, 0, 0), (0, 0, -1)) == ["t_3 = -1 < 0 while m_3 = 0"]

    def test_length_mismatch_is_structural(self, pants):
        with pytest.raises(StructuralError):
            validate_multicurve(pants, (1, 1), (0, 0))

    def test_self_glued_curve_counts_twice(self):
        p = standard_pants(1, 2)  # g2 fills two slots of P1; g1 separates
        assert p.pants[0][1].count("g2") == 2
        assert validate_multicurve(p, (0, 1), (0, 0)) == []
        assert validate_multicurve(p, (1, 0), (0, 0)) != []


class TestTwist:
    def test_adds_m_k(self, pants):
        assert twist(pants, mc((1, 1, 0), (0, 0, 0)), 1, 1) == mc((1, 1, 0), (1, 0, 0))

    def test_unmet_curve_fixes(self, pants):
        D = mc((0, 0, 0), (2, 1, 0))
        for n in (-3, 1, 7):
            assert twist(pants, D, 1, n) == D

    def test_negative_power(self, pants):
        assert twist(pants, mc((1, 1, 0), (0, 3, 0)), 2, -4) == mc((1, 1, 0), (0, -1, 0))

    def test_rejects_invalid_and_out_of_range(self, pants):
        with pytest.raises(InvalidMulticurve):
            twist(pants, mc((1, 0, 0), (0, 0, 0)), 1, 1)
        with pytest.raises(IndexError):
            twist(pants, mc((1, 1, 0), (0, 0, 0)), 4, 1)

    def test_intersection_reads_m(self, pants):
        D = mc((1, 1, 0), (5, -2, 0))
        assert intersection_with_pants_curve(D, 1) == 1
        assert intersection_with_pants_curve(twist(pants, D, 1, 7), 1) == 1
        assert intersection_with_pants_curve(mc((0, 0, 0), (0, 0, 4)), 3) == 0

    @given(genus2_multicurves(), st.integers(1, 3), st.integers(-1000, 1000))
    def test_only_t_k_moves(self, D, k, n):
        from dtcohom import theta_genus2

        E = twist(theta_genus2(), D, k, n)
        assert E.m == D.m
        for j in range(3):
            assert E.t[j] == D.t[j] + (n * D.m[j] if j == k - 1 else 0)
        assert validate_multicurve(theta_genus2(), E.m, E.t) == []

    @given(genus2_multicurves(), st.integers(1, 3), st.integers(-50, 50), st.integers(-50, 50))
    def test_group_law(self, D, k, a, b):
        from dtcohom import theta_genus2

        p = theta_genus2()
        assert twist(p, twist(p, D, k, a), k, b) == twist(p, D, k, a + b)
        assert twist(p, D, k, 0) == D


class TestScalePrimitive:
    def test_scale(self):
        assert scale(mc((1, 1, 0), (1, 0, 0)), 3) == mc((3, 3, 0), (3, 0, 0))
        D = mc((1, 1, 0), (1, 0, 0))
        assert scale(D, 1) == D

    def test_scale_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            scale(mc((1, 1, 0), (0, 0, 0)), 0)

    def test_scale_commutes_with_twist(self, pants):
        D = mc((1, 1, 0), (1, 0, 0))
        lhs = twist(pants, scale(D, 2), 1, 1)
        rhs = scale(twist(pants, D, 1, 1), 2)
        assert lhs == rhs == mc((2, 2, 0), (4, 0, 0))

    @pytest.mark.parametrize(
        "D,d,D0",
        [
            (((2, 2, 0), (4, 0, 0)), 2, ((1, 1, 0), (2, 0, 0))),
            (((1, 1, 0), (0, 0, 0)), 1, ((1, 1, 0), (0, 0, 0))),
            (((0, 0, 0), (0, 0, 6)), 6, ((0, 0, 0), (0, 0, 1))),
        ],
    )
    def test_primitive(self, D, d, D0):
        p = primitive(mc(*D))
        assert (p.d, p.reduced, p.empty) == (d, mc(*D0), False)

    def test_primitive_of_empty(self):
        E = mc((0, 0, 0), (0, 0, 0))
        assert primitive(E) == type(primitive(E))(1, E, True)

    @given(genus2_multicurves(), st.integers(1, 9))
    def test_scale_keeps_validity_and_scales_m(self, D, n):
        from dtcohom import theta_genus2

        S = scale(D, n)
        assert validate_multicurve(theta_genus2(), S.m, S.t) == []
        assert all(intersection_with_pants_curve(S, k) == n * D.m[k - 1] for k in (1, 2, 3))
        if not D.is_empty:
            p = primitive(S)
            assert scale(p.reduced, p.d) == S
