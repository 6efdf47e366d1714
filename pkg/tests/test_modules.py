from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from dtcohom import (
    DTMulticurve,
    DTPantsAction,
    GeneratorCocycle,
    ModuleElement,
    Word,
    act,
    apply_word,
    check_cocycle,
    coboundary,
    commuting_relator,
    extend_cocycle,
    include_into_hat,
    is_coboundary,
    lemma1_diagnostic,
    orbit_ball,
    restriction_hom,
    theta_genus2,
)
from dtcohom.errors import DomainError, UnknownGenerator, WindowError
from dtcohom.modules import evaluate, is_zero, reduce_element
from dtcohom.presentations import Presentation, commuting_presentation

D0 = DTMulticurve((1, 1, 0), (0, 0, 0))
GENS = ("tau1", "tau2", "tau3")
ZERO = ModuleElement()


def P(t1, t2, t3=0):
    return DTMulticurve((1, 1, 0), (t1, t2, t3))


tau_words = st.lists(st.tuples(st.sampled_from(GENS), st.sampled_from([1, -1])), max_size=8).map(
    lambda ls: Word(tuple(ls))
)
small_q = st.fractions(min_value=-3, max_value=3, max_denominator=3)


@st.composite
def slice_elements(draw, finite_only=False):
    # support within distance 2 of D0, so coboundaries fit inside a radius-4 window
    near = [P(a, b) for a in range(-2, 3) for b in range(-2, 3) if abs(a) + abs(b) <= 2]
    fin = {draw(st.sampled_from(near)): draw(small_q) for _ in range(draw(st.integers(0, 3)))}
    if finite_only:
        return ModuleElement(finite=fin)
    aff = {k: draw(small_q) for k in draw(st.sets(st.sampled_from([1, 2, 3])))}
    return ModuleElement(aff, draw(small_q), fin)


class TestElement:
    def test_normalizes_zeros(self):
        v = ModuleElement({1: 0}, 0, {D0: 0})
        assert v == ZERO and not v

    def test_arithmetic(self):
        v = ModuleElement.delta(D0, 2) - ModuleElement.delta(D0, 2)
        assert v == ZERO
        assert 3 * ModuleElement.one() == ModuleElement.one(3)

    def test_evaluate(self):
        v = ModuleElement({1: 2}, Fraction(1, 2), {P(1, 0): 5})
        assert evaluate(v, P(1, 0)) == 2 + Fraction(1, 2) + 5
        assert evaluate(v, P(3, 0)) == 6 + Fraction(1, 2)

    def test_affine_needs_multicurve(self, s3):
        with pytest.raises(DomainError):
            evaluate(ModuleElement.coord(1), 1)
        with pytest.raises(DomainError):
            act(s3, Word.of("a"), ModuleElement.coord(1))


class TestAct:
    def test_constant_invariant(self, action):
        assert act(action, Word.of("tau1", "tau2^-1"), ModuleElement.one()) == ModuleElement.one()

    def test_coordinate_shifts_constant(self, action):
        out = act(action, Word.of("tau1"), ModuleElement.coord(1))
        assert out == ModuleElement({1: 1}, -1)
        # (tau1 . t1)(E) = t1(tau1^-1 E), checked at three orbit points
        for E in (P(0, 0), P(2, -1), P(-3, 4)):
            assert evaluate(out, E) == E.t[0] - 1

    def test_point_mass_moves(self, action):
        assert act(action, Word.of("tau1"), ModuleElement.delta(D0)) == ModuleElement.delta(P(1, 0))

    @settings(max_examples=150)
    @given(slice_elements(), tau_words)
    def test_eval_act_identity(self, v, w):
        A = DTPantsAction(theta_genus2(), D0)
        for E in orbit_ball(A, D0, 2).points:
            assert evaluate(act(A, w, v), E) == evaluate(v, apply_word(A, w.inverse(), E))


class TestExtend:
    def test_free_cancellation(self, s3):
        u = GeneratorCocycle({"a": ModuleElement.delta(1), "b": ZERO})
        assert extend_cocycle(s3, u, Word.of("a", "a^-1")) == ZERO

    def test_good_commutator(self, action):
        u = GeneratorCocycle({"tau1": ModuleElement.delta(D0), "tau2": ZERO, "tau3": ZERO})
        assert extend_cocycle(action, u, commuting_relator("tau1", "tau3")) == ZERO

    def test_bad_commutator(self, action):
        u = GeneratorCocycle({"tau1": ZERO, "tau2": ZERO, "tau3": ModuleElement.delta(D0)})
        got = extend_cocycle(action, u, commuting_relator("tau1", "tau3"))
        assert got == ModuleElement.delta(P(1, 0)) - ModuleElement.delta(D0)

    def test_unknown_generator(self, action):
        with pytest.raises(UnknownGenerator):
            extend_cocycle(action, GeneratorCocycle({"tau1": ZERO}), Word.of("tau2"))

    @settings(max_examples=100)
    @given(st.lists(slice_elements(), min_size=3, max_size=3), tau_words, tau_words)
    def test_crossed_homomorphism(self, vals, w1, w2):
        A = DTPantsAction(theta_genus2(), D0)
        u = GeneratorCocycle(dict(zip(GENS, vals)))
        lhs = extend_cocycle(A, u, w1 * w2)
        rhs = extend_cocycle(A, u, w1) + act(A, w1, extend_cocycle(A, u, w2))
        assert is_zero(A, lhs - rhs)
        inv = extend_cocycle(A, u, w1.inverse())
        assert is_zero(A, inv + act(A, w1.inverse(), extend_cocycle(A, u, w1)))
        assert extend_cocycle(A, u, Word()) == ZERO


class TestCheckAndCoboundary:
    def test_coboundary_of_fixed_point_mass(self, action):
        assert coboundary(action, ModuleElement.delta(D0))["tau3"] == ZERO

    def test_coboundary_of_coordinate(self, action):
        assert coboundary(action, ModuleElement.coord(1))["tau1"] == ModuleElement.one()

    def test_coboundary_of_constant_is_zero(self, action):
        assert all(x == ZERO for x in coboundary(action, ModuleElement.one()).values())

    def test_failing_cocycle_reports_defect(self, action):
        u = GeneratorCocycle({"tau1": ZERO, "tau2": ZERO, "tau3": ModuleElement.delta(D0)})
        pres = Presentation(GENS, (commuting_relator("tau1", "tau3"),))
        assert check_cocycle(action, u, pres) == [
            (commuting_relator("tau1", "tau3"), ModuleElement.delta(P(1, 0)) - ModuleElement.delta(D0))
        ]

    def test_constant_cocycle_passes(self, action):
        u = GeneratorCocycle({"tau1": ZERO, "tau2": ZERO, "tau3": ModuleElement.one()})
        assert check_cocycle(action, u, commuting_presentation(GENS)) == []

    @settings(max_examples=60)
    @given(slice_elements())
    def test_coboundaries_are_cocycles(self, v):
        A = DTPantsAction(theta_genus2(), D0)
        assert check_cocycle(A, coboundary(A, v), commuting_presentation(GENS)) == []

    @settings(max_examples=60)
    @given(slice_elements())
    def test_coboundary_pointwise(self, v):
        A = DTPantsAction(theta_genus2(), D0)
        u = coboundary(A, v)
        for g in GENS:
            for E in orbit_ball(A, D0, 1).points:
                assert evaluate(u[g], E) == evaluate(v, E) - evaluate(v, A.apply(g, -1, E))


class TestIsCoboundary:
    def test_recovers_point_mass(self, action):
        res = is_coboundary(action, coboundary(action, ModuleElement.delta(D0)), orbit_ball(action, D0, 2))
        assert res.witness == ModuleElement.delta(D0)

    def test_recovers_coordinate_family(self, action):
        u = GeneratorCocycle({g: ModuleElement.one(m) for g, m in zip(GENS, D0.m)})
        res = is_coboundary(action, u, orbit_ball(action, D0, 1))
        assert res.witness == ModuleElement({1: 1, 2: 1})

    @pytest.mark.parametrize("r", [1, 2, 3])
    def test_constant_on_fixed_twist_is_not_a_coboundary(self, action, r):
        u = GeneratorCocycle({"tau1": ZERO, "tau2": ZERO, "tau3": ModuleElement.one()})
        res = is_coboundary(action, u, orbit_ball(action, D0, r))
        assert not res.found and res.certificate

    def test_window_too_small(self, action):
        u = coboundary(action, ModuleElement.delta(P(2, 0)))
        with pytest.raises(WindowError):
            is_coboundary(action, u, orbit_ball(action, D0, 1))

    @settings(max_examples=40)
    @given(slice_elements())
    def test_round_trip_up_to_invariants(self, v):
        A = DTPantsAction(theta_genus2(), D0)
        u = coboundary(A, v)
        res = is_coboundary(A, u, orbit_ball(A, D0, 4))
        assert res.found
        diff = v - res.witness
        assert all(is_zero(A, diff - act(A, Word.of(g), diff)) for g in GENS)

    def test_finite_table(self, swap2):
        u = coboundary(swap2, ModuleElement.delta(1))
        res = is_coboundary(swap2, u, orbit_ball(swap2, 1, 2))
        assert res.found
        # on {1,2} with a = b = swap, u(a) = delta_1 alone is not a coboundary
        u2 = GeneratorCocycle({"a": ModuleElement.delta(1), "b": ZERO})
        assert not is_coboundary(swap2, u2, orbit_ball(swap2, 1, 2)).found


class TestInclusionAndRestriction:
    def test_include(self):
        v = ModuleElement.delta(D0, 2) - ModuleElement.delta(P(1, 0), 3)
        assert include_into_hat(v) == v
        with pytest.raises(DomainError):
            include_into_hat(ModuleElement.one())

    def test_coboundary_restricts_to_zero(self, action):
        u = coboundary(action, ModuleElement.delta(D0))
        assert restriction_hom(action, u, [Word.of("tau3")], D0) == {Word.of("tau3"): 0}

    def test_constant_restricts_to_one(self, action):
        u = GeneratorCocycle({"tau1": ZERO, "tau2": ZERO, "tau3": ModuleElement.one()})
        assert restriction_hom(action, u, [Word.of("tau3")], D0)[Word.of("tau3")] == 1

    def test_rejects_non_stabilizer_word(self, action):
        with pytest.raises(DomainError):
            restriction_hom(action, coboundary(action, ZERO), [Word.of("tau1")], D0)


class TestLemma1:
    def test_ladder_defect_at_first_rung(self, action):
        u = GeneratorCocycle({"tau1": ZERO, "tau2": ZERO, "tau3": ModuleElement.delta(D0)})
        rep = lemma1_diagnostic(action, u, 3, orbit_ball(action, D0, 2))
        assert rep.status == "defect"
        d = {x.mover: x for x in rep.defects}["tau1"]
        assert (d.start, d.n, d.point, d.forced, d.actual) == (D0, 1, P(-1, 0), 1, 0)

    def test_longer_ladder(self, action):
        # equal coefficients along tau1^-1 rungs push the defect to n = 3
        fin = {P(0, 0): 1, P(-1, 0): 1, P(-2, 0): 1}
        u = GeneratorCocycle({"tau1": ZERO, "tau2": ZERO, "tau3": ModuleElement(finite=fin)})
        rep = lemma1_diagnostic(action, u, 3, orbit_ball(action, D0, 4))
        assert {(d.start, d.mover): d.n for d in rep.defects}[(P(0, 0), "tau1")] == 3

    def test_inconclusive(self, action):
        fin = {P(0, 0): 1, P(-1, 0): 1, P(0, -1): 1}
        u = GeneratorCocycle({"tau1": ZERO, "tau2": ZERO, "tau3": ModuleElement(finite=fin)})
        rep = lemma1_diagnostic(action, u, 3, orbit_ball(action, D0, 1))
        assert rep.status in ("defect", "inconclusive") and rep.inconclusive

    def test_zero_and_coboundaries_ok(self, action):
        assert lemma1_diagnostic(action, coboundary(action, ZERO), 3, orbit_ball(action, D0, 2)).ok
        for E in (D0, P(1, -1)):
            u = coboundary(action, ModuleElement.delta(E))
            for k in (1, 2, 3):
                assert lemma1_diagnostic(action, u, k, orbit_ball(action, D0, 3)).ok

    def test_requires_finite_support(self, action):
        u = GeneratorCocycle({"tau1": ZERO, "tau2": ZERO, "tau3": ModuleElement.one()})
        with pytest.raises(DomainError):
            lemma1_diagnostic(action, u, 3, orbit_ball(action, D0, 1))


class TestEq6:
    @settings(max_examples=50)
    @given(slice_elements(finite_only=True))
    def test_commuting_identity_for_coboundaries(self, v):
        A = DTPantsAction(theta_genus2(), D0)
        u = coboundary(A, v)
        for a, b in (("tau1", "tau2"), ("tau1", "tau3"), ("tau2", "tau3")):
            lhs = u[a] - act(A, Word.of(b), u[a])
            rhs = u[b] - act(A, Word.of(a), u[b])
            for E in orbit_ball(A, D0, 3).points:
                assert evaluate(lhs, E) == evaluate(rhs, E)


def test_reduce_folds_fixed_coordinates(action):
    D = DTMulticurve((1, 1, 0), (0, 0, 4))
    A = DTPantsAction(theta_genus2(), D)
    assert reduce_element(A, ModuleElement.coord(3)) == ModuleElement.one(4)
