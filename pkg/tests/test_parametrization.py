"""Closed forms: frozen examples, cross-checks, and algebraic properties."""

import math

import pytest
from hypothesis import given, settings, strategies as st

from zwform.errors import NotCoprime, WrongExponent, ZeroZ
from zwform.exact_arith import ipow
from zwform.parametrization import (
    ParameterTuple,
    Solution,
    brahmagupta_compose,
    dickson_p2,
    eval_m,
    eval_y,
    eval_z,
    generate,
    is_theorem_grade,
)

PRIMES = (2, 3, 5, 7)


def constrained_tuples(p, limit):
    """Hypothesis strategy for tuples satisfying the coprimality constraints."""
    coords = st.integers(-limit, limit)
    raw = st.tuples(coords, coords, coords, coords,
                    st.integers(-limit, limit).filter(lambda q: q != 0),
                    coords, coords)
    return raw.filter(
        lambda c: math.gcd(c[0], c[4]) == 1
        and math.gcd(c[3], c[4]) == 1
        and math.gcd(c[5], c[6]) == 1
    ).map(lambda c: ParameterTuple(p, *c))


class TestDataclasses:
    def test_tuple_rejects_composite_p(self):
        with pytest.raises(ValueError):
            ParameterTuple(4, 1, 1, 1, 1, 1, 1, 1)

    def test_tuple_rejects_zero_q(self):
        with pytest.raises(ValueError):
            ParameterTuple(2, 1, 1, 1, 1, 0, 1, 1)

    def test_solution_rejects_composite_p(self):
        with pytest.raises(ValueError):
            Solution(6, 1, 1, 1, 1, 1)

    def test_gcd_constraints(self):
        assert ParameterTuple(2, 1, 1, 2, 1, 1, 1, 1).satisfies_gcd_constraints()
        assert not ParameterTuple(2, 2, 1, 1, 1, 2, 1, 1).satisfies_gcd_constraints()
        assert not ParameterTuple(2, 1, 1, 1, 2, 2, 1, 1).satisfies_gcd_constraints()
        assert not ParameterTuple(2, 1, 1, 1, 1, 1, 2, 2).satisfies_gcd_constraints()

    def test_identity_holds(self):
        assert Solution(2, -1, 2, 5, -1, 1).identity_holds()
        assert not Solution(2, -1, 2, 5, -1, 2).identity_holds()


class TestGenerateFrozen:
    def test_p2_example(self):
        sol = generate(ParameterTuple(2, 1, 1, 2, 1, 1, 1, 1))
        assert sol == Solution(2, -1, 2, 5, -1, 1)

    def test_p3_example(self):
        sol = generate(ParameterTuple(3, 1, 0, 1, 1, 1, 1, 0))
        assert sol == Solution(3, 1, 1, 2, -1, 1)

    def test_zero_e_uses_zero_to_the_zero(self):
        # e == 0 with p == 2 makes the y form hit 0**0, which must be 1.
        sol = generate(ParameterTuple(2, 0, 1, 1, 1, 1, 0, 1))
        assert sol == Solution(2, -2, 1, 3, 1, 1)

    def test_zero_z_raises(self):
        with pytest.raises(ZeroZ):
            generate(ParameterTuple(2, 1, 0, -1, 1, 1, 1, 0))

    def test_common_factor_e_q_raises(self):
        with pytest.raises(NotCoprime):
            generate(ParameterTuple(2, 2, 1, 1, 1, 2, 1, 1))

    def test_common_factor_l_q_raises(self):
        with pytest.raises(NotCoprime):
            generate(ParameterTuple(2, 1, 1, 1, 2, 2, 1, 1))


class TestDickson:
    def test_frozen(self):
        sol = dickson_p2(ParameterTuple(2, 1, 0, 1, 0, 1, 1, 0))
        assert sol == Solution(2, 0, 1, 1, -1, 1)

    def test_rejects_other_primes(self):
        with pytest.raises(WrongExponent):
            dickson_p2(ParameterTuple(3, 1, 0, 1, 0, 1, 1, 0))

    def test_agrees_with_generate_on_grid(self):
        vals = range(-2, 3)
        compared = 0
        for e in vals:
            for f in vals:
                for g in vals:
                    for l in vals:
                        for q in (-2, -1, 1, 2):
                            if math.gcd(e, q) != 1 or math.gcd(l, q) != 1:
                                continue
                            for n in vals:
                                for r in vals:
                                    if math.gcd(n, r) != 1:
                                        continue
                                    t = ParameterTuple(2, e, f, g, l, q, n, r)
                                    direct = dickson_p2(t)
                                    if direct.z == 0:
                                        with pytest.raises(ZeroZ):
                                            generate(t)
                                        continue
                                    assert generate(t) == direct
                                    compared += 1
        assert compared > 1000


class TestAlgebraicProperties:
    @settings(deadline=None)
    @given(st.sampled_from(PRIMES), st.data())
    def test_identity(self, p, data):
        t = data.draw(constrained_tuples(p, 12))
        if eval_z(t) == 0:
            return
        sol = generate(t)
        assert sol.x ** p - sol.m * sol.y ** p == sol.z * sol.w

    @settings(deadline=None)
    @given(st.sampled_from(PRIMES), st.data())
    def test_line_relation(self, p, data):
        t = data.draw(constrained_tuples(p, 12))
        if eval_z(t) == 0:
            return
        sol = generate(t)
        u = t.e * t.l + t.f * t.q
        assert t.q * sol.x == -sol.z * t.r + u * sol.y

    @settings(deadline=None)
    @given(st.sampled_from(PRIMES), st.data())
    def test_norm_relation(self, p, data):
        t = data.draw(constrained_tuples(p, 12))
        z = eval_z(t)
        u = t.e * t.l + t.f * t.q
        assert z * t.e == ipow(u, p) - eval_m(t) * ipow(t.q, p)

    @settings(deadline=None)
    @given(st.sampled_from(PRIMES), st.data())
    def test_z_congruence_mod_q(self, p, data):
        # Every non-leading term of the z form carries a factor of q.
        t = data.draw(constrained_tuples(p, 12))
        lead = ipow(t.e, p - 1) * ipow(t.l, p)
        assert (eval_z(t) - lead) % t.q == 0

    @settings(deadline=None)
    @given(st.sampled_from(PRIMES), st.data())
    def test_y_decomposes_over_q(self, p, data):
        t = data.draw(constrained_tuples(p, 12))
        tail = ipow(t.e, p - 2) * ipow(t.l, p - 1) * t.r
        assert eval_y(t) == t.n * t.q + tail


class TestBrahmagupta:
    def test_frozen_example(self):
        assert brahmagupta_compose(2, 1, 3, 1, -1, 1) == (5, 5)
        # (2**2 + 1)(3**2 + 1) == 50 == 5**2 + 5**2
        assert (2 * 2 + 1 * 1) * (3 * 3 + 1 * 1) == 5 * 5 + 5 * 5

    def test_composition_identity_small(self):
        for m in range(-6, 7):
            for a in range(-4, 5):
                for q in range(-4, 5):
                    for b in range(-4, 5):
                        for r in range(-4, 5):
                            for sign in (1, -1):
                                big_a, big_q = brahmagupta_compose(a, q, b, r, m, sign)
                                lhs = (a * a - m * q * q) * (b * b - m * r * r)
                                assert big_a * big_a - m * big_q * big_q == lhs

    @given(st.integers(-10**30, 10**30), st.integers(-10**30, 10**30),
           st.integers(-10**30, 10**30), st.integers(-10**30, 10**30),
           st.integers(-10**6, 10**6), st.sampled_from((1, -1)))
    def test_composition_identity_bigint(self, a, q, b, r, m, sign):
        big_a, big_q = brahmagupta_compose(a, q, b, r, m, sign)
        lhs = (a * a - m * q * q) * (b * b - m * r * r)
        assert big_a * big_a - m * big_q * big_q == lhs

    def test_invalid_sign(self):
        with pytest.raises(ValueError):
            brahmagupta_compose(1, 1, 1, 1, 2, 0)
        with pytest.raises(ValueError):
            brahmagupta_compose(1, 1, 1, 1, 2, 2)


class TestTheoremGrade:
    def test_accepts_good_solution(self):
        assert is_theorem_grade(Solution(2, -1, 2, 5, -1, 1))

    def test_rejects_zero_component(self):
        assert not is_theorem_grade(Solution(2, 2, 1, 3, 4, 0))

    def test_rejects_common_factor(self):
        assert not is_theorem_grade(Solution(2, 3, 6, 1, 1, -27))

    def test_rejects_identity_violation(self):
        assert not is_theorem_grade(Solution(2, 1, 2, 5, -1, 2))
