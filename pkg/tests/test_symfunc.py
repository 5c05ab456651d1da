import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from plethy import (
    POWER,
    SCHUR,
    SymFunc,
    boxplus,
    format_rational,
    hall_inner,
    multiply,
    parse_rational,
    partitions_of,
    phi_d_littlewood,
    phi_d_power,
    power_d,
    power_to_schur,
    psi_d,
    schur_to_power,
    to_power,
)

partitions = st.integers(min_value=0, max_value=8).flatmap(
    lambda n: st.sampled_from(partitions_of(n))
)

small_symfuncs = st.dictionaries(
    st.integers(min_value=0, max_value=5).flatmap(lambda n: st.sampled_from(partitions_of(n))),
    st.fractions(min_value=-5, max_value=5, max_denominator=6),
    max_size=4,
).map(lambda terms: SymFunc(POWER, terms))


def random_homogeneous(rng: random.Random, degree: int) -> SymFunc:
    terms = {}
    for mu in partitions_of(degree):
        if rng.random() < 0.6:
            terms[mu] = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
    return SymFunc(POWER, terms)


class TestSymFuncType:
    def test_zero_coefficients_pruned(self):
        f = SymFunc(POWER, {(2, 1): Fraction(0), (3,): Fraction(1)})
        assert f.terms == {(3,): Fraction(1)}
        assert SymFunc(POWER, {}).is_zero()

    def test_invalid_basis_rejected(self):
        with pytest.raises(ValueError):
            SymFunc("m", {(1,): 1})

    def test_invalid_key_rejected(self):
        with pytest.raises(ValueError):
            SymFunc(POWER, {(1, 2): 1})

    def test_mixed_degrees_allowed(self):
        f = SymFunc.power((2,)) + SymFunc.power((1,))
        assert sorted(f.degrees()) == [1, 2]
        assert f.homogeneous_component(2).terms == {(2,): Fraction(1)}

    def test_addition_requires_same_basis(self):
        with pytest.raises(ValueError):
            SymFunc.power((1,)) + SymFunc.schur((1,))

    def test_scalar_and_subtraction(self):
        f = 3 * SymFunc.power((2,)) - SymFunc.power((2,))
        assert f.terms == {(2,): Fraction(2)}
        assert (f - f).is_zero()

    def test_json_round_trip(self):
        f = SymFunc(POWER, {(2, 1): Fraction(-7, 3), (1, 1, 1): Fraction(4)})
        data = f.to_json_dict()
        assert data["basis"] == "p"
        assert data["terms"] == {"2,1": "-7/3", "1,1,1": "4"}
        assert SymFunc.from_json_dict(data).terms == f.terms

    def test_rational_text(self):
        assert format_rational(Fraction(4)) == "4"
        assert format_rational(Fraction(-7, 3)) == "-7/3"
        assert parse_rational("4") == Fraction(4)
        assert parse_rational("-7/3") == Fraction(-7, 3)


class TestTransitions:
    def test_schur_to_power_examples(self):
        assert schur_to_power((1,)).terms == {(1,): Fraction(1)}
        assert schur_to_power((2,)).terms == {(1, 1): Fraction(1, 2), (2,): Fraction(1, 2)}
        assert schur_to_power((1, 1)).terms == {(1, 1): Fraction(1, 2), (2,): Fraction(-1, 2)}

    def test_power_to_schur_examples(self):
        assert power_to_schur(SymFunc.power((1, 1))).terms == {(2,): Fraction(1), (1, 1): Fraction(1)}
        assert power_to_schur(SymFunc.power((2,))).terms == {(2,): Fraction(1), (1, 1): Fraction(-1)}

    def test_round_trip_power_schur(self):
        for n in range(8):
            for lam in partitions_of(n):
                back = power_to_schur(schur_to_power(lam))
                assert back.basis == SCHUR
                assert back.terms == {lam: Fraction(1)}

    @given(small_symfuncs)
    @settings(max_examples=40, deadline=None)
    def test_round_trip_arbitrary(self, f):
        assert to_power(power_to_schur(f)).terms == f.terms

    def test_to_power_accepts_schur_basis(self):
        f = SymFunc.schur((2, 1), Fraction(3))
        assert to_power(f).terms == (3 * schur_to_power((2, 1))).terms


class TestMultiply:
    def test_key_union(self):
        prod = multiply(SymFunc.power((2, 1)), SymFunc.power((3, 1)))
        assert prod.terms == {(3, 2, 1, 1): Fraction(1)}

    def test_pieri_smallest_case(self):
        prod = multiply(SymFunc.schur((1,)), SymFunc.schur((1,)))
        assert power_to_schur(prod).terms == {(2,): Fraction(1), (1, 1): Fraction(1)}

    def test_unit(self):
        one = SymFunc.power(())
        f = schur_to_power((3, 1))
        assert multiply(f, one).terms == f.terms

    def test_square_of_schur_row(self):
        sq = power_d(schur_to_power((2,)), 2)
        assert power_to_schur(sq).terms == {
            (4,): Fraction(1),
            (3, 1): Fraction(1),
            (2, 2): Fraction(1),
        }

    @given(partitions, st.integers(min_value=1, max_value=3))
    @settings(max_examples=40, deadline=None)
    def test_power_d_on_basis_elements(self, mu, d):
        out = power_d(SymFunc.power(mu), d)
        pooled = tuple(sorted(mu * d, reverse=True))
        assert out.terms == {pooled: Fraction(1)}

    def test_power_one_is_identity(self):
        f = schur_to_power((2, 1))
        assert power_d(f, 1).terms == f.terms


class TestHallInner:
    def test_power_sum_orthogonality(self):
        assert hall_inner(SymFunc.power((2, 1)), SymFunc.power((2, 1))) == 2
        assert hall_inner(SymFunc.power((2, 1)), SymFunc.power((3,))) == 0

    def test_schur_orthonormality(self):
        for n in range(7):
            for lam in partitions_of(n):
                for mu in partitions_of(n):
                    value = hall_inner(schur_to_power(lam), schur_to_power(mu))
                    assert value == (1 if lam == mu else 0)

    def test_mixed_degrees_pair_componentwise(self):
        f = SymFunc.power((1,)) + SymFunc.power((2,))
        assert hall_inner(f, f) == 1 + 2


class TestPsiPhi:
    def test_psi_examples(self):
        assert psi_d(SymFunc.power((2, 1)), 2).terms == {(4, 2): Fraction(1)}
        f = schur_to_power((2, 1))
        assert psi_d(f, 1).terms == f.terms

    @given(small_symfuncs, small_symfuncs, st.integers(min_value=2, max_value=3))
    @settings(max_examples=30, deadline=None)
    def test_psi_is_a_ring_map(self, f, g, d):
        assert psi_d(multiply(f, g), d).terms == multiply(psi_d(f, d), psi_d(g, d)).terms

    def test_phi_power_examples(self):
        assert phi_d_power(SymFunc.power((4, 2)), 2).terms == {(2, 1): Fraction(4)}
        assert phi_d_power(SymFunc.power((3,)), 2).is_zero()
        f = schur_to_power((2, 1))
        assert phi_d_power(f, 1).terms == f.terms

    def test_phi_kills_keys_with_nondivisible_parts(self):
        # p_1 * p_1 is p at (1,1); the adjoint pairs it against p at 2*mu,
        # whose parts are all even, so the image is zero.
        f = multiply(SymFunc.power((1,)), SymFunc.power((1,)))
        assert phi_d_power(f, 2).is_zero()
        assert phi_d_power(SymFunc.power((2,)), 2).terms == {(1,): Fraction(2)}

    def test_adjointness_on_basis_elements(self):
        for d in (2, 3):
            for m in range(6):
                for mu in partitions_of(m):
                    for nu in partitions_of(d * m):
                        lhs = hall_inner(psi_d(SymFunc.power(mu), d), SymFunc.power(nu))
                        rhs = hall_inner(SymFunc.power(mu), phi_d_power(SymFunc.power(nu), d))
                        assert lhs == rhs, (mu, nu, d)

    def test_adjointness_on_random_combinations(self):
        rng = random.Random(20260819)
        for _ in range(100):
            d = rng.choice([2, 3])
            degree = rng.randint(0, 5)
            f = random_homogeneous(rng, degree)
            g = random_homogeneous(rng, d * degree)
            assert hall_inner(psi_d(f, d), g) == hall_inner(f, phi_d_power(g, d))


class TestLittlewoodRoute:
    def test_quotient_route_on_subdivided_square(self):
        expected = power_d(schur_to_power((1, 1)), 2)
        assert phi_d_littlewood((2, 2, 2, 2), 2).terms == expected.terms

    def test_nonempty_core_gives_zero_on_both_routes(self):
        assert phi_d_littlewood((2, 1), 2).is_zero()
        assert phi_d_power(schur_to_power((2, 1)), 2).is_zero()

    def test_subdivided_shapes_recover_powers(self):
        for n in range(5):
            for lam in partitions_of(n):
                for d in (2, 3):
                    lhs = phi_d_littlewood(boxplus(lam, d), d)
                    rhs = power_d(schur_to_power(lam), d)
                    assert lhs.terms == rhs.terms, (lam, d)

    def test_agreement_with_power_route(self):
        for size in range(9):
            for nu in partitions_of(size):
                for d in (2, 3):
                    lhs = phi_d_littlewood(nu, d)
                    rhs = phi_d_power(schur_to_power(nu), d)
                    assert lhs.terms == rhs.terms, (nu, d)

    def test_d_one_is_identity(self):
        for nu in partitions_of(5):
            assert phi_d_littlewood(nu, 1).terms == schur_to_power(nu).terms
