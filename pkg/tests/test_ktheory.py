"""Point K groups, degree towers, stability, and the comparison sequences."""

import pytest

from cliffk.abgroup import FGAbelianGroup, UnknownMap, solve_exact
from cliffk.blades import Signature
from cliffk.errors import BoundExceededError, EmbeddingError
from cliffk.ktheory import (
    ForgetfulFunctor,
    KTheory,
    RelativeK,
    adams_f,
    bott_sequence_instance,
    fiber_twist_check,
    forgetful_k_map,
    k0,
    point_k,
    reduced_k_rpn,
    relative_k,
    sequence_E_point_instance,
    thom_stability,
)

KO, KU = KTheory.KO, KTheory.KU
Z = FGAbelianGroup.free(1)
TRIV = FGAbelianGroup.trivial()


def cyclic(d: int) -> FGAbelianGroup:
    return FGAbelianGroup.from_invariants(0, (d,))


class TestTheoryEnum:
    def test_fields_and_periods(self):
        from cliffk.scalars import ScalarField

        assert KO.field is ScalarField.REAL
        assert KU.field is ScalarField.COMPLEX
        assert KO.period == 8
        assert KU.period == 2


class TestK0AndForgetful:
    def test_k0_counts_simple_factors(self):
        assert k0(Signature(0, 0)) == Z
        assert k0(Signature(3, 0)) == FGAbelianGroup.free(2)
        assert k0(Signature(1, 0)) == Z
        assert k0(Signature(0, 1)) == FGAbelianGroup.free(2)
        assert k0(Signature(1, 0), KU.field) == FGAbelianGroup.free(2)

    def test_functor_requires_embedding(self):
        with pytest.raises(EmbeddingError):
            ForgetfulFunctor(Signature(1, 0), Signature(0, 2))

    def test_forgetful_matrices(self):
        f = forgetful_k_map(ForgetfulFunctor(Signature(1, 0), Signature(0, 0)))
        assert f.matrix == ((2,),)
        assert f.source == Z and f.target == Z

        f = forgetful_k_map(ForgetfulFunctor(Signature(3, 0), Signature(0, 0)))
        assert f.matrix == ((4, 4),)
        assert f.source == FGAbelianGroup.free(2)

        f = forgetful_k_map(ForgetfulFunctor(Signature(4, 0), Signature(3, 0)))
        assert f.matrix == ((1,), (1,))

    def test_generator_bound_propagates(self):
        functor = ForgetfulFunctor(Signature(3, 0), Signature(0, 0))
        with pytest.raises(BoundExceededError):
            forgetful_k_map(functor, max_total=2)


class TestRelativeK:
    def test_examples(self):
        got = relative_k(ForgetfulFunctor(Signature(1, 0), Signature(0, 0)))
        assert got == RelativeK(cyclic(2), TRIV)
        assert str(got) == "(coker Z/2, ker 0)"

        got = relative_k(ForgetfulFunctor(Signature(3, 0), Signature(0, 0)))
        assert got == RelativeK(cyclic(4), Z)

        same = ForgetfulFunctor(Signature(2, 0), Signature(2, 0))
        assert relative_k(same) == RelativeK(TRIV, TRIV)

    @pytest.mark.parametrize("big,small", [
        ((1, 0), (0, 0)), ((2, 0), (1, 0)), ((3, 0), (2, 0)),
        ((0, 2), (0, 1)), ((2, 1), (2, 0)), ((3, 0), (0, 0)),
    ])
    def test_invariant_under_diagonal_shift(self, big, small):
        base = relative_k(ForgetfulFunctor(Signature(*big), Signature(*small)))
        for shift in (1, 2):
            shifted = ForgetfulFunctor(
                Signature(big[0] + shift, big[1] + shift),
                Signature(small[0] + shift, small[1] + shift))
            assert relative_k(shifted) == base


class TestAdamsCount:
    def test_pinned_values(self):
        want = [0, 1, 2, 2, 3, 3, 3, 3, 4, 5, 6, 6, 7, 7, 7, 7, 8]
        assert [adams_f(n) for n in range(17)] == want

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            adams_f(-1)


class TestProjectiveSpace:
    @pytest.mark.parametrize("n", range(1, 17))
    def test_real_orders_follow_adams_count(self, n):
        group = reduced_k_rpn(n, KO)
        assert group == cyclic(2 ** adams_f(n))

    @pytest.mark.parametrize("n", range(1, 13))
    def test_complex_orders(self, n):
        group = reduced_k_rpn(n, KU)
        if n < 2:
            assert group == TRIV
        else:
            assert group == cyclic(2 ** (n // 2))

    def test_zero_dimension_rejected(self):
        with pytest.raises(ValueError):
            reduced_k_rpn(0)


class TestPointTower:
    def test_real_row(self):
        want = [Z, cyclic(2), cyclic(2), TRIV, Z, TRIV, TRIV, TRIV]
        assert [point_k(i, KO) for i in range(8)] == want

    def test_real_periodicity_spot_checks(self):
        assert point_k(8, KO) == Z
        assert point_k(9, KO) == cyclic(2)
        assert point_k(12, KO) == Z

    def test_complex_row(self):
        assert [point_k(i, KU) for i in range(6)] == [Z, TRIV, Z, TRIV, Z, TRIV]

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            point_k(-1)


class TestThomStability:
    def test_all_checks_pass(self):
        report = thom_stability(1, 2)
        assert report.passed
        assert bool(report)
        assert len(report.period_checks) == 3
        assert len(report.shift_checks) == 3
        for m, low, high, ok in report.period_checks:
            assert ok and low == high
        for m, j, b_pair, a_pair, ok in report.shift_checks:
            assert ok and b_pair == a_pair
            assert j == ((m - 2) % 8) + 1

    def test_derivation_lines(self):
        report = thom_stability(0, 1)
        lines = report.derivation
        assert len(lines) == 4
        assert all("match" in line for line in lines)
        assert any("degree j=" in line for line in lines)

    def test_input_validation(self):
        with pytest.raises(ValueError):
            thom_stability(-1, 0)
        with pytest.raises(ValueError):
            thom_stability(0, -1)


BOTT_TERMS = {
    0: (Z, Z, cyclic(2), TRIV),
    1: (TRIV, cyclic(2), cyclic(2), Z),
    2: (Z, cyclic(2), TRIV, TRIV),
    3: (TRIV, TRIV, Z, Z),
    4: (Z, Z, TRIV, TRIV),
    5: (TRIV, TRIV, TRIV, Z),
    6: (Z, TRIV, TRIV, TRIV),
    7: (TRIV, TRIV, Z, Z),
}

# number of exact completions at bound 2: unique up to sign where a free
# generator must land on an index-2 subgroup, four-fold where two free
# slots each admit a sign
BOTT_SOLUTION_COUNTS = {0: 2, 1: 1, 2: 1, 3: 4, 4: 2, 5: 1, 6: 1, 7: 4}


class TestBottSequence:
    @pytest.mark.parametrize("i", range(8))
    def test_terms(self, i):
        seq = bott_sequence_instance(i)
        assert seq.terms == BOTT_TERMS[i]
        assert seq.exact_at == (1, 2)
        assert all(isinstance(m, UnknownMap) for m in seq.maps)

    def test_names(self):
        seq = bott_sequence_instance(2)
        assert seq.names == ("KU^-2", "KO^-2", "KO^-3", "KU^-1")
        assert bott_sequence_instance(0).names[-1] == "KU^-1"

    @pytest.mark.parametrize("i", range(8))
    def test_solvable_at_bound_two(self, i):
        sols = solve_exact(bott_sequence_instance(i), bound=2)
        assert len(sols) == BOTT_SOLUTION_COUNTS[i]

    def test_degree_zero_solutions_pinned(self):
        sols = solve_exact(bott_sequence_instance(0), bound=2)
        got = [tuple(m.matrix for m in s.maps) for s in sols]
        assert got == [
            (((-2,),), ((1,),), ()),
            (((2,),), ((1,),), ()),
        ]

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            bott_sequence_instance(-1)


class TestFreeInvolutionSequence:
    def test_degree_zero(self):
        seq = sequence_E_point_instance()
        assert seq.terms == (Z, Z, cyclic(2), TRIV)
        assert seq.names == ("KR", "KO_G(X)", "KO_G(XxR)", "KR^-1")
        assert seq.exact_at == (1, 2)

    def test_other_degrees(self):
        assert sequence_E_point_instance(2).terms == (Z, cyclic(2), TRIV, TRIV)
        assert sequence_E_point_instance(5).terms == (TRIV, TRIV, TRIV, Z)


class TestFiberTwist:
    def test_report(self):
        report = fiber_twist_check()
        assert report.passed
        assert bool(report)
        assert [c.name for c in report.checks] == [
            "complex-fiber-modules",
            "source-equivalence",
            "target-equivalence",
            "k0-square-commutes",
        ]
        assert all(c.passed for c in report.checks)
        assert "((2,),)" in report.checks[3].detail
