"""
Tests for sign vectors, chamber comparison and the deformation families
"""
from fractions import Fraction

import pytest

from models.errors import PreconditionError
from services.cone_service import cone_service
from services.deformation_service import deformation_service


class TestSignVector:
    @pytest.mark.parametrize(
        "literal,expected",
        [
            ("(1|1/3,1/3,1/3)", "(0,0,0)"),
            ("(1|1/2,1/4,1/4,1/4,1/4)", "(0,+,0,0,0)"),
            ("(1|1/3,1/4,1/5)", "(+,+,+)"),
        ],
    )
    def test_display(self, literal, expected, cls):
        assert str(deformation_service.sign_vector(cls(literal))) == expected

    def test_small_n_has_no_l0_entry(self, cls):
        vector = deformation_service.sign_vector(cls("(1|1/2,1/4)"))
        assert vector.indices == (1,)
        assert vector.positive() == {1}

    def test_requires_reduced_class(self, cls):
        with pytest.raises(PreconditionError):
            deformation_service.sign_vector(cls("(1|1/4,1/2)"))


class TestChamberCompare:
    """Surjections between Lagrangian root systems read off the signs"""

    def test_one_way_surjection(self, cls):
        tau0 = cls("(1|49/100,1/4,1/4,1/4,1/4)")
        tau1 = cls("(1|1/2,1/4,1/4,1/4,1/4)")
        relation = deformation_service.chamber_compare(tau0, tau1)
        assert relation.forward_surjection
        assert not relation.backward_surjection
        assert not relation.invariant

    def test_same_chamber(self, cls):
        tau = cls("(1|1/3,1/4,1/5)")
        assert deformation_service.chamber_compare(tau, cls("(1|1/2,1/4,1/5)")).invariant

    def test_type_e_rejected(self, cls):
        e6 = cls("(1|1/3,1/3,1/3,1/3,1/3,1/3,1/4)")
        with pytest.raises(PreconditionError):
            deformation_service.chamber_compare(e6, e6)

    def test_dimension_mismatch(self, cls):
        with pytest.raises(PreconditionError):
            deformation_service.chamber_compare(cls("(1|1/3,1/4,1/5)"), cls("(1|1/3,1/4)"))


class TestAExtremalPath:
    def test_type_d_form(self, cls):
        result = deformation_service.a_extremal_path(cls("(1|1/2,1/4,1/4,1/4,1/4)"), Fraction(1, 2))
        assert result == cls("(1|3/4,1/8,1/8,1/8,1/8)")

    def test_type_a_form(self, cls):
        result = deformation_service.a_extremal_path(cls("(1|1/3,1/4,1/5)"), Fraction(1, 3))
        assert result == cls("(1|7/9,1/12,1/15)")

    def test_vanishing_last_entry(self, cls):
        result = deformation_service.a_extremal_path(cls("(1|1/2,1/4,0)"), Fraction(1, 2))
        assert result == cls("(1|3/4,1/8,0)")

    def test_t_one_is_the_identity(self, cls):
        omega = cls("(1|1/3,1/4,1/5)")
        assert deformation_service.a_extremal_path(omega, 1) == omega

    @pytest.mark.parametrize("t", [0, Fraction(3, 2), -1])
    def test_parameter_range(self, t, cls):
        with pytest.raises(PreconditionError):
            deformation_service.a_extremal_path(cls("(1|1/3,1/4,1/5)"), t)

    def test_normalized_input(self, cls):
        with pytest.raises(PreconditionError):
            deformation_service.a_extremal_path(cls("(2|1/3,1/4,1/5)"), Fraction(1, 2))


class TestMinimalPath:
    def test_shrinks_trailing_block(self, cls):
        omega = cls("(1|1/2,1/4,1/4,1/4,1/5,1/5)")
        result = deformation_service.minimal_path(omega, 2, Fraction(1, 2))
        assert result == cls("(1|1/2,1/4,1/4,1/4,1/10,1/10)")

    def test_excluded_type(self, cls):
        with pytest.raises(PreconditionError):
            deformation_service.minimal_path(cls("(1|1/2,1/4,1/4,1/4,1/4)"), 4, Fraction(1, 2))

    def test_block_must_be_equal(self, cls):
        with pytest.raises(PreconditionError):
            deformation_service.minimal_path(cls("(1|1/3,1/4,1/5)"), 2, Fraction(1, 2))

    def test_block_length_range(self, cls):
        with pytest.raises(PreconditionError):
            deformation_service.minimal_path(cls("(1|1/3,1/3,1/3)"), 3, Fraction(1, 2))


class TestDivisorPredicates:
    def test_d_form_on_ten_points(self, cls):
        predicates = deformation_service.divisor_predicates(cls("(1|4/5" + ",1/10" * 9 + ")"))
        assert predicates.cv is True
        assert predicates.stein is True

    def test_cv_fails_below_threshold(self, cls):
        predicates = deformation_service.divisor_predicates(cls("(1|3/4" + ",1/8" * 9 + ")"))
        assert predicates.cv is False

    def test_undefined_predicates(self, cls):
        predicates = deformation_service.divisor_predicates(cls("(1|1/3,1/4,1/5)"))
        assert predicates.cv is None
        assert predicates.stein is None


class TestChamberInvariance:
    """Both families keep the sign vector and stay inside NR_n"""

    @pytest.mark.slow
    @pytest.mark.parametrize("t", [Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)])
    def test_random_polytope_points(self, t, rng):
        for _ in range(100):
            n = rng.randint(3, 8)
            omega = cone_service.sample_nrn(n, rng)
            for result in (
                deformation_service.a_extremal_path(omega, t),
                deformation_service.minimal_path(omega, 1, t),
            ):
                assert cone_service.in_nrn(result)
                assert deformation_service.sign_vector(result) == deformation_service.sign_vector(omega)
                assert deformation_service.chamber_compare(omega, result).invariant
