"""
Tests for the lattice model: pairing, reflections, distinguished classes
"""
from fractions import Fraction

import pytest

from models.errors import DimensionMismatchError, InvalidReflectionError
from models.lattice import (
    HomologyClass,
    canonical_class,
    distinguished,
    format_rational,
    linear_combination,
    pairing,
    reflect,
    simple_root,
    simple_root_indices,
    stabilize,
    truncate,
)


class TestPairing:
    """Intersection form diag(1, -1, ..., -1)"""

    def test_basis_squares(self):
        H = HomologyClass.line(3)
        E2 = HomologyClass.exceptional(3, 2)
        assert pairing(H, H) == 1
        assert pairing(E2, E2) == -1
        assert pairing(H, E2) == 0

    @pytest.mark.parametrize("n", [0, 1, 5, 9, 12])
    def test_canonical_square(self, n):
        assert canonical_class(n).square() == 9 - n

    def test_k_and_c1_pairing(self, cls):
        assert HomologyClass.exceptional(4, 1).k_pairing() == -1
        assert HomologyClass.line(4).k_pairing() == -3
        assert cls("(1|1/3,1/3,1/3)").c1_pairing() == 2

    def test_pairing_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            pairing(HomologyClass.line(2), HomologyClass.line(3))

    def test_rational_arithmetic_is_exact(self, cls):
        d = cls("(1|1/2,1/3)")
        assert d.square() == Fraction(23, 36)
        assert (d + d - d) == d
        assert d.scale(Fraction(6)).b == (Fraction(3), Fraction(2))


class TestSimpleRoots:
    """l_0 = H - E_1 - E_2 - E_3 and l_i = E_i - E_{i+1}"""

    @pytest.mark.parametrize("n", [3, 4, 8])
    def test_simple_roots_are_k_orthogonal_of_square_minus_two(self, n):
        for index in simple_root_indices(n):
            root = simple_root(n, index)
            assert root.square() == -2
            assert root.k_pairing() == 0

    def test_l0_missing_below_three(self):
        assert simple_root_indices(2) == [1]
        with pytest.raises(IndexError):
            simple_root(2, 0)

    def test_reflection_along_li_swaps_entries(self, cls):
        x = cls(3, 2, 1, 0)
        assert reflect(x, simple_root(3, 1)) == cls(3, 1, 2, 0)
        assert reflect(x, simple_root(3, 2)) == cls(3, 2, 0, 1)

    def test_reflection_along_l0(self, cls):
        x = cls("(1|1/2,1/3,1/3,1/3)")
        assert reflect(x, simple_root(4, 0)) == cls("(5/6|1/3,1/6,1/6,1/3)")

    def test_reflection_is_an_isometry_fixing_k(self, cls):
        x = cls(5, 2, 2, 1, 1)
        for index in simple_root_indices(4):
            image = reflect(x, simple_root(4, index))
            assert image.square() == x.square()
            assert image.k_pairing() == x.k_pairing()

    def test_reflection_along_en(self, cls):
        x = cls(2, 1, -1)
        assert reflect(x, HomologyClass.exceptional(2, 2)) == cls(2, 1, 1)

    def test_reflection_needs_square_minus_one_or_two(self):
        with pytest.raises(InvalidReflectionError):
            reflect(HomologyClass.line(2), HomologyClass.line(2))


class TestDistinguished:
    """K, the simple roots and E_n for every n"""

    def test_small_n_leaves_l0_slot_empty(self):
        classes = distinguished(2)
        assert classes.simple_roots[0] is None
        assert [i for i, _ in classes.roots()] == [1]
        assert classes.minimal_exceptional == HomologyClass.exceptional(2, 2)

    def test_n_zero(self):
        classes = distinguished(0)
        assert classes.canonical.square() == 9
        assert classes.roots() == []
        assert classes.minimal_exceptional is None

    def test_full_set(self):
        classes = distinguished(6)
        assert [i for i, _ in classes.roots()] == [0, 1, 2, 3, 4, 5]
        assert classes.canonical == canonical_class(6)


class TestStabilization:
    """Inclusion of H_2(X_n) into H_2(X_n')"""

    def test_stabilize_then_truncate(self, cls):
        d = cls(2, 1, 1)
        padded = stabilize(d, 5)
        assert padded.b == (1, 1, 0, 0, 0)
        assert truncate(padded, 2) == d

    def test_stabilize_down_rejected(self, cls):
        with pytest.raises(DimensionMismatchError):
            stabilize(cls(1, 0, 0), 1)

    def test_truncate_nonzero_tail_rejected(self, cls):
        with pytest.raises(DimensionMismatchError):
            truncate(cls(1, 0, 1), 1)


class TestDisplay:
    def test_formats(self, cls):
        d = cls(1, Fraction(1, 2), Fraction(1, 3))
        assert d.symplectic_display() == "(1|1/2,1/3)"
        assert d.lattice_display() == "1;1/2,1/3"
        assert str(d) == "(1|1/2,1/3)"
        assert format_rational(Fraction(-4, 2)) == "-2"

    def test_linear_combination(self, cls):
        total = linear_combination([(1, cls(1, 1, 1)), (1, cls(0, -1, 0)), (2, cls(0, 0, -1))], 2)
        assert total == cls(1, 0, -1)
