"""
Tests for exceptional-class and root enumeration, the orbit oracle and the memo
"""
import json
from fractions import Fraction
from itertools import product

import pytest

from models.errors import PreconditionError
from models.lattice import HomologyClass, canonical_class, from_integers, pairing, simple_root
from services.enumeration_service import (
    EXCEPTIONAL,
    ROOT,
    EnumerationService,
    default_max_degree,
    enumeration_service,
)
from services.memo_store import MemoStore
from services.weyl_service import weyl_service


class TestExceptionalEnumeration:
    """Counts of exceptional classes at the default degree bound"""

    @pytest.mark.parametrize("n,expected", [(1, 1), (2, 3), (3, 6), (4, 10), (5, 16), (6, 27), (7, 56)])
    def test_counts(self, n, expected, enumerator):
        assert len(enumerator.enumerate_exceptional(n, default_max_degree(n))) == expected

    @pytest.mark.slow
    def test_count_on_eight_points(self, enumerator):
        assert len(enumerator.enumerate_exceptional(8, 6)) == 240

    def test_two_points(self, enumerator, cls):
        classes = enumerator.enumerate_exceptional(2, 3)
        assert set(classes) == {cls(0, -1, 0), cls(0, 0, -1), cls(1, 1, 1)}

    def test_six_points_by_degree(self, enumerator):
        classes = enumerator.enumerate_exceptional(6, 3)
        by_degree = {}
        for e in classes:
            by_degree[int(e.a)] = by_degree.get(int(e.a), 0) + 1
        assert by_degree == {0: 6, 1: 15, 2: 6}

    def test_ordering_is_degree_then_descending_b(self, enumerator, cls):
        classes = enumerator.enumerate_exceptional(2, 1)
        assert classes == [cls(0, 0, -1), cls(0, -1, 0), cls(1, 1, 1)]

    def test_every_class_is_exceptional(self, enumerator):
        for e in enumerator.enumerate_exceptional(6, 3):
            assert e.square() == -1
            assert e.k_pairing() == -1
            assert weyl_service.is_exceptional(e)

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 7, pytest.param(8, marks=pytest.mark.slow)])
    def test_distinct_exceptional_classes_pair_non_negatively(self, n, enumerator):
        classes = enumerator.enumerate_exceptional(n, max(3, n - 2))
        for i, e in enumerate(classes):
            for f in classes[i + 1:]:
                assert pairing(e, f) >= 0

    def test_rejects_n_zero(self, enumerator):
        with pytest.raises(PreconditionError):
            enumerator.enumerate_exceptional(0)


class TestRootEnumeration:
    @pytest.mark.parametrize("n,expected", [(2, 2), (3, 8), (4, 20), (5, 40), (6, 72), (7, 126)])
    def test_counts(self, n, expected, enumerator):
        assert len(enumerator.enumerate_roots(n, max(3, n - 2))) == expected

    @pytest.mark.slow
    def test_count_on_eight_points(self, enumerator):
        assert len(enumerator.enumerate_roots(8, 6)) == 240

    def test_root_system_grows_without_bound_on_nine_points(self, enumerator):
        counts = [len(enumerator.enumerate_roots(9, bound)) for bound in (1, 2, 3, 4)]
        assert counts == sorted(set(counts))

    def test_three_points(self, enumerator, cls):
        roots = set(enumerator.enumerate_roots(3, 2))
        l0, l1, l2 = (simple_root(3, i) for i in range(3))
        expected = {l0, l1, l2, l1 + l2}
        assert roots == expected | {-r for r in expected}

    def test_rejects_n_one(self, enumerator):
        with pytest.raises(PreconditionError):
            enumerator.enumerate_roots(1)


class TestOrbitOracle:
    """Breadth-first orbit closure against the loop-based membership tests"""

    def test_orbit_of_e2(self, enumerator, cls):
        orbit = enumerator.orbit_bfs(HomologyClass.exceptional(2, 2), 1)
        assert set(orbit) == {cls(0, 0, -1), cls(0, -1, 0), cls(1, 1, 1)}

    def test_orbit_of_simple_root(self, enumerator):
        orbit = set(enumerator.orbit_bfs(simple_root(3, 1), 2))
        assert len(orbit) == 6
        assert simple_root(3, 0) not in orbit

    def test_root_orbits_match_enumeration(self, enumerator, orbits):
        _, roots = orbits(3, 2)
        assert roots == set(enumerator.enumerate_roots(3, 2))

    def test_canonical_class_is_fixed(self, enumerator):
        K = canonical_class(3)
        assert enumerator.orbit_bfs(K, 3) == [K]

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_exhaustive_agreement(self, n, orbits):
        bound = 4
        exceptional_orbit, root_orbit = orbits(n, bound)
        for a in range(-bound, bound + 1):
            for b in product(range(-bound - 1, bound + 2), repeat=n):
                d = from_integers(a, b)
                if d.square() == -1 and d.k_pairing() == -1:
                    assert weyl_service.is_exceptional(d) == (d in exceptional_orbit), d
                if d.square() == -2 and d.k_pairing() == 0:
                    assert weyl_service.is_root(d) == (d in root_orbit), d


class TestDSet:
    def test_degree_zero_roots(self, enumerator, cls):
        roots = enumerator.d_set(HomologyClass.exceptional(3, 1), cls("(1|1/2,1/4,1/4)"))
        assert roots == [cls(0, -1, 1, 0), cls(0, -1, 0, 1)]

    def test_last_exceptional_class_with_strict_minimum(self, enumerator, cls):
        assert enumerator.d_set(HomologyClass.exceptional(3, 3), cls("(1|1/2,1/3,1/4)")) == []

    def test_degree_bound(self, enumerator, cls):
        roots = enumerator.d_set(cls(1, 1, 1, 0), cls("(1|1/2,1/4,1/4)"))
        assert all(d.a <= 1 for d in roots)

    def test_requires_reduced_form(self, enumerator, cls):
        with pytest.raises(PreconditionError):
            enumerator.d_set(HomologyClass.exceptional(3, 1), cls("(1|1/4,1/2,1/4)"))


class TestMinimalArea:
    def test_minimum_is_attained_by_en(self, enumerator, cls):
        omega = cls("(1|1/3,1/4,1/5,1/6)")
        area, witness = enumerator.minimal_exceptional_area(omega)
        assert area == pairing(omega, HomologyClass.exceptional(4, 4))
        assert witness == HomologyClass.exceptional(4, 4)

    @pytest.mark.slow
    @pytest.mark.parametrize("n", range(1, 9))
    def test_minimum_on_random_reduced_forms(self, n, rng, enumerator):
        for _ in range(100):
            b = sorted((Fraction(rng.randint(1, 30), rng.randint(31, 90)) for _ in range(n)), reverse=True)
            omega = HomologyClass(sum(b[:3], Fraction(0)) + Fraction(rng.randint(0, 6), 7), tuple(b))
            area, _ = enumerator.minimal_exceptional_area(omega)
            assert area == pairing(omega, HomologyClass.exceptional(n, n))


class TestMemoStore:
    """Append-only memo with an optional JSON directory"""

    def test_memory_backend_reuses_slices(self, memo):
        service = EnumerationService(memo)
        first = service.slice(EXCEPTIONAL, 5, 2)
        assert len(memo) == 1
        assert service.slice(EXCEPTIONAL, 5, 2) == first

    def test_put_never_overwrites(self, memo):
        memo.put((ROOT, 3, 0), [(0, -1, 1, 0)])
        kept = memo.put((ROOT, 3, 0), [])
        assert kept == ((0, -1, 1, 0),)

    def test_json_backend_round_trip(self, tmp_path):
        service = EnumerationService(MemoStore(str(tmp_path)))
        classes = service.slice(EXCEPTIONAL, 4, 1)
        path = tmp_path / "exceptional-n4-d1.json"
        assert path.exists()
        assert len(json.loads(path.read_text())) == len(classes) == 6

        reloaded = EnumerationService(MemoStore(str(tmp_path)))
        assert reloaded.slice(EXCEPTIONAL, 4, 1) == classes

    def test_unreadable_file_is_recomputed(self, tmp_path):
        (tmp_path / "exceptional-n3-d0.json").write_text("not json")
        service = EnumerationService(MemoStore(str(tmp_path)))
        assert len(service.slice(EXCEPTIONAL, 3, 0)) == 3

    def test_global_service_uses_default_store(self):
        assert isinstance(enumeration_service.memo, MemoStore)
