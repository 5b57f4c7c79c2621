"""
Enumeration Service
Bounded exhaustive enumeration of exceptional classes, K-roots and Weyl orbits
"""
import logging
from collections import Counter, deque
from fractions import Fraction
from math import isqrt
from typing import Iterator, List, Optional, Sequence, Tuple

from config import settings
from models.errors import NonIntegralClassError, PreconditionError
from models.lattice import (
    HomologyClass,
    from_integers,
    integral_vector,
    pairing,
    simple_root_indices,
    stabilize,
    truncate,
)
from services.memo_store import MemoStore, Row
from services.weyl_service import STABLE_RANK, weyl_service

logger = logging.getLogger(__name__)

EXCEPTIONAL = "exceptional"
ROOT = "root"
KINDS = (EXCEPTIONAL, ROOT)


def default_max_degree(n: int) -> int:
    return max(3, n - 2)


def ordering_key(d: HomologyClass) -> Tuple:
    """Degree first, then b in descending lexicographic order"""
    return (d.a, tuple(-x for x in d.b))


def _descending_solutions(n: int, total: int, squares: int) -> List[Row]:
    """All integer vectors b_1 >= ... >= b_n with the given sum and sum of squares"""
    results: List[Row] = []
    prefix: List[int] = []

    def search(k: int, s: int, q: int, upper: Optional[int]) -> None:
        if k == 0:
            if s == 0 and q == 0:
                results.append(tuple(prefix))
            return
        # Cauchy-Schwarz: s^2 <= k * q
        if q < 0 or s * s > k * q:
            return
        radius = isqrt(q)
        high = radius if upper is None else min(upper, radius)
        low = max(-radius, -((-s) // k))
        for x in range(high, low - 1, -1):
            if s - x > (k - 1) * x:
                break
            prefix.append(x)
            search(k - 1, s - x, q - x * x, x)
            prefix.pop()

    search(n, total, squares, None)
    return results


def _distinct_permutations(values: Sequence[int]) -> Iterator[Row]:
    counts = Counter(values)
    keys = sorted(counts, reverse=True)
    size = len(values)
    current: List[int] = []

    def walk() -> Iterator[Row]:
        if len(current) == size:
            yield tuple(current)
            return
        for key in keys:
            if counts[key]:
                counts[key] -= 1
                current.append(key)
                yield from walk()
                current.pop()
                counts[key] += 1

    yield from walk()


class EnumerationService:
    """Degree-sliced enumeration with an append-only memo"""

    def __init__(self, memo: Optional[MemoStore] = None):
        self.memo = memo if memo is not None else MemoStore(settings.cache_dir)

    def _compute_slice(self, kind: str, n: int, degree: int) -> List[Row]:
        if kind == EXCEPTIONAL:
            total, squares, test = 3 * degree - 1, degree * degree + 1, weyl_service.is_exceptional
        else:
            total, squares, test = 3 * degree, degree * degree + 2, weyl_service.is_root

        rows: List[Row] = []
        for canonical in _descending_solutions(n, total, squares):
            if not test(from_integers(degree, canonical)):
                continue
            rows.extend((degree,) + b for b in _distinct_permutations(canonical))
        rows.sort(key=lambda row: tuple(-x for x in row[1:]))
        logger.debug(f"Enumerated {len(rows)} {kind} classes of degree {degree} on n={n}")
        return rows

    def slice_rows(self, kind: str, n: int, degree: int) -> Sequence[Row]:
        """Memoized integer rows (a, b_1, ..., b_n) of one non-negative degree slice"""
        if kind not in KINDS:
            raise PreconditionError(f"unknown enumeration kind {kind!r}")
        if degree < 0:
            raise PreconditionError("memoized slices have non-negative degree")
        key = (kind, n, degree)
        rows = self.memo.get(key)
        if rows is None:
            rows = self.memo.put(key, self._compute_slice(kind, n, degree))
        return rows

    def slice(self, kind: str, n: int, degree: int) -> List[HomologyClass]:
        """All classes of one kind with H-coefficient exactly ``degree``"""
        if kind not in KINDS:
            raise PreconditionError(f"unknown enumeration kind {kind!r}")
        if kind == ROOT and degree < 0:
            return sorted((-d for d in self.slice(ROOT, n, -degree)), key=ordering_key)
        if kind == EXCEPTIONAL and degree < 0:
            return []
        return [from_integers(row[0], row[1:]) for row in self.slice_rows(kind, n, degree)]

    def enumerate_exceptional(self, n: int, max_degree: Optional[int] = None) -> List[HomologyClass]:
        if n < 1:
            raise PreconditionError("exceptional enumeration needs n >= 1")
        max_degree = default_max_degree(n) if max_degree is None else max_degree
        classes: List[HomologyClass] = []
        for degree in range(0, max_degree + 1):
            classes.extend(self.slice(EXCEPTIONAL, n, degree))
        return classes

    def enumerate_roots(self, n: int, max_degree: Optional[int] = None) -> List[HomologyClass]:
        """Roots of |degree| <= max_degree, both signs"""
        if n < 2:
            raise PreconditionError("root enumeration needs n >= 2")
        max_degree = default_max_degree(n) if max_degree is None else max_degree
        classes: List[HomologyClass] = []
        for degree in range(-max_degree, max_degree + 1):
            classes.extend(self.slice(ROOT, n, degree))
        return classes

    def iter_exceptional_rows(self, n: int, start: int, stop: int) -> Iterator[Row]:
        """Exceptional rows in degree order, computing each slice only when reached"""
        for degree in range(start, stop + 1):
            yield from self.slice_rows(EXCEPTIONAL, n, degree)

    def d_set(self, exceptional: HomologyClass, omega: HomologyClass) -> List[HomologyClass]:
        """Roots D with D.E < 0, omega.D > 0 and 0 <= D.H <= E.H"""
        from services.cone_service import cone_service

        if not weyl_service.is_exceptional(exceptional):
            raise PreconditionError(f"{exceptional} is not an exceptional class")
        if not cone_service.is_reduced(omega) or omega.square() <= 0:
            raise PreconditionError(f"{omega} is not a reduced symplectic class")
        if exceptional.n != omega.n:
            raise PreconditionError("exceptional class and form live on different blow-ups")

        result = []
        for degree in range(0, int(exceptional.a) + 1):
            for root in self.slice(ROOT, exceptional.n, degree):
                if pairing(root, exceptional) < 0 and pairing(omega, root) > 0:
                    result.append(root)
        return result

    def orbit_bfs(self, seed: HomologyClass, max_degree: int) -> List[HomologyClass]:
        """Breadth-first closure of the seed under simple reflections, within |a| <= max_degree"""
        if not seed.is_integral:
            raise NonIntegralClassError(f"orbit seed {seed} is not integral")
        n = seed.n
        rank = max(n, STABLE_RANK)
        start = integral_vector(stabilize(seed, rank))
        if abs(start[0]) > max_degree:
            return []

        def neighbours(v: Row) -> Iterator[Row]:
            a, b = v[0], list(v[1:])
            for index in simple_root_indices(rank):
                if index == 0:
                    delta = a - b[0] - b[1] - b[2]
                    if delta:
                        yield (a + delta, b[0] + delta, b[1] + delta, b[2] + delta, *b[3:])
                elif b[index - 1] != b[index]:
                    swapped = list(b)
                    swapped[index - 1], swapped[index] = swapped[index], swapped[index - 1]
                    yield (a, *swapped)

        seen = {start}
        queue = deque([start])
        while queue:
            current = queue.popleft()
            for image in neighbours(current):
                if abs(image[0]) <= max_degree and image not in seen:
                    seen.add(image)
                    queue.append(image)

        orbit = [
            truncate(from_integers(v[0], v[1:]), n)
            for v in seen
            if all(x == 0 for x in v[n + 1:])
        ]
        return sorted(orbit, key=ordering_key)

    def minimal_exceptional_area(
        self, omega: HomologyClass, max_degree: Optional[int] = None
    ) -> Tuple[Fraction, HomologyClass]:
        """Smallest omega-area over the enumerated exceptional classes and a witness"""
        candidates = self.enumerate_exceptional(omega.n, max_degree)
        witness = min(candidates, key=lambda e: (pairing(omega, e), ordering_key(e)))
        return pairing(omega, witness), witness


# Global enumeration service instance
enumeration_service = EnumerationService()
