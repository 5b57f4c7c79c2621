"""
Reduced Cone Service
Reduced-cone predicates, c1-positive cone membership, the NR_n polytope
vertices and the nef test against bounded curve candidates
"""
import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterator, List, Optional, Tuple

from models.errors import DimensionMismatchError, PreconditionError
from models.lattice import HomologyClass, format_rational, pairing, stabilize
from services.weyl_service import weyl_service

logger = logging.getLogger(__name__)

THIRD = Fraction(1, 3)


@dataclass(frozen=True)
class ConeReport:
    is_reduced: bool
    square: Fraction
    c1_pairing: Fraction
    is_symplectic: bool
    is_c1_positive: bool
    in_NRn: bool
    failing_constraints: List[str] = field(default_factory=list)


@dataclass(frozen=True)
class Vertex:
    cls: HomologyClass
    tag: str
    included: bool


@dataclass(frozen=True)
class VertexList:
    n: int
    vertices: List[Vertex]

    @property
    def classes(self) -> List[HomologyClass]:
        return [v.cls for v in self.vertices]


@dataclass(frozen=True)
class NefReport:
    nef: bool
    checked: int
    witness: Optional[HomologyClass] = None
    witness_family: Optional[str] = None
    witness_pairing: Optional[Fraction] = None


def _reduced_violations(d: HomologyClass) -> List[str]:
    """The inequality chain of a reduced class, as named failures"""
    failures = []
    b = d.b
    if d.n == 0:
        if d.a <= 0:
            failures.append("nu > 0")
        return failures
    for i in range(d.n - 1):
        if b[i] < b[i + 1]:
            failures.append(f"m{i + 1} >= m{i + 2}")
    if b[-1] < 0:
        failures.append(f"m{d.n} >= 0")
    head = sum(b[:3], Fraction(0))
    if d.a < head:
        label = "+".join(f"m{i + 1}" for i in range(min(3, d.n)))
        failures.append(f"nu >= {label}")
    return failures


class ConeService:
    """Membership predicates for the reduced and c1-positive cones"""

    def is_reduced(self, d: HomologyClass) -> bool:
        if d.a == 0 and all(x == 0 for x in d.b):
            return False
        return not _reduced_violations(d)

    def is_symplectic(self, d: HomologyClass) -> bool:
        """Decided on the reduced representative: reduced with positive square"""
        result = weyl_service.reduce(d)
        if not result.is_reduced:
            return False
        return self.is_reduced_symplectic(result.reduced)

    def is_c1_positive(self, d: HomologyClass) -> bool:
        return self.is_symplectic(d) and d.c1_pairing() > 0

    def is_reduced_symplectic(self, d: HomologyClass) -> bool:
        return self.is_reduced(d) and d.square() > 0

    def cone_report(self, d: HomologyClass) -> ConeReport:
        failing = _reduced_violations(d)
        square = d.square()
        c1 = d.c1_pairing()
        symplectic = self.is_symplectic(d)
        c1_positive = symplectic and c1 > 0

        if square <= 0:
            failing.append("square > 0")
        if c1 <= 0:
            failing.append("c1 > 0")
        if d.n and d.b[-1] <= 0:
            failing.append(f"m{d.n} > 0")
        if d.a != 1:
            failing.append("nu = 1")

        in_nrn = (
            self.is_reduced(d)
            and symplectic
            and c1_positive
            and d.a == 1
            and (d.n == 0 or d.b[-1] > 0)
        )
        return ConeReport(
            is_reduced=self.is_reduced(d),
            square=square,
            c1_pairing=c1,
            is_symplectic=symplectic,
            is_c1_positive=c1_positive,
            in_NRn=in_nrn,
            failing_constraints=failing,
        )

    def in_nrn(self, d: HomologyClass) -> bool:
        return self.cone_report(d).in_NRn

    def base_vertex(self, n: int, i: int) -> HomologyClass:
        """G_i of the slice over X_n: O, A, G_3, then (1|1/3 x (i-1)), and M = G_{n+1}"""
        if i == 1:
            b = [Fraction(0)] * n
        elif i == 2:
            b = [Fraction(1)] + [Fraction(0)] * (n - 1)
        elif i == 3:
            b = [Fraction(1, 2)] * 2 + [Fraction(0)] * (n - 2)
        elif 4 <= i <= n + 1:
            b = [THIRD] * (i - 1) + [Fraction(0)] * (n - i + 1)
        else:
            raise PreconditionError(f"G_{i} does not exist for n={n}")
        return HomologyClass(Fraction(1), tuple(b))

    def edge_hyperplane_point(self, n: int, i: int) -> HomologyClass:
        """Intersection of the segment [M, G_i] with the hyperplane d.K = 0"""
        m = self.base_vertex(n, n + 1)
        g = self.base_vertex(n, i)
        c1_m = m.c1_pairing()
        t = c1_m / (c1_m - g.c1_pairing())
        return m + (g - m).scale(t)

    def printed_edge_vertex(self, n: int, i: int) -> HomologyClass:
        """Closed forms of the new vertices on [M, G_i], i = 1..10, for n >= 10"""
        if i == 1:
            b = [Fraction(3, n)] * n
        elif i == 2:
            b = [Fraction(n - 7, n - 3)] + [Fraction(2, n - 3)] * (n - 1)
        elif i == 3:
            b = [Fraction(n - 5, 2 * (n - 3))] * 2 + [Fraction(2, n - 3)] * (n - 2)
        elif 4 <= i <= 10:
            # G_i carries i-1 entries equal to 1/3
            count = i - 1
            b = [THIRD] * count + [Fraction(9 - count, 3 * (n - count))] * (n - count)
        else:
            raise PreconditionError(f"no edge vertex for i={i}")
        return HomologyClass(Fraction(1), tuple(b))

    def nrn_vertices(self, n: int) -> VertexList:
        if n < 3:
            raise PreconditionError("the reduced polytope description starts at n = 3")

        if n <= 9:
            raw = [(self.base_vertex(n, i), f"G_{i}") for i in range(1, n + 2)]
        else:
            raw = [(stabilize(v.cls, n), v.tag) for v in self.nrn_vertices(n - 1).vertices]
            for i in range(1, 11):
                raw.append((self.edge_hyperplane_point(n, i), f"new-on-edge(G_{n + 1},G_{i})"))

        vertices = [Vertex(cls=cls, tag=tag, included=self.in_nrn(cls)) for cls, tag in raw]
        return VertexList(n=n, vertices=vertices)

    def type_d_threshold(self, n: int) -> Tuple[Fraction, Callable[[Fraction], bool]]:
        """Lower bound on a for the D-form (1|a, (1-a)/2 x (n-1)) to be c1-positive reduced"""
        if n < 5:
            raise PreconditionError("the D-form threshold is defined for n >= 5")
        threshold = THIRD if n <= 9 else Fraction(n - 7, n - 3)

        def verdict(a: Fraction) -> bool:
            a = Fraction(a)
            return threshold < a < 1

        return threshold, verdict

    def d_form(self, n: int, a: Fraction) -> HomologyClass:
        """omega_a = (1|a, (1-a)/2 x (n-1))"""
        a = Fraction(a)
        return HomologyClass(Fraction(1), (a,) + ((1 - a) / 2,) * (n - 1))

    def sample_nrn(self, n: int, rng: random.Random) -> HomologyClass:
        """Random convex combination of the polytope vertices, every weight positive"""
        vertices = (
            self.nrn_vertices(n).classes
            if n >= 3
            else [self.base_vertex(n, i) for i in range(1, n + 2)]
        )
        weights = [Fraction(rng.randint(1, 12)) for _ in vertices]
        total = sum(weights, Fraction(0))
        point = HomologyClass.zero(n)
        for weight, vertex in zip(weights, vertices):
            point = point + vertex.scale(weight / total)
        return point

    def _curve_candidates(
        self, omega: HomologyClass, max_degree: int
    ) -> Iterator[Tuple[str, HomologyClass]]:
        from services.enumeration_service import enumeration_service

        n = omega.n
        for e in enumeration_service.enumerate_exceptional(n, max_degree):
            yield "exceptional", e
        if n >= 2:
            for degree in range(1, max_degree + 1):
                for root in enumeration_service.slice("root", n, degree):
                    if all(x < root.a for x in root.b):
                        yield "root", root
        for i in range(1, n + 1):
            rest = range(i + 1, n + 1)
            for size in range(0, n - i + 1):
                for subset in combinations(rest, size):
                    b = [Fraction(0)] * n
                    b[i - 1] = Fraction(-1)
                    for j in subset:
                        b[j - 1] = Fraction(1)
                    yield "degree-zero", HomologyClass(Fraction(0), tuple(b))
        for m in range(1, max_degree + 1):
            rest = range(2, n + 1)
            for size in range(0, n):
                for subset in combinations(rest, size):
                    b = [Fraction(0)] * n
                    b[0] = Fraction(-(m + 1))
                    for j in subset:
                        b[j - 1] = Fraction(1)
                    yield "negative-degree", HomologyClass(Fraction(-m), tuple(b))

    def nef_check(self, cls: HomologyClass, omega: HomologyClass, max_degree: int = 3) -> NefReport:
        """Pairing test of ``cls`` against bounded positive-area curve candidates"""
        if cls.n != omega.n:
            raise DimensionMismatchError(f"classes live on different blow-ups (n={cls.n} and n={omega.n})")
        if not self.is_reduced_symplectic(omega):
            raise PreconditionError(f"{omega} is not a reduced symplectic class")

        checked = 0
        for family, curve in self._curve_candidates(omega, max_degree):
            if pairing(omega, curve) <= 0:
                continue
            checked += 1
            value = pairing(cls, curve)
            if value < 0:
                logger.info(f"{cls} pairs {format_rational(value)} with {family} curve {curve}")
                return NefReport(
                    nef=False,
                    checked=checked,
                    witness=curve,
                    witness_family=family,
                    witness_pairing=value,
                )
        return NefReport(nef=True, checked=checked)


# Global cone service instance
cone_service = ConeService()
