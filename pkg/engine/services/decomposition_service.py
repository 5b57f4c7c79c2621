"""
Decomposition Service
Positive decompositions of c1-positive classes over exceptional classes,
model classes of embedded spheres and the negative-degree curve family
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple, Union

from models.errors import DecompositionError, NonIntegralClassError, PreconditionError
from models.lattice import HomologyClass, from_integers, linear_combination
from models.weyl_word import WeylWord
from services.cone_service import cone_service
from services.enumeration_service import enumeration_service, ordering_key
from services.simplex_service import simplex_service
from services.weyl_service import weyl_service

logger = logging.getLogger(__name__)

TWO_H = "TwoH"
KH_MINUS = "KH_minus"
KH_MINUS_E2 = "KH_minus_E2"


@dataclass(frozen=True)
class Decomposition:
    terms: List[Tuple[Fraction, HomologyClass]]
    degree_bound_used: int

    def recombine(self, n: int) -> HomologyClass:
        return linear_combination(self.terms, n)


@dataclass(frozen=True)
class InfeasibleAtBound:
    """No decomposition over exceptional classes of degree <= bound"""

    bound: int
    residual: Fraction = Fraction(0)


@dataclass(frozen=True)
class SphereModel:
    model: str
    k: Optional[int]
    word: WeylWord

    @property
    def label(self) -> str:
        return self.model if self.k is None else f"{self.model}({self.k})"

    def model_class(self, n: int) -> HomologyClass:
        b = [Fraction(0)] * n
        if self.model == TWO_H:
            return HomologyClass(Fraction(2), tuple(b))
        b[0] = Fraction(self.k - 1)
        if self.model == KH_MINUS_E2:
            b[1] = Fraction(1)
        return HomologyClass(Fraction(self.k), tuple(b))


@dataclass(frozen=True)
class NegativeDegreeFamily:
    m: int
    indices: Tuple[int, ...]


class DecompositionService:
    """Exact positive combinations over the enumerated exceptional classes"""

    def _columns(self, n: int, bound: int) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
        for row in enumeration_service.iter_exceptional_rows(n, 0, bound):
            yield row, row

    def _verify(self, d: HomologyClass, decomposition: Decomposition) -> None:
        if decomposition.recombine(d.n) != d:
            raise DecompositionError(f"decomposition of {d} does not recombine exactly")
        for coefficient, e in decomposition.terms:
            if coefficient <= 0 or not weyl_service.is_exceptional(e):
                raise DecompositionError(f"invalid term {coefficient} * {e} in decomposition of {d}")

    def decompose_c1_positive(
        self, d: HomologyClass, max_degree: Optional[int] = None
    ) -> Union[Decomposition, InfeasibleAtBound]:
        n = d.n
        if n <= 1:
            raise PreconditionError(
                "positive decomposition needs n >= 2; on X_1 the only exceptional class is E_1,"
                " whose span misses every class with positive H-coefficient",
                {"n": n},
            )
        if not cone_service.is_c1_positive(d):
            raise PreconditionError(f"{d} is not a c1-positive symplectic class", {"n": n})

        bound = max_degree if max_degree is not None else n
        cap = max(4 * n, bound)
        rhs = (d.a,) + d.b

        while True:
            result = simplex_service.phase_one(rhs, lambda: self._columns(n, bound))
            if result.feasible:
                terms = sorted(
                    ((x, from_integers(v[0], v[1:])) for v, x in result.values.items()),
                    key=lambda term: ordering_key(term[1]),
                )
                decomposition = Decomposition(terms=terms, degree_bound_used=bound)
                self._verify(d, decomposition)
                logger.debug(f"Decomposed {d} into {len(terms)} exceptional classes at degree bound {bound}")
                return decomposition
            if bound >= cap:
                logger.warning(f"No decomposition of {d} up to degree {bound}")
                return InfeasibleAtBound(bound=bound, residual=result.residual)
            next_bound = min(2 * bound if bound else 1, cap)
            logger.info(f"Raising the degree bound for {d} from {bound} to {next_bound}")
            bound = next_bound

    def sphere_model(self, d: HomologyClass) -> Optional[SphereModel]:
        """Model class of 2H, kH-(k-1)E_1 or kH-(k-1)E_1-E_2 reached by W'_n, if any"""
        if not d.is_integral:
            raise NonIntegralClassError(f"{d} is not an integral class")
        if d.square() <= 0:
            raise PreconditionError(f"{d} does not have positive square")

        result = weyl_service.reduce(d, allow_en_reflection=True)
        if not result.is_reduced:
            return None
        rep = result.reduced
        k = int(rep.a)
        support = [int(x) for x in rep.b if x != 0]

        if not support and k == 2:
            model = SphereModel(TWO_H, None, result.word)
        elif support == [k - 1] or (not support and k == 1):
            model = SphereModel(KH_MINUS, k, result.word)
        elif support == [k - 1, 1] and k >= 2:
            model = SphereModel(KH_MINUS_E2, k, result.word)
        else:
            logger.debug(f"{d} reduces to {rep}, which is no sphere model")
            return None
        return model

    def negative_a_family(self, d: HomologyClass) -> Optional[NegativeDegreeFamily]:
        """Match -mH + (m+1)E_1 - sum_{j in S} E_j, without Cremona moves"""
        if d.a >= 0:
            raise PreconditionError(f"{d} has non-negative H-coefficient")
        if not d.is_integral:
            raise NonIntegralClassError(f"{d} is not an integral class")
        m = int(-d.a)
        if d.n == 0 or d.b[0] != -(m + 1):
            return None
        indices = []
        for j, x in enumerate(d.b[1:], start=2):
            if x == 1:
                indices.append(j)
            elif x != 0:
                return None
        return NegativeDegreeFamily(m=m, indices=tuple(indices))


# Global decomposition service instance
decomposition_service = DecompositionService()
