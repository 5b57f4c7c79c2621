"""
Cremona Reduction Service
Reduction to the fundamental domain, Weyl-word bookkeeping and orbit
membership tests for exceptional classes and K-roots
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from config import settings
from models.errors import (
    DimensionMismatchError,
    InvalidGeneratorError,
    NonIntegralClassError,
    NotAPositiveRootError,
    PreconditionError,
)
from models.lattice import (
    HomologyClass,
    pairing,
    reflect,
    simple_root,
    simple_root_indices,
)
from models.weyl_word import ENReflection, ReductionStatus, SimpleRoot, WeylWord

logger = logging.getLogger(__name__)

# Orbit tests below n=3 run on the stabilized class in X_3, where l_0 exists.
STABLE_RANK = 3


@dataclass(frozen=True)
class ReductionResult:
    reduced: HomologyClass
    word: WeylWord
    steps: int
    status: ReductionStatus = ReductionStatus.REDUCED

    @property
    def is_reduced(self) -> bool:
        return self.status == ReductionStatus.REDUCED


def _sort_descending(b: list, word: list) -> None:
    """Stable bubble sort of b into descending order, one l_i swap at a time"""
    swapped = True
    while swapped:
        swapped = False
        for i in range(len(b) - 1):
            if b[i] < b[i + 1]:
                b[i], b[i + 1] = b[i + 1], b[i]
                word.append(SimpleRoot(i + 1))
                swapped = True


def _gamma(a, b: list):
    """Reflection along l_0 = H - E_1 - E_2 - E_3; returns the new a"""
    delta = a - b[0] - b[1] - b[2]
    b[0] += delta
    b[1] += delta
    b[2] += delta
    return a + delta


def _integral_coordinates(d: HomologyClass) -> Tuple[int, List[int]]:
    if not d.is_integral:
        raise NonIntegralClassError(f"class {d} is not integral")
    return int(d.a), [int(x) for x in d.b]


class WeylService:
    """Cremona (Weyl) group computations on H_2(X_n)"""

    def __init__(self, max_steps: Optional[int] = None):
        self.max_steps = max_steps or settings.max_reduction_steps

    def reduce(self, d: HomologyClass, allow_en_reflection: bool = False) -> ReductionResult:
        """Alternate descending sorts with Gamma_123 until the class is reduced.

        With ``allow_en_reflection`` the W'_n generator is also used: a negative
        trailing entry is flipped after each sort.
        """
        a = d.a
        b = list(d.b)
        word: List = []
        steps = 0
        status = ReductionStatus.REDUCED

        while True:
            _sort_descending(b, word)
            if allow_en_reflection and b and b[-1] < 0:
                b[-1] = -b[-1]
                word.append(ENReflection())
                continue
            if len(b) < 3 or a >= b[0] + b[1] + b[2]:
                break
            if a <= 0 or steps >= self.max_steps:
                status = ReductionStatus.NOT_REDUCIBLE
                logger.info(f"Reduction of {d} stopped at a={a} after {steps} steps")
                break
            a = _gamma(a, b)
            word.append(SimpleRoot(0))
            steps += 1

        result = HomologyClass(a, tuple(b))
        logger.debug(f"reduce {d} -> {result} in {steps} steps")
        return ReductionResult(reduced=result, word=WeylWord.of(word), steps=steps, status=status)

    def apply_word(self, word: WeylWord, x: HomologyClass) -> HomologyClass:
        """Apply the generators of ``word`` to ``x`` left to right"""
        valid = set(simple_root_indices(x.n))
        for generator in word.generators:
            if isinstance(generator, ENReflection):
                if x.n == 0:
                    raise InvalidGeneratorError("E_n reflection needs n >= 1")
                x = reflect(x, HomologyClass.exceptional(x.n, x.n))
            elif generator.index in valid:
                x = reflect(x, simple_root(x.n, generator.index))
            else:
                raise InvalidGeneratorError(
                    f"l_{generator.index} is not a simple root for n={x.n}",
                    {"index": generator.index, "n": x.n},
                )
        return x

    def is_exceptional(self, d: HomologyClass) -> bool:
        """Membership of d in the W_n-orbit of E_n"""
        a, b = _integral_coordinates(d)
        if d.square() != -1 or d.k_pairing() != -1:
            return False
        b = b + [0] * max(0, STABLE_RANK - len(b))
        target = [0] * (len(b) - 1) + [-1]

        while True:
            b.sort(reverse=True)
            if a == 0:
                return b == target
            if a < 0 or a >= b[0] + b[1] + b[2]:
                return False
            a = _gamma(a, b)

    def _normalize_root_sign(self, a: int, b: List[int]) -> Tuple[int, List[int]]:
        if a < 0:
            return -a, [-x for x in b]
        if a == 0:
            first = next((x for x in b if x != 0), 0)
            if first > 0:
                return 0, [-x for x in b]
        return a, b

    def is_root(self, d: HomologyClass) -> bool:
        """True iff d or -d is a positive root of the K-root system"""
        a, b = _integral_coordinates(d)
        if d.square() != -2 or d.k_pairing() != 0:
            return False
        a, b = self._normalize_root_sign(a, b)
        b = b + [0] * max(0, STABLE_RANK - len(b))
        l0_form = [1, 1, 1] + [0] * (len(b) - 3)

        while True:
            b.sort(reverse=True)
            if a == 0:
                return b[0] == 1 and b[-1] == -1 and all(x == 0 for x in b[1:-1])
            if a < 0:
                return False
            if a == 1 and b == l0_form:
                return True
            if a >= b[0] + b[1] + b[2]:
                return False
            a = _gamma(a, b)

    def is_positive_root(self, d: HomologyClass) -> bool:
        if not self.is_root(d):
            return False
        if d.a != 0:
            return d.a > 0
        first = next(x for x in d.b if x != 0)
        return first < 0

    def simple_root_coefficients(self, d: HomologyClass) -> Dict[int, Fraction]:
        """Coordinates of a class orthogonal to K in the simple-root basis (n >= 3)"""
        if d.n < 3:
            return {1: d.a - d.b[0]} if d.n == 2 else {}
        coefficients = {0: d.a, 1: d.a - d.b[0]}
        coefficients[2] = coefficients[0] + coefficients[1] - d.b[1]
        if d.n > 3:
            coefficients[3] = coefficients[0] + coefficients[2] - d.b[2]
        for i in range(4, d.n):
            coefficients[i] = coefficients[i - 1] - d.b[i - 1]
        return coefficients

    def decompose_positive_root(self, d: HomologyClass) -> Dict[int, int]:
        """Write a positive root as a non-negative combination of simple roots.

        Descends by simple reflections that lower the height, preferring l_0
        (the Gamma_123 split), and records each split-off component.
        """
        if not self.is_positive_root(d):
            raise NotAPositiveRootError(f"{d} is not a positive root")

        roots = {i: simple_root(d.n, i) for i in simple_root_indices(d.n)}
        multiplicities: Dict[int, int] = {}
        x = d
        while True:
            match = next((i for i, r in roots.items() if x == r), None)
            if match is not None:
                multiplicities[match] = multiplicities.get(match, 0) + 1
                break
            step = next(((i, pairing(x, r)) for i, r in roots.items() if pairing(x, r) < 0), None)
            if step is None:
                raise NotAPositiveRootError(f"no descending simple reflection for {x}")
            index, area = step
            multiplicities[index] = multiplicities.get(index, 0) - int(area)
            x = x + roots[index].scale(area)

        recombined = HomologyClass.zero(d.n)
        for index, count in multiplicities.items():
            recombined = recombined + roots[index].scale(count)
        if recombined != d:
            raise NotAPositiveRootError(f"simple-root splitting of {d} does not recombine")
        closed_form = {i: c for i, c in self.simple_root_coefficients(d).items() if c != 0}
        if closed_form != multiplicities:
            raise NotAPositiveRootError(f"simple-root splitting of {d} disagrees with its coordinates")
        return dict(sorted(multiplicities.items()))

    def cremona_equivalent(self, u: HomologyClass, v: HomologyClass) -> Optional[WeylWord]:
        """A word taking u to v when both share a reduced representative"""
        if u.n != v.n:
            raise DimensionMismatchError(f"classes live on different blow-ups (n={u.n} and n={v.n})")
        if u.square() <= 0 or v.square() <= 0:
            raise PreconditionError("Cremona equivalence is decided for positive-square classes only")
        reduced_u = self.reduce(u)
        reduced_v = self.reduce(v)
        if reduced_u.reduced != reduced_v.reduced:
            return None
        return reduced_u.word + reduced_v.word.inverse()


# Global Weyl service instance
weyl_service = WeylService()
