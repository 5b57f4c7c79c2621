"""
Deformation Service
Sign vectors on simple roots, chamber comparison, and the A-extremal and
minimal deformation families
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Set, Tuple

from models.errors import PathContractViolation, PreconditionError
from models.lattice import HomologyClass, format_rational, pairing, simple_root, simple_root_indices
from services.classification_service import classification_service
from services.cone_service import cone_service

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SignVector:
    indices: Tuple[int, ...]
    signs: Tuple[int, ...]

    def positive(self) -> Set[int]:
        return {i for i, s in zip(self.indices, self.signs) if s > 0}

    def restricted(self, keep: Set[int]) -> Tuple[int, ...]:
        return tuple(s for i, s in zip(self.indices, self.signs) if i in keep)

    def __str__(self) -> str:
        symbols = {1: "+", 0: "0", -1: "-"}
        return "(" + ",".join(symbols[s] for s in self.signs) + ")"


@dataclass(frozen=True)
class ChamberRelation:
    forward_surjection: bool
    backward_surjection: bool

    @property
    def invariant(self) -> bool:
        return self.forward_surjection and self.backward_surjection


@dataclass(frozen=True)
class DivisorPredicates:
    cv: Optional[bool]
    stein: Optional[bool]


def _sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)


def _touched(index: int) -> Set[int]:
    return {1, 2, 3} if index == 0 else {index, index + 1}


class DeformationService:
    """Chamber data along the two distinguished deformation families"""

    def sign_vector(self, omega: HomologyClass) -> SignVector:
        if not cone_service.is_reduced(omega):
            raise PreconditionError(f"{omega} is not reduced")
        indices = tuple(simple_root_indices(omega.n))
        signs = tuple(_sign(pairing(omega, simple_root(omega.n, i))) for i in indices)
        return SignVector(indices=indices, signs=signs)

    def _require_type_a_or_d(self, omega: HomologyClass, role: str) -> None:
        if not cone_service.is_reduced_symplectic(omega):
            raise PreconditionError(f"{role} {omega} is not a reduced symplectic class")
        kind = classification_service.form_type(omega).kind
        if kind == "E":
            raise PreconditionError(
                f"{role} {omega} is of type E; the simple-root criterion is only established for types A and D"
            )

    def chamber_compare(self, tau0: HomologyClass, tau1: HomologyClass) -> ChamberRelation:
        """Forward: every simple root positive on tau1 is positive on tau0"""
        if tau0.n != tau1.n:
            raise PreconditionError("forms live on different blow-ups")
        self._require_type_a_or_d(tau0, "tau0")
        self._require_type_a_or_d(tau1, "tau1")
        positive0 = self.sign_vector(tau0).positive()
        positive1 = self.sign_vector(tau1).positive()
        return ChamberRelation(
            forward_surjection=positive1 <= positive0,
            backward_surjection=positive0 <= positive1,
        )

    def _check_parameter(self, t: Fraction) -> Fraction:
        t = Fraction(t)
        if not 0 < t <= 1:
            raise PreconditionError(f"deformation parameter t={format_rational(t)} is outside (0, 1]")
        return t

    def _assert_in_chamber(self, start: HomologyClass, result: HomologyClass, keep: Optional[Set[int]] = None) -> None:
        if cone_service.in_nrn(start) and not cone_service.in_nrn(result):
            raise PathContractViolation(f"deformed class {result} left NR_{result.n}")
        if not cone_service.is_reduced_symplectic(result):
            raise PathContractViolation(f"deformed class {result} left the reduced symplectic cone")
        before = self.sign_vector(start)
        after = self.sign_vector(result)
        if keep is None:
            changed = before.signs != after.signs
        else:
            changed = before.restricted(keep) != after.restricted(keep)
        if changed:
            raise PathContractViolation(
                f"simple-root signs changed from {before} to {after} along the deformation",
                {"before": str(before), "after": str(after)},
            )

    def a_extremal_path(self, omega: HomologyClass, t: Fraction) -> HomologyClass:
        """(1|(c_1 - 1)t + 1, t c_2, ..., t c_n)"""
        t = self._check_parameter(t)
        if omega.a != 1 or omega.n < 1:
            raise PreconditionError(f"{omega} is not a normalized class (1|c_1,...,c_n)")
        self._require_type_a_or_d(omega, "omega")

        c = omega.b
        result = HomologyClass(Fraction(1), ((c[0] - 1) * t + 1,) + tuple(t * x for x in c[1:]))
        self._assert_in_chamber(omega, result)
        logger.debug(f"A-extremal deformation of {omega} at t={t}: {result}")
        return result

    def minimal_path(self, omega: HomologyClass, m: int, t: Fraction) -> HomologyClass:
        """Shrink the trailing block of m equal entries by t"""
        t = self._check_parameter(t)
        n = omega.n
        if omega.a != 1:
            raise PreconditionError(f"{omega} is not a normalized class")
        if not 1 <= m < n:
            raise PreconditionError(f"block length m={m} must satisfy 1 <= m < n={n}")
        eta = omega.b[-1]
        if any(x != eta for x in omega.b[n - m:]):
            raise PreconditionError(f"the last {m} entries of {omega} are not equal")
        if not cone_service.is_reduced_symplectic(omega):
            raise PreconditionError(f"{omega} is not a reduced symplectic class")

        label = classification_service.form_type(omega)
        if (label.kind, label.rank) in (("D", n - 1), ("E", n)):
            raise PreconditionError(f"{omega} is of excluded type {label.kind}_{label.rank}")

        result = HomologyClass(Fraction(1), omega.b[: n - m] + (t * eta,) * m)
        block = set(range(n - m + 1, n + 1))
        untouched = {i for i in simple_root_indices(n) if not (_touched(i) & block)}
        self._assert_in_chamber(omega, result, keep=untouched)
        return result

    def divisor_predicates(self, omega: HomologyClass) -> DivisorPredicates:
        if not cone_service.is_reduced_symplectic(omega):
            raise PreconditionError(f"{omega} is not a reduced symplectic class")
        n = omega.n
        m = [x / omega.a for x in omega.b]

        cv = None
        if n >= 2:
            a = m[0]
            if all(x == (1 - a) / 2 for x in m[1:]):
                cv = a > Fraction(n - 3, n - 1)

        stein = None
        if n > 5:
            stein = 2 * m[0] - 1 - sum(m[5:], Fraction(0)) > 0
        return DivisorPredicates(cv=cv, stein=stein)


# Global deformation service instance
deformation_service = DeformationService()
