"""
Exact Simplex Service
Phase I revised simplex over Fractions with Bland's rule and lazily
generated columns
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

logger = logging.getLogger(__name__)

Column = Tuple[Hashable, Sequence[Fraction]]


class PhaseOneStatus(Enum):
    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"


@dataclass
class PhaseOneResult:
    status: PhaseOneStatus
    values: Dict[Hashable, Fraction] = field(default_factory=dict)
    pivots: int = 0
    residual: Fraction = Fraction(0)

    @property
    def feasible(self) -> bool:
        return self.status == PhaseOneStatus.FEASIBLE


class _Artificial:
    """Basis marker for the artificial variable of one row"""

    __slots__ = ("row",)

    def __init__(self, row: int):
        self.row = row


class SimplexService:
    """Feasibility of A x = rhs, x >= 0, with columns supplied on demand.

    Variable order for Bland's rule: artificials first (by row), then columns
    in the order the column source yields them. The source must yield the
    same sequence on every call.
    """

    def __init__(self, max_pivots: int = 100000):
        self.max_pivots = max_pivots

    def phase_one(
        self,
        rhs: Sequence[Fraction],
        column_source: Callable[[], Iterable[Column]],
    ) -> PhaseOneResult:
        m = len(rhs)
        # Rows with negative right-hand side are negated so the artificial basis is feasible
        signs = [Fraction(-1) if value < 0 else Fraction(1) for value in rhs]
        x_basis = [signs[i] * Fraction(rhs[i]) for i in range(m)]
        b_inverse = [[Fraction(int(i == j)) for j in range(m)] for i in range(m)]
        basis: List[object] = [_Artificial(i) for i in range(m)]
        order: Dict[Hashable, int] = {}
        pivots = 0

        def rank(variable) -> int:
            if isinstance(variable, _Artificial):
                return variable.row
            return m + order[variable]

        while sum(x for x, v in zip(x_basis, basis) if isinstance(v, _Artificial)) > 0:
            if pivots >= self.max_pivots:
                raise RuntimeError(f"simplex exceeded {self.max_pivots} pivots")

            # Duals of the Phase I objective: cost 1 on artificials
            costs = [Fraction(int(isinstance(v, _Artificial))) for v in basis]
            duals = [sum((costs[i] * b_inverse[i][j] for i in range(m)), Fraction(0)) for j in range(m)]

            signed_duals = [d * s for d, s in zip(duals, signs)]

            entering: Optional[Tuple[Hashable, List[Fraction]]] = None
            for position, (key, raw) in enumerate(column_source()):
                order.setdefault(key, position)
                # Reduced cost is -duals . column; first negative wins
                if sum((d * c for d, c in zip(signed_duals, raw)), Fraction(0)) > 0:
                    entering = (key, [signs[i] * Fraction(raw[i]) for i in range(m)])
                    break

            if entering is None:
                residual = sum((x for x, v in zip(x_basis, basis) if isinstance(v, _Artificial)), Fraction(0))
                logger.debug(f"Phase I stalled with residual {residual} after {pivots} pivots")
                return PhaseOneResult(PhaseOneStatus.INFEASIBLE, pivots=pivots, residual=residual)

            key, column = entering
            direction = [sum((b_inverse[i][j] * column[j] for j in range(m)), Fraction(0)) for i in range(m)]
            try:
                _, _, row = min(
                    (x_basis[i] / direction[i], rank(basis[i]), i)
                    for i in range(m)
                    if direction[i] > 0
                )
            except ValueError:
                # The Phase I objective is bounded below by zero
                raise RuntimeError("Phase I reported an unbounded direction")

            pivot = direction[row]
            b_inverse[row] = [value / pivot for value in b_inverse[row]]
            x_basis[row] = x_basis[row] / pivot
            for i in range(m):
                if i != row and direction[i] != 0:
                    factor = direction[i]
                    b_inverse[i] = [p - factor * q for p, q in zip(b_inverse[i], b_inverse[row])]
                    x_basis[i] = x_basis[i] - factor * x_basis[row]
            basis[row] = key
            pivots += 1

        values = {
            v: x
            for v, x in zip(basis, x_basis)
            if not isinstance(v, _Artificial) and x != 0
        }
        logger.debug(f"Phase I feasible after {pivots} pivots with {len(values)} positive columns")
        return PhaseOneResult(PhaseOneStatus.FEASIBLE, values=values, pivots=pivots)


# Global simplex service instance
simplex_service = SimplexService()
