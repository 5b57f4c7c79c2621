"""
Classification Service
Lagrangian root systems, ADE Dynkin classification, form types, symplectic
Torelli answers and blow-down reduction chains
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Dict, Iterable, List, Optional, Set, Tuple

from config import settings
from models.errors import (
    ADEContractViolation,
    PreconditionError,
    RootClosureLimitExceeded,
)
from models.lattice import (
    HomologyClass,
    format_rational,
    from_integers,
    integral_vector,
    pairing,
    simple_root,
    simple_root_indices,
)
from services.cone_service import cone_service

logger = logging.getLogger(__name__)

E_ORDERS = {6: 51840, 7: 2903040, 8: 696729600}
E_ROOTS = {6: 72, 7: 126, 8: 240}
E_ARMS = {(1, 2, 2): 6, (1, 2, 3): 7, (1, 2, 4): 8}

GENERATION_NOTE = (
    "The symplectic Torelli group of a positive rational surface is generated "
    "by Lagrangian Dehn twists."
)
MONOTONE_X5_NOTE = (
    "For the monotone form on X_5 the symplectic mapping class group is also "
    "quoted as PB_5(S^2)/Z_2; the answer above is the type-D_k statement as given."
)
CIRCLE_ACTION_NOTE = (
    "A type D form can still admit a circle action while its Torelli group is "
    "infinite, e.g. (1|2/3,1/6,1/6,1/6,1/6)."
)


@dataclass(frozen=True)
class ADEComponent:
    nodes: Tuple[int, ...]
    kind: str
    rank: int

    @property
    def label(self) -> str:
        return f"{self.kind}_{self.rank}"


def weyl_group_order(kind: str, rank: int) -> int:
    if kind == "A":
        return factorial(rank + 1)
    if kind == "D":
        return 2 ** (rank - 1) * factorial(rank)
    return E_ORDERS[rank]


def root_count(kind: str, rank: int) -> int:
    if kind == "A":
        return rank * (rank + 1)
    if kind == "D":
        return 2 * rank * (rank - 1)
    return E_ROOTS[rank]


@dataclass(frozen=True)
class RootDiagram:
    n: int
    nodes: Tuple[int, ...]
    edges: Tuple[Tuple[int, int], ...]
    components: Tuple[ADEComponent, ...]

    @property
    def labels(self) -> List[str]:
        return [c.label for c in self.components]

    @property
    def weyl_order(self) -> int:
        order = 1
        for component in self.components:
            order *= weyl_group_order(component.kind, component.rank)
        return order


@dataclass(frozen=True)
class TypeLabel:
    kind: str
    rank: int
    diagram: RootDiagram
    normal_form_label: Optional[str] = None
    notes: List[str] = field(default_factory=list)


@dataclass(frozen=True)
class TorelliAnswer:
    group: str
    display: str
    k: Optional[int]
    mapping_class_group_order: Optional[int]
    generation_note: str = GENERATION_NOTE
    notes: List[str] = field(default_factory=list)


@dataclass(frozen=True)
class RootSystem:
    roots: List[HomologyClass]
    weyl_order: int
    components: Tuple[ADEComponent, ...]


@dataclass(frozen=True)
class BlowdownChain:
    steps: List[Tuple[int, HomologyClass]]
    halted_reason: str


@dataclass(frozen=True)
class ToricReport:
    c1_positive: bool
    kind: str
    conditions_met: bool
    torelli_trivial: Optional[bool]
    notes: List[str] = field(default_factory=list)


def _component_shape(nodes: List[int], adjacency: Dict[int, List[int]]) -> ADEComponent:
    size = len(nodes)
    edge_count = sum(len(adjacency[v]) for v in nodes) // 2
    if edge_count != size - 1:
        raise ADEContractViolation(f"simple-root diagram on {nodes} contains a cycle")

    branches = [v for v in nodes if len(adjacency[v]) >= 3]
    if not branches:
        return ADEComponent(tuple(sorted(nodes)), "A", size)
    if len(branches) > 1 or len(adjacency[branches[0]]) > 3:
        raise ADEContractViolation(f"simple-root diagram on {nodes} is not of ADE shape")

    center = branches[0]
    arms = []
    for start in adjacency[center]:
        length, previous, current = 1, center, start
        while True:
            onward = [v for v in adjacency[current] if v != previous]
            if not onward:
                break
            previous, current = current, onward[0]
            length += 1
        arms.append(length)
    profile = tuple(sorted(arms))

    if profile[0] == 1 and profile[1] == 1:
        return ADEComponent(tuple(sorted(nodes)), "D", size)
    if profile in E_ARMS:
        return ADEComponent(tuple(sorted(nodes)), "E", E_ARMS[profile])
    raise ADEContractViolation(
        f"simple-root diagram on {nodes} has arm profile {profile}, which is not ADE",
        {"arms": list(profile)},
    )


def _match_normal_form(omega: HomologyClass) -> Optional[str]:
    """Label from the numerical normal forms of type E_k and D_k forms"""
    if omega.a <= 0:
        return None
    m = [x / omega.a for x in omega.b]
    third = Fraction(1, 3)

    thirds = 0
    while thirds < len(m) and m[thirds] == third:
        thirds += 1
    if thirds in (6, 7, 8) and (thirds == len(m) or m[thirds] < third):
        return f"E_{thirds}"

    if not m:
        return None
    a = m[0]
    half = (1 - a) / 2
    k = 0
    while 1 + k < len(m) and m[1 + k] == half:
        k += 1
    tail_ok = 1 + k == len(m) or half > m[1 + k]
    if tail_ok and ((third < a < 1 and k >= 4) or (a == third and k == 4)):
        return f"D_{k} with a={format_rational(a)}"
    return None


class ClassificationService:
    """ADE classification of zero-area simple roots and the resulting answers"""

    def ade_decomposition(self, nodes: Iterable[int], n: int) -> RootDiagram:
        nodes = sorted(set(nodes))
        valid = set(simple_root_indices(n))
        stray = [i for i in nodes if i not in valid]
        if stray:
            raise PreconditionError(f"l_{stray[0]} is not a simple root for n={n}")

        roots = {i: simple_root(n, i) for i in nodes}
        adjacency: Dict[int, List[int]] = {i: [] for i in nodes}
        edges = []
        for x, i in enumerate(nodes):
            for j in nodes[x + 1:]:
                if pairing(roots[i], roots[j]) == 1:
                    adjacency[i].append(j)
                    adjacency[j].append(i)
                    edges.append((i, j))

        # Depth-first search for connected components
        visited: Set[int] = set()
        components = []
        for start in nodes:
            if start in visited:
                continue
            stack, component = [start], []
            visited.add(start)
            while stack:
                v = stack.pop()
                component.append(v)
                for w in adjacency[v]:
                    if w not in visited:
                        visited.add(w)
                        stack.append(w)
            components.append(_component_shape(component, adjacency))

        return RootDiagram(n=n, nodes=tuple(nodes), edges=tuple(edges), components=tuple(components))

    def lagrangian_simple_roots(self, omega: HomologyClass) -> RootDiagram:
        if not cone_service.is_reduced_symplectic(omega):
            raise PreconditionError(f"{omega} is not a reduced symplectic class")
        nodes = [i for i in simple_root_indices(omega.n) if pairing(omega, simple_root(omega.n, i)) == 0]
        return self.ade_decomposition(nodes, omega.n)

    def form_type(self, omega: HomologyClass) -> TypeLabel:
        diagram = self.lagrangian_simple_roots(omega)
        kind, rank = "A", 0
        for wanted in ("E", "D"):
            found = [c for c in diagram.components if c.kind == wanted]
            if found:
                kind, rank = wanted, max(c.rank for c in found)
                break

        normal_form_label = _match_normal_form(omega)
        notes = []
        if normal_form_label is not None:
            label_kind, label_rank = normal_form_label[0], int(normal_form_label.split(" ")[0][2:])
            if (label_kind, label_rank) != (kind, rank):
                notes.append(
                    f"computed diagram {kind}_{rank} differs from the normal-form label {normal_form_label}"
                )
                logger.info(f"Type label mismatch for {omega}: {kind}_{rank} vs {normal_form_label}")
        return TypeLabel(kind=kind, rank=rank, diagram=diagram, normal_form_label=normal_form_label, notes=notes)

    def generate_root_system(
        self, nodes: Iterable[int], n: int, max_degree: Optional[int] = None
    ) -> RootSystem:
        """Closure of the chosen simple roots under their own reflections"""
        diagram = self.ade_decomposition(nodes, n)
        generators = [integral_vector(simple_root(n, i)) for i in diagram.nodes]
        limit = settings.root_closure_limit

        def reflect_int(x, v):
            # v has square -2: x + (x.v) v
            dot = x[0] * v[0] - sum(p * q for p, q in zip(x[1:], v[1:]))
            return tuple(p + dot * q for p, q in zip(x, v))

        seen = set(generators) | {tuple(-p for p in g) for g in generators}
        frontier = list(seen)
        while frontier:
            next_frontier = []
            for x in frontier:
                for g in generators:
                    image = reflect_int(x, g)
                    if image in seen:
                        continue
                    if len(seen) >= limit or (max_degree is not None and abs(image[0]) > max_degree):
                        raise RootClosureLimitExceeded(
                            f"root closure on {list(diagram.nodes)} exceeded its safety bound",
                            {"limit": limit},
                        )
                    seen.add(image)
                    next_frontier.append(image)
            frontier = next_frontier

        roots = sorted(
            (from_integers(v[0], v[1:]) for v in seen),
            key=lambda d: (d.a, tuple(-x for x in d.b)),
        )
        return RootSystem(roots=roots, weyl_order=diagram.weyl_order, components=diagram.components)

    def _require_c1_positive(self, omega: HomologyClass) -> None:
        if not cone_service.is_reduced_symplectic(omega):
            raise PreconditionError(f"{omega} is not a reduced symplectic class")
        if omega.c1_pairing() <= 0:
            raise PreconditionError(
                f"{omega} is outside theorem hypothesis: c1 pairing "
                f"{format_rational(omega.c1_pairing())} is not positive"
            )

    def torelli(self, omega: HomologyClass) -> TorelliAnswer:
        self._require_c1_positive(omega)
        label = self.form_type(omega)

        if label.kind == "A":
            return TorelliAnswer(
                group="trivial",
                display="{1}",
                k=None,
                mapping_class_group_order=label.diagram.weyl_order,
            )
        if label.kind == "D":
            notes = []
            if omega.n == 5 and all(x * 3 == omega.a for x in omega.b):
                notes.append(MONOTONE_X5_NOTE)
            return TorelliAnswer(
                group="pure_sphere_braid",
                display=f"PB_{label.rank}(S^2)",
                k=label.rank,
                mapping_class_group_order=None,
                notes=notes,
            )
        return TorelliAnswer(
            group="out_of_scope_E",
            display=f"out of scope (type E, base case n={label.rank})",
            k=label.rank,
            mapping_class_group_order=None,
            notes=[f"blows down to X_{label.rank} without changing the Torelli group"],
        )

    def _diagram_indices(self, label: TypeLabel) -> Set[int]:
        """E_i indices touched by the simple roots of D and E components"""
        touched: Set[int] = set()
        for component in label.diagram.components:
            if component.kind == "A":
                continue
            for node in component.nodes:
                touched.update({1, 2, 3} if node == 0 else {node, node + 1})
        return touched

    def blowdown_reduce(self, omega: HomologyClass) -> BlowdownChain:
        """Strip trailing blocks of equal minimal entries while the type is preserved"""
        self._require_c1_positive(omega)
        steps = [(omega.n, omega)]
        current = omega
        kind = self.form_type(omega).kind

        while True:
            n = current.n
            if n == 0:
                reason = "no exceptional classes left"
                break
            c = current.b[-1]
            m = 1
            while m < n and current.b[n - m - 1] == c:
                m += 1
            if m == n:
                reason = "trailing block is the whole vector"
                break
            if not c < current.b[n - m - 1]:
                reason = "trailing block is not strictly minimal"
                break
            block = set(range(n - m + 1, n + 1))
            if block & self._diagram_indices(self.form_type(current)):
                reason = "trailing block meets the D/E diagram"
                break

            candidate = HomologyClass(current.a, current.b[: n - m])
            if not cone_service.is_reduced_symplectic(candidate) or candidate.c1_pairing() <= 0:
                reason = f"blow-down to n={n - m} leaves the c1-positive reduced cone"
                break
            if self.form_type(candidate).kind != kind:
                reason = f"blow-down to n={n - m} changes the type"
                break
            current = candidate
            steps.append((current.n, current))
            logger.debug(f"Blew down {m} classes to {current}")

        logger.info(f"Blow-down chain for {omega} halted: {reason}")
        return BlowdownChain(steps=steps, halted_reason=reason)

    def toric_check(self, omega: HomologyClass) -> ToricReport:
        """Necessary conditions for a toric form: c1-positive and of type A"""
        if not cone_service.is_reduced_symplectic(omega):
            raise PreconditionError(f"{omega} is not a reduced symplectic class")
        c1_positive = omega.c1_pairing() > 0
        label = self.form_type(omega)
        met = c1_positive and label.kind == "A"
        notes = list(label.notes)
        if not met:
            notes.append("toric conclusion withheld: the form is not a c1-positive type A form")
        if label.kind == "D":
            notes.append(CIRCLE_ACTION_NOTE)
        return ToricReport(
            c1_positive=c1_positive,
            kind=label.kind,
            conditions_met=met,
            torelli_trivial=True if met else None,
            notes=notes,
        )


# Global classification service instance
classification_service = ClassificationService()
