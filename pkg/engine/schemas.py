from fractions import Fraction
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, field_validator

from models.lattice import HomologyClass, format_rational
from models.weyl_word import WeylWord


def rational(value: Fraction) -> str:
    return format_rational(Fraction(value))


# Lattice schemas
class ClassModel(BaseModel):
    a: str
    b: List[str]
    n: int
    display: str
    lattice: str

    @classmethod
    def of(cls, d: HomologyClass) -> "ClassModel":
        return cls(
            a=rational(d.a),
            b=[rational(x) for x in d.b],
            n=d.n,
            display=d.symplectic_display(),
            lattice=d.lattice_display(),
        )


class WordModel(BaseModel):
    generators: List[str]
    length: int
    gamma_count: int
    display: str

    @classmethod
    def of(cls, word: WeylWord) -> "WordModel":
        return cls(
            generators=word.labels(),
            length=len(word),
            gamma_count=word.gamma_count,
            display=str(word),
        )


class ReductionReport(BaseModel):
    reduced: ClassModel
    word: WordModel
    steps: int
    status: str


class MembershipReport(BaseModel):
    cls: ClassModel = Field(alias="class")
    member: bool
    positive: Optional[bool] = None
    simple_root_coefficients: Optional[Dict[str, int]] = None

    model_config = {"populate_by_name": True}


# Cone schemas
class ConeReportModel(BaseModel):
    is_reduced: bool
    square: str
    c1_pairing: str
    is_symplectic: bool
    is_c1_positive: bool
    in_NRn: bool
    failing_constraints: List[str] = []


class VertexModel(BaseModel):
    cls: ClassModel = Field(alias="class")
    tag: str
    included: bool
    k_pairing: str

    model_config = {"populate_by_name": True}


class VertexListModel(BaseModel):
    n: int
    count: int
    vertices: List[VertexModel]


class NefReport(BaseModel):
    nef: bool
    checked: int
    witness: Optional[ClassModel] = None
    witness_family: Optional[str] = None
    witness_pairing: Optional[str] = None


# Classification schemas
class ComponentModel(BaseModel):
    kind: str
    rank: int
    label: str
    nodes: List[str]


class RootDiagramModel(BaseModel):
    n: int
    nodes: List[str]
    edges: List[List[str]]
    components: List[ComponentModel]
    weyl_order: int


class TypeLabelModel(BaseModel):
    kind: str
    rank: int
    label: str
    normal_form_label: Optional[str] = None
    diagram: RootDiagramModel
    notes: List[str] = []


class TorelliAnswerModel(BaseModel):
    group: str
    display: str
    k: Optional[int] = None
    mapping_class_group_order: Optional[int] = None
    generation_note: str
    notes: List[str] = []


class BlowdownStepModel(BaseModel):
    n: int
    cls: ClassModel = Field(alias="class")

    model_config = {"populate_by_name": True}


class BlowdownReport(BaseModel):
    steps: List[BlowdownStepModel]
    halted_reason: str


class ToricReport(BaseModel):
    c1_positive: bool
    kind: str
    conditions_met: bool
    torelli_trivial: Optional[bool] = None
    notes: List[str] = []


# Deformation schemas
class SignVectorModel(BaseModel):
    indices: List[str]
    signs: List[int]
    display: str


class ChamberRelationModel(BaseModel):
    forward_surjection: bool
    backward_surjection: bool
    invariant: bool
    tau0_signs: SignVectorModel
    tau1_signs: SignVectorModel


class PathReport(BaseModel):
    mode: str
    t: str
    start: ClassModel
    result: ClassModel
    signs: SignVectorModel
    cv: Optional[bool] = None
    stein: Optional[bool] = None


# Decomposition schemas
class TermModel(BaseModel):
    coefficient: str
    cls: ClassModel = Field(alias="class")

    model_config = {"populate_by_name": True}


class DecompositionReport(BaseModel):
    feasible: bool
    degree_bound_used: int
    terms: List[TermModel] = []
    residual: Optional[str] = None


class SphereModelReport(BaseModel):
    model: Optional[str] = None
    k: Optional[int] = None
    label: Optional[str] = None
    word: Optional[WordModel] = None


class DSetReport(BaseModel):
    exceptional: ClassModel
    omega: ClassModel
    roots: List[ClassModel]
    count: int


class EnumerationReport(BaseModel):
    kind: str
    n: int
    max_degree: int
    count: int
    classes: List[ClassModel]


# Request schemas
class EnumerationRequest(BaseModel):
    kind: str = "exceptional"
    n: int = Field(..., ge=1)
    max_degree: Optional[int] = Field(default=None, ge=1)

    @field_validator("kind")
    @classmethod
    def kind_is_known(cls, value: str) -> str:
        if value not in ("exceptional", "root"):
            raise ValueError("kind must be 'exceptional' or 'root'")
        return value


# Envelope
class Bounds(BaseModel):
    max_degree: Optional[int] = None


class Report(BaseModel):
    input: Optional[str] = None
    n: Optional[int] = None
    subcommand: str
    result: Any = None
    warnings: List[str] = []
    bounds: Bounds = Bounds()
    version: str


class ErrorDetail(BaseModel):
    type: str
    message: str
    category: str
    position: Optional[int] = None


class ErrorReport(BaseModel):
    error: ErrorDetail
    input: Optional[str] = None
    subcommand: Optional[str] = None
    version: str
