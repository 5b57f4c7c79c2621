"""
Reduced Cone Router
Cone membership, N R_n vertices and the nef test
"""
import logging

from models.lattice import format_rational
from routers.base import CommandContext, CommandResult, CommandRouter
from schemas import ClassModel, ConeReportModel, NefReport, VertexListModel, VertexModel
from services.cone_service import cone_service

logger = logging.getLogger(__name__)

router = CommandRouter(tags=["Reduced Cone"])

DEFAULT_NEF_DEGREE = 3


@router.command("cone", help="Report reduced, symplectic and c1-positive cone membership")
def cone(ctx: CommandContext) -> CommandResult:
    d = ctx.cls()
    report = cone_service.cone_report(d)
    model = ConeReportModel(
        is_reduced=report.is_reduced,
        square=format_rational(report.square),
        c1_pairing=format_rational(report.c1_pairing),
        is_symplectic=report.is_symplectic,
        is_c1_positive=report.is_c1_positive,
        in_NRn=report.in_NRn,
        failing_constraints=report.failing_constraints,
    )
    return CommandResult(result=model.model_dump(), n=d.n)


@router.command("vertices", help="List the vertices of the normalized c1-positive reduced polytope")
def vertices(ctx: CommandContext) -> CommandResult:
    n = ctx.n()
    listing = cone_service.nrn_vertices(n)
    model = VertexListModel(
        n=n,
        count=len(listing.vertices),
        vertices=[
            VertexModel(
                cls=ClassModel.of(v.cls),
                tag=v.tag,
                included=v.included,
                k_pairing=format_rational(v.cls.k_pairing()),
            )
            for v in listing.vertices
        ],
    )
    warnings = []
    excluded = [v.tag for v in listing.vertices if not v.included]
    if excluded:
        warnings.append(f"vertices on the boundary of the open cone: {', '.join(excluded)}")
    return CommandResult(result=model.model_dump(by_alias=True), n=n, warnings=warnings)


@router.command("nef", help="Test a class against bounded curve candidates of positive area")
def nef(ctx: CommandContext) -> CommandResult:
    d = ctx.cls()
    omega = ctx.omega()
    max_degree = ctx.max_degree if ctx.max_degree is not None else DEFAULT_NEF_DEGREE
    report = cone_service.nef_check(d, omega, max_degree)
    model = NefReport(
        nef=report.nef,
        checked=report.checked,
        witness=ClassModel.of(report.witness) if report.witness is not None else None,
        witness_family=report.witness_family,
        witness_pairing=format_rational(report.witness_pairing) if report.witness_pairing is not None else None,
    )
    warnings = [] if not report.nef else [f"nefness checked only against curves of degree <= {max_degree}"]
    return CommandResult(result=model.model_dump(), n=d.n, warnings=warnings, max_degree=max_degree)
