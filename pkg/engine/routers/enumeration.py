"""
Enumeration Router
Bounded enumeration of exceptional classes and K-roots, and the D-set
"""
import logging

from pydantic import ValidationError

from models.errors import UsageError
from routers.base import CommandContext, CommandResult, CommandRouter
from schemas import ClassModel, DSetReport, EnumerationReport, EnumerationRequest
from services.enumeration_service import EXCEPTIONAL, default_max_degree, enumeration_service

logger = logging.getLogger(__name__)

router = CommandRouter(tags=["Enumeration"])


@router.command("enumerate", help="Enumerate exceptional classes or roots up to a degree bound")
def enumerate_classes(ctx: CommandContext) -> CommandResult:
    try:
        request = EnumerationRequest(kind=ctx.args.kind, n=ctx.n(), max_degree=ctx.max_degree)
    except ValidationError as e:
        raise UsageError(f"invalid enumeration request: {e.errors()[0]['msg']}")

    max_degree = request.max_degree if request.max_degree is not None else default_max_degree(request.n)
    if request.kind == EXCEPTIONAL:
        classes = enumeration_service.enumerate_exceptional(request.n, max_degree)
    else:
        classes = enumeration_service.enumerate_roots(request.n, max_degree)

    warnings = []
    if request.kind != EXCEPTIONAL and request.n >= 9:
        warnings.append(f"the root system is infinite for n={request.n}; the listing is cut at degree {max_degree}")

    report = EnumerationReport(
        kind=request.kind,
        n=request.n,
        max_degree=max_degree,
        count=len(classes),
        classes=[ClassModel.of(d) for d in classes],
    )
    return CommandResult(result=report.model_dump(), n=request.n, warnings=warnings, max_degree=max_degree)


@router.command("d-set", help="Roots D with D.E < 0, positive omega-area and D.H <= E.H")
def d_set(ctx: CommandContext) -> CommandResult:
    exceptional = ctx.cls()
    omega = ctx.omega()
    roots = enumeration_service.d_set(exceptional, omega)
    report = DSetReport(
        exceptional=ClassModel.of(exceptional),
        omega=ClassModel.of(omega),
        roots=[ClassModel.of(d) for d in roots],
        count=len(roots),
    )
    return CommandResult(result=report.model_dump(), n=exceptional.n, max_degree=int(exceptional.a))
