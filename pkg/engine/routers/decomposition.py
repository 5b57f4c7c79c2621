"""
Decomposition Router
Positive decomposition over exceptional classes and sphere model classes
"""
import logging

from models.lattice import format_rational
from routers.base import CommandContext, CommandResult, CommandRouter
from schemas import ClassModel, DecompositionReport, SphereModelReport, TermModel, WordModel
from services.decomposition_service import InfeasibleAtBound, decomposition_service

logger = logging.getLogger(__name__)

router = CommandRouter(tags=["Decomposition"])


@router.command("decompose", help="Write a c1-positive class as a positive sum of exceptional classes")
def decompose(ctx: CommandContext) -> CommandResult:
    d = ctx.cls()
    outcome = decomposition_service.decompose_c1_positive(d, ctx.max_degree)

    if isinstance(outcome, InfeasibleAtBound):
        report = DecompositionReport(
            feasible=False,
            degree_bound_used=outcome.bound,
            residual=format_rational(outcome.residual),
        )
        warnings = [f"no decomposition over exceptional classes of degree <= {outcome.bound}; raise --max-degree"]
        return CommandResult(result=report.model_dump(), n=d.n, warnings=warnings, max_degree=outcome.bound)

    report = DecompositionReport(
        feasible=True,
        degree_bound_used=outcome.degree_bound_used,
        terms=[TermModel(coefficient=format_rational(x), cls=ClassModel.of(e)) for x, e in outcome.terms],
    )
    return CommandResult(
        result=report.model_dump(by_alias=True),
        n=d.n,
        max_degree=outcome.degree_bound_used,
    )


@router.command("sphere", help="Match an integral positive-square class to a sphere model class")
def sphere(ctx: CommandContext) -> CommandResult:
    d = ctx.cls()
    model = decomposition_service.sphere_model(d)
    if model is None:
        report = SphereModelReport()
        warnings = [f"{d} is not Cremona equivalent to a sphere model class"]
    else:
        report = SphereModelReport(model=model.model, k=model.k, label=model.label, word=WordModel.of(model.word))
        warnings = []
    return CommandResult(result=report.model_dump(), n=d.n, warnings=warnings)
