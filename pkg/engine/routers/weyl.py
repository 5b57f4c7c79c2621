"""
Weyl Router
Reduction and orbit-membership subcommands
"""
import logging

from routers.base import CommandContext, CommandResult, CommandRouter
from schemas import ClassModel, MembershipReport, ReductionReport, WordModel
from services.weyl_service import weyl_service

logger = logging.getLogger(__name__)

router = CommandRouter(tags=["Cremona Reduction"])


@router.command("reduce", help="Reduce a class by the Cremona group and report the word")
def reduce_class(ctx: CommandContext) -> CommandResult:
    d = ctx.cls()
    result = weyl_service.reduce(d)
    warnings = []
    if not result.is_reduced:
        warnings.append(f"reduction stopped after {result.steps} steps without reaching a reduced class")

    report = ReductionReport(
        reduced=ClassModel.of(result.reduced),
        word=WordModel.of(result.word),
        steps=result.steps,
        status=result.status.value,
    )
    return CommandResult(result=report.model_dump(by_alias=True), n=d.n, warnings=warnings)


@router.command("exceptional", help="Decide membership in the orbit of E_n")
def exceptional(ctx: CommandContext) -> CommandResult:
    d = ctx.cls()
    report = MembershipReport(cls=ClassModel.of(d), member=weyl_service.is_exceptional(d))
    return CommandResult(result=report.model_dump(by_alias=True), n=d.n)


@router.command("root", help="Decide membership in the K-root system and split positive roots")
def root(ctx: CommandContext) -> CommandResult:
    d = ctx.cls()
    member = weyl_service.is_root(d)
    positive = weyl_service.is_positive_root(d) if member else None
    coefficients = None
    if positive:
        coefficients = {f"l{i}": c for i, c in weyl_service.decompose_positive_root(d).items()}

    report = MembershipReport(
        cls=ClassModel.of(d),
        member=member,
        positive=positive,
        simple_root_coefficients=coefficients,
    )
    return CommandResult(result=report.model_dump(by_alias=True), n=d.n)
