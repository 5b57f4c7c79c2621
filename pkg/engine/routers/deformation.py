"""
Deformation Router
Deformation paths and chamber comparison of two forms
"""
import logging

from models.errors import UsageError
from models.lattice import format_rational
from routers.base import CommandContext, CommandResult, CommandRouter
from schemas import ChamberRelationModel, ClassModel, PathReport, SignVectorModel
from services.deformation_service import SignVector, deformation_service

logger = logging.getLogger(__name__)

router = CommandRouter(tags=["Deformation"])

A_EXTREMAL = "a-extremal"
MINIMAL = "minimal"
PATH_MODES = (A_EXTREMAL, MINIMAL)


def sign_vector_model(signs: SignVector) -> SignVectorModel:
    return SignVectorModel(
        indices=[f"l{i}" for i in signs.indices],
        signs=list(signs.signs),
        display=str(signs),
    )


@router.command("path", help="Deform a form along the A-extremal or the minimal family")
def path(ctx: CommandContext) -> CommandResult:
    omega = ctx.cls()
    t = ctx.t()
    mode = ctx.args.mode or A_EXTREMAL
    if mode == A_EXTREMAL:
        result = deformation_service.a_extremal_path(omega, t)
    elif mode == MINIMAL:
        if ctx.args.m is None:
            raise UsageError("minimal path needs --m")
        result = deformation_service.minimal_path(omega, ctx.args.m, t)
    else:
        raise UsageError(f"unknown path mode {mode!r}; expected one of {', '.join(PATH_MODES)}")

    predicates = deformation_service.divisor_predicates(result)
    report = PathReport(
        mode=mode,
        t=format_rational(t),
        start=ClassModel.of(omega),
        result=ClassModel.of(result),
        signs=sign_vector_model(deformation_service.sign_vector(result)),
        cv=predicates.cv,
        stein=predicates.stein,
    )
    return CommandResult(result=report.model_dump(), n=omega.n)


@router.command("compare", help="Compare the simple-root chambers of two forms")
def compare(ctx: CommandContext) -> CommandResult:
    tau0 = ctx.cls()
    tau1 = ctx.omega()
    relation = deformation_service.chamber_compare(tau0, tau1)
    report = ChamberRelationModel(
        forward_surjection=relation.forward_surjection,
        backward_surjection=relation.backward_surjection,
        invariant=relation.invariant,
        tau0_signs=sign_vector_model(deformation_service.sign_vector(tau0)),
        tau1_signs=sign_vector_model(deformation_service.sign_vector(tau1)),
    )
    return CommandResult(result=report.model_dump(), n=tau0.n)
