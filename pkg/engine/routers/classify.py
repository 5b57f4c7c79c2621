"""
Classification Router
ADE type, Torelli answer, blow-down chains and the toric check
"""
import logging

from routers.base import CommandContext, CommandResult, CommandRouter
from schemas import (
    BlowdownReport,
    BlowdownStepModel,
    ClassModel,
    ComponentModel,
    RootDiagramModel,
    ToricReport,
    TorelliAnswerModel,
    TypeLabelModel,
)
from services.classification_service import RootDiagram, TypeLabel, classification_service

logger = logging.getLogger(__name__)

router = CommandRouter(tags=["ADE Classification"])


def _node(index: int) -> str:
    return f"l{index}"


def diagram_model(diagram: RootDiagram) -> RootDiagramModel:
    return RootDiagramModel(
        n=diagram.n,
        nodes=[_node(i) for i in diagram.nodes],
        edges=[[_node(i), _node(j)] for i, j in diagram.edges],
        components=[
            ComponentModel(kind=c.kind, rank=c.rank, label=c.label, nodes=[_node(i) for i in c.nodes])
            for c in diagram.components
        ],
        weyl_order=diagram.weyl_order,
    )


def type_label_model(label: TypeLabel) -> TypeLabelModel:
    return TypeLabelModel(
        kind=label.kind,
        rank=label.rank,
        label=label.kind if label.kind == "A" else f"{label.kind}_{label.rank}",
        normal_form_label=label.normal_form_label,
        diagram=diagram_model(label.diagram),
        notes=label.notes,
    )


@router.command("classify", help="Lagrangian simple roots and the A/D/E type of a reduced form")
def classify(ctx: CommandContext) -> CommandResult:
    omega = ctx.cls()
    label = classification_service.form_type(omega)
    return CommandResult(result=type_label_model(label).model_dump(), n=omega.n, warnings=list(label.notes))


@router.command("torelli", help="The symplectic Torelli group of a c1-positive reduced form")
def torelli(ctx: CommandContext) -> CommandResult:
    omega = ctx.cls()
    answer = classification_service.torelli(omega)
    model = TorelliAnswerModel(
        group=answer.group,
        display=answer.display,
        k=answer.k,
        mapping_class_group_order=answer.mapping_class_group_order,
        generation_note=answer.generation_note,
        notes=answer.notes,
    )
    return CommandResult(result=model.model_dump(), n=omega.n)


@router.command("blowdown", help="Blow down trailing blocks while the form type is preserved")
def blowdown(ctx: CommandContext) -> CommandResult:
    omega = ctx.cls()
    chain = classification_service.blowdown_reduce(omega)
    model = BlowdownReport(
        steps=[BlowdownStepModel(n=n, cls=ClassModel.of(d)) for n, d in chain.steps],
        halted_reason=chain.halted_reason,
    )
    return CommandResult(result=model.model_dump(by_alias=True), n=omega.n)


@router.command("toric", help="Necessary conditions for a toric form")
def toric(ctx: CommandContext) -> CommandResult:
    omega = ctx.cls()
    report = classification_service.toric_check(omega)
    model = ToricReport(
        c1_positive=report.c1_positive,
        kind=report.kind,
        conditions_met=report.conditions_met,
        torelli_trivial=report.torelli_trivial,
        notes=report.notes,
    )
    return CommandResult(result=model.model_dump(), n=omega.n)
