"""
ratsurf command line
Subcommand routing, report envelopes, batch mode and exit codes
"""
import argparse
import asyncio
import json
import logging
import sys
from fractions import Fraction
from typing import Any, Dict, List, Optional, TextIO, Tuple

from config import settings
from middleware.error_handling import EXIT_OK, EXIT_USAGE, error_handler
from models.errors import UsageError
from routers import classify, cone, decomposition, deformation, enumeration, weyl
from routers.base import Command, CommandContext, CommandRouter
from routers.deformation import PATH_MODES
from schemas import Bounds, Report
from services.enumeration_service import KINDS

logger = logging.getLogger(__name__)


def configure_logging(level: Optional[str] = None) -> None:
    # stdout carries the reports, so logs go to stderr
    logging.basicConfig(
        level=getattr(logging, level or settings.log_level, logging.WARNING),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"{text!r} is not a rational number p/q")


def _flatten(prefix: str, value: Any):
    if isinstance(value, dict):
        if "display" in value and "lattice" in value:
            yield prefix, value["display"]
            return
        for key, item in value.items():
            yield from _flatten(f"{prefix}.{key}" if prefix else key, item)
    elif isinstance(value, list) and any(isinstance(item, (dict, list)) for item in value):
        for index, item in enumerate(value):
            yield from _flatten(f"{prefix}[{index}]", item)
    elif isinstance(value, list):
        yield prefix, ", ".join(str(item) for item in value)
    else:
        yield prefix, "" if value is None else str(value)


def render_table(document: Dict[str, Any]) -> str:
    rows = list(_flatten("", document))
    width = max((len(key) for key, _ in rows), default=0)
    return "\n".join(f"{key:<{width}}  {value}" for key, value in rows)


class RatsurfApp:
    """Command registry assembled from routers"""

    def __init__(self, version: str):
        self.version = version
        self.commands: Dict[str, Command] = {}

    def include_router(self, router: CommandRouter) -> None:
        for command in router.commands:
            if command.name in self.commands:
                raise ValueError(f"subcommand {command.name!r} registered twice")
            self.commands[command.name] = command

    def build_parser(self) -> argparse.ArgumentParser:
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument("literal", nargs="?", help="class literal (nu|m1,...) or a;b1,..., or an integer n")
        common.add_argument("--n", type=int, help="number of blow-ups")
        common.add_argument("--max-degree", dest="max_degree", type=int, help="degree bound for enumerations")
        common.add_argument("--t", type=_rational, help="deformation parameter in (0, 1]")
        common.add_argument("--m", type=int, help="trailing block length for the minimal path")
        common.add_argument("--kind", choices=KINDS, default=KINDS[0], help="enumeration kind")
        common.add_argument("--omega", help="second class literal (the form for d-set, nef and compare)")
        common.add_argument("--mode", choices=PATH_MODES, help="deformation family for path")
        common.add_argument("--format", choices=("json", "table"), default="json", help="output format")
        common.add_argument("--batch", metavar="FILE", help="evaluate one class literal per line of FILE")

        parser = argparse.ArgumentParser(
            prog="ratsurf",
            description="Homological invariants of the rational surfaces CP2 # n(-CP2)",
        )
        parser.add_argument("--version", action="version", version=f"%(prog)s {self.version}")
        subparsers = parser.add_subparsers(dest="subcommand", metavar="subcommand", required=True)
        for name, command in self.commands.items():
            subparsers.add_parser(name, parents=[common], help=command.help, description=command.help)
        return parser

    def invoke(self, subcommand: str, literal: Optional[str], args: argparse.Namespace) -> Tuple[Dict[str, Any], int]:
        """Run one subcommand and return its document and exit code"""
        command = self.commands[subcommand]
        try:
            outcome = command.handler(CommandContext(subcommand=subcommand, literal=literal, args=args))
        except Exception as e:
            handled = error_handler.handle(e, subcommand, literal)
            return handled.document, handled.exit_code

        report = Report(
            input=literal,
            n=outcome.n,
            subcommand=subcommand,
            result=outcome.result,
            warnings=outcome.warnings,
            bounds=Bounds(max_degree=outcome.max_degree if outcome.max_degree is not None else args.max_degree),
            version=self.version,
        )
        return report.model_dump(), EXIT_OK

    async def invoke_batch(
        self, subcommand: str, literals: List[str], args: argparse.Namespace
    ) -> List[Tuple[Dict[str, Any], int]]:
        semaphore = asyncio.Semaphore(settings.batch_workers)

        async def evaluate(literal: str) -> Tuple[Dict[str, Any], int]:
            async with semaphore:
                return await asyncio.to_thread(self.invoke, subcommand, literal, args)

        # gather keeps input order
        return await asyncio.gather(*(evaluate(literal) for literal in literals))

    def _emit(self, document: Dict[str, Any], output_format: str, stdout: TextIO, compact: bool) -> None:
        if output_format == "table":
            stdout.write(render_table(document) + "\n\n")
        elif compact:
            stdout.write(json.dumps(document) + "\n")
        else:
            stdout.write(json.dumps(document, indent=2) + "\n")

    def run(self, argv: Optional[List[str]] = None, stdout: Optional[TextIO] = None) -> int:
        stdout = stdout or sys.stdout
        parser = self.build_parser()
        try:
            args = parser.parse_args(argv)
        except SystemExit as e:
            return e.code if isinstance(e.code, int) else EXIT_USAGE

        if args.batch is None:
            document, code = self.invoke(args.subcommand, args.literal, args)
            self._emit(document, args.format, stdout, compact=False)
            return code

        try:
            with open(args.batch, encoding="utf-8") as handle:
                literals = [line.strip() for line in handle if line.strip() and not line.lstrip().startswith("#")]
        except OSError as e:
            handled = error_handler.handle(UsageError(f"cannot read batch file: {e}"), args.subcommand)
            self._emit(handled.document, args.format, stdout, compact=True)
            return handled.exit_code

        logger.info(f"Batch {args.subcommand} over {len(literals)} lines with {settings.batch_workers} workers")
        results = asyncio.run(self.invoke_batch(args.subcommand, literals, args))
        for document, _ in results:
            self._emit(document, args.format, stdout, compact=True)
        return max((code for _, code in results), default=EXIT_OK)


app = RatsurfApp(version=settings.version)

app.include_router(weyl.router)
app.include_router(cone.router)
app.include_router(enumeration.router)
app.include_router(classify.router)
app.include_router(deformation.router)
app.include_router(decomposition.router)


def main(argv: Optional[List[str]] = None) -> int:
    configure_logging()
    return app.run(argv)


if __name__ == "__main__":
    sys.exit(main())
