"""
Command Router
Registry of CLI subcommands, grouped the way HTTP routers group endpoints
"""
import argparse
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional

from models.errors import UsageError
from models.lattice import HomologyClass
from routers.class_literal import parse_class


@dataclass
class CommandContext:
    """Parsed invocation handed to a subcommand handler"""

    subcommand: str
    literal: Optional[str]
    args: argparse.Namespace

    def cls(self) -> HomologyClass:
        if self.literal is None:
            raise UsageError(f"{self.subcommand} needs a class literal")
        return parse_class(self.literal)

    def omega(self) -> HomologyClass:
        if self.args.omega is None:
            raise UsageError(f"{self.subcommand} needs --omega")
        return parse_class(self.args.omega)

    def n(self) -> int:
        """--n, or the positional argument read as an integer"""
        if self.args.n is not None:
            return self.args.n
        if self.literal is not None and self.literal.strip().isdigit():
            return int(self.literal)
        raise UsageError(f"{self.subcommand} needs --n or an integer argument")

    def t(self) -> Fraction:
        if self.args.t is None:
            raise UsageError(f"{self.subcommand} needs --t")
        return self.args.t

    @property
    def max_degree(self) -> Optional[int]:
        return self.args.max_degree


@dataclass
class CommandResult:
    result: Dict[str, Any]
    n: Optional[int] = None
    warnings: List[str] = field(default_factory=list)
    max_degree: Optional[int] = None


Handler = Callable[[CommandContext], CommandResult]


@dataclass(frozen=True)
class Command:
    name: str
    handler: Handler
    help: str
    tags: List[str]


class CommandRouter:
    def __init__(self, tags: Optional[List[str]] = None):
        self.tags = tags or []
        self.commands: List[Command] = []

    def command(self, name: str, help: str = "") -> Callable[[Handler], Handler]:
        def decorator(handler: Handler) -> Handler:
            self.commands.append(Command(name=name, handler=handler, help=help, tags=self.tags))
            return handler

        return decorator
