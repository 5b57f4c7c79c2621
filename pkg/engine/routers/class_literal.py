"""
Class Literal Parsing
Symplectic "(nu|m1,...,mn)" and lattice "a;b1,...,bn" literals with
positional diagnostics
"""
from fractions import Fraction
from typing import List

from models.errors import ClassParseError
from models.lattice import HomologyClass

SYMPLECTIC = "symplectic"
LATTICE = "lattice"


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_space(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_space()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def fail(self, message: str, position: int = None) -> ClassParseError:
        return ClassParseError(message, self.text, self.pos if position is None else position)

    def expect(self, char: str) -> None:
        if self.peek() != char:
            found = self.peek() or "end of input"
            raise self.fail(f"expected {char!r}, found {found!r}")
        self.pos += 1

    def digits(self) -> str:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.fail("expected a digit")
        return self.text[start:self.pos]

    def number(self) -> Fraction:
        self.skip_space()
        sign = 1
        head = self.peek()
        if head and head in "+-":
            sign = -1 if head == "-" else 1
            self.pos += 1
            self.skip_space()
        numerator = int(self.digits())
        if self.peek() != "/":
            return Fraction(sign * numerator)
        self.pos += 1
        self.skip_space()
        start = self.pos
        denominator = int(self.digits())
        if denominator == 0:
            raise self.fail("zero denominator", start)
        return Fraction(sign * numerator, denominator)

    def entries(self, closing: str) -> List[Fraction]:
        if self.peek() == closing:
            raise self.fail("empty vector")
        values = [self.number()]
        while self.peek() == ",":
            self.pos += 1
            values.append(self.number())
        return values

    def finish(self) -> None:
        if self.peek():
            raise self.fail(f"unexpected trailing {self.peek()!r}")


def parse_class(text: str) -> HomologyClass:
    """Parse either literal form into exact rationals; n is the entry count"""
    scanner = _Scanner(text)
    if not scanner.peek():
        raise scanner.fail("empty class literal")

    if scanner.peek() == "(":
        scanner.pos += 1
        a = scanner.number()
        scanner.expect("|")
        b = scanner.entries(")")
        scanner.expect(")")
    else:
        a = scanner.number()
        scanner.expect(";")
        b = scanner.entries("")
    scanner.finish()
    return HomologyClass(a, tuple(b))


def format_class(d: HomologyClass, form: str = SYMPLECTIC) -> str:
    """Canonical rendering; parse_class(format_class(d, form)) == d"""
    return d.lattice_display() if form == LATTICE else d.symplectic_display()


def literal_form(text: str) -> str:
    return SYMPLECTIC if text.lstrip().startswith("(") else LATTICE
