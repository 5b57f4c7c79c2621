"""
Lattice Model
The Lorentzian lattice H_2(CP^2 # n(-CP^2)): classes, intersection pairing,
distinguished classes and reflections
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from models.errors import DimensionMismatchError, InvalidReflectionError

Rational = Union[int, Fraction]


def as_fraction(value: Union[Rational, str]) -> Fraction:
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def format_rational(value: Fraction) -> str:
    """Render a rational as "p" or "p/q" """
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class HomologyClass:
    """The class aH - sum(b_i E_i), with exact rational coordinates.

    The same type carries symplectic classes: (nu|m_1,...,m_n) is stored as
    a = nu and b_i = m_i, so that pairing with E_i returns m_i.
    """

    a: Fraction
    b: Tuple[Fraction, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "a", as_fraction(self.a))
        object.__setattr__(self, "b", tuple(as_fraction(x) for x in self.b))

    @classmethod
    def of(cls, a: Rational, *b: Rational) -> "HomologyClass":
        return cls(a, tuple(b))

    @classmethod
    def zero(cls, n: int) -> "HomologyClass":
        return cls(Fraction(0), (Fraction(0),) * n)

    @classmethod
    def line(cls, n: int) -> "HomologyClass":
        """H"""
        return cls(Fraction(1), (Fraction(0),) * n)

    @classmethod
    def exceptional(cls, n: int, i: int) -> "HomologyClass":
        """E_i for 1 <= i <= n"""
        if not 1 <= i <= n:
            raise IndexError(f"E_{i} does not exist for n={n}")
        b = [Fraction(0)] * n
        b[i - 1] = Fraction(-1)
        return cls(Fraction(0), tuple(b))

    @property
    def n(self) -> int:
        return len(self.b)

    @property
    def is_integral(self) -> bool:
        return self.a.denominator == 1 and all(x.denominator == 1 for x in self.b)

    def square(self) -> Fraction:
        return pairing(self, self)

    def k_pairing(self) -> Fraction:
        """d . K with K = -3H + E_1 + ... + E_n"""
        return -3 * self.a + sum(self.b, Fraction(0))

    def c1_pairing(self) -> Fraction:
        return -self.k_pairing()

    def __add__(self, other: "HomologyClass") -> "HomologyClass":
        _check_dimensions(self, other)
        return HomologyClass(self.a + other.a, tuple(x + y for x, y in zip(self.b, other.b)))

    def __sub__(self, other: "HomologyClass") -> "HomologyClass":
        return self + (-other)

    def __neg__(self) -> "HomologyClass":
        return HomologyClass(-self.a, tuple(-x for x in self.b))

    def scale(self, factor: Rational) -> "HomologyClass":
        factor = as_fraction(factor)
        return HomologyClass(factor * self.a, tuple(factor * x for x in self.b))

    def symplectic_display(self) -> str:
        entries = ",".join(format_rational(x) for x in self.b)
        return f"({format_rational(self.a)}|{entries})"

    def lattice_display(self) -> str:
        entries = ",".join(format_rational(x) for x in self.b)
        return f"{format_rational(self.a)};{entries}"

    def __str__(self) -> str:
        return self.symplectic_display()


def _check_dimensions(u: HomologyClass, v: HomologyClass) -> None:
    if u.n != v.n:
        raise DimensionMismatchError(
            f"classes live on different blow-ups (n={u.n} and n={v.n})",
            {"left_n": u.n, "right_n": v.n},
        )


def pairing(u: HomologyClass, v: HomologyClass) -> Fraction:
    """Intersection pairing with Gram matrix diag(1, -1, ..., -1)"""
    _check_dimensions(u, v)
    return u.a * v.a - sum((x * y for x, y in zip(u.b, v.b)), Fraction(0))


def reflect(x: HomologyClass, v: HomologyClass) -> HomologyClass:
    """Reflection of x along v, for v of square -2 (roots) or -1 (the W'_n generator)"""
    v_square = pairing(v, v)
    if v_square not in (-1, -2):
        raise InvalidReflectionError(
            f"cannot reflect along a class of square {format_rational(v_square)}",
            {"square": format_rational(v_square)},
        )
    return x - v.scale(2 * pairing(x, v) / v_square)


def canonical_class(n: int) -> HomologyClass:
    return HomologyClass(Fraction(-3), (Fraction(-1),) * n)


def simple_root(n: int, index: int) -> HomologyClass:
    """l_0 = H - E_1 - E_2 - E_3 and l_i = E_i - E_{i+1}"""
    if index == 0:
        if n < 3:
            raise IndexError("l_0 requires n >= 3")
        return HomologyClass(Fraction(1), tuple(Fraction(1 if i < 3 else 0) for i in range(n)))
    if not 1 <= index <= n - 1:
        raise IndexError(f"l_{index} does not exist for n={n}")
    b = [Fraction(0)] * n
    b[index - 1] = Fraction(-1)
    b[index] = Fraction(1)
    return HomologyClass(Fraction(0), tuple(b))


def simple_root_indices(n: int) -> List[int]:
    start = 0 if n >= 3 else 1
    return list(range(start, n))


@dataclass(frozen=True)
class DistinguishedClasses:
    canonical: HomologyClass
    simple_roots: Tuple[Optional[HomologyClass], ...]
    minimal_exceptional: Optional[HomologyClass]

    def roots(self) -> List[Tuple[int, HomologyClass]]:
        return [(i, r) for i, r in enumerate(self.simple_roots) if r is not None]


def distinguished(n: int) -> DistinguishedClasses:
    """K, the simple roots l_0..l_{n-1} (l_0 slot empty below n=3) and E_n"""
    if n <= 0:
        return DistinguishedClasses(canonical_class(0), (), None)
    slots: List[Optional[HomologyClass]] = [None] * n
    for index in simple_root_indices(n):
        slots[index] = simple_root(n, index)
    return DistinguishedClasses(
        canonical=canonical_class(n),
        simple_roots=tuple(slots),
        minimal_exceptional=HomologyClass.exceptional(n, n),
    )


def stabilize(d: HomologyClass, n: int) -> HomologyClass:
    """Embed d into H_2(X_n) by padding with zero E-coefficients"""
    if n < d.n:
        raise DimensionMismatchError(f"cannot stabilize n={d.n} down to n={n}")
    return HomologyClass(d.a, d.b + (Fraction(0),) * (n - d.n))


def truncate(d: HomologyClass, n: int) -> HomologyClass:
    """Inverse of stabilize; the dropped coordinates must vanish"""
    if n > d.n:
        raise DimensionMismatchError(f"cannot truncate n={d.n} up to n={n}")
    if any(x != 0 for x in d.b[n:]):
        raise DimensionMismatchError(f"class {d} has non-zero coefficients beyond E_{n}")
    return HomologyClass(d.a, d.b[:n])


def integral_vector(d: HomologyClass) -> Tuple[int, ...]:
    return (int(d.a),) + tuple(int(x) for x in d.b)


def from_integers(a: int, b: Iterable[int]) -> HomologyClass:
    return HomologyClass(Fraction(a), tuple(Fraction(x) for x in b))


def linear_combination(terms: Sequence[Tuple[Rational, HomologyClass]], n: int) -> HomologyClass:
    total = HomologyClass.zero(n)
    for coefficient, cls in terms:
        total = total + cls.scale(coefficient)
    return total
