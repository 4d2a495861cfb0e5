"""Exact ternary arithmetic on [0, 1] and the middle-third Cantor set.

Coordinates are :class:`fractions.Fraction` values.  Every rational has an
eventually periodic expansion in any base, so membership in the Cantor set,
gap lookup and the Cantor function are all decided exactly by long division.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .errors import InvalidOrder, OutOfRange

RationalLike = Union[Fraction, int, str]

ODD = "odd"
EVEN = "even"
ANY = "any"


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ``value`` to a Fraction in [0, 1].

    Strings use the ``"p/q"`` literal syntax (``"q"`` omitted when 1).
    Floats are rejected: they are not exact.
    """
    if isinstance(value, float):
        raise TypeError("floating-point coordinates are not supported; use 'p/q'")
    try:
        x = Fraction(value.strip()) if isinstance(value, str) else Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise OutOfRange(f"not a rational literal: {value!r}") from exc
    if not 0 <= x <= 1:
        raise OutOfRange(f"{x} lies outside [0, 1]")
    return x


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def _expand(x: Fraction, base: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    # 1 has no terminating fractional expansion: 0.(base-1)
    if x == 1:
        return (), (base - 1,)
    q = x.denominator
    r = x.numerator
    digits: list[int] = []
    seen: dict[int, int] = {}
    while r and r not in seen:
        seen[r] = len(digits)
        d, r = divmod(r * base, q)
        digits.append(d)
    if r == 0:
        return tuple(digits), ()
    start = seen[r]
    return tuple(digits[:start]), tuple(digits[start:])


def evaluate_digits(preperiod, period, base: int) -> Fraction:
    """Exact value of ``0.preperiod(period)`` in ``base``."""
    m = len(preperiod)
    head = 0
    for d in preperiod:
        head = head * base + d
    value = Fraction(head, base**m)
    if period:
        tail = 0
        for d in period:
            tail = tail * base + d
        value += Fraction(tail, (base ** len(period) - 1) * base**m)
    return value


@dataclass(frozen=True)
class TernaryExpansion:
    """``0.d1 d2 ... (period)`` in base 3.

    A terminating expansion has an empty ``period``.  When a value has two
    expansions the terminating one is stored; :meth:`alternate` gives the
    trailing-2s stream.
    """

    preperiod: tuple[int, ...]
    period: tuple[int, ...] = ()

    @property
    def terminating(self) -> bool:
        return not self.period

    def value(self) -> Fraction:
        return evaluate_digits(self.preperiod, self.period, 3)

    def alternate(self) -> TernaryExpansion | None:
        if self.period or not self.preperiod:
            return None
        *head, last = self.preperiod
        return TernaryExpansion(tuple(head) + (last - 1,), (2,))

    def streams(self) -> list[TernaryExpansion]:
        alt = self.alternate()
        return [self] if alt is None else [self, alt]

    def avoids_one(self) -> bool:
        return 1 not in self.preperiod and 1 not in self.period

    def __str__(self) -> str:
        head = "".join(map(str, self.preperiod))
        if self.period:
            return f"0.{head}({''.join(map(str, self.period))})"
        return f"0.{head or '0'}"


def ternary_expand(x: RationalLike) -> TernaryExpansion:
    x = as_rational(x)
    return TernaryExpansion(*_expand(x, 3))


@dataclass(frozen=True)
class CantorGap:
    """A deleted open interval ``(left, right)`` of length ``3**-level``."""

    level: int
    left: Fraction
    right: Fraction

    def __post_init__(self):
        if self.level < 1 or self.right - self.left != Fraction(1, 3**self.level):
            raise ValueError(f"malformed gap {self.level}: ({self.left}, {self.right})")

    @property
    def parity(self) -> str:
        return ODD if self.level % 2 else EVEN

    @property
    def bridge(self) -> Fraction:
        """Height of the edge of K spanning this gap: 1 for odd, 0 for even."""
        return Fraction(1) if self.level % 2 else Fraction(0)

    @property
    def midpoint(self) -> Fraction:
        return (self.left + self.right) / 2

    def __contains__(self, x) -> bool:
        return self.left < x < self.right

    def closure_contains(self, x) -> bool:
        return self.left <= x <= self.right

    def to_json(self) -> dict:
        return {
            "level": self.level,
            "left": format_rational(self.left),
            "right": format_rational(self.right),
            "parity": self.parity,
        }

    @classmethod
    def from_json(cls, data: dict) -> CantorGap:
        gap = cls(int(data["level"]), as_rational(data["left"]), as_rational(data["right"]))
        if "parity" in data and data["parity"] != gap.parity:
            raise ValueError(f"parity {data['parity']!r} does not match level {gap.level}")
        return gap

    def __str__(self) -> str:
        return f"({self.left}, {self.right})@{self.level}"


class CantorKind(enum.Enum):
    INTERIOR = "InteriorCantor"
    LEFT_ENDPOINT = "LeftEndpoint"
    RIGHT_ENDPOINT = "RightEndpoint"
    IN_GAP = "InGap"


@dataclass(frozen=True)
class CantorClass:
    kind: CantorKind
    gap: CantorGap | None = None

    @property
    def in_cantor(self) -> bool:
        return self.kind is not CantorKind.IN_GAP

    def to_json(self) -> dict:
        out: dict = {"class": self.kind.value}
        if self.gap is not None:
            out["gap"] = self.gap.to_json()
        return out


_INTERIOR = CantorClass(CantorKind.INTERIOR)


@lru_cache(maxsize=1 << 16)
def _classify(x: Fraction) -> CantorClass:
    if x == 1:
        return _INTERIOR
    q = x.denominator
    r = x.numerator
    seen: set[int] = set()
    head = 0
    k = 0
    while r:
        if r in seen:
            # purely periodic from here with no digit 1
            return _INTERIOR
        seen.add(r)
        k += 1
        d, r = divmod(r * 3, q)
        if d == 1:
            a = Fraction(head * 3 + 1, 3**k)
            gap = CantorGap(k, a, a + Fraction(1, 3**k))
            return CantorClass(CantorKind.LEFT_ENDPOINT if r == 0 else CantorKind.IN_GAP, gap)
        head = head * 3 + d
    if k == 0:
        return _INTERIOR
    # terminating with digits in {0, 2}; the last digit is 2
    gap = CantorGap(k, x - Fraction(1, 3**k), x)
    return CantorClass(CantorKind.RIGHT_ENDPOINT, gap)


def classify(x: RationalLike) -> CantorClass:
    """Locate ``x`` relative to the Cantor set and its deleted intervals."""
    return _classify(as_rational(x))


def in_cantor(x: RationalLike) -> bool:
    return classify(x).in_cantor


def gap_closure_of(x: RationalLike) -> CantorGap | None:
    """The gap whose closure contains ``x``, or ``None`` for points of D."""
    return classify(x).gap


@lru_cache(maxsize=1 << 16)
def _cantor(x: Fraction) -> Fraction:
    if x == 1:
        return Fraction(1)
    q = x.denominator
    r = x.numerator
    bits: list[int] = []
    seen: dict[int, int] = {}
    while r and r not in seen:
        seen[r] = len(bits)
        d, r = divmod(r * 3, q)
        if d == 1:
            bits.append(1)
            return evaluate_digits(bits, (), 2)
        bits.append(d // 2)
    if r == 0:
        return evaluate_digits(bits, (), 2)
    start = seen[r]
    return evaluate_digits(bits[:start], bits[start:], 2)


def cantor_function(x: RationalLike) -> Fraction:
    """The Cantor-Lebesgue function, evaluated exactly.

    Ternary digits up to the first 1 are halved and read in binary; a
    digit 1 terminates the binary expansion with a 1.  The result is
    constant on every gap closure.
    """
    return _cantor(as_rational(x))


def cantor_preimage(t: RationalLike) -> Fraction | CantorGap:
    """Inverse of :func:`cantor_function`.

    Dyadic ``t`` in (0, 1) is the common value of one gap closure and the
    gap is returned; otherwise the unique preimage point (in D) is.
    """
    t = as_rational(t)
    pre, period = _expand(t, 2)
    if period or not pre:
        return evaluate_digits([2 * b for b in pre], [2 * b for b in period], 3)
    # t = 0.b1..b_{k-1}1 in binary; the gap sits under the final 1
    k = len(pre)
    a = evaluate_digits([2 * b for b in pre[:-1]] + [1], (), 3)
    return CantorGap(k, a, a + Fraction(1, 3**k))


def gaps_between(
    x: RationalLike, y: RationalLike, parity: str = ANY, count: int = 1
) -> list[CantorGap]:
    """Up to ``count`` gaps lying strictly inside ``(x, y)``.

    Gaps are ordered by level, then left to right.  Returns ``[]`` when
    ``(x, y)`` sits inside a single gap closure, the only case where fewer
    than ``count`` exist.
    """
    x, y = as_rational(x), as_rational(y)
    if x >= y:
        raise InvalidOrder(f"expected x < y, got {x} >= {y}")
    if parity not in (ODD, EVEN, ANY):
        raise ValueError(f"unknown parity {parity!r}")
    if count < 1:
        raise ValueError("count must be positive")
    found: list[CantorGap] = []
    # left ends of the construction intervals of the previous stage that meet (x, y)
    lefts = [Fraction(0)]
    level = 0
    while lefts and len(found) < count:
        level += 1
        step = Fraction(1, 3**level)
        wanted = parity == ANY or (parity == ODD) == (level % 2 == 1)
        nxt = []
        for c in lefts:
            a, b = c + step, c + 2 * step
            if wanted and x < a and b < y:
                found.append(CantorGap(level, a, b))
            for child in (c, b):
                if child < y and child + step > x:
                    nxt.append(child)
        lefts = nxt
    return found[:count]


def enumerate_gaps(max_level: int):
    """All gaps of level 1..max_level, ordered by level then position."""
    lefts = [Fraction(0)]
    for level in range(1, max_level + 1):
        step = Fraction(1, 3**level)
        nxt = []
        for c in lefts:
            yield CantorGap(level, c + step, c + 2 * step)
            nxt.extend((c, c + 2 * step))
        lefts = nxt
