"""Words in free Markov and Graev groups over points of [0, 1]^d.

A letter is a tuple of d rationals; a word is a sequence of
``(letter, +1 | -1)`` syllables.  Fundamental-group classes of the
wedge-like space W(Y) are read off combinatorial loops: each traversal of
the circle indexed by a point of Y contributes the letter Q(point) with
the traversal's orientation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InvalidPoint, LengthMismatch, OutOfRange
from .product_realize import PointKd, q_kd
from .space_k import PointK
from .ternary import as_rational, format_rational

Letter = tuple  # tuple[Fraction, ...]
Syllable = tuple  # (Letter, int)


def letter(*coords) -> Letter:
    return tuple(as_rational(c) for c in coords)


def _syllables(items: Iterable) -> tuple[Syllable, ...]:
    out = []
    for item, sign in items:
        if sign not in (1, -1):
            raise ValueError(f"exponent must be +1 or -1, got {sign!r}")
        out.append((tuple(item), sign))
    return tuple(out)


@dataclass(frozen=True)
class GroupWord:
    syllables: tuple[Syllable, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "syllables", _syllables(self.syllables))

    @classmethod
    def of(cls, *items) -> GroupWord:
        """``GroupWord.of((a, 1), (b, -1))`` with scalar or tuple letters."""
        return cls(tuple((l if isinstance(l, tuple) else (l,), s) for l, s in items))

    def __len__(self) -> int:
        return len(self.syllables)

    def __iter__(self):
        return iter(self.syllables)

    def __mul__(self, other: GroupWord) -> GroupWord:
        return GroupWord(self.syllables + other.syllables)

    def inverse(self) -> GroupWord:
        return GroupWord(tuple((a, -s) for a, s in reversed(self.syllables)))

    def letters(self) -> set:
        return {a for a, _ in self.syllables}

    def to_json(self) -> list:
        return [[[format_rational(c) for c in a], s] for a, s in self.syllables]

    @classmethod
    def from_json(cls, data: list) -> GroupWord:
        """Accepts letters as coordinate arrays or space-separated strings."""
        items = []
        for entry in data:
            raw, sign = entry
            coords = raw.split() if isinstance(raw, str) else raw
            items.append((letter(*coords), int(sign)))
        return cls(tuple(items))

    def __str__(self) -> str:
        if not self.syllables:
            return "e"
        parts = []
        for a, s in self.syllables:
            name = ",".join(map(str, a))
            parts.append(f"[{name}]" + ("" if s == 1 else "^-1"))
        return " ".join(parts)


IDENTITY = GroupWord()


def reduce(w: GroupWord) -> GroupWord:
    """Free reduction: cancel adjacent ``x x^-1`` pairs until none remain."""
    stack: list[Syllable] = []
    for a, s in w.syllables:
        if stack and stack[-1][0] == a and stack[-1][1] == -s:
            stack.pop()
        else:
            stack.append((a, s))
    return GroupWord(tuple(stack))


def graev_reduce(w: GroupWord, basepoint: Sequence) -> GroupWord:
    """Normal form in the Graev group: drop basepoint letters, then reduce."""
    base = tuple(basepoint)
    return reduce(GroupWord(tuple(syl for syl in w.syllables if syl[0] != base)))


@dataclass(frozen=True)
class CombinatorialLoop:
    """A loop in W(Y) as a finite sequence of oriented circle traversals."""

    traversals: tuple[tuple[PointKd, int], ...]

    def __post_init__(self):
        norm = []
        for point, sign in self.traversals:
            if isinstance(point, PointK):
                point = PointKd((point,))
            if not isinstance(point, PointKd):
                raise InvalidPoint(f"not a point of K^d: {point!r}")
            if sign not in (1, -1):
                raise ValueError(f"orientation must be +1 or -1, got {sign!r}")
            norm.append((point, sign))
        object.__setattr__(self, "traversals", tuple(norm))

    def to_json(self) -> list:
        return [[p.to_json(), s] for p, s in self.traversals]

    @classmethod
    def from_json(cls, data: list) -> CombinatorialLoop:
        return cls(tuple((PointKd.from_json(p), int(s)) for p, s in data))


def loop_image(loop: CombinatorialLoop, dim: int | None = None) -> GroupWord:
    """Reduced word of the loop's class, letters being component values."""
    dims = {p.dim for p, _ in loop.traversals}
    if dim is not None:
        dims.add(dim)
    if len(dims) > 1:
        raise InvalidPoint(f"traversal points have mixed dimensions {sorted(dims)}")
    return reduce(GroupWord(tuple((q_kd(p), s) for p, s in loop.traversals)))


def suspension_image(loop: CombinatorialLoop, basepoint: Sequence) -> GroupWord:
    """Class of the loop in the suspension, where the basepoint component dies."""
    base = tuple(basepoint)
    word = loop_image(loop, len(base))
    return graev_reduce(word, base)


def contract(w: GroupWord, t) -> GroupWord:
    """Scale every letter by ``t`` toward the origin, then Graev-reduce.

    ``t`` running from 1 to 0 moves the Graev normal form of ``w`` to the
    identity, exhibiting every element in the identity's path component.
    """
    t = as_rational(t)
    if not w.syllables:
        return IDENTITY
    dim = len(w.syllables[0][0])
    scaled = GroupWord(tuple((tuple(t * c for c in a), s) for a, s in w.syllables))
    return graev_reduce(scaled, (Fraction(0),) * dim)


def insert_normal_closure(
    w: GroupWord,
    basepoint: Sequence,
    conjugators: Sequence[GroupWord],
    signs: Sequence[int],
) -> GroupWord:
    """``w * prod(g_i * basepoint**sign_i * g_i^-1)``, an element of w's coset."""
    if len(conjugators) != len(signs):
        raise LengthMismatch(f"{len(conjugators)} conjugators but {len(signs)} signs")
    base = GroupWord(((tuple(basepoint), 1),))
    out = w
    for g, sign in zip(conjugators, signs):
        if sign not in (1, -1):
            raise OutOfRange(f"sign must be +1 or -1, got {sign!r}")
        out = out * g * (base if sign == 1 else base.inverse()) * g.inverse()
    return out

