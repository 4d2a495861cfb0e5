"""The planar space K and its path components.

K is the union of the full vertical fibers over the Cantor set with the
top edge of every odd-level gap and the bottom edge of every even-level
gap.  Its path components are the fibers over points of D (Cantor points
that bound no gap) and the arcs spanning each gap closure; the Cantor
function collapses each component to a single value in [0, 1].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DifferentComponents, NotInK, OutOfRange, SameComponent
from .ternary import (
    EVEN,
    ODD,
    CantorGap,
    CantorKind,
    RationalLike,
    as_rational,
    cantor_function,
    cantor_preimage,
    classify,
    format_rational,
    gaps_between,
)

ZERO = Fraction(0)
ONE = Fraction(1)


def member_k(x: RationalLike, y: RationalLike) -> bool:
    x, y = as_rational(x), as_rational(y)
    cls = classify(x)
    if cls.kind is not CantorKind.IN_GAP:
        return True
    return y == cls.gap.bridge


@dataclass(frozen=True)
class PointK:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        x, y = as_rational(self.x), as_rational(self.y)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        if not member_k(x, y):
            raise NotInK(f"({x}, {y}) is not a point of K")

    @classmethod
    def parse(cls, text: str) -> PointK:
        """Parse ``"x,y"`` with rational components."""
        parts = text.split(",")
        if len(parts) != 2:
            raise OutOfRange(f"expected 'x,y', got {text!r}")
        return cls(as_rational(parts[0]), as_rational(parts[1]))

    def to_json(self) -> dict:
        return {"x": format_rational(self.x), "y": format_rational(self.y)}

    @classmethod
    def from_json(cls, data: dict) -> PointK:
        return cls(as_rational(data["x"]), as_rational(data["y"]))

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


@dataclass(frozen=True)
class Fiber:
    """The vertical fiber {c} x [0, 1] over a point c of D."""

    c: Fraction

    @property
    def span(self) -> tuple[Fraction, Fraction]:
        return self.c, self.c

    def to_json(self) -> dict:
        return {"fiber": format_rational(self.c)}


@dataclass(frozen=True)
class Arc:
    """The arc over a gap closure: both end fibers joined by the bridge."""

    gap: CantorGap

    @property
    def span(self) -> tuple[Fraction, Fraction]:
        return self.gap.left, self.gap.right

    def to_json(self) -> dict:
        return {"arc": self.gap.to_json()}


ComponentId = Union[Fiber, Arc]


def component_from_json(data: dict) -> ComponentId:
    if "fiber" in data:
        return Fiber(as_rational(data["fiber"]))
    return Arc(CantorGap.from_json(data["arc"]))


def component_of(p: PointK) -> ComponentId:
    cls = classify(p.x)
    if cls.kind is CantorKind.INTERIOR:
        return Fiber(p.x)
    return Arc(cls.gap)


def q_k(p: PointK) -> Fraction:
    """Image of ``p`` in the component space, identified with [0, 1]."""
    return cantor_function(p.x)


def same_component(p: PointK, q: PointK) -> bool:
    return component_of(p) == component_of(q)


def _bridged_gap(lo: Fraction, hi: Fraction) -> CantorGap | None:
    # [lo, hi] (lo < hi) lies in one gap closure iff its midpoint is in a gap
    # whose closure also holds both ends
    cls = classify((lo + hi) / 2)
    if cls.kind is not CantorKind.IN_GAP:
        return None
    g = cls.gap
    return g if g.left <= lo and hi <= g.right else None


def segment_in_k(p: PointK, q: PointK) -> bool:
    """Whether the closed straight segment from ``p`` to ``q`` lies in K."""
    if p == q:
        return True
    if p.x == q.x:
        return classify(p.x).in_cantor
    if p.y != q.y or p.y not in (ZERO, ONE):
        return False
    g = _bridged_gap(min(p.x, q.x), max(p.x, q.x))
    return g is not None and g.bridge == p.y


@dataclass(frozen=True)
class PLPath:
    vertices: tuple[PointK, ...]

    def segments(self):
        return zip(self.vertices, self.vertices[1:])

    def is_valid(self) -> bool:
        return all(segment_in_k(a, b) for a, b in self.segments())

    def to_json(self) -> list:
        return [v.to_json() for v in self.vertices]

    @classmethod
    def from_json(cls, data: list) -> PLPath:
        return cls(tuple(PointK.from_json(v) for v in data))

    def __len__(self) -> int:
        return len(self.vertices)


def _ordered_spans(p: PointK, q: PointK):
    a, b = component_of(p).span, component_of(q).span
    return (a, b) if a[1] < b[0] else (b, a)


def separation_witness(p: PointK, q: PointK) -> tuple[CantorGap, CantorGap]:
    """One odd and one even gap lying strictly between the two components.

    Any path between the components would have to reach the top edge over
    the odd gap and the bottom edge over the even one, and, recursively,
    infinitely often in alternation; so the pair certifies separation.
    """
    if same_component(p, q):
        raise SameComponent(f"{p} and {q} lie in the same path component")
    lower, upper = _ordered_spans(p, q)
    lo, hi = lower[1], upper[0]
    (odd,) = gaps_between(lo, hi, ODD, 1)
    (even,) = gaps_between(lo, hi, EVEN, 1)
    return odd, even


def witness_separates(p: PointK, q: PointK, witness) -> bool:
    """Exact check that a witness pair has the right parities and placement."""
    odd, even = witness
    if odd.parity != ODD or even.parity != EVEN:
        return False
    lower, upper = _ordered_spans(p, q)
    return all(lower[1] < g.left and g.right < upper[0] for g in (odd, even))


def path(p: PointK, q: PointK) -> PLPath:
    """A piecewise-linear path in K from ``p`` to ``q`` with at most 4 vertices.

    Inside an arc the route climbs (or drops) to the bridge, crosses it and
    returns along the far fiber.
    """
    if p == q:
        return PLPath((p,))
    comp = component_of(p)
    if comp != component_of(q):
        witness = separation_witness(p, q)
        raise DifferentComponents(f"no path from {p} to {q}", witness)
    if p.x == q.x and classify(p.x).in_cantor:
        return PLPath((p, q))
    h = comp.gap.bridge
    route = [p, PointK(p.x, h), PointK(q.x, h), q]
    vertices = [route[0]]
    for v in route[1:]:
        if v != vertices[-1]:
            vertices.append(v)
    return PLPath(tuple(vertices))


@dataclass(frozen=True)
class Segment:
    start: PointK
    end: PointK

    def contains(self, x: Fraction, y: Fraction) -> bool:
        (x0, y0), (x1, y1) = (self.start.x, self.start.y), (self.end.x, self.end.y)
        if (x1 - x0) * (y - y0) != (y1 - y0) * (x - x0):
            return False
        return min(x0, x1) <= x <= max(x0, x1) and min(y0, y1) <= y <= max(y0, y1)

    def to_json(self) -> list:
        return [self.start.to_json(), self.end.to_json()]


@dataclass(frozen=True)
class KFiber:
    """The preimage of one value under :func:`q_k`: a compact union of segments."""

    t: Fraction
    component: ComponentId
    segments: tuple[Segment, ...]

    def contains(self, p: PointK) -> bool:
        return any(s.contains(p.x, p.y) for s in self.segments)

    def vertices(self) -> list[PointK]:
        seen: list[PointK] = []
        for s in self.segments:
            for v in (s.start, s.end):
                if v not in seen:
                    seen.append(v)
        return seen

    def sample(self, rng, max_den: int = 64) -> PointK:
        """A random point of the fiber with rational coordinates."""
        s = self.segments[rng.randrange(len(self.segments))]
        u = Fraction(rng.randint(0, max_den), max_den)
        return PointK(s.start.x + u * (s.end.x - s.start.x), s.start.y + u * (s.end.y - s.start.y))

    def to_json(self) -> dict:
        return {
            "t": format_rational(self.t),
            "component": self.component.to_json(),
            "segments": [s.to_json() for s in self.segments],
        }


def fiber_k(t: RationalLike) -> KFiber:
    t = as_rational(t)
    pre = cantor_preimage(t)
    if isinstance(pre, CantorGap):
        a, b, h = pre.left, pre.right, pre.bridge
        segs = (
            Segment(PointK(a, ZERO), PointK(a, ONE)),
            Segment(PointK(a, h), PointK(b, h)),
            Segment(PointK(b, ZERO), PointK(b, ONE)),
        )
        return KFiber(t, Arc(pre), segs)
    return KFiber(t, Fiber(pre), (Segment(PointK(pre, ZERO), PointK(pre, ONE)),))


def distance_to_k(x: RationalLike, y: RationalLike) -> Fraction:
    """Exact Euclidean distance from a point of the unit square to K.

    Inside a gap the nearest points of K lie on the bridge or on the two
    end fibers at the same height, so the distance is axis-aligned.
    """
    x, y = as_rational(x), as_rational(y)
    cls = classify(x)
    if cls.kind is not CantorKind.IN_GAP:
        return ZERO
    g = cls.gap
    return min(x - g.left, g.right - x, abs(y - g.bridge))
