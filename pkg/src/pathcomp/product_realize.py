"""Finite products K^d and pullbacks Y = Q^-1(X) over box regions.

The product quotient Q applies :func:`~pathcomp.space_k.q_k` in every
coordinate.  Two points of K^d lie in one path component exactly when
their Q images agree, so Y = Q^-1(X) has component space X, with compact
fibers given coordinatewise by :func:`~pathcomp.space_k.fiber_k`.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import DifferentComponents, DimensionMismatch, EmptyRegion
from .sampling import random_rational
from .space_k import (
    KFiber,
    PLPath,
    PointK,
    fiber_k,
    path,
    q_k,
    separation_witness,
    witness_separates,
)
from .ternary import as_rational, format_rational


@dataclass(frozen=True)
class BoxRegion:
    """A finite union of closed rational boxes in [0, 1]^dim."""

    dim: int
    boxes: tuple[tuple[tuple[Fraction, Fraction], ...], ...]

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be positive")
        if not self.boxes:
            raise EmptyRegion("region has no boxes")
        norm = []
        for box in self.boxes:
            if len(box) != self.dim:
                raise DimensionMismatch(f"box {box} does not have {self.dim} axes")
            axes = tuple((as_rational(lo), as_rational(hi)) for lo, hi in box)
            if any(lo > hi for lo, hi in axes):
                raise EmptyRegion(f"box {axes} is empty")
            norm.append(axes)
        object.__setattr__(self, "boxes", tuple(norm))

    @classmethod
    def cube(cls, dim: int) -> BoxRegion:
        return cls(dim, (((0, 1),) * dim,))

    @classmethod
    def points(cls, *points: Sequence) -> BoxRegion:
        """Degenerate boxes, one per point."""
        dim = len(points[0])
        return cls(dim, tuple(tuple((t, t) for t in p) for p in points))

    def contains(self, t: Sequence[Fraction]) -> bool:
        if len(t) != self.dim:
            raise DimensionMismatch(f"expected {self.dim} coordinates, got {len(t)}")
        return any(all(lo <= ti <= hi for ti, (lo, hi) in zip(t, box)) for box in self.boxes)

    def sample(self, rng: random.Random) -> tuple[Fraction, ...]:
        box = self.boxes[rng.randrange(len(self.boxes))]
        # small denominators so that dyadic values (arc fibers) come up often
        return tuple(lo + (hi - lo) * random_rational(rng, 24) for lo, hi in box)

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "boxes": [[[format_rational(lo), format_rational(hi)] for lo, hi in box] for box in self.boxes],
        }

    @classmethod
    def from_json(cls, data: dict) -> BoxRegion:
        return cls(int(data["dim"]), tuple(tuple(tuple(axis) for axis in box) for box in data["boxes"]))


@dataclass(frozen=True)
class PointKd:
    coords: tuple[PointK, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))
        if not self.coords:
            raise DimensionMismatch("a point of K^d needs at least one coordinate")

    @property
    def dim(self) -> int:
        return len(self.coords)

    @classmethod
    def parse(cls, text: str) -> PointKd:
        """Parse ``"x1,y1;x2,y2;..."``."""
        return cls(tuple(PointK.parse(part) for part in text.split(";")))

    def to_json(self) -> list:
        return [p.to_json() for p in self.coords]

    @classmethod
    def from_json(cls, data: list) -> PointKd:
        return cls(tuple(PointK.from_json(p) for p in data))


def q_kd(p: PointKd) -> tuple[Fraction, ...]:
    return tuple(q_k(c) for c in p.coords)


def member_y(p: PointKd, region: BoxRegion) -> bool:
    if p.dim != region.dim:
        raise DimensionMismatch(f"point has dimension {p.dim}, region {region.dim}")
    return region.contains(q_kd(p))


def path_kd(p: PointKd, q: PointKd) -> list[PLPath]:
    """Coordinate paths jointly forming a path in K^d.

    The i-th path joins the i-th coordinates; run them on a common
    parameter to obtain the product path.
    """
    if p.dim != q.dim:
        raise DimensionMismatch(f"dimensions differ: {p.dim} vs {q.dim}")
    for i, (a, b) in enumerate(zip(p.coords, q.coords)):
        if q_k(a) != q_k(b):
            witness = separation_witness(a, b)
            raise DifferentComponents(f"coordinate {i} lies in different components", witness, i)
    return [path(a, b) for a, b in zip(p.coords, q.coords)]


@dataclass(frozen=True)
class ProductFiber:
    factors: tuple[KFiber, ...]

    def contains(self, p: PointKd) -> bool:
        return len(p.coords) == len(self.factors) and all(
            f.contains(c) for f, c in zip(self.factors, p.coords)
        )

    def sample(self, rng: random.Random) -> PointKd:
        return PointKd(tuple(f.sample(rng) for f in self.factors))

    def to_json(self) -> list:
        return [f.to_json() for f in self.factors]


def fiber_kd(t: Sequence) -> ProductFiber:
    return ProductFiber(tuple(fiber_k(ti) for ti in t))


@dataclass
class RealizeReport:
    region: BoxRegion
    samples: int
    seed: int | None
    membership_agree: int = 0
    within_pairs: int = 0
    within_joined: int = 0
    cross_pairs: int = 0
    cross_separated: int = 0
    outcomes: list = field(default_factory=list)
    witnesses: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            self.membership_agree == 2 * self.samples
            and self.within_joined == self.within_pairs
            and self.cross_separated == self.cross_pairs
        )

    def to_json(self) -> dict:
        return {
            "region": self.region.to_json(),
            "samples": self.samples,
            "seed": self.seed,
            "membershipAgree": self.membership_agree,
            "membershipChecked": 2 * self.samples,
            "withinFiberPairs": self.within_pairs,
            "withinFiberJoined": self.within_joined,
            "crossFiberPairs": self.cross_pairs,
            "crossFiberSeparated": self.cross_separated,
            "ok": self.ok,
            "outcomes": self.outcomes,
            "witnesses": self.witnesses,
        }


def _joined(p: PointKd, q: PointKd) -> bool:
    try:
        paths = path_kd(p, q)
    except DifferentComponents:
        return False
    return all(
        pl.is_valid() and pl.vertices[0] == a and pl.vertices[-1] == b
        for pl, a, b in zip(paths, p.coords, q.coords)
    )


def _separated(p: PointKd, q: PointKd):
    try:
        path_kd(p, q)
    except DifferentComponents as exc:
        i = exc.index
        if witness_separates(p.coords[i], q.coords[i], exc.witness):
            return exc
    return None


def realize_report(region: BoxRegion, samples: int, rng: random.Random | int = 0) -> RealizeReport:
    """Check the realization Y = Q^-1(X) on random lifts.

    Draws ``samples`` values t in X, lifts each to two random points of the
    fiber Q^-1(t), then checks that the lifts map back into X, that lifts
    of equal values are joined by valid paths, and that lifts of distinct
    values are separated by a verified witness.
    """
    if samples < 1:
        raise ValueError("samples must be positive")
    seed = rng if isinstance(rng, int) else None
    if isinstance(rng, int):
        rng = random.Random(rng)
    report = RealizeReport(region, samples, seed)
    ts = [region.sample(rng) for _ in range(samples)]
    lifts = []
    for t in ts:
        fib = fiber_kd(t)
        a, b = fib.sample(rng), fib.sample(rng)
        lifts.append((a, b))
        agree = 0
        for p in (a, b):
            if q_kd(p) == t and member_y(p, region) and region.contains(t):
                agree += 1
        report.membership_agree += agree
        joined = _joined(a, b)
        report.within_pairs += 1
        report.within_joined += joined
        report.outcomes.append(
            {"t": [format_rational(x) for x in t], "lifts": [a.to_json(), b.to_json()], "member": agree == 2, "joined": joined}
        )
    for i, j in itertools.combinations(range(samples), 2):
        p, q = lifts[i][0], lifts[j][1]
        if ts[i] == ts[j]:
            report.within_pairs += 1
            report.within_joined += _joined(p, q)
            continue
        report.cross_pairs += 1
        exc = _separated(p, q)
        if exc is not None:
            report.cross_separated += 1
            if len(report.witnesses) < 20:
                report.witnesses.append({"pair": [i, j], **exc.payload})
    return report
