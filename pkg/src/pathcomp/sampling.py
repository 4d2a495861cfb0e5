"""Seeded random generators for rationals, gaps and points of K.

All functions take a :class:`random.Random` so that reports are
reproducible from a seed.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .space_k import Fiber, PointK, component_of
from .ternary import CantorGap, classify, evaluate_digits


def random_rational(rng: random.Random, max_den: int = 200) -> Fraction:
    q = rng.randint(1, max_den)
    return Fraction(rng.randint(0, q), q)


def random_gap(rng: random.Random, max_level: int = 8) -> CantorGap:
    level = rng.randint(1, max_level)
    prefix = [rng.choice((0, 2)) for _ in range(level - 1)]
    a = evaluate_digits(prefix + [1], (), 3)
    return CantorGap(level, a, a + Fraction(1, 3**level))


def random_cantor_point(rng: random.Random, max_prefix: int = 8) -> Fraction:
    """A Cantor point: a {0,2} prefix followed by a {0,2} tail, possibly empty."""
    prefix = [rng.choice((0, 2)) for _ in range(rng.randint(0, max_prefix))]
    period = [rng.choice((0, 2)) for _ in range(rng.randint(0, 4))]
    return evaluate_digits(prefix, period, 3)


def random_point_k(rng: random.Random) -> PointK:
    roll = rng.random()
    if roll < 0.4:
        return PointK(random_cantor_point(rng), random_rational(rng))
    if roll < 0.8:
        gap = random_gap(rng)
        x = gap.left + (gap.right - gap.left) * random_rational(rng, 32)
        y = random_rational(rng) if x in (gap.left, gap.right) else gap.bridge
        return PointK(x, y)
    x = random_rational(rng)
    y = random_rational(rng) if classify(x).in_cantor else classify(x).gap.bridge
    return PointK(x, y)


def random_point_in_component(rng: random.Random, comp) -> PointK:
    if isinstance(comp, Fiber):
        return PointK(comp.c, random_rational(rng))
    gap = comp.gap
    side = rng.randrange(3)
    if side == 0:
        return PointK(gap.left, random_rational(rng))
    if side == 1:
        return PointK(gap.right, random_rational(rng))
    return PointK(gap.left + (gap.right - gap.left) * random_rational(rng, 32), gap.bridge)


def random_same_component_pair(rng: random.Random) -> tuple[PointK, PointK]:
    p = random_point_k(rng)
    return p, random_point_in_component(rng, component_of(p))


def random_pair(rng: random.Random) -> tuple[PointK, PointK]:
    """Half the time a same-component pair, otherwise independent points."""
    if rng.random() < 0.5:
        return random_same_component_pair(rng)
    return random_point_k(rng), random_point_k(rng)

