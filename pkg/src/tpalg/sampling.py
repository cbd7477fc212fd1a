"""Seeded random rationals for parameter sampling.

Numerators are uniform in [-9, 9] and denominators in [1, 9]; values that a
caller forbids (zero, repeats) are rejected and redrawn.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .scalar import Scalar

__all__ = ["make_rng", "random_rational", "random_rationals", "random_lambdas"]


def make_rng(seed: int) -> random.Random:
    if not 0 <= seed < 2**64:
        raise ValueError("seed must be a 64-bit unsigned integer")
    return random.Random(seed)


def random_rational(rng: random.Random, nonzero: bool = False) -> Scalar:
    while True:
        q = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        if q or not nonzero:
            return Scalar(q)


def random_rationals(rng: random.Random, count: int, nonzero: bool = False) -> list[Scalar]:
    return [random_rational(rng, nonzero) for _ in range(count)]


def random_lambdas(rng: random.Random, n: int) -> list[Scalar]:
    """``n`` distinct nonzero rationals."""
    out: list[Scalar] = []
    while len(out) < n:
        x = random_rational(rng, nonzero=True)
        if x not in out:
            out.append(x)
    return out
