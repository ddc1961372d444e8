"""Deterministic rational probe points for sampling-based checks.

The probe set mixes a few structured points (origin, coordinate unit
points, the all-ones point) with seeded pseudo-random rationals so that
degenerate loci such as single vanishing coordinates are actually hit.
All coordinates stay within [-2, 2].
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable, Sequence

DEFAULT_SEED = 271828
PROBE_COUNT = 32

Point = tuple[Fraction, ...]


def probe_points(
    dim: int,
    seed: int = DEFAULT_SEED,
    count: int = PROBE_COUNT,
    extra: Iterable[Sequence[Fraction]] = (),
) -> list[Point]:
    """Deterministic probe set: structured points, then seeded rationals."""
    pts: list[Point] = [tuple(Fraction(0) for _ in range(dim))]
    for axis in range(dim):
        pts.append(tuple(Fraction(1 if i == axis else 0) for i in range(dim)))
    pts.append(tuple(Fraction(1) for _ in range(dim)))
    rng = random.Random(seed + 7919 * dim)
    while len(pts) < count:
        candidate = tuple(Fraction(rng.randint(-16, 16), 8) for _ in range(dim))
        if candidate not in pts:
            pts.append(candidate)
    out = pts[:count]
    for p in extra:
        p = tuple(Fraction(x) for x in p)
        if len(p) != dim:
            raise ValueError("extra probe point has wrong dimension")
        if p not in out:
            out.append(p)
    return out
