"""Shared fixtures-in-plain-functions for the test suite."""
from __future__ import annotations

import random
from fractions import Fraction

from minflag.cli import SweepConfig, sweep_cases
from minflag.rootsys import LieType, RootSystem, build
from minflag.weylorbit import Orbit, orbit

SWEEP = sweep_cases(SweepConfig())


def rs_of(family: str, rank: int) -> RootSystem:
    return build(LieType(family, rank))


def orbit_of(family: str, rank: int, i: int) -> Orbit:
    return orbit(rs_of(family, rank), i)


def sweep_orbits():
    for lt, i in SWEEP:
        yield orbit(build(lt), i)


def random_alcove_coords(rs: RootSystem, rng: random.Random) -> tuple[Fraction, ...]:
    """A random rational point of the closed fundamental alcove.

    Draw nonnegative integers a_j, then pick a denominator at least
    sum q_j a_j so the highest-root value lands in [0, 1].
    """
    q = rs.highest_root.coeffs
    a = [rng.randint(0, 20) for _ in range(rs.rank)]
    bound = sum(qj * aj for qj, aj in zip(q, a))
    den = max(bound, 1) + rng.randint(0, 20)
    return tuple(Fraction(aj, den) for aj in a)
