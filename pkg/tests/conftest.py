"""Shared fixtures and hypothesis strategies.

Random valid curves are produced by blowing up known-valid seeds: blowing
up a point on a component or an intersection point both preserve validity,
so every generated graph is the dual graph of an actual degeneration.
"""

import random

import pytest
from hypothesis import strategies as st

from neroncalc.curves import SncdCurve, blow_up_intersection, blow_up_point
from neroncalc.kodaira import (
    ALL_FIXTURES,
    fixture_curve,
    genus2_semistable,
    good_elliptic,
    kodaira_curve,
)


def seed_curves() -> list[SncdCurve]:
    return [
        SncdCurve([("o", 1, 0)], []),
        good_elliptic(),
        SncdCurve([("o", 1, 2)], []),
        kodaira_curve("I2"),
        kodaira_curve("I3"),
        kodaira_curve("II"),
        kodaira_curve("I0*"),
        genus2_semistable(),
    ]


def random_curve(
    rng: random.Random,
    max_vertices: int = 8,
    max_mult: int = 12,
    blowups: int = 6,
) -> SncdCurve:
    """Random valid curve from a seed plus a chain of valid blow-ups."""
    curve = rng.choice(seed_curves())
    for _ in range(rng.randrange(blowups + 1)):
        if len(curve.vertices) >= max_vertices:
            break
        if curve.edges and rng.random() < 0.5:
            idx = rng.randrange(len(curve.edges))
            a, b = curve.edges[idx]
            if curve.multiplicity(a) + curve.multiplicity(b) <= max_mult:
                curve = blow_up_intersection(curve, idx)
                continue
        curve = blow_up_point(curve, rng.choice(curve.ids))
    return curve


@st.composite
def curves(draw, max_vertices: int = 8, max_mult: int = 12):
    """Hypothesis strategy over valid curves (blow-up closure of the seeds)."""
    seeds = seed_curves()
    curve = seeds[draw(st.integers(0, len(seeds) - 1))]
    steps = draw(
        st.lists(
            st.tuples(st.booleans(), st.integers(0, 10 ** 6)), max_size=8
        )
    )
    for on_edge, pick in steps:
        if len(curve.vertices) >= max_vertices:
            break
        if on_edge and curve.edges:
            idx = pick % len(curve.edges)
            a, b = curve.edges[idx]
            if curve.multiplicity(a) + curve.multiplicity(b) <= max_mult:
                curve = blow_up_intersection(curve, idx)
                continue
        curve = blow_up_point(curve, curve.ids[pick % len(curve.ids)])
    return curve


@pytest.fixture(scope="session")
def all_fixture_curves():
    return {name: fixture_curve(name) for name in ALL_FIXTURES}
