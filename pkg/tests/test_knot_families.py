import pytest

from shadow_states.genpoly import GenPolynomial, poly_bruteforce
from shadow_states.knot_families import (
    Family,
    FamilySpec,
    build,
    build_family,
    crossing_labels,
    figure_eight,
)
from shadow_states.shadow_core import resolve, state_census

X = GenPolynomial.x()


def census_sizes(diagram):
    return {k: len(v) for k, v in state_census(diagram).items()}


def test_degenerate_members():
    assert census_sizes(build(FamilySpec(Family.TWIST_KNOT, 0))) == {1: 1, 2: 2, 3: 1}
    assert state_census(build(FamilySpec(Family.FOIL, 0))) == {2: [""]}
    assert state_census(build(FamilySpec(Family.TWIST_LOOP, 0))) == {1: [""]}


@pytest.mark.parametrize(
    "family, n, crossings",
    [
        (Family.TWIST_LOOP, 5, 5),
        (Family.FOIL, 3, 3),
        (Family.TWIST_KNOT, 0, 2),
        (Family.TWIST_KNOT, 4, 6),
        (Family.FIGURE_EIGHT, 0, 4),
    ],
)
def test_crossing_count(family, n, crossings):
    spec = FamilySpec(family, n)
    assert spec.crossing_count == crossings == build(spec).n
    assert len(crossing_labels(spec)) == crossings


def test_calibration():
    assert resolve(build_family("twist-loop", 1), "0") == 2
    assert state_census(build_family("twist-knot", 0))[2] == ["01", "10"]


def test_figure_eight():
    diagram = figure_eight()
    census = census_sizes(diagram)
    assert census == {1: 5, 2: 8, 3: 3}
    assert sum(census.values()) == 16
    assert poly_bruteforce(diagram) == 3 * X**3 + 8 * X**2 + 5 * X


@pytest.mark.parametrize("n", range(13))
def test_twist_loop_polynomial(n):
    assert poly_bruteforce(build(FamilySpec(Family.TWIST_LOOP, n))) == X * (X + 1) ** n


@pytest.mark.parametrize("n", range(13))
def test_foil_polynomial(n):
    expected = (X + 1) ** n + X**2 - 1
    assert poly_bruteforce(build(FamilySpec(Family.FOIL, n))) == expected


@pytest.mark.parametrize("n", range(13))
def test_twist_knot_polynomial(n):
    expected = 2 * (X + 1) ** (n + 1) + X**3 + 2 * X**2 - X - 2
    assert poly_bruteforce(build(FamilySpec(Family.TWIST_KNOT, n))) == expected


def test_zero_move_pairs_by_census():
    def census_poly(family, n):
        return poly_bruteforce(build(FamilySpec(family, n)))

    assert census_poly(Family.TWIST_LOOP, 1) == census_poly(Family.FOIL, 1) == X**2 + X
    assert (
        census_poly(Family.TWIST_LOOP, 2)
        == census_poly(Family.TWIST_KNOT, 0)
        == X**3 + 2 * X**2 + X
    )
    assert (
        census_poly(Family.FOIL, 3)
        == census_poly(Family.TWIST_KNOT, 1)
        == X**3 + 4 * X**2 + 3 * X
    )


def test_invalid_specs():
    with pytest.raises(ValueError, match="half_twists"):
        FamilySpec(Family.FOIL, -1)
    with pytest.raises(ValueError, match="no parameter"):
        FamilySpec(Family.FIGURE_EIGHT, 2)
    with pytest.raises(ValueError):
        build_family("pretzel", 3)


def test_crossing_labels():
    assert crossing_labels(FamilySpec(Family.TWIST_KNOT, 2)) == [
        "link-outer",
        "link-inner",
        "twist-1",
        "twist-2",
    ]
