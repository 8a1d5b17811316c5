import pytest

from shadow_states.common import MAX_BRUTEFORCE_ENV, BruteForceCapError, StructuralError
from shadow_states.knot_families import twist_knot, twist_loop
from shadow_states.shadow_core import (
    A,
    B,
    NORTH_SOUTH,
    checkerboard,
    corner_face,
    dart_at,
    faces,
    flip,
    flip_deltas,
    make_diagram,
    resolve,
    state_census,
)


@pytest.mark.parametrize(
    "name, expected", [("T_1", 3), ("T_2", 4), ("tau_0", 4), ("tau_2", 6), ("figure_eight", 6)]
)
def test_face_count(shadows, name, expected):
    diagram = shadows[name]
    assert len(faces(diagram)) == expected == diagram.n + 2


def test_every_dart_in_one_face(shadows):
    for diagram in shadows.values():
        darts = [d for face in faces(diagram) for d in face]
        assert sorted(darts) == list(diagram.darts)


@pytest.mark.parametrize(
    "alpha, message",
    [
        ([1, 0, 2, 3], "fixed point"),
        ([1, 2, 3, 0], "involution"),
        ([2, 3, 0, 1], "faces"),
        ([1, 0, 3], "multiple of 4"),
    ],
)
def test_malformed_alpha(alpha, message):
    with pytest.raises(StructuralError, match=message):
        make_diagram(alpha, outer_dart=0)


def test_checkerboard_single_twist(shadows):
    diagram = shadows["T_1"]
    colors, pairings = checkerboard(diagram)
    assert colors[corner_face(diagram, diagram.outer_dart)] == A
    corners = [colors[corner_face(diagram, dart_at(0, s))] for s in range(4)]
    assert corners == [B, A, B, A]
    assert pairings == (NORTH_SOUTH,)


def test_checkerboard_figure_eight(shadows):
    colors, _ = checkerboard(shadows["figure_eight"])
    assert sorted(colors) == [A, A, A, B, B, B]


def test_corners_alternate(shadows):
    for diagram in shadows.values():
        colors, _ = checkerboard(diagram)
        for c in range(diagram.n):
            corners = [colors[corner_face(diagram, dart_at(c, s))] for s in range(4)]
            assert corners in ([A, B, A, B], [B, A, B, A])


def test_resolve_single_twist(shadows):
    assert resolve(shadows["T_1"], "0") == 2
    assert resolve(shadows["T_1"], "1") == 1


def test_resolve_wrong_length(shadows):
    with pytest.raises(ValueError, match="length"):
        resolve(shadows["T_2"], "0")


def test_census_figure_eight(shadows):
    census = state_census(shadows["figure_eight"])
    assert {k: len(v) for k, v in census.items()} == {1: 5, 2: 8, 3: 3}


def test_census_twist_knot_one():
    census = state_census(twist_knot(1))
    assert census[2] == ["000", "011", "101", "110"]
    assert census[3] == ["111"]
    assert len(census[1]) == 3


def test_census_twist_loop_two(shadows):
    census = state_census(shadows["T_2"])
    assert {k: len(v) for k, v in census.items()} == {1: 1, 2: 2, 3: 1}


def test_census_is_complete_and_deterministic(shadows):
    for diagram in shadows.values():
        census = state_census(diagram)
        words = [w for ws in census.values() for w in ws]
        assert len(words) == len(set(words)) == 2**diagram.n
        for ws in census.values():
            assert ws == sorted(ws)
        assert state_census(diagram) == census


def test_census_cap():
    with pytest.raises(BruteForceCapError, match="cap of 4"):
        state_census(twist_loop(5), max_crossings=4)


def test_census_cap_from_environment(monkeypatch):
    monkeypatch.setenv(MAX_BRUTEFORCE_ENV, "3")
    with pytest.raises(BruteForceCapError, match=MAX_BRUTEFORCE_ENV):
        state_census(twist_loop(4))


def test_bad_cap_in_environment(monkeypatch):
    monkeypatch.setenv(MAX_BRUTEFORCE_ENV, "many")
    with pytest.raises(ValueError, match="integer"):
        state_census(twist_loop(1))


def test_single_flips_change_one_loop(shadows):
    for diagram in shadows.values():
        assert {abs(delta) for _, _, delta in flip_deltas(diagram)} <= {1}


def test_flip():
    assert flip("0110", 0) == "1110"
    assert flip("0110", 3) == "0111"


def test_crossingless_diagram():
    diagram = make_diagram([], free_loops=2)
    assert diagram.n == 0
    assert faces(diagram) == []
    assert state_census(diagram) == {2: [""]}
