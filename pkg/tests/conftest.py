import difflib
from pathlib import Path

import pytest
from typer.testing import CliRunner

from shadow_states.knot_families import figure_eight, foil, twist_knot, twist_loop


class DiffError(Exception):
    pass


@pytest.fixture()
def data_path():
    def inner(suffix: Path | str | None = None) -> Path:
        return Path(__file__).parent.parent / "test_data" / (suffix or "")

    return inner


@pytest.fixture()
def golden(data_path):
    """Compare text with a file under test_data/ and raise with a unified diff."""

    def inner(name: str, actual: str):
        expected_file = data_path(name)
        diff = "".join(
            difflib.unified_diff(
                expected_file.read_text().splitlines(keepends=True),
                actual.splitlines(keepends=True),
                fromfile=str(expected_file),
                tofile="actual",
            )
        )
        if diff:
            raise DiffError(diff)

    return inner


@pytest.fixture()
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture(scope="session")
def shadows():
    return {
        "T_1": twist_loop(1),
        "T_2": twist_loop(2),
        "F_2": foil(2),
        "tau_0": twist_knot(0),
        "tau_1": twist_knot(1),
        "tau_2": twist_knot(2),
        "figure_eight": figure_eight(),
    }
