import json
import re
from pathlib import Path

from shadow_states.cli import app, main
from shadow_states.common import MAX_BRUTEFORCE_ENV


def test_poly_csv(runner):
    result = runner.invoke(app, ["poly", "twist-loop", "6"])
    assert result.exit_code == 0, result.output
    assert result.stdout == "0,1,6,15,20,15,6,1\n"


def test_poly_text(runner):
    result = runner.invoke(app, ["poly", "figure-eight", "--format", "text"])
    assert result.exit_code == 0, result.output
    assert result.stdout == "3x^3 + 8x^2 + 5x\n"


def test_poly_json(runner):
    result = runner.invoke(app, ["poly", "twist-knot", "2", "--method", "via_parts", "--format", "json"])
    assert result.exit_code == 0, result.output
    assert json.loads(result.stdout) == {
        "command": "poly",
        "params": {"family": "twist-knot", "n": 2, "method": "via_parts"},
        "result": [0, 5, 8, 3],
    }


def test_poly_bruteforce_matches_closed(runner):
    closed = runner.invoke(app, ["poly", "foil", "7"])
    brute = runner.invoke(app, ["poly", "foil", "7", "--method", "bruteforce"])
    assert closed.stdout == brute.stdout == "0,7,22,35,35,21,7,1\n"


def test_poly_unsupported_method(runner):
    assert runner.invoke(app, ["poly", "twist-loop", "3", "--method", "via_parts"]).exit_code == 2
    assert runner.invoke(app, ["poly", "figure-eight", "--method", "recurrence"]).exit_code == 2


def test_poly_over_cap(runner):
    result = runner.invoke(
        app,
        ["poly", "twist-knot", "9", "--method", "bruteforce"],
        env={MAX_BRUTEFORCE_ENV: "10"},
    )
    assert result.exit_code == 3
    assert MAX_BRUTEFORCE_ENV in result.output


def test_poly_negative_n(runner):
    assert runner.invoke(app, ["poly", "foil", "-1"]).exit_code == 2


def test_table(runner, golden):
    result = runner.invoke(app, ["table", "twist-loop", "6"])
    assert result.exit_code == 0, result.output
    golden("coefficient_table_twist_loop_6.csv", result.stdout)


def test_table_figure_eight(runner):
    assert runner.invoke(app, ["table", "figure-eight", "3"]).exit_code == 2


def test_states(runner):
    result = runner.invoke(app, ["states", "twist-knot", "0"])
    assert result.exit_code == 0, result.output
    assert result.stdout == (
        "crossings: link-outer link-inner\nk=1 (1): 00\nk=2 (2): 01 10\nk=3 (1): 11\n"
    )


def test_states_twist_loop(runner):
    result = runner.invoke(app, ["states", "twist-loop", "2", "--components", "2"])
    assert result.stdout == "01\n10\n"

    result = runner.invoke(app, ["states", "figure-eight"])
    lines = result.stdout.splitlines()
    assert lines[0] == "crossings: c1 c2 c3 c4"
    assert [line.split(" ")[1] for line in lines[1:]] == ["(5):", "(8):", "(3):"]


def test_states_components(runner):
    result = runner.invoke(app, ["states", "twist-knot", "1", "--components", "2"])
    assert result.stdout.split() == ["000", "011", "101", "110"]

    result = runner.invoke(app, ["states", "figure-eight", "--components", "3", "--format", "json"])
    payload = json.loads(result.stdout)
    assert len(payload["result"]["3"]) == 3


def test_words(runner):
    result = runner.invoke(app, ["words", "Tau2", "1"])
    assert result.exit_code == 0, result.output
    assert result.stdout == "000\n011\n101\n110\n"


def test_words_json(runner):
    result = runner.invoke(app, ["words", "P", "2", "--method", "filter", "--format", "json"])
    assert json.loads(result.stdout)["result"] == ["00", "01", "10", "11"]


def test_words_bad_method(runner):
    result = runner.invoke(app, ["words", "P", "3", "--method", "psi_step"])
    assert result.exit_code == 2


def test_bijection_map(runner):
    result = runner.invoke(app, ["bijection", "3", "--map", "0100"])
    assert result.exit_code == 0, result.output
    assert result.stdout == "01100\n"

    result = runner.invoke(app, ["bijection", "3", "--inverse", "01100"])
    assert result.stdout == "0100\n"

    result = runner.invoke(app, ["bijection", "8", "--inverse", "1110111111"])
    assert result.stdout == "110000000\n"


def test_bijection_outside_domain(runner):
    result = runner.invoke(app, ["bijection", "3", "--map", "0101"])
    assert result.exit_code == 5
    assert "0101" in result.output

    assert runner.invoke(app, ["bijection", "3", "--map", "01"]).exit_code == 5
    assert runner.invoke(app, ["bijection", "3", "--inverse", "00000"]).exit_code == 5


def test_bijection_verify(runner):
    result = runner.invoke(app, ["bijection", "4"])
    assert result.exit_code == 0, result.output
    assert result.stdout.splitlines() == [
        "counterexamples: []",
        "domain_size: 22",
        "image_size: 22",
        "is_bijection: True",
    ]


def test_bijection_table(runner, golden):
    result = runner.invoke(app, ["bijection", "5", "--table"])
    assert result.exit_code == 0, result.output
    golden("bijection_table_5.csv", result.stdout)


def test_rosette_codes(runner, golden):
    result = runner.invoke(app, ["rosette", "3", "--codes"])
    assert result.exit_code == 0, result.output
    golden("rosette_3_codes.txt", result.stdout)


def test_rosette_json(runner):
    result = runner.invoke(app, ["rosette", "5", "-r", "2.0", "--format", "json"])
    payload = json.loads(result.stdout)
    assert payload["params"] == {"n": 5, "radius": 2.0}
    assert payload["result"] == {"regions": 22}


def test_rosette_radius_too_small(runner):
    result = runner.invoke(app, ["rosette", "3", "--radius", "1"])
    assert result.exit_code == 2
    assert "radius must be > 1" in result.output


def test_rosette_svg(runner, tmp_path):
    target = tmp_path / "rosette.svg"
    result = runner.invoke(app, ["rosette", "4", "--svg", str(target), "--labels"])
    assert result.exit_code == 0, result.output
    svg = target.read_text()
    assert len(re.findall(r'<text[^>]*class="region"', svg)) == 14
    assert svg.count('class="circle"') == 4


def test_verify(runner):
    result = runner.invoke(app, ["verify", "--max-n", "3"])
    assert result.exit_code == 0, result.output
    lines = result.stdout.splitlines()
    assert lines
    assert all(line.startswith("PASS ") for line in lines)


def test_verify_under_a_small_cap(runner):
    full = runner.invoke(app, ["verify", "--max-n", "4"])
    capped = runner.invoke(app, ["verify", "--max-n", "4"], env={MAX_BRUTEFORCE_ENV: "5"})
    assert full.exit_code == 0, full.output
    assert capped.exit_code == 3
    reported = [line for line in capped.stdout.splitlines() if line[:4] in ("PASS", "SKIP")]
    assert len(reported) == len(full.stdout.splitlines())
    assert "SKIP poly twist-knot n=4 closed==bruteforce" in capped.stdout
    assert "skipped by the brute-force cap" in capped.output


def test_verify_csv(runner):
    result = runner.invoke(app, ["verify", "--max-n", "2", "--format", "csv"])
    assert result.exit_code == 0, result.output
    lines = result.stdout.splitlines()
    assert lines[0] == "check,status,detail"
    assert all(",PASS," in line for line in lines[1:])


def test_verbose(runner):
    result = runner.invoke(app, ["-v", "poly", "foil", "2", "--method", "bruteforce"])
    assert result.exit_code == 0, result.output
    assert result.output.splitlines()[-1] == "0,2,2"


def test_console_script():
    import bin.app

    assert bin.app.main is main
    pyproject = (Path(__file__).parents[1] / "pyproject.toml").read_text()
    assert 'shadowstates = "bin.app:main"' in pyproject
