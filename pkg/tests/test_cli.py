import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from cli import cli
from schurpos.models import (BialternantResult, CharacterResult, KostkaMatrixModel, KostkaNumber, MonomialExpansionModel,
                             MonteCarloReport, PartitionList, PositivityResult, ProbabilityResult, SliceRatioResult,
                             SymPolyModel, TableauList)

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner(mix_stderr=False)


@pytest.mark.parametrize("args, golden", [
    (["probability", "3"], "probability_3.txt"),
    (["kostka", "[2,1]", "[1,1,1]"], "kostka_21_111.txt"),
    (["positivity", "m[2,1]"], "positivity_m21.txt"),
])
def test_golden_outputs(runner, args, golden):
    result = runner.invoke(cli, args)
    assert result.exit_code == 0
    assert result.stdout == (GOLDEN / golden).read_text(encoding="utf-8")


def test_partitions(runner):
    result = runner.invoke(cli, ["partitions", "4"])
    assert result.stdout.splitlines() == ["[4]", "[3,1]", "[2,2]", "[2,1,1]", "[1,1,1,1]"]


def test_ssyt(runner):
    result = runner.invoke(cli, ["ssyt", "[2,1]", "2"])
    assert result.stdout == "1 1\n2\n\n1 2\n2\n"
    result = runner.invoke(cli, ["ssyt", "[3,2]", "--content", "[2,2,1]", "--json"])
    data = json.loads(result.stdout)
    assert data["count"] == 2
    assert data["content"] == [2, 2, 1]


def test_ssyt_needs_exactly_one_bound(runner):
    assert runner.invoke(cli, ["ssyt", "[2,1]"]).exit_code == 1
    assert runner.invoke(cli, ["ssyt", "[2,1]", "2", "--content", "[2,1]"]).exit_code == 1


def test_kostka_matrix_json(runner):
    result = runner.invoke(cli, ["kostka-matrix", "3", "--json"])
    data = json.loads(result.stdout)
    assert data["order"] == [[3], [2, 1], [1, 1, 1]]
    assert data["matrix"] == [[1, 1, 1], [0, 1, 2], [0, 0, 1]]
    assert data["row_sums"] == [3, 3, 1]
    assert json.loads(runner.invoke(cli, ["kostka-matrix", "3"]).stdout) == data


def test_schur_expand(runner):
    assert runner.invoke(cli, ["schur-expand", "[2,1]"]).stdout == "m[2,1] + 2*m[1,1,1]\n"
    result = runner.invoke(cli, ["schur-expand", "3,1", "--variables", "2"])
    assert result.stdout == "x1^3*x2 + x1^2*x2^2 + x1*x2^3\n"


def test_to_schur(runner):
    result = runner.invoke(cli, ["to-schur", "1/3*m[2,1] + 2/3*m[1,1,1]"])
    assert result.stdout == "1/3*s[2,1]\n"
    data = json.loads(runner.invoke(cli, ["to-schur", "m[3]", "--json"]).stdout)
    assert data["basis"] == "schur"
    assert [t["coefficient"] for t in data["terms"]] == ["1", "-1", "1"]


def test_positivity_json(runner):
    data = json.loads(runner.invoke(cli, ["positivity", "s[2,1] + s[3]", "--json"]).stdout)
    assert data["positive"] is True
    assert data["schur_expansion"]["text"] == "s[3] + s[2,1]"


def test_probability_json_keeps_exact_rationals(runner):
    data = json.loads(runner.invoke(cli, ["probability", "7", "--json"]).stdout)
    assert data["probability"] == "1/2465474364698304960000"
    assert data["k_lambda"][0] == 15


def test_slice_ratio(runner):
    result = runner.invoke(cli, ["slice-ratio", "3"])
    assert result.stdout.splitlines() == [
        "ratio: 1/9 (≈ 0.111111)",
        "monomial slice volume: 1/2",
        "Schur slice volume: 1/18",
    ]


def test_sample(runner):
    result = runner.invoke(cli, ["sample", "3", "--samples", "5000", "--seed", "7", "--json"])
    data = json.loads(result.stdout)
    assert data["samples"] == 5000
    assert data["seed"] == 7
    assert data["exact"] == "1/9"
    again = runner.invoke(cli, ["sample", "3", "--samples", "5000", "--seed", "7", "--json"])
    assert json.loads(again.stdout) == data
    text = runner.invoke(cli, ["sample", "3", "--samples", "5000", "--seed", "7"]).stdout
    assert text.splitlines()[1] == "exact: 1/9 (≈ 0.111111)"


def test_bialternant(runner):
    assert runner.invoke(cli, ["bialternant", "[2,1]", "1,2,3"]).stdout == "60\n"
    data = json.loads(runner.invoke(cli, ["bialternant", "[2,1]", "1,2,3", "--json"]).stdout)
    assert (data["numerator"], data["vandermonde"]) == ("-120", "-2")


def test_char(runner):
    assert runner.invoke(cli, ["char", "--sym2", "1,1,0,1"]).stdout == "3\n"
    assert runner.invoke(cli, ["char", "--schur", "[2]", "2,3"]).stdout == "19\n"
    data = json.loads(runner.invoke(cli, ["char", "--sym2", "1,1,0,1", "--json"]).stdout)
    assert data["matrix"] == [["1", "2", "1"], ["0", "1", "1"], ["0", "0", "1"]]
    assert runner.invoke(cli, ["char"]).exit_code == 1
    assert runner.invoke(cli, ["char", "--sym2", "1,2,3"]).exit_code == 1


@pytest.mark.parametrize("args, code", [
    (["kostka", "[2,1]"], 1),
    (["no-such-verb"], 1),
    (["positivity", "m[2,1"], 1),
    (["positivity", "m[1,2]"], 1),
    (["to-schur", "m[2] + m[1]"], 1),
    (["probability", "0"], 2),
    (["bialternant", "[2,1]", "1,1,2"], 2),
    (["char", "--schur", "[1,1,1]", "1,2"], 2),
])
def test_exit_codes(runner, args, code):
    result = runner.invoke(cli, args)
    assert result.exit_code == code
    assert result.stdout == ""


def test_library_errors_are_one_line(runner):
    result = runner.invoke(cli, ["probability", "0"])
    assert result.stderr.startswith("error: ")
    assert result.stderr.count("\n") == 1


def test_version(runner):
    result = runner.invoke(cli, ["--version"])
    assert result.exit_code == 0
    assert "1.0.0" in result.stdout


@pytest.mark.parametrize("args, model", [
    (["partitions", "4"], PartitionList),
    (["ssyt", "[2,1]", "3"], TableauList),
    (["ssyt", "[3,2]", "--content", "[2,2,1]"], TableauList),
    (["kostka", "[3,2]", "[2,2,1]"], KostkaNumber),
    (["kostka-matrix", "4"], KostkaMatrixModel),
    (["schur-expand", "[2,1]"], SymPolyModel),
    (["schur-expand", "[2,1]", "-n", "3"], MonomialExpansionModel),
    (["to-schur", "m[2,1] + 2*m[1,1,1]"], SymPolyModel),
    (["positivity", "m[2,1]"], PositivityResult),
    (["probability", "5"], ProbabilityResult),
    (["slice-ratio", "4"], SliceRatioResult),
    (["sample", "3", "--samples", "1000"], MonteCarloReport),
    (["bialternant", "[2,1]", "1,2,3"], BialternantResult),
    (["char", "--sym2", "1,2,3,4"], CharacterResult),
    (["char", "--schur", "[2,1]", "1,2,3"], CharacterResult),
])
def test_json_output_matches_its_model(runner, args, model):
    result = runner.invoke(cli, args + ["--json"])
    assert result.exit_code == 0
    assert len(result.stdout.splitlines()) == 1
    data = json.loads(result.stdout)
    assert json.loads(model.parse_raw(result.stdout).json()) == data


@pytest.mark.parametrize("args", [
    ["partitions", "-1"],
    ["kostka-matrix", "-1"],
    ["probability", "-3"],
    ["slice-ratio", "-2"],
    ["sample", "-1", "--samples", "10"],
    ["ssyt", "[2,1]", "-1"],
])
def test_negative_numbers_are_domain_errors(runner, args):
    result = runner.invoke(cli, args)
    assert result.exit_code == 2
    assert result.stderr.startswith("error: ")
    assert result.stdout == ""


def test_leading_minus_in_expressions_and_points(runner):
    result = runner.invoke(cli, ["positivity", "-m[2,1]"])
    assert result.exit_code == 0
    assert result.stdout.startswith("NOT Schur positive")
    assert runner.invoke(cli, ["bialternant", "[1]", "-1,2"]).stdout == "1\n"


def test_kostka_of_a_long_row(runner):
    result = runner.invoke(cli, ["kostka", "[1200]", "[1200]"])
    assert result.exit_code == 0
    assert result.stdout == "1\n"
    assert result.stderr == ""
