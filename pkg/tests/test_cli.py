import json

from schurgas.cli import run


def invoke(capsys, argv):
    code = run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_partitions_listing(capsys):
    code, out, _ = invoke(capsys, ["partitions", "4", "--max-parts", "2"])
    assert code == 0
    assert out == "4\n3,1\n2,2\n"


def test_partitions_kind_filter(capsys):
    code, out, _ = invoke(capsys, ["partitions", "4", "--max-parts", "2", "--kind", "even-rows"])
    assert code == 0
    assert out == "4\n2,2\n"


def test_partitions_json(capsys):
    code, out, _ = invoke(capsys, ["partitions", "3", "--format", "json"])
    assert code == 0
    assert json.loads(out) == [[3], [2, 1], [1, 1, 1]]


def test_schur_both_backends(capsys):
    code, out, _ = invoke(capsys, ["schur", "--shape", "2,1", "--point", "2,3"])
    assert code == 0
    assert out == "tableau = 30/1\nbialternant = 30/1\n"


def test_schur_degenerate_point(capsys):
    code, out, _ = invoke(capsys, ["schur", "--shape", "2,1", "--point", "2,2",
                                   "--format", "json"])
    assert code == 0
    blob = json.loads(out)
    assert blob["tableau"] == "16/1"
    assert blob["bialternant"] is None


def test_zn_value(capsys):
    code, out, _ = invoke(capsys, ["zn", "--kind", "hst", "--point", "2,3", "--n", "2"])
    assert code == 0
    assert out == "25/1\n"


def test_gpf_definition_series(capsys):
    code, out, _ = invoke(capsys, ["gpf", "--kind", "bose", "--point", "1/2",
                                   "--nmax", "3", "--format", "json"])
    assert code == 0
    assert json.loads(out)["coeffs"] == ["1/1", "1/2", "1/4", "1/8"]


def test_gpf_supports_kinds_without_closed_form(capsys):
    code, out, _ = invoke(capsys, ["gpf", "--kind", "parabose:2", "--point", "2,3",
                                   "--nmax", "2"])
    assert code == 0
    assert out == "0: 1/1\n1: 5/1\n2: 25/1\n"


def test_verify_single_kind(capsys):
    code, out, _ = invoke(capsys, ["verify", "--kind", "bose", "--point", "2,3",
                                   "--nmax", "6"])
    assert code == 0
    assert "OK" in out


def test_verify_all_kinds(capsys):
    code, out, _ = invoke(capsys, ["verify", "--all", "--nmax", "4"])
    assert code == 0
    assert out.count("OK") == 16  # 8 kinds, two points each


def test_verify_requires_kind_or_all(capsys):
    code, _, err = invoke(capsys, ["verify", "--nmax", "4"])
    assert code == 2
    assert "kind" in err


def test_verify_deterministic_output(capsys):
    argv = ["verify", "--kind", "hst", "--nmax", "4", "--seed", "7", "--format", "json"]
    _, first, _ = invoke(capsys, argv)
    _, second, _ = invoke(capsys, argv)
    assert first == second


def test_equivalence_exit_and_json(capsys):
    code, out, _ = invoke(capsys, ["equivalence", "--qmax", "6", "--format", "json"])
    assert code == 0
    blob = json.loads(out)
    assert blob["equal"] is True
    assert [row[1] for row in blob["degeneracy_table"]] == [1, 1, 2, 2, 3, 3]


def test_equivalence_csv(capsys):
    code, out, _ = invoke(capsys, ["equivalence", "--qmax", "4", "--format", "csv"])
    assert code == 0
    assert out.startswith("level_index,energy_halfq,degeneracy\n")


def test_thermo_fixed_mu(capsys):
    code, out, _ = invoke(capsys, ["thermo", "--kind", "fermi", "--spectrum", "eq2",
                                   "--beta", "1.0", "--mu", "2.0", "--format", "json"])
    assert code == 0
    blob = json.loads(out)
    assert 0 < blob["mean_n"] < 9
    assert blob["mu_over_hw"] == 2.0


def test_thermo_target_round_trip(capsys):
    code, out, _ = invoke(capsys, ["thermo", "--kind", "bose", "--spectrum", "eq2",
                                   "--beta", "1.0", "--target-n", "0.25",
                                   "--nmax", "32", "--format", "json"])
    assert code == 0
    assert abs(json.loads(out)["mean_n"] - 0.25) <= 1e-8


def test_thermo_numeric_failure_exit(capsys):
    code, _, err = invoke(capsys, ["thermo", "--kind", "bose", "--spectrum", "eq2",
                                   "--beta", "1.0", "--mu", "99", "--nmax", "8"])
    assert code == 3
    assert "numeric failure" in err


def test_usage_errors_exit_two(capsys):
    code, _, _ = invoke(capsys, ["zn", "--kind", "nope", "--point", "2", "--n", "1"])
    assert code == 2
    code, _, _ = invoke(capsys, ["zn", "--point", "2"])
    assert code == 2
    code, _, _ = invoke(capsys, ["nonsense"])
    assert code == 2


def test_out_file(tmp_path, capsys):
    target = tmp_path / "series.txt"
    code, out, _ = invoke(capsys, ["gpf", "--kind", "fermi", "--point", "2,3",
                                   "--nmax", "2", "--out", str(target)])
    assert code == 0
    assert out == ""
    assert target.read_text() == "0: 1/1\n1: 5/1\n2: 6/1\n"
