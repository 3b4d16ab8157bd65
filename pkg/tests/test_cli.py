import json

from conepol.cli import main


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_charpoly_fano_text(capsys):
    code, out, _ = run(capsys, ["charpoly", "--fano"])
    assert code == 0
    assert "chibar(t) = t^2 - 6*t + 8" in out
    assert "abs coeffs (leading first): 1, 6, 8" in out
    assert "log-concave: true" in out


def test_charpoly_json_is_deterministic(capsys):
    code1, out1, _ = run(capsys, ["charpoly", "--uniform", "3", "4", "--format", "json"])
    code2, out2, _ = run(capsys, ["charpoly", "--uniform", "3", "4", "--format", "json"])
    assert code1 == code2 == 0
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["chibar"] == ["1", "-3", "3"]
    assert payload["log_concave"] is True


def test_charpoly_loops_exit_2(capsys, tmp_path):
    path = tmp_path / "loopy.json"
    path.write_text(json.dumps({"n": 2, "bases": [[0]]}))
    code, _, err = run(capsys, ["charpoly", "--matroid", str(path)])
    assert code == 2
    assert "HasLoops" in err


def test_pol_u23_text(capsys):
    code, out, _ = run(capsys, ["pol", "--uniform", "2", "3"])
    assert code == 0
    assert out.strip() == "t_{0} + t_{1} + t_{2}"


def test_pol_eval_alpha_beta(capsys):
    code, out, _ = run(capsys, ["pol", "--uniform", "3", "3", "--eval", "alpha"])
    assert code == 0
    assert "value: 1/2" in out
    code, out, _ = run(capsys, ["pol", "--fano", "--eval", "beta"])
    assert code == 0
    assert "value: 4" in out


def test_pol_subinterval(capsys):
    code, out, _ = run(
        capsys, ["pol", "--fano", "--interval", "0", "0,1,2,3,4,5,6"]
    )
    assert code == 0
    # interval above a point: variables are the three lines through it
    assert out.count("t_{") == 3


def test_certify_ok_and_deterministic(capsys):
    argv = ["certify", "--uniform", "3", "3", "--samples", "4", "--seed", "7",
            "--format", "json"]
    code1, out1, _ = run(capsys, argv)
    code2, out2, _ = run(capsys, argv)
    assert code1 == code2 == 0
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["verdict"] is True
    assert payload["seed"] == 7
    assert len(payload["samples"]) == 4


def test_certify_rank_two_subinterval(capsys):
    # degree-1 interval: the certificate rests on positivity alone
    code, out, _ = run(
        capsys,
        ["certify", "--fano", "--interval", "0", "0,1,2,3,4,5,6",
         "--samples", "3", "--format", "json"],
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["degree"] == 1
    assert all(s["inertia"] is None for s in payload["samples"])


def test_certify_direction_file_not_in_cone(capsys, tmp_path):
    path = tmp_path / "dirs.json"
    bad = {
        "K": [],
        "L": [0, 1, 2],
        "values": {"0": "-6", "1": "-6", "2": "-6", "0,1": "-4", "0,2": "-4",
                   "1,2": "-4"},
    }
    path.write_text(json.dumps({"tuples": [[bad, bad]]}))
    code, _, err = run(
        capsys,
        ["certify", "--uniform", "3", "3", "--directions", str(path)],
    )
    assert code == 2
    assert "DirectionNotInCone" in err


def test_chow_verify_full_and_all(capsys):
    code, out, _ = run(capsys, ["chow-verify", "--uniform", "3", "4"])
    assert code == 0
    assert "verdict: true" in out
    code, out, _ = run(capsys, ["chow-verify", "--fano", "--all-intervals"])
    assert code == 0
    assert "verdict: true" in out


def test_chow_verify_size_guard(capsys):
    code, _, err = run(capsys, ["chow-verify", "--uniform", "4", "5"])
    assert code == 4
    assert "SizeLimitExceeded" in err


def test_poset_check(capsys):
    code, out, _ = run(capsys, ["poset-check", "--fano", "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"] is True
    assert payload["flats"] == 16


def test_usage_error_exit_1(capsys):
    code, _, _ = run(capsys, ["charpoly"])
    assert code == 1


def test_invalid_interval_exit_2(capsys):
    code, _, err = run(
        capsys, ["pol", "--uniform", "2", "3", "--interval", "0,1", "0,1,2"]
    )
    assert code == 2  # {0,1} is not a flat of U_{2,3}


def test_graphic_matroid_from_file(capsys, tmp_path):
    path = tmp_path / "k4.json"
    path.write_text(json.dumps({"edges": [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]}))
    code, out, _ = run(capsys, ["charpoly", "--graphic", str(path)])
    assert code == 0
    assert "chibar(t) = t^2 - 5*t + 6" in out


def test_matroid_file_with_explicit_bases(capsys, tmp_path):
    path = tmp_path / "u23.json"
    path.write_text(json.dumps({"n": 3, "bases": [[0, 1], [0, 2], [1, 2]]}))
    code, out, _ = run(capsys, ["charpoly", "--matroid", str(path)])
    assert code == 0
    assert "chibar(t) = t - 2" in out
