import json

import pytest

from tilecount.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_hexagon(capsys):
    code, out, _ = run(capsys, "count", "hexagon", "--k", "2", "--q", "2")
    assert code == 0
    assert out.strip() == "20 (closed-form)"


def test_count_problem10(capsys):
    code, out, _ = run(capsys, "count", "problem10", "--k", "1")
    assert code == 0
    assert out.strip() == "2 (closed-form)"


def test_count_semihex_single_dent(capsys):
    code, out, _ = run(capsys, "count", "semihex", "--k", "1", "--q", "3",
                       "--dents", "2")
    assert code == 0
    assert out.strip() == "1 (closed-form)"


def test_count_methods_agree(capsys):
    values = set()
    for method in ("closed", "determinant", "oracle"):
        code, out, _ = run(capsys, "count", "notri", "--k", "2", "--n", "2",
                           "--method", method)
        assert code == 0
        values.add(out.split()[0])
    assert len(values) == 1


def test_count_json_uses_decimal_strings(capsys):
    code, out, _ = run(capsys, "count", "hexagon", "--k", "3", "--q", "3",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["value"] == "980"
    assert payload["params"] == {"k": "3", "q": "3"}


def test_count_missing_flags_is_usage_error(capsys):
    code, _, err = run(capsys, "count", "hexagon", "--k", "2")
    assert code == 2
    assert "requires" in err


def test_count_method_not_available(capsys):
    code, _, err = run(capsys, "count", "semihex", "--k", "1", "--q", "1",
                       "--dents", "0", "--method", "determinant")
    assert code == 2
    assert "not available" in err


def test_count_oracle_budget_exit_code(capsys):
    code, _, err = run(capsys, "count", "hexagon", "--k", "2", "--q", "2",
                       "--method", "oracle", "--oracle-budget", "2")
    assert code == 3
    assert "budget" in err


def test_check_problem1(capsys):
    code, out, _ = run(capsys, "check", "problem1", "--n", "1")
    assert code == 0
    assert "ratio        = 1/3" in out
    assert "verdict: agree" in out


def test_check_notri(capsys):
    code, out, _ = run(capsys, "check", "notri", "--k", "1", "--n", "1")
    assert code == 0
    assert out.count("= 2") == 3


def test_check_json(capsys):
    code, out, _ = run(capsys, "check", "problem10", "--k", "2",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["agree"] is True
    assert {leg["value"] for leg in payload["legs"]} == {"96"}


def test_check_disagreement_exit_code(capsys, monkeypatch):
    # the regression-gate contract: any leg mismatch exits 1
    from tilecount import cli as cli_mod
    from tilecount.formulas import CountResult, CrossCheckResult

    fake = CrossCheckResult(
        instance="hexagon", params=(("k", 1), ("q", 1)),
        results=(CountResult(2, "closed-form", "hexagon", ()),
                 CountResult(3, "determinant", "hexagon", ())),
        agree=False)
    monkeypatch.setattr(cli_mod.formulas, "cross_check",
                        lambda *a, **k: fake)
    code, out, _ = run(capsys, "check", "hexagon", "--k", "1", "--q", "1")
    assert code == 1
    assert "DISAGREE" in out


def test_check_oracle_budget_marker(capsys):
    code, out, _ = run(capsys, "check", "hexagon", "--k", "2", "--q", "2",
                       "--oracle-budget", "2")
    assert code == 0  # two algebraic legs still agree
    assert "oracle skipped" in out


def test_check_restricted_legs(capsys):
    code, out, _ = run(capsys, "check", "semihex", "--k", "2", "--q", "1",
                       "--dents", "0,2", "--legs", "closed-form,oracle")
    assert code == 0
    assert "verdict: agree" in out


def test_check_unknown_leg(capsys):
    code, _, err = run(capsys, "check", "hexagon", "--k", "1", "--q", "1",
                       "--legs", "magic")
    assert code == 2


@pytest.mark.parametrize("name,flags", [
    ("wz", ("--n-max", "12")),
    ("jacobi", ("--trials", "25",)),
    ("cf-roundtrip", ("--depth", "6", "--trials", "10")),
    ("zavrotsky", ("--p-max", "5", "--k-max", "4")),
    ("sylvester", ("--trials", "25", "--k-max", "3")),
    ("g-recurrence", ("--k-max", "2", "--order", "8")),
])
def test_identities_pass(capsys, name, flags):
    code, out, _ = run(capsys, "identity", name, *flags)
    assert code == 0
    assert out.strip() == f"identity {name}: pass"


def test_identity_unknown_name(capsys):
    code, _, _ = run(capsys, "identity", "no-such-identity")
    assert code == 2


def test_table_hexagon_csv(capsys):
    code, out, _ = run(capsys, "table", "hexagon", "--k-max", "4",
                       "--q-max", "4")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "k,q,count"
    assert len(lines) == 17  # header plus 16 rows
    assert lines[1] == "1,1,2"


def test_table_is_byte_deterministic(capsys):
    _, first, _ = run(capsys, "table", "problem10", "--k-max", "5")
    _, second, _ = run(capsys, "table", "problem10", "--k-max", "5")
    assert first == second


def test_table_lozenge_ratio(capsys):
    code, out, _ = run(capsys, "table", "lozenge-ratio", "--n-max", "10",
                       "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 10
    assert all(row["ratio"] == "1/3" for row in rows)
    assert all(isinstance(row["central"], str) for row in rows)


def test_table_out_and_figure(tmp_path, capsys):
    out_file = tmp_path / "hexagon.csv"
    fig_file = tmp_path / "hexagon.png"
    code, out, _ = run(capsys, "table", "hexagon", "--k-max", "2",
                       "--q-max", "2", "--out", str(out_file),
                       "--figure", str(fig_file))
    assert code == 0
    assert out == ""
    assert out_file.read_text().splitlines()[0] == "k,q,count"
    assert fig_file.stat().st_size > 0


def test_render_hexagon_ascii(capsys):
    code, out, _ = run(capsys, "render", "hexagon", "--k", "1", "--q", "1")
    assert code == 0
    assert out.splitlines() == ["^v^", "v^v"]


def test_render_json(capsys):
    code, out, _ = run(capsys, "render", "aztec-undented", "--a", "1",
                       "--b", "2", "--removed", "0", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["kind"] == "square"
    assert len(payload["cells"]) == 6


def test_render_figure(tmp_path, capsys):
    fig = tmp_path / "region.png"
    code, _, _ = run(capsys, "render", "notri", "--k", "1", "--n", "1",
                     "--out", str(fig))
    assert code == 0
    assert fig.stat().st_size > 0


def test_render_invalid_parameters(capsys):
    code, _, err = run(capsys, "render", "semihex", "--k", "2", "--q", "1",
                       "--dents", "0")
    assert code == 2
    assert "dents" in err


def test_usage_error_exit_code(capsys):
    assert main(["count", "no-such-shape"]) == 2
    assert main([]) == 2


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
