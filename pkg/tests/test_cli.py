import csv
import io
import json

import pytest

from catcong import cli, congruences


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_single_check(capsys):
    code, out, _ = run_cli(capsys, "verify", "--checks", "cor1.1/eq1.8", "--p", "5", "--pa-cap", "5", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["reports"]) == 1
    rep = doc["reports"][0]
    assert rep["check_id"] == "cor1.1/eq1.8" and rep["pass"] is True
    assert rep["lhs"] == "24" and rep["modulus"] == "25"
    assert doc["summary"] == {"pass_count": 1, "fail_count": 0}
    assert doc["run"]["p_set"] == [5]


def test_table(capsys):
    code, out, _ = run_cli(capsys, "table", "--s-max", "6")
    assert code == 0
    values = [line.split(" = ")[1] for line in out.splitlines()]
    assert values == ["0", "0", "1", "-3/2", "5/6", "5/12", "-21/20"]


def test_json_round_trip(capsys):
    code, out, _ = run_cli(capsys, "verify", "--checks", "thm1.1/*", "sec2/*", "--p", "2-7", "--pa-cap", "30", "--format", "json")
    assert code == 0
    assert json.dumps(json.loads(out), indent=2) + "\n" == out
    reports = [congruences.CongruenceReport.from_dict(r) for r in json.loads(out)["reports"]]
    assert [r.to_dict() for r in reports] == json.loads(out)["reports"]


def test_csv_output(capsys):
    code, out, _ = run_cli(capsys, "verify", "--checks", "thm1.2/eq1.10", "--p", "3", "--pa-cap", "9", "--m-max", "2", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == cli.CSV_HEADER
    assert len(rows) > 1
    assert all(row[9] == "true" for row in rows[1:])


def test_text_output_is_quiet(capsys):
    code, out, _ = run_cli(capsys, "verify", "--checks", "lemma3.1/*", "--p", "5", "--pa-cap", "25")
    assert code == 0
    assert out.startswith("pass: ") and out.strip().endswith("fail: 0")
    assert len(out.splitlines()) == 1


def test_output_file(tmp_path, capsys):
    target = tmp_path / "out.json"
    code, out, _ = run_cli(capsys, "verify", "--checks", "cor1.1/eq1.6", "--p", "5", "--pa-cap", "5", "--format", "json", "-o", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["reports"][0]["lhs"] == "23"


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--checks", "nope/*"],
        ["verify", "--p", "4"],
        ["verify", "--pa-cap", "1"],
        ["verify", "--jobs", "0"],
        ["search", "--bound", "100", "--jobs", "0"],
    ],
)
def test_config_errors_exit_2(capsys, argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 2
    assert out == "" and "error" in err


def test_bad_flag_exits_2(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["verify", "--format", "xml"])
    assert info.value.code == 2


def test_perturbed_rhs_exits_1(monkeypatch, capsys):
    original = congruences.make_report

    def perturbed(check_id, params, modulus, lhs, rhs, **kw):
        return original(check_id, params, modulus, lhs, rhs + 1, **kw)

    monkeypatch.setattr(congruences, "make_report", perturbed)
    code, out, _ = run_cli(capsys, "verify", "--checks", "cor1.1/eq1.8", "--p", "5", "--pa-cap", "5")
    assert code == 1
    assert out.startswith("FAIL cor1.1/eq1.8") and out.strip().endswith("fail: 1")


def test_search_small(capsys):
    code, out, _ = run_cli(capsys, "search", "--bound", "300", "--predicate", "both")
    assert code == 0
    assert "hits: 0" in out


def test_search_hit_exits_1(monkeypatch, capsys):
    # pretend every modulus satisfies the congruence
    monkeypatch.setattr(cli.search, "test_modulus", lambda n, fac, predicate: [cli.search.Hit(n, predicate, 1, 1)])
    code, out, _ = run_cli(capsys, "search", "--bound", "10", "--predicate", "central", "--format", "json")
    assert code == 1
    doc = json.loads(out)
    assert [h["n"] for h in doc["summary"]["hits"]] == [4, 8, 10]


def test_jobs_env(monkeypatch):
    monkeypatch.setenv(cli.JOBS_ENV, "3")
    args = cli.build_parser().parse_args(["verify"])
    assert cli.config_from_args(args).jobs == 3


def test_parse_primes():
    assert cli.parse_primes("2,3,5") == [2, 3, 5]
    assert cli.parse_primes("2-13") == [2, 3, 5, 7, 11, 13]
    assert cli.parse_primes("5, 11-13") == [5, 11, 13]
