import json
from fractions import Fraction as F

import pytest

from elocc import serialize
from elocc.catalysis import search_catalyst, simulate_protocol
from elocc.cli import main
from elocc.multicopy import estimate_pm, find_finite_m
from elocc.spectra import to_float
from elocc.vidal import p_max

EX1 = ["0.4,0.4,0.1,0.1", "0.5,0.25,0.25"]
EX2 = ["0.40,0.40,0.10,0.1,0.01", "0.50,0.25,0.20,0.05,0.01"]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_pmax_text(capsys):
    code, out, _ = run(capsys, "pmax", *EX1)
    assert code == 0
    assert "p_max = 4/5 (0.8)" in out
    assert "argmin l = 3" in out


def test_pmax_json(capsys):
    code, out, _ = run(capsys, "pmax", *EX1, "--json")
    doc = json.loads(out)
    assert doc["schema"] == 1 and doc["command"] == "pmax"
    assert doc["report"]["p_max"] == {"num": 4, "den": 5}


def test_float_json(capsys):
    code, out, _ = run(capsys, "--float", "pmax", *EX1, "--json")
    assert json.loads(out)["report"]["p_max"] == pytest.approx(0.8)


def test_fraction_input(capsys):
    code, out, _ = run(capsys, "pmax", "2/5,2/5,1/10,1/10", "1/2,1/4,1/4")
    assert "4/5" in out


def test_pe_bound(capsys):
    code, out, _ = run(capsys, "pe-bound", *EX1)
    assert code == 0 and out.strip().endswith("= 1")


def test_catalyzed_with_copies(capsys):
    code, out, _ = run(capsys, "catalyzed", *EX2, "--catalyst", "0.6,0.4", "--copies", "11")
    assert code == 0 and "p_catalyzed = 1" in out


def test_multicopy(capsys):
    code, out, _ = run(capsys, "multicopy", *EX1, "--mmax", "3", "--oracle")
    assert code == 0
    assert "best m = 3" in out
    assert "MISMATCH" not in out and "oracle m=2: ok" in out


def test_make_catalyst(capsys):
    code, out, _ = run(capsys, "make-catalyst", *EX1, "--m", "3", "--oracle")
    assert code == 0 and "p_catalyzed = 1" in out


def test_make_catalyst_float_weights(capsys):
    code, out, _ = run(capsys, "make-catalyst", *EX1, "--m", "2")
    assert code == 0 and "float weights" in out


def test_simulate_protocol(capsys):
    code, out, _ = run(capsys, "simulate-protocol", *EX1, "--catalyst", "0.6,0.4", "--m", "3")
    assert code == 0 and "p3 (return Phi_2) = k*gamma_k = 4/5" in out


def test_find_m(capsys):
    code, out, _ = run(capsys, "find-m", *EX1, "--p", "0.9", "--cap", "5")
    assert code == 0 and "m = 2" in out
    code, out, _ = run(capsys, "find-m", *EX2, "--p", "1", "--cap", "4")
    assert "status = boundary" in out


def test_search(capsys):
    code, out, _ = run(capsys, "search-catalyst", *EX1, "--k", "2", "--grid", "10")
    assert "best catalyst = 3/5, 2/5" in out


def test_verify_paper(capsys):
    code, out, _ = run(capsys, "verify-paper")
    assert code == 0
    assert "FAIL" not in out
    assert out.count("PASS") >= 12


def test_state_files(tmp_path, capsys):
    src = tmp_path / "source.txt"
    src.write_text("# first example source\n0.4\n0.4\n\n0.1  # tail\n0.1\n")
    tgt = tmp_path / "target.json"
    tgt.write_text('["0.5", "0.25", "0.25"]')
    code, out, _ = run(capsys, "pmax", str(src), str(tgt))
    assert code == 0 and "4/5" in out


@pytest.mark.parametrize(
    "argv, needle",
    [
        (["pmax", "0.4,-0.4,0.1", "1"], "coefficient 2"),
        (["pmax", "0.4,abc", "1"], "'abc'"),
        (["pmax", "0,0", "1"], "zero"),
        (["--float", "pmax", "0.5,0.6", "1"], "sum"),
        (["find-m", *EX1, "--p", "2"], "threshold"),
        (["search-catalyst", *EX1, "--k", "7", "--grid", "3"], "dimension"),
    ],
)
def test_input_errors_exit_2(capsys, argv, needle):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert needle in err


def test_bad_subcommand(capsys):
    assert run(capsys, "frobnicate")[0] == 2


def test_oracle_mismatch_exit_1(capsys, monkeypatch):
    import elocc.cli as cli

    monkeypatch.setattr(cli.oracle, "brute_p_max", lambda a, b: F(1, 3))
    code, out, _ = run(capsys, "pmax", *EX1, "--oracle")
    assert code == 1 and "MISMATCH" in out


class TestRoundTrip:
    def round_trip(self, command, report):
        doc = serialize.loads(serialize.dumps(command, report))
        assert doc["report"] == report
        assert type(doc["report"]) is type(report)

    def test_reports(self, examples):
        s, t, phi = examples["s1"], examples["t1"], examples["phi"]
        self.round_trip("pmax", p_max(s, t))
        self.round_trip("pmax", p_max(to_float(s), to_float(t)))
        self.round_trip("multicopy", estimate_pm(s, t, 3))
        self.round_trip("find-m", find_finite_m(s, t, F(9, 10)))
        self.round_trip("simulate-protocol", simulate_protocol(s, t, phi, 3))
        self.round_trip("search-catalyst", search_catalyst(s, t, 2, 5))

    def test_cli_json_parses_back(self, capsys):
        code, out, _ = run(capsys, "multicopy", *EX1, "--mmax", "2", "--json")
        doc = serialize.loads(out)
        assert doc["report"].best_m == 2
        assert doc["report"].entries[1].radicand == F(24, 25)

    def test_schema_checked(self):
        with pytest.raises(ValueError):
            serialize.loads('{"schema": 2, "report": 1}')
