import json

from oddsq import interval_counts, sieve_oracle
from oddsq.cli import main


def test_verify_csv_golden(capsys):
    assert main(["verify", "--k-min", "2", "--k-max", "2", "--oracle"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines() == [
        "k,N,S,E,P_identity,P_oracle,match",
        "2,7,2,0,5,5,true",
    ]


def test_verify_csv_without_oracle(capsys):
    assert main(["verify", "--k-min", "500", "--k-max", "500"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[1] == "500,1999,6166,4458,291,,true"


def test_verify_json(tmp_path):
    out = tmp_path / "v.json"
    code = main(
        ["verify", "--k-min", "2", "--k-max", "3", "--oracle",
         "--format", "json", "--out", str(out)]
    )
    assert code == 0
    data = json.loads(out.read_text())
    assert data["command"] == "verify"
    assert data["all_match"] is True
    assert data["rows"][0] == {
        "k": 2,
        "n_count": 7,
        "s_total": 2,
        "e_excess": 0,
        "p_identity": 5,
        "c_composites": 2,
        "p_oracle": 5,
        "match": True,
    }


def test_verify_output_is_byte_stable(tmp_path):
    a = tmp_path / "a.csv"
    b = tmp_path / "b.csv"
    main(["verify", "--k-min", "1", "--k-max", "30", "--oracle", "--out", str(a)])
    main(["verify", "--k-min", "1", "--k-max", "30", "--oracle", "--out", str(b)])
    assert a.read_bytes() == b.read_bytes()
    assert b"\r" not in a.read_bytes()


def test_verify_empty_range_is_usage_error():
    assert main(["verify", "--k-min", "5", "--k-max", "4"]) == 1


def test_verify_unwritable_out_is_io_error(tmp_path):
    missing = tmp_path / "no" / "such" / "dir" / "f.csv"
    assert main(["verify", "--k-min", "2", "--k-max", "2",
                 "--out", str(missing)]) == 1


def test_verify_bad_k_is_usage_error():
    assert main(["verify", "--k-min", "0", "--k-max", "4"]) == 1


def test_verify_detects_oracle_mismatch(monkeypatch, capsys):
    monkeypatch.setattr(sieve_oracle, "p_oracle", lambda k, **kw: 0)
    code = main(["verify", "--k-min", "2", "--k-max", "2", "--oracle"])
    assert code == 2
    out = capsys.readouterr().out
    assert out.splitlines()[1] == "2,7,2,0,5,0,false"


def test_table_footnote_and_undefined(capsys):
    assert main(["table", "--ks", "1,2,10"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert "undefined" in lines[1] and "undefined" in lines[2]
    assert "3.600" in lines[3]
    assert "published" in lines[-1]


def test_table_bad_list_is_usage_error():
    assert main(["table", "--ks", "2,x"]) == 1


def test_multiplicity_output(capsys):
    assert main(["multiplicity", "45"]) == 0
    out = capsys.readouterr().out.strip()
    assert out == "r=2; d=[3,5]; positions=[(7,1),(3,2)]; MultiComposite"
    assert main(["multiplicity", "97"]) == 0
    assert capsys.readouterr().out.strip() == "r=0; d=[]; positions=[]; Prime"
    assert main(["multiplicity", "35"]) == 0
    assert "Semiprime" in capsys.readouterr().out


def test_multiplicity_rejects_even():
    assert main(["multiplicity", "44"]) == 1


def test_oscillate_output(capsys):
    assert main(["oscillate", "50"]) == 0
    out = capsys.readouterr().out
    assert "s1 = -188" in out
    assert "m=2: L=619, s=+431" in out
    assert "m=3: L=946, s=-515" in out
    assert "final = 44; P = 44; match" in out


def test_oscillate_budget_exit():
    assert main(["oscillate", "50", "--node-budget", "10"]) == 3


def test_bhp_output(capsys):
    assert main(["bhp"]) == 0
    out = capsys.readouterr().out
    assert "549755813898" in out
    assert "fails at k*+1" in out
    assert "x0" in out


def test_scan_json_bytes_identical_across_workers(tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    base = ["scan", "--k-min", "1", "--k-max", "80", "--out"]
    assert main(base + [str(a), "--workers", "1"]) == 0
    assert main(base + [str(b), "--workers", "8"]) == 0
    assert a.read_bytes() == b.read_bytes()
    data = json.loads(a.read_text())
    assert data["violations"] == []
    assert data["min_p"] == 3 and data["argmin_k"] == 1


def test_scan_reports_first_window_note(capsys):
    assert main(["scan", "--k-min", "1", "--k-max", "3", "--workers", "1"]) == 0
    err = capsys.readouterr().err
    assert "P = 3" in err and "published" in err


def test_scan_checkpoint_resume(tmp_path, capsys):
    ck = tmp_path / "ck.json"
    out1 = tmp_path / "o1.json"
    assert main(["scan", "--k-min", "1", "--k-max", "50", "--workers", "1",
                 "--checkpoint", str(ck), "--out", str(out1)]) == 0
    first = json.loads(ck.read_text())
    assert first["highest_verified_k"] == 50
    assert first["predicate"] == "PrimeExists"

    out2 = tmp_path / "o2.json"
    assert main(["scan", "--k-min", "1", "--k-max", "90", "--workers", "1",
                 "--checkpoint", str(ck), "--out", str(out2)]) == 0
    data = json.loads(out2.read_text())
    assert data["k_min"] == 50  # overlap of one: the checkpoint k is re-verified
    assert json.loads(ck.read_text())["highest_verified_k"] == 90
    assert "resuming at k=50" in capsys.readouterr().err


def test_scan_checkpoint_predicate_mismatch(tmp_path, capsys):
    ck = tmp_path / "ck.json"
    assert main(["scan", "--k-min", "1", "--k-max", "30", "--workers", "1",
                 "--checkpoint", str(ck), "--out", str(tmp_path / "o.json")]) == 0
    code = main(["scan", "--k-min", "1", "--k-max", "30", "--workers", "1",
                 "--predicate", "AtLeastTwoPrimes", "--checkpoint", str(ck)])
    assert code == 1


def test_scan_violation_exit_code(monkeypatch):
    fake = interval_counts.ScanOutcome(
        k_min=1,
        k_max=5,
        predicate=interval_counts.Predicate.PRIME_EXISTS,
        violations=[5],
        min_p=0,
        argmin_k=5,
        elapsed=0.0,
    )
    monkeypatch.setattr(interval_counts, "scan", lambda *a, **kw: fake)
    assert main(["scan", "--k-min", "1", "--k-max", "5", "--workers", "1"]) == 2


def test_scan_workers_from_environment(monkeypatch, tmp_path):
    out = tmp_path / "o.json"
    monkeypatch.setenv("ODDSQ_WORKERS", "2")
    assert main(["scan", "--k-min", "1", "--k-max", "40", "--out", str(out)]) == 0
    monkeypatch.setenv("ODDSQ_WORKERS", "zero")
    assert main(["scan", "--k-min", "1", "--k-max", "40", "--out", str(out)]) == 1


def test_usage_errors_and_help(capsys):
    assert main(["frobnicate"]) == 1
    assert main([]) == 1
    assert main(["--help"]) == 0
    capsys.readouterr()
