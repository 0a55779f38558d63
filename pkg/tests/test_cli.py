import json

import pytest

from sidonlab.cli import (
    HYPER_CSV_COLUMNS,
    QUARTIC_CSV_COLUMNS,
    main,
)
from sidonlab.scan import CSV_COLUMNS

KLEIN = "0,1,0,0,0,0,0,0,0,1,0,1,0,0,0"
FERMAT = "1,0,0,0,0,0,0,0,0,0,1,0,0,0,1"


def run(capsys, *args):
    code = main(list(args))
    out, err = capsys.readouterr()
    return code, out, err


def tail_json(out):
    # commands may print plain lines before the JSON document
    return json.loads(out[out.index("{"):])


class TestDiagonal:
    def test_q5_integers_frozen(self, capsys):
        code, out, _ = run(capsys, "diagonal", "--q", "5", "--integers")
        assert code == 0
        lines = out.splitlines()
        assert lines[:4] == ["3", "14", "16", "17"]
        doc = tail_json(out)
        assert doc["schema"] == 1
        assert doc["integers"] == [3, 14, 16, 17]
        assert doc["report"]["is_sidon"] is True
        assert doc["set_size"] == 4

    def test_prime_power_field(self, capsys):
        code, out, _ = run(capsys, "diagonal", "--q", "4")
        assert code == 0
        doc = tail_json(out)
        assert doc["set_size"] == 3
        assert doc["report"]["is_sidon"] is True

    def test_integers_need_prime_field(self, capsys):
        code, _, _ = run(capsys, "diagonal", "--q", "4", "--integers")
        assert code == 1

    def test_not_prime_power(self, capsys):
        assert run(capsys, "diagonal", "--q", "6")[0] == 1
        assert run(capsys, "diagonal", "--q", "1")[0] == 1


class TestHyper:
    def test_reference_curve_document(self, capsys):
        code, out, _ = run(capsys, "hyper", "--p", "3", "--f", "1,0,0,0,0,1")
        assert code == 0
        doc = tail_json(out)
        assert doc["N1"] == 4
        assert doc["A_order"] == 10
        assert doc["genus"] == 2
        assert doc["invariant_factors"] == [10]
        assert doc["is_cyclic"] is True
        assert doc["points"] == ["inf", "0,1", "0,2", "2,0"]
        assert doc["symmetric_center"] == "1;0"
        assert doc["sym_report"]["is_symmetric_sidon"] is True
        assert doc["halved"]["size"] == 2
        assert doc["halved"]["elements"] == ["1;0", "0,1;1"]
        assert doc["halved"]["report"]["is_sidon"] is True
        assert doc["bounds"]["weil_S_ok"] and doc["bounds"]["weil_A_ok"]

    def test_csv_appends(self, capsys, tmp_path):
        path = tmp_path / "rows.csv"
        for f in ("1,0,0,0,0,1", "0,1,0,0,0,1"):
            code, _, _ = run(
                capsys, "hyper", "--p", "3", "--f", f, "--csv", str(path)
            )
            assert code == 0
        lines = path.read_text().splitlines()
        assert len(lines) == 3
        assert lines[0] == ",".join(HYPER_CSV_COLUMNS)
        first = lines[1].split(",")
        # the f column itself contains commas and is quoted
        assert first[0] == "3"
        assert '"1,0,0,0,0,1"' in lines[1]

    def test_input_errors(self, capsys):
        assert run(capsys, "hyper", "--p", "4", "--f", "1,0,0,0,0,1")[0] == 1
        assert run(capsys, "hyper", "--p", "3", "--f", "1,1,0,0,0,1")[0] == 1
        assert run(capsys, "hyper", "--p", "3", "--f", "1,zz")[0] == 1


class TestQuartic:
    def test_klein_document(self, capsys):
        code, out, _ = run(capsys, "quartic", "--p", "2", "--coeffs", KLEIN)
        assert code == 0
        doc = tail_json(out)
        assert doc["smooth"] is True
        assert doc["N"] == 3
        assert doc["points"] == ["0:0:1", "0:1:0", "1:0:0"]
        assert doc["report"]["is_sidon"] is True
        assert doc["oracle_calls"] >= 15

    def test_singular_exits_2_with_evidence(self, capsys, tmp_path):
        path = tmp_path / "q.csv"
        code, out, _ = run(
            capsys,
            "quartic", "--p", "2", "--coeffs", FERMAT, "--csv", str(path),
        )
        assert code == 2
        doc = tail_json(out)
        assert doc["smooth"] is False
        assert doc["evidence"] is not None
        assert doc["report"] is None
        lines = path.read_text().splitlines()
        assert lines[0] == ",".join(QUARTIC_CSV_COLUMNS)
        row = lines[1].split(",")
        assert row[-4] == "0"  # smooth column

    def test_smooth_csv_row(self, capsys, tmp_path):
        path = tmp_path / "q.csv"
        code, _, _ = run(
            capsys, "quartic", "--p", "2", "--coeffs", KLEIN, "--csv", str(path)
        )
        assert code == 0
        lines = path.read_text().splitlines()
        row = lines[1].rsplit(",", 5)
        assert row[1] == "3" and row[2] == "1" and row[3] == "1"

    def test_bad_coeff_count(self, capsys):
        assert run(capsys, "quartic", "--p", "2", "--coeffs", "1,2,3")[0] == 1


class TestVerify:
    def test_good_set(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--group", "Z:20", "--set", "3,14,16,17"
        )
        assert code == 0
        doc = tail_json(out)
        assert doc["report"]["is_sidon"] is True
        assert doc["set"] == [3, 14, 16, 17]

    def test_violating_set(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--group", "Z:20", "--set", "3,14,16,17,6"
        )
        assert code == 2
        doc = tail_json(out)
        assert doc["report"]["is_sidon"] is False
        assert doc["report"]["violations"]

    def test_set_file_good_and_corrupted(self, capsys, tmp_path):
        good = tmp_path / "good.txt"
        good.write_text("3\n14\n16\n17\n")
        assert (
            run(capsys, "verify", "--group", "Z:20", "--set-file", str(good))[0]
            == 0
        )
        bad = tmp_path / "bad.txt"
        bad.write_text("3\n14\n16\n17\n6\n")
        assert (
            run(capsys, "verify", "--group", "Z:20", "--set-file", str(bad))[0]
            == 2
        )

    def test_garbage_file_is_input_error(self, capsys, tmp_path):
        junk = tmp_path / "junk.txt"
        junk.write_text("3\nfourteen\n16\n")
        assert (
            run(capsys, "verify", "--group", "Z:20", "--set-file", str(junk))[0]
            == 1
        )

    def test_missing_file(self, capsys, tmp_path):
        gone = tmp_path / "gone.txt"
        assert (
            run(capsys, "verify", "--group", "Z:20", "--set-file", str(gone))[0]
            == 1
        )

    def test_center_flow(self, capsys):
        code, out, _ = run(
            capsys,
            "verify", "--group", "Z:20", "--set", "0,1,2", "--center", "2",
        )
        assert code == 0
        doc = tail_json(out)
        assert doc["report"]["is_symmetric_sidon"] is True
        assert doc["center"] == 2

    def test_wrong_center(self, capsys):
        code, _, _ = run(
            capsys,
            "verify", "--group", "Z:20", "--set", "0,1,2", "--center", "5",
        )
        assert code == 2

    def test_bad_group_spec(self, capsys):
        assert run(capsys, "verify", "--group", "X:20", "--set", "1,2")[0] == 1
        assert run(capsys, "verify", "--group", "Z:0", "--set", "1,2")[0] == 1

    def test_duplicates_are_input_error(self, capsys):
        assert (
            run(capsys, "verify", "--group", "Z:20", "--set", "3,3,16")[0] == 1
        )


class TestScan:
    def test_exhaustive_p3_document(self, capsys):
        code, out, _ = run(capsys, "scan", "--p", "3", "--exhaustive")
        assert code == 0
        doc = tail_json(out)
        assert doc["schema"] == 1
        assert doc["header"]["rng"] == "mt19937"
        assert doc["header"]["mode"] == "exhaustive"
        assert len(doc["rows"]) == 54
        assert doc["footer"]["curves"] == 54
        assert all(r["sym_sidon_ok"] for r in doc["rows"])

    def test_random_seed_reproducible(self, capsys):
        _, out1, _ = run(
            capsys, "scan", "--p", "5", "--count", "4", "--seed", "7"
        )
        _, out2, _ = run(
            capsys, "scan", "--p", "5", "--count", "4", "--seed", "7"
        )
        d1, d2 = tail_json(out1), tail_json(out2)
        strip = lambda rows: [
            {k: v for k, v in r.items() if k != "elapsed_ms"} for r in rows
        ]
        assert strip(d1["rows"]) == strip(d2["rows"])
        assert d1["header"]["seed"] == 7

    def test_csv_deterministic_modulo_elapsed(self, capsys, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        run(capsys, "scan", "--p", "3", "--exhaustive", "--csv", str(a))
        run(capsys, "scan", "--p", "3", "--exhaustive", "--csv", str(b))
        la, lb = a.read_bytes().splitlines(), b.read_bytes().splitlines()
        assert la[0] == lb[0] == ",".join(CSV_COLUMNS).encode()
        assert len(la) == len(lb) == 55
        strip = lambda line: line.rsplit(b",", 1)[0]
        assert [strip(x) for x in la] == [strip(x) for x in lb]

    def test_too_large(self, capsys):
        assert run(capsys, "scan", "--p", "17", "--exhaustive")[0] == 1

    def test_bad_seed(self, capsys):
        assert (
            run(capsys, "scan", "--p", "3", "--count", "2", "--seed", "-4")[0]
            == 1
        )

    def test_bad_count(self, capsys):
        assert run(capsys, "scan", "--p", "3", "--count", "0")[0] == 1


class TestParser:
    def test_no_command(self, capsys):
        assert run(capsys)[0] == 1

    def test_unknown_command(self, capsys):
        assert run(capsys, "frobnicate")[0] == 1

    def test_unknown_flag(self, capsys):
        assert run(capsys, "diagonal", "--q", "5", "--frob")[0] == 1

    def test_help_exits_zero(self, capsys):
        assert run(capsys, "--help")[0] == 0

    def test_mutually_exclusive_scan_modes(self, capsys):
        code, _, _ = run(
            capsys, "scan", "--p", "3", "--exhaustive", "--count", "4"
        )
        assert code == 1
