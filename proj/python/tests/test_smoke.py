import json
from fractions import Fraction

import pytest

import beurling


def test_nk5():
    assert [beurling.nk5(k) for k in range(5)] == [1, 3, 19, 531, 66067]
    assert beurling.nk5(6) == sum(2 ** (i * i) for i in range(7))


def test_word_length():
    assert beurling.word_length(0) == 0
    assert beurling.word_length(-531) == 4
    assert beurling.word_length(531, cap=2) is None
    big = 2**200 - 1
    report = beurling.word_length_report(big)
    assert report["schema_version"] == beurling.report_schema_version
    assert report["status"] == "verified"


def test_unknown_schedule():
    with pytest.raises(ValueError):
        beurling.word_length(3, schedule="cubes")


def test_lemma42():
    report = beurling.lemma42_report(kmax=4)
    assert report["status"] == "verified"
    assert [c["eta"] for c in report["checks"]] == [2, 3, 4, 5]


def test_ladder():
    assert beurling.ladder_power(1, 4, 4, 2) == Fraction(-1, 16)
    assert beurling.ladder_power(2, 4, 4, 2) == Fraction(247, 256)
    report = beurling.ladder_report()
    assert report["checks"][0]["value"] == "-4950051/134217728"


def test_bad_argument():
    with pytest.raises(beurling.BeurlingError):
        beurling.ladder_power(0, 4, 4, 2)
    with pytest.raises(beurling.InvalidArgument):
        beurling.nk5(-1)


def test_run(tmp_path):
    code, out, err = beurling.run("sec4", "ladder", "--j", 1, "--power", 2)
    assert code == 0
    assert json.loads(out)["checks"][0]["value"] == "-1/16"

    psi = tmp_path / "psi.json"
    code, out, _ = beurling.run("sec3", "build", "--weight", "trivial", "--levels", 3, "--out", psi)
    assert code == 0
    cert = json.loads(psi.read_text())
    assert cert["sj"] == [0, 4, 10]
    assert beurling.run("sec3", "check", "--in", psi)[0] == 0

    code, _, err = beurling.run("wordlen")
    assert code == 1
    assert err
