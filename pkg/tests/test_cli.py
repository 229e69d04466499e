import json

import pytest

from wpsklt.cli import run


def call(capsys, *argv):
    status = run(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_family_json(capsys):
    status, out, _ = call(capsys, "family", "--kind", "fano-min", "--dim", "3", "--format", "json")
    assert status == 0
    assert json.loads(out)["weights"] == ["379239", "252826", "108354", "17629", "431"]


def test_certify_glct(capsys):
    status, out, _ = call(capsys, "certify-glct", "--dim", "2", "--format", "json")
    assert status == 0
    assert json.loads(out)["sigma"] == {"num": "55", "den": "6"}


def test_volume(capsys):
    status, out, _ = call(capsys, "volume", "--weights", "158,85,61,11", "--degree", "316")
    assert status == 0 and "2/57035" in out and "3.50662E-5" in out


def test_monomials(capsys):
    status, out, _ = call(capsys, "monomials", "--weights", "219,146,61,11", "--degree", "438", "--format", "json")
    assert status == 0 and json.loads(out)["count"] == 4


def test_klt_check(capsys):
    assert call(capsys, "klt-check", "--kind", "ample-min", "--dim", "3")[0] == 0
    assert call(capsys, "klt-check", "--weights", "77,45,19,14", "--degree", "154")[0] == 0
    status, _, err = call(capsys, "klt-check", "--kind", "kample-bottom", "--dim", "4", "--strict")
    assert status == 1 and "not certified" in err


def test_newton_check(capsys):
    status, out, _ = call(capsys, "newton-check", "--points", "2,0,0;0,3,0;0,0,7;0,1,1")
    assert status == 0 and "certified-canonical" in out
    assert call(capsys, "newton-check", "--points", "2,0;0,2", "--assume-normal")[0] == 1


def test_search_small(capsys, tmp_path):
    out_file = tmp_path / "r.json"
    status, _, _ = call(capsys, "search", "--class", "kample", "--max-weight", "30", "--workers", "1",
                        "--quiet", "--format", "json", "--out", str(out_file))
    assert status == 0
    assert json.loads(out_file.read_text())["minimum"]["weights"]


def test_verify_all_subset(capsys):
    status, out, err = call(capsys, "verify-all", "--only", "1,3,6")
    assert status == 0 and "[PASS] 1. family reproduction" in err


@pytest.mark.parametrize("argv", [["bogus"], ["family", "--kind", "ample-min"],
                                  ["family", "--kind", "fano-bottom", "--dim", "3"],
                                  ["volume", "--weights", "1,x", "--degree", "3"],
                                  ["klt-check", "--weights", "1,2,3"]])
def test_usage_errors(capsys, argv):
    assert call(capsys, *argv)[0] == 2


def test_config_file(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"sylvester_depth": 4}))
    try:
        assert call(capsys, "certify-glct", "--dim", "5", "--config", str(cfg))[0] == 2
        assert call(capsys, "certify-glct", "--dim", "4", "--config", str(cfg))[0] == 0
    finally:
        cfg.write_text(json.dumps({"sylvester_depth": 12}))
        call(capsys, "certify-glct", "--dim", "2", "--config", str(cfg))
    bad = tmp_path / "bad.json"
    bad.write_text("[1]")
    assert call(capsys, "volume", "--weights", "1,1,1", "--degree", "3", "--config", str(bad))[0] == 2


def test_json_is_byte_stable(capsys):
    a = call(capsys, "family", "--kind", "kample-bottom", "--dim", "4", "--format", "json")[1]
    b = call(capsys, "family", "--kind", "kample-bottom", "--dim", "4", "--format", "json")[1]
    assert a == b
