import json
import math
import os
import subprocess

import numpy as np
import pytest

import chtri

SCHEMA = os.environ.get("CHTRI_SCHEMA")
CLI = os.environ.get("CHTRI_CLI")


def test_version():
    assert chtri.__version__.count(".") == 2


def test_discriminant_of_three_is_zero():
    assert abs(chtri.discriminant(3.0)) < 1e-12


def test_classify_identity_and_gamma4():
    assert chtri.classify(np.eye(3, dtype=complex))["kind"] == "identity"
    c = chtri.classify_word("inf", 4, math.pi / 4, "123")
    assert c["kind"] == "loxodromic"
    assert abs(c["trace"] - (-3 + 4j)) < 1e-10
    assert abs(c["discriminant"] - 112.0) < 1e-8


def test_closed_form_trace_matches_word():
    for m, n, theta in [(8, 11, 0.3), ("inf", 7, 1.1), (5, 9, 2.0)]:
        w = chtri.word(m, n, theta, "123")
        assert abs(np.trace(w) - chtri.trace_123_closed_form(m, n, theta)) < 1e-10


def test_scan_interval():
    (lo, hi), = chtri.scan_intervals("re", 8, 11)
    assert abs(hi - 0.93114) < 1e-4
    assert lo < hi
    assert chtri.scan_intervals("re", 8, 10) == []
    with pytest.raises(ValueError):
        chtri.scan_intervals("bogus", 8, 11)


def test_refutation_has_no_survivors():
    r = chtri.refute_finite_order(8, 11, 20)
    assert r["survivors"] == []
    assert r["candidates_examined"] > 0


def test_run_cli_usage_error():
    code, out, err = chtri.run_cli(["classify", "--n", "4", "--theta", "pi/4", "--word", "124"])
    assert code == 2
    assert out == ""
    assert err


@pytest.mark.parametrize(
    "args",
    [
        ["--format", "json", "classify", "--n", "4", "--theta", "pi/4"],
        ["--format", "json", "scan", "--test", "re", "--m", "8", "--n", "11"],
        ["--format", "json", "galois", "--m", "8", "--n", "11", "--max-l", "12"],
        ["--format", "json", "report", "--m", "inf", "--n", "7", "--theta", "acos(0.99)"],
        ["--format", "json", "tables", "2", "--grid", "2000"],
    ],
)
def test_json_validates_against_schema(args):
    jsonschema = pytest.importorskip("jsonschema")
    if not SCHEMA:
        pytest.skip("CHTRI_SCHEMA not set")
    with open(SCHEMA) as fh:
        schema = json.load(fh)
    code, out, err = chtri.run_cli(args)
    assert code == 0, err
    jsonschema.validate(json.loads(out), schema)


def test_executable_matches_module():
    if not CLI:
        pytest.skip("CHTRI_CLI not set")
    args = ["scan", "--test", "shimizu", "--m", "8", "--n", "5"]
    proc = subprocess.run([CLI, *args], capture_output=True, text=True, check=True)
    assert proc.stdout == chtri.run_cli(args)[1]
