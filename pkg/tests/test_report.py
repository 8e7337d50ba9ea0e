import json

import numpy as np
import pytest

from loewnerlab.errors import UsageError
from loewnerlab.report import CheckRecord, RunConfig, _clean, make_report


def test_runconfig_validation():
    cfg = RunConfig(seed=7)
    assert cfg.seed == 7
    assert cfg.trials is None
    with pytest.raises(UsageError):
        RunConfig(seed="not-a-seed")
    with pytest.raises(UsageError):
        RunConfig(seed=2**70)
    with pytest.raises(UsageError):
        RunConfig(seed=1, trials=0)
    with pytest.raises(UsageError):
        RunConfig(seed=1, tol=-1e-9)
    with pytest.raises(UsageError):
        RunConfig(seed=1, order_cap=1)


def test_runconfig_loop_override():
    assert RunConfig(seed=1).loop(100) == 100
    assert RunConfig(seed=1, trials=3).loop(100) == 3


def test_clean_handles_numpy_types():
    obj = {
        "a": np.float64(1.5),
        "b": np.int32(7),
        "c": np.array([1.0, 2.0]),
        "d": np.bool_(True),
        "e": float("inf"),
        "f": [np.float64(0.25)],
    }
    out = _clean(obj)
    assert out == {"a": 1.5, "b": 7, "c": [1.0, 2.0], "d": True,
                   "e": "inf", "f": [0.25]}
    json.dumps(out)  # must be strict-JSON serializable


def test_record_and_report_shape():
    rec = CheckRecord(name="demo", anchor="formula", outcome="pass",
                      evidence={"min_eig": np.float64(0.25)})
    assert rec.passed
    r = make_report("0.1.0", RunConfig(seed=5, trials=2), [rec])
    obj = r.to_obj()
    assert obj["version"] == "0.1.0"
    assert obj["config"]["seed"] == 5
    assert obj["records"][0]["evidence"]["min_eig"] == 0.25
    assert obj["overall"] == "pass"
    assert r.passed


def test_report_overall_fail_if_any_record_fails():
    good = CheckRecord("a", "x", "pass")
    bad = CheckRecord("b", "y", "fail", evidence={"why": "witness"})
    r = make_report("0.1.0", RunConfig(seed=1), [good, bad])
    assert r.overall == "fail"
    assert not r.passed


def test_report_serialization_is_deterministic():
    def build():
        recs = [CheckRecord(f"c{i}", "anchor", "pass",
                            evidence={"v": float(i) / 3.0}) for i in range(4)]
        return make_report("0.1.0", RunConfig(seed=42, trials=1), recs)

    assert build().to_json() == build().to_json()
    assert build().to_json().encode() == build().to_json().encode()
