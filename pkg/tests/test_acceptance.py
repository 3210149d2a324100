"""Acceptance criteria 1-11.

Each criterion is one test; the terminal summary (see conftest.py) prints one
PASS/FAIL line per criterion.  Run alone with ``pytest tests/test_acceptance.py``.
"""

import json
import time

import pytest

from qagt.campaign import run_spec, spec
from qagt.cli import main

SEEDS = (7, 8, 9)


def _run(*specs):
    """Run check specs; returns {id: record} and the elapsed seconds."""
    t0 = time.perf_counter()
    recs = {}
    for s in specs:
        rec, _ = run_spec(s)
        recs[rec.id] = rec
    return recs, time.perf_counter() - t0


def _assert_all_pass(recs):
    failed = {i: r.detail for i, r in recs.items() if r.verdict != "pass"}
    assert not failed, failed


def test_criterion_01_macdonald_norms():
    recs, dt = _run(spec("macdonald-norms", deg=5))
    _assert_all_pass(recs)
    assert recs["macdonald-norms/deg=5"].detail["checked"] == 19  # partitions of size 0..5
    assert dt <= 60


def test_criterion_02_x0_eigenvalues():
    recs, dt = _run(spec("x0-eigen", deg=4))
    _assert_all_pass(recs)
    assert dt <= 60


def test_criterion_03_k_basis():
    recs, _ = _run(spec("k-examples"), spec("k-props", deg=3))
    _assert_all_pass(recs)
    ex = recs["k-examples"].detail
    assert all(ex["x_coefficients"].values()) and all(ex["j_scalars"].values())
    # the opposite sign on K_(1,1) does not give an eigenvector
    assert ex["printed_(1,1)_sign_reproduces"] is False


def test_criterion_04_vertex_factorization():
    recs, dt = _run(spec("level1-factorization", deg=3), spec("worked-examples"))
    _assert_all_pass(recs)
    assert recs["level1-factorization/deg=3"].detail["pairs"] == 49
    assert len(recs["worked-examples"].detail) == 2
    assert dt <= 600


def test_criterion_05_intertwining():
    recs, _ = _run(spec("level1-intertwine", window=2, lo=-3, hi=3))
    _assert_all_pass(recs)
    detail = recs["level1-intertwine/hi=3/lo=-3/window=2"].detail
    assert set(detail) == {"eta", "xi", "phi_plus", "phi_minus"}
    assert all(d["checked"] for d in detail.values())


def test_criterion_06_two_point():
    recs, _ = _run(spec("two-point", order=3))
    _assert_all_pass(recs)
    assert recs["two-point/order=3"].detail["orders"] == [True] * 4


def test_criterion_07_levelm_structure():
    recs, _ = _run(spec("levelm-triangularity", m=2, deg=3), spec("levelm-p-examples"))
    _assert_all_pass(recs)
    results = recs["levelm-p-examples"].detail["results"]
    assert sum(k.startswith("bra:") for k in results) == 3
    assert sum(k.startswith("ket:") for k in results) == 1 + 2 + 5 + 5  # weight-3 entries are the five listed ones


def test_criterion_08_levelm_conjectures():
    specs = []
    for s in SEEDS:
        specs += [spec("levelm-norm-conjecture", s, m=2, deg=2), spec("levelm-phi", s, m=2, deg=2),
                  spec("four-point", s, m=2, order=1)]
    recs, dt = _run(*specs)
    for r in recs.values():
        assert "seed" in r.detail["field"]
    _assert_all_pass(recs)
    assert dt <= 1800


@pytest.mark.xfail(strict=True, reason="dual Whittaker coefficients and the gg pairing disagree with the "
                   "stated formulas by t^{|lam|} and (t/q)^d; recorded in the decisions ledger")
def test_criterion_09_whittaker():
    specs = [spec("whittaker-level1", deg=4, cond_deg=3, window=2), spec("gg-pairing", m=1, order=3)]
    for s in SEEDS:
        specs += [spec("whittaker-levelm", s, m=2, deg=2, side="ket"),
                  spec("whittaker-levelm", s, m=2, deg=2, side="bra"),
                  spec("gg-pairing", s, m=2, order=1)]
    recs, _ = _run(*specs)
    _assert_all_pass(recs)


def test_criterion_10_qseries():
    recs, _ = _run(spec("saalschutz", kmax=4), spec("closed-forms", jk=3), spec("phi-psi", deg=3),
                   spec("generic-psi", jk=2), spec("compat-constraint"))
    _assert_all_pass(recs)
    assert recs["compat-constraint"].detail == {"constraint_holds": True, "residual_phi_zero": True,
                                                "residual_perturbed_nonzero": True}


def _without_timing(text):
    rep = json.loads(text)
    rep.pop("timing")
    return rep, text[:text.index('\n  "timing"')]


def test_criterion_11_determinism(tmp_path):
    outs = []
    for i in range(2):
        p = tmp_path / f"run{i}.json"
        main(["verify", "all", "--profile", "desk", "--seed", "7", "--out", str(p), "--quiet"])
        outs.append(_without_timing(p.read_text()))
    assert outs[0][1].encode() == outs[1][1].encode()
    assert outs[0][0] == outs[1][0]


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
