"""Smoke tests for the Python bindings."""

import math

import pytest

import _lorentz as lz

HARMONIC_SEQ = {"kind": "power", "c": 1.0, "s": 1.0}


def test_norm_encloses_pi2_over_6():
    lo, hi = lz.norm_pth(HARMONIC_SEQ, 1.0, "harmonic", tol=1e-8)
    assert lo <= math.pi**2 / 6 <= hi
    assert hi - lo <= 1e-8


def test_norm_is_pth_root():
    npl, nph = lz.norm_pth(HARMONIC_SEQ, 2.0, "harmonic")
    nl, nh = lz.norm(HARMONIC_SEQ, 2.0, "harmonic")
    assert nl == pytest.approx(math.sqrt(npl))
    assert nh == pytest.approx(math.sqrt(nph))


def test_membership_verdicts():
    member = lz.classify_membership(HARMONIC_SEQ, 1.0, "harmonic")
    assert member["verdict"] == "member"
    rejected = lz.classify_membership({"kind": "power", "c": 1.0, "s": 0.5}, 1.0, "invsqrt")
    assert rejected["verdict"] == "not_member"


def test_not_summable_raises():
    with pytest.raises(lz.NotSummable):
        lz.norm_pth({"kind": "power", "c": 1.0, "s": 0.5}, 1.0, "invsqrt")


def test_seminorm_and_decompose():
    seq = {"kind": "finite", "entries": [1.0, 2.0]}
    assert lz.seminorm_pth(seq, 1.0, "harmonic", 2) == pytest.approx(2.5)
    rec = lz.decompose(seq, 1.0, "harmonic", 1)
    assert rec["norm_pth"]["lo"] == pytest.approx(2.5)
    assert rec["H_tilde"]["lo"] == pytest.approx(2.0)


def test_certify_fixtures():
    shift = {"kind": "shift", "base": {"kind": "finite", "entries": [1.0]}}
    cert = lz.certify(shift, 1.0, "harmonic")
    assert cert["verdict"] == "not_precompact"
    assert cert["witness"]["gap"] > 0

    fam = {
        "kind": "explicit",
        "members": [{"kind": "finite", "entries": [1.0, 0.5]}],
    }
    cert = lz.certify(fam, 1.0, "harmonic", eps=[0.1])
    assert cert["verdict"] == "precompact"


def test_lambda_gamma():
    assert lz.lambda_of(1.0, 0.5, 1.0, "harmonic") == 3
    dom = {"kind": "dominated", "envelope": {"kind": "power", "c": 1.0, "s": 1.0}}
    assert lz.gamma_of(dom, 0.25) == 5
    assert lz.gamma_inverse_at(dom, 4) == pytest.approx(0.25, abs=1e-9)


def test_difference_family():
    fam = {
        "kind": "explicit",
        "members": [
            {"kind": "finite", "entries": [1.0]},
            {"kind": "finite", "entries": [0.0, 2.0]},
        ],
    }
    diff = lz.difference_family(fam)
    assert len(diff["members"]) == 4


def test_weight_spec_dict():
    w = {"kind": "prefix", "values": [1.0, 0.9], "tail_beta": 0.5}
    lo, hi = lz.norm_pth({"kind": "finite", "entries": [1.0, 1.0]}, 1.0, w)
    assert lo == pytest.approx(1.9)


def test_selftest_runs_clean():
    reports = lz.selftest(seed=3, trials=10)
    assert all(r["failures"] == 0 for r in reports)
