"""Acceptance gate: one test per criterion, each at its stated tolerance and time limit.

Run ``pytest tests/test_acceptance.py -v``; a PASS/FAIL line per criterion is
printed in the terminal summary.
"""

import time

import pytest

from conftest import criterion
from lexgrowth import INF, RingSpec
from lexgrowth.cli import main
from lexgrowth.verify import (
    SweepConfig,
    check_growth_oracle,
    check_minimality,
    check_quotient_formulas,
    check_slice_theorems,
    check_transfer,
    emit_report,
    report_json,
    sweep_monotonicity,
    sweep_two_lex,
)


def _timed(fn, *args, **kwargs):
    start = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, time.perf_counter() - start


def test_ac1_growth_oracle_equivalence():
    with criterion("AC1 growth_S equals direct lexsegment shadow (n<=5, t<=8), < 60 s"):
        res, secs = _timed(check_growth_oracle, 5, 8)
        assert res.failures == [], res.failures[:3]
        assert res.tuples_checked > 0
        assert secs < 60, f"{secs:.1f} s"


def test_ac2_quotient_triple_agreement():
    with criterion("AC2 slice-sum = difference = oracle (n<=5, a<=4, a<=t<=8) and t=a-1 drop, < 120 s"):
        res, secs = _timed(check_quotient_formulas, 5, 4, 8)
        assert res.failures == [], res.failures[:3]
        assert res.tuples_checked > 0
        assert secs < 120, f"{secs:.1f} s"


@pytest.mark.parametrize(
    "ring",
    [RingSpec(3), RingSpec(3, (2, INF, INF)), RingSpec(3, (3, INF, INF)), RingSpec(3, (2, 3, INF))],
    ids=str,
)
def test_ac3_minimality(ring):
    with criterion(f"AC3 no subset below the lexsegment shadow in {ring}, t<=3, < 5 min"):
        res, secs = _timed(check_minimality, ring, 3)
        assert res.failures == [], res.failures[:3]
        assert secs < 300, f"{secs:.1f} s"


@pytest.mark.parametrize("n, a, t", [(3, 2, 2), (3, 2, 3), (3, 3, 3), (3, 3, 2)])
def test_ac4_transfer(n, a, t):
    with criterion(f"AC4 R/S transfer verdicts agree on all subsets (n={n}, a={a}, t={t})"):
        res = check_transfer(n, a, t, exhaustive=True)
        expected_regime = "regime:t=a-1" if t == a - 1 else "regime:t>=a"
        assert res.notes[expected_regime] == res.tuples_checked > 0
        assert res.failures == [], res.failures[:3]


def test_ac5_slice_growth_and_components():
    with criterion("AC5 max formula and component branches on every Gotzmann set (n=3, t<=3, all axes)"):
        growth_res, branch_res = check_slice_theorems(3, 3)
        assert growth_res.tuples_checked > 0 and branch_res.tuples_checked > 0
        assert growth_res.failures == [], growth_res.failures[:3]
        assert branch_res.failures == [], branch_res.failures[:3]


def test_ac6_monotonicity_and_stabilization():
    with criterion("AC6 increasing in n, non-increasing in t, stabilization over a 5-degree window"):
        cfg = SweepConfig(n=(1, 5), a=(1, 4), t=(1, 10), d=(1, 60), d_stable=(1, 30), slack=5)
        inc, dec, stab = sweep_monotonicity(cfg)
        for res in (inc, dec, stab):
            assert res.tuples_checked > 0
            assert res.failures == [], (res.claim_id, res.failures[:3])
        assert len(stab.stabilization_witnesses) == stab.tuples_checked == 3 * 4 * 30


def test_ac7_two_lexsegments():
    with criterion("AC7 b_{n,t} + c_{n,t} > (b+c)_{n,t+t'} (n in {3,4}, a<=4, t<=8), < 5 min"):
        cfg = SweepConfig(n=(3, 4), a=(1, 4), t=(0, 8), d=(1, 10**9))
        res, secs = _timed(sweep_two_lex, cfg)
        assert res.tuples_checked > 0
        assert res.failures == [], res.failures[:3]
        assert secs < 300, f"{secs:.1f} s"


def test_ac8_counterexample_regression(capsys):
    with criterion("AC8 check reproduces the verdict triple (true, false, false)"):
        A = "3 1 0; 3 0 1; 1 3 0; 0 3 1"
        runs = [
            ("3:4,4,inf", A),
            ("3:4,inf,inf", A + "; 0 4 0"),
            ("3:inf,inf,inf", A + "; 4 0 0; 0 4 0"),
        ]
        outs = []
        for ring, members in runs:
            assert main(["check", "--ring", ring, "--t", "4", "--set", members]) == 0
            outs.append(capsys.readouterr().out)
        assert outs == ["GOTZMANN\n", "NOT GOTZMANN\n", "NOT GOTZMANN\n"]


def _cli_output(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    assert code == 0
    return out


@pytest.mark.parametrize(
    "argv",
    [
        ["enumerate", "--ring", "3", "--t", "3", "--d", "5", "--witnesses", "--format", "json"],
        ["enumerate", "--ring", "3:2,3,inf", "--t", "3", "--d", "3", "--witnesses"],
        ["verify", "--claim", "monotonicity", "--n", "2:4", "--a", "1:3", "--t", "1:6", "--d", "1:20", "--format", "json"],
        ["verify", "--claim", "two-lex", "--n", "3", "--a", "1:3", "--t", "0:4", "--format", "json"],
        ["verify", "--claim", "minimality", "--n", "3", "--a", "2", "--t", "0:3", "--format", "json"],
    ],
    ids=["census-S", "census-caps", "monotonicity", "two-lex", "minimality"],
)
def test_ac9_determinism_across_workers(capsys, argv):
    with criterion(f"AC9 byte-identical output for 1, 4, 8 workers: {argv[0]} {argv[2]}"):
        outs = {w: _cli_output(capsys, argv + ["--no-timing", "--workers", str(w)]) for w in (1, 4, 8)}
        assert outs[1] == outs[4] == outs[8]
        assert outs[1]


def test_ac9_sweep_reports_identical_in_process():
    with criterion("AC9 sweep reports identical across worker counts (library API)"):
        reports = []
        for w in (1, 4, 8):
            cfg = SweepConfig(n=(3, 4), a=(1, 3), t=(1, 6), d=(1, 25), workers=w)
            reports.append(report_json(emit_report([*sweep_monotonicity(cfg), sweep_two_lex(cfg)], timing=False)))
        assert reports[0] == reports[1] == reports[2]
