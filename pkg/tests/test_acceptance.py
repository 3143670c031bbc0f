"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

  1. calibration round trip: BIC picks the plant's quartic in >=95/100 seeds,
     R^2 >= 0.95, under 10 s
  2. OLS small-instance oracle: 1e-6 relative agreement, 100 instances, <1 s
  3. estimation band: |error| in [0, 0.15] N for >=95% of measurements,
     >=5 positions x 20 seeds, <30 s
  4. PI arithmetic oracle: increments equal the discrete PI law, 1e-9,
     1000 sequences
  5. step tracking: post-settle RMS <= 0.1 N, settling <= 2 s, 5 seeds, <30 s
  6. switching safety: overshoot <= 5% of 2.5 N, post-settle RMS <= 0.25 N,
     10 seeds
  7. grasp sweep: monotone dropped/deformed trends, plastic cup at 4 N ->
     0% dropped / 100% deformed, eggshell never breaks, <60 s
  8. hardness discrimination: 20/20 seeds each way, free probe silent
  9. determinism: manifest re-runs byte-identical with --jobs varying

Run with ``pytest tests/test_acceptance.py -v -s`` to see the PASS lines.
"""

import json
import random
import time
from pathlib import Path

import mpmath
import pytest

from softgrip import harness
from softgrip.calibration import Sample, fit_polynomial, select_model
from softgrip.cli import main as cli_main
from softgrip.config import default_config
from softgrip.control import PiController


def report(name: str, ok: bool, detail: str):
    print(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
    assert ok, f"{name}: {detail}"


@pytest.fixture(scope="module")
def cfg():
    return default_config()


@pytest.fixture(scope="module")
def models(cfg):
    return harness.calibrate_models(cfg, cfg.seed)


def test_criterion_1_calibration_round_trip(cfg):
    t0 = time.time()
    hits = 0
    min_r2 = 1.0
    for seed in range(100):
        samples, _ = harness.calibrate_finger(cfg, 0, seed)
        rep = select_model(samples, cfg.calibration.max_degree)
        if rep.selected_degree == 4:
            hits += 1
        selected = next(r for r in rep.records if r.degree == rep.selected_degree)
        min_r2 = min(min_r2, selected.r_squared)
    elapsed = time.time() - t0
    ok = hits >= 95 and min_r2 >= 0.95 and elapsed < 10.0
    report(
        "criterion 1 (calibration round trip)",
        ok,
        f"degree-4 picks {hits}/100, min R^2 {min_r2:.4f}, {elapsed:.1f}s",
    )


def test_criterion_2_ols_oracle():
    t0 = time.time()
    rng = random.Random(2024)
    worst = 0.0
    for _ in range(100):
        degree = rng.randrange(0, 3)
        n = rng.randrange(degree + 1, 7)
        angles = []
        while len(set(angles)) < degree + 1:
            angles = [rng.uniform(0.0, 40.0) for _ in range(n)]
        samples = [Sample(a, rng.uniform(0.0, 5.0)) for a in angles]
        fitted = fit_polynomial(samples, degree).weights
        with mpmath.workdps(50):
            X = mpmath.matrix(n, degree + 1)
            y = mpmath.matrix(n, 1)
            for i, s in enumerate(samples):
                for d in range(degree + 1):
                    X[i, d] = mpmath.mpf(s.angle) ** d
                y[i] = mpmath.mpf(s.force)
            w = mpmath.lu_solve(X.T * X, X.T * y)
            oracle = [float(w[i]) for i in range(degree + 1)]
        scale = max(1e-9, max(abs(v) for v in oracle))
        worst = max(worst, max(abs(a - b) / scale for a, b in zip(fitted, oracle)))
    elapsed = time.time() - t0
    ok = worst <= 1e-6 and elapsed < 1.0
    report(
        "criterion 2 (OLS oracle)", ok, f"worst relative error {worst:.2e}, {elapsed:.2f}s"
    )


def test_criterion_3_estimation_band(cfg, models):
    t0 = time.time()
    rows = harness.run_estimation_accuracy(cfg, cfg.seed, models=models)
    n_positions = len(cfg.estimation.positions)
    usable = [r for r in rows if r.abs_error is not None]
    in_band = sum(1 for r in usable if 0.0 <= r.abs_error <= 0.15)
    frac = in_band / len(rows)
    elapsed = time.time() - t0
    ok = n_positions >= 5 and len(rows) == 20 * n_positions and frac >= 0.95 and elapsed < 30.0
    worst = max((r.abs_error for r in usable), default=float("nan"))
    report(
        "criterion 3 (estimation band)",
        ok,
        f"{in_band}/{len(rows)} in [0,0.15] N ({100*frac:.1f}%), worst {worst:.3f} N, {elapsed:.1f}s",
    )


def test_criterion_4_pi_arithmetic_oracle():
    rng = random.Random(4)
    worst = 0.0
    for _ in range(1000):
        kp = rng.uniform(0.5, 20.0)
        ki = rng.uniform(0.0, 5.0)
        period = rng.choice([1.0 / 60.0, 0.02, 0.05])
        ctrl = PiController(kp=kp, ki=ki, period=period, output_min=-1e12, output_max=1e12)
        duty = 0.0
        running = 0.0
        for _ in range(rng.randrange(1, 40)):
            e = rng.uniform(-1.5, 1.5)
            before = duty
            duty = ctrl.step(e, 0.0, duty)
            running += e
            u_closed_form = kp * e + ki * period * running
            worst = max(worst, abs((duty - before) - u_closed_form))
    ok = worst <= 1e-9
    report("criterion 4 (PI arithmetic oracle)", ok, f"worst increment error {worst:.2e}")


def test_criterion_5_step_tracking(cfg, models):
    t0 = time.time()
    results = harness.run_step_response(cfg, cfg.seed, models=models)
    assert len(results) == 5
    worst_rms = 0.0
    worst_settle = 0.0
    all_settled = True
    for res in results:
        for m in res.metrics:
            all_settled = all_settled and m.settled
            if m.settled:
                worst_rms = max(worst_rms, m.rms_error_post_settle)
                worst_settle = max(worst_settle, m.settling_time)
    elapsed = time.time() - t0
    ok = all_settled and worst_rms <= 0.1 and worst_settle <= 2.0 and elapsed < 30.0
    report(
        "criterion 5 (step tracking)",
        ok,
        f"worst RMS {worst_rms:.3f} N, worst settling {worst_settle:.2f}s over 5 seeds, {elapsed:.1f}s",
    )


def test_criterion_6_switching_safety(cfg, models):
    results = harness.run_switching_experiment(cfg, cfg.seed, models=models)
    assert len(results) == 10
    worst_os = 0.0
    worst_rms = 0.0
    all_settled = True
    for res in results:
        all_settled = all_settled and res.metrics.settled
        worst_os = max(worst_os, res.metrics.overshoot)
        if res.metrics.settled:
            worst_rms = max(worst_rms, res.metrics.rms_error_post_settle)
    ok = all_settled and worst_os <= 0.05 and worst_rms <= 0.25
    report(
        "criterion 6 (switching safety)",
        ok,
        f"worst overshoot {100*worst_os:.2f}% of target, worst RMS {worst_rms:.3f} N over 10 seeds",
    )


def test_criterion_7_grasp_sweep_trends(cfg, models):
    t0 = time.time()
    table = harness.run_grasp_sweep(cfg, cfg.seed, models=models)
    problems = []
    for name in ("plastic_cup", "paper_cup"):
        rows = sorted(table.for_object(name), key=lambda r: r.target_force)
        dropped = [r.dropped_pct for r in rows]
        deformed = [r.deformed_pct for r in rows]
        if dropped != sorted(dropped, reverse=True):
            problems.append(f"{name} dropped% not non-increasing: {dropped}")
        if deformed != sorted(deformed):
            problems.append(f"{name} deformed% not non-decreasing: {deformed}")
    plastic4 = next(r for r in table.for_object("plastic_cup") if r.target_force == 4.0)
    if plastic4.dropped_pct != 0.0 or plastic4.deformed_pct != 100.0:
        problems.append(
            f"plastic cup at 4 N: {plastic4.dropped_pct}% dropped, {plastic4.deformed_pct}% deformed"
        )
    egg_broken = [r.broken_pct for r in table.for_object("eggshell")]
    if any(b != 0.0 for b in egg_broken):
        problems.append(f"eggshell broke: {egg_broken}")
    elapsed = time.time() - t0
    ok = not problems and elapsed < 60.0
    report(
        "criterion 7 (grasp sweep)",
        ok,
        "; ".join(problems) if problems else f"trends and saturated rows hold, {elapsed:.1f}s",
    )


def test_criterion_8_hardness_discrimination(cfg, models):
    stiff_hits = 0
    soft_hits = 0
    for seed in range(20):
        stiff = harness.probe_hardness(cfg, cfg.hardness.stiff_stiffness, seed, models=models)
        soft = harness.probe_hardness(cfg, cfg.hardness.soft_stiffness, seed, models=models)
        stiff_hits += stiff.classification == "stiff"
        soft_hits += soft.classification == "soft"
    free = harness.probe_hardness(cfg, None, 0, models=models)
    ok = stiff_hits == 20 and soft_hits == 20 and free.classification is None
    report(
        "criterion 8 (hardness discrimination)",
        ok,
        f"stiff {stiff_hits}/20, soft {soft_hits}/20, free probe -> {free.classification!r}",
    )


def test_criterion_9_determinism(tmp_path):
    shrunk = {
        "seed": 11,
        "calibration": {"cycles": 3, "levels": 8},
        "step": {"n_seeds": 1, "segment_s": 3.0},
        "switching": {"n_seeds": 2, "duration_s": 6.0},
        "estimation": {"n_seeds": 1, "positions": [20.0, 35.0]},
        "grasp": {"setpoints": [1.0, 3.0], "n_trials": 2, "duration_s": 5.0},
        "hardness": {"duration_s": 6.0},
    }
    cfg_path = tmp_path / "config.json"
    cfg_path.write_text(json.dumps(shrunk))

    def tree(root: Path) -> dict:
        return {
            str(p.relative_to(root)): p.read_bytes()
            for p in sorted(root.rglob("*"))
            if p.is_file()
        }

    mismatches = []
    runs = [("calibrate", None)] + [("run", e) for e in ("step", "switch", "grasp", "hardness", "estimate")]
    for jobs_b, (command, experiment) in zip((2, 3, 2, 3, 2, 3), runs):
        label = experiment or command
        out_a = tmp_path / f"{label}_a"
        out_b = tmp_path / f"{label}_b"
        argv = [command] + ([experiment] if experiment else [])
        rc = cli_main(argv + ["--config", str(cfg_path), "--out", str(out_a), "--jobs", "1"])
        assert rc == 0
        manifest = json.loads((out_a / "manifest.json").read_text())
        replay = tmp_path / f"{label}_replay.json"
        replay.write_text(json.dumps(manifest["config"]))
        rc = cli_main(
            argv
            + [
                "--config",
                str(replay),
                "--out",
                str(out_b),
                "--seed",
                str(manifest["seed"]),
                "--jobs",
                str(jobs_b),
            ]
        )
        assert rc == 0
        if tree(out_a) != tree(out_b):
            mismatches.append(label)
    ok = not mismatches
    report(
        "criterion 9 (determinism)",
        ok,
        "byte-identical manifest re-runs for calibrate/step/switch/grasp/hardness/estimate"
        if ok
        else f"mismatch in: {mismatches}",
    )
