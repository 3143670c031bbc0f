"""Scripted experiments on the simulated plant.

Each experiment builds its plants/controllers from a Config, steps them at the
controller period, and returns traces plus derived metrics.  Every run is
reproducible bit-exactly from (config, seed): all randomness flows through
seeds derived from the master seed and stable trial labels, so parallel and
serial execution produce identical results.
"""

from __future__ import annotations

import csv
import math
import random
from dataclasses import dataclass, field
from pathlib import Path

from . import calibration as calib
from .calibration import PolynomialModel, Sample
from .config import Config
from .control import Mode, PiController, Supervisor
from .estimation import ContactDetector, ForceReading, contact_force
from .plant import FingerPlant, ObjectModel, shake_test
from .seeding import derive_seed

TRACE_HEADER = ("t", "duty", "pressure_kpa", "angle_deg", "f_m", "f_i_pred", "f_c_est", "f_c_true", "mode")


@dataclass
class Trace:
    """Uniformly sampled run record; one row per control tick."""

    t: list = field(default_factory=list)
    duty: list = field(default_factory=list)
    pressure: list = field(default_factory=list)
    angle: list = field(default_factory=list)
    f_m: list = field(default_factory=list)
    f_i_pred: list = field(default_factory=list)
    f_c_est: list = field(default_factory=list)
    f_c_true: list = field(default_factory=list)
    mode: list = field(default_factory=list)

    def append(self, t, duty, pressure, angle, f_m, f_i_pred, f_c_est, f_c_true, mode):
        self.t.append(t)
        self.duty.append(duty)
        self.pressure.append(pressure)
        self.angle.append(angle)
        self.f_m.append(f_m)
        self.f_i_pred.append(f_i_pred)
        self.f_c_est.append(f_c_est)
        self.f_c_true.append(f_c_true)
        self.mode.append(mode)

    def __len__(self):
        return len(self.t)

    def to_csv(self, path: str | Path) -> None:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(TRACE_HEADER)
            for i in range(len(self.t)):
                writer.writerow(
                    [
                        repr(self.t[i]),
                        repr(self.duty[i]),
                        repr(self.pressure[i]),
                        repr(self.angle[i]),
                        repr(self.f_m[i]),
                        repr(self.f_i_pred[i]),
                        repr(self.f_c_est[i]),
                        repr(self.f_c_true[i]),
                        self.mode[i],
                    ]
                )

    @classmethod
    def from_csv(cls, path: str | Path) -> "Trace":
        trace = cls()
        with open(path, "r", newline="") as fh:
            reader = csv.reader(fh)
            header = next(reader)
            if tuple(header) != TRACE_HEADER:
                raise ValueError(f"unexpected trace header: {header}")
            for row in reader:
                trace.append(*(float(v) for v in row[:8]), row[8])
        return trace


@dataclass(frozen=True)
class StepMetrics:
    """Step/switch response quality for one target segment.

    Settling and overshoot are measured on the true contact force: settling
    is the first entry into the +/-5% band that holds to the segment end,
    overshoot the peak over the transient (from the step instant up to
    settling) as a fraction of the target.  The RMS error is computed on the
    estimated force (what the controller and the operator see) after
    settling.  ``settled`` is False when the band is never held; overshoot
    then covers the whole segment and the RMS is reported over it.
    """

    target: float
    settled: bool
    settling_time: float | None
    overshoot: float
    rms_error_post_settle: float

    def to_dict(self) -> dict:
        return {
            "target": self.target,
            "settled": self.settled,
            "settling_time": self.settling_time,
            "overshoot": self.overshoot,
            "rms_error_post_settle": self.rms_error_post_settle,
        }


@dataclass(frozen=True)
class GraspOutcome:
    dropped: bool
    deformed: bool
    broken: bool

    @property
    def success(self) -> bool:
        return not (self.dropped or self.deformed or self.broken)


def _overshoot(values: list, target: float, from_below: bool) -> float:
    """Excursion past the target in the direction of travel, as a fraction."""
    if from_below:
        return max(0.0, max(values) - target) / target
    return max(0.0, target - min(values)) / target


def compute_step_metrics(
    trace: Trace, target: float, t_start: float, t_end: float, band: float = 0.05
) -> StepMetrics:
    """Derive StepMetrics from a trace segment; recomputable from the CSV."""
    idx = [i for i in range(len(trace)) if t_start <= trace.t[i] < t_end]
    if not idx:
        raise ValueError("empty segment")
    lo, hi = target * (1.0 - band), target * (1.0 + band)
    from_below = trace.f_c_true[idx[0]] <= target
    settle_at = None
    in_band_from = None
    for i in idx:
        if lo <= trace.f_c_true[i] <= hi:
            if in_band_from is None:
                in_band_from = i
        else:
            in_band_from = None
    if in_band_from is not None:
        settle_at = in_band_from
    if settle_at is None:
        values = [trace.f_c_true[i] for i in idx]
        rms = math.sqrt(sum((trace.f_c_est[i] - target) ** 2 for i in idx) / len(idx))
        return StepMetrics(target, False, None, _overshoot(values, target, from_below), rms)
    settling_time = trace.t[settle_at] - t_start
    values = [trace.f_c_true[i] for i in idx if i <= settle_at]
    post = [i for i in idx if i >= settle_at]
    rms = math.sqrt(sum((trace.f_c_est[i] - target) ** 2 for i in post) / len(post))
    return StepMetrics(target, True, settling_time, _overshoot(values, target, from_below), rms)


def _build_plant(cfg: Config, finger: int, seed: int) -> FingerPlant:
    pc = cfg.plant
    scale = pc.finger_scales[finger % len(pc.finger_scales)]
    weights = tuple(float(w) * scale for w in pc.internal_weights)
    model = PolynomialModel(degree=len(weights) - 1, weights=weights)
    return FingerPlant(
        internal_model=model,
        tau_p=pc.tau_p,
        k_duty=pc.k_duty,
        bend_gain=pc.bend_gain,
        angle_max=pc.angle_max,
        finger_stiffness=pc.finger_stiffness,
        noise_sigma=pc.noise_sigma,
        angle_noise_sigma=pc.angle_noise_sigma,
        filter_alpha=pc.filter_alpha,
        seed=seed,
    )


def _build_controller(cfg: Config) -> PiController:
    cc = cfg.controller
    return PiController(
        kp=cc.kp, ki=cc.ki, period=cc.period, output_min=cc.output_min, output_max=cc.output_max
    )


def _build_supervisor(cfg: Config, target: float) -> Supervisor:
    sc = cfg.supervisor
    return Supervisor(
        target_force=target,
        approach_rate=sc.approach_rate,
        detector=ContactDetector(sc.contact_threshold, sc.hysteresis_ratio),
    )


# ---------------------------------------------------------------------------
# Calibration experiment (free-space ramp cycles -> fitted per-finger models)


@dataclass
class CalibrationResult:
    reports: list  # CalibrationReport per finger
    sample_sets: list  # list[Sample] per finger
    traces: list  # Trace per finger

    def models(self) -> list:
        return [r.selected() for r in self.reports]


def calibrate_finger(cfg: Config, finger: int, seed: int) -> tuple:
    """One finger's staircase ramp cycles; returns (samples, trace)."""
    cal = cfg.calibration
    dt = cfg.controller.period
    plant_obj = _build_plant(cfg, finger, derive_seed(seed, "calibration", finger, "plant"))
    level_rng = random.Random(derive_seed(seed, "calibration", finger, "levels"))
    peak_duty = min(100.0, cal.peak_pressure / cfg.plant.k_duty)
    base_levels = [peak_duty * k / cal.levels for k in range(1, cal.levels + 1)]
    hold_ticks = max(1, int(round(cal.hold_s / dt)))
    rest_ticks = max(1, int(round(cal.rest_s / dt)))
    samples: list[Sample] = []
    trace = Trace()
    model = plant_obj.internal_model
    t = 0.0

    def tick(duty: float) -> tuple:
        nonlocal t
        plant_obj.step(duty, dt)
        reading = plant_obj.sense()
        trace.append(
            t,
            duty,
            plant_obj.pressure,
            plant_obj.angle,
            reading.force_meas,
            max(0.0, model.predict(reading.angle_meas)),
            reading.force_meas - max(0.0, model.predict(reading.angle_meas)),
            plant_obj.contact_force,
            "calibrate",
        )
        t += dt
        return reading

    for _ in range(cal.cycles):
        jittered = [
            min(100.0, max(1.0, lv + level_rng.uniform(-cal.level_jitter, cal.level_jitter)))
            for lv in base_levels
        ]
        staircase = jittered + jittered[-2::-1]  # up to the peak, back down
        for duty in staircase:
            reading = None
            for _ in range(hold_ticks):
                reading = tick(duty)
            samples.append(Sample(reading.angle_meas, reading.force_meas))
        reading = None
        for _ in range(rest_ticks):
            reading = tick(0.0)
        # rest-dwell sample anchors the fit near zero bend, so later runs that
        # start from rest stay inside the calibrated range
        samples.append(Sample(reading.angle_meas, reading.force_meas))
    return samples, trace


def run_calibration_experiment(cfg: Config, seed: int | None = None) -> CalibrationResult:
    """Free-space characterization: ramp cycles per finger, then fit and
    BIC-select an internal-force polynomial for each."""
    seed = cfg.seed if seed is None else seed
    reports, sample_sets, traces = [], [], []
    for finger in range(3):
        samples, trace = calibrate_finger(cfg, finger, seed)
        report = calib.select_model(samples, cfg.calibration.max_degree)
        reports.append(report)
        sample_sets.append(samples)
        traces.append(trace)
    return CalibrationResult(reports=reports, sample_sets=sample_sets, traces=traces)


def calibrate_models(cfg: Config, seed: int | None = None) -> list:
    """Fitted per-finger models (the artifact every other experiment needs)."""
    return run_calibration_experiment(cfg, seed).models()


# ---------------------------------------------------------------------------
# Closed-loop run helper


def _control_run(
    cfg: Config,
    plant_obj: FingerPlant,
    model: PolynomialModel,
    obj: ObjectModel | None,
    duration: float,
    target_of_t,
    supervisor: Supervisor | None = None,
    warm_duty: float = 0.0,
) -> Trace:
    """Step one finger closed loop for ``duration`` seconds.

    With a supervisor: approach ramp then force control.  Without: pure PI
    from the warm-start duty.  Each tick senses the state left by the
    previous tick, updates the controller, then steps the plant.
    """
    dt = cfg.controller.period
    ctrl = _build_controller(cfg)
    margin = cfg.supervisor.extrapolation_margin
    duty = warm_duty
    if warm_duty > 0.0:
        plant_obj.pressure = cfg.plant.k_duty * warm_duty
    plant_obj.step(duty, dt)
    trace = Trace()
    n = int(round(duration / dt))
    for i in range(n):
        t = i * dt
        reading = plant_obj.sense()
        estimate = contact_force(
            ForceReading(reading.force_meas, reading.angle_meas), model, margin
        )
        if supervisor is not None:
            duty = supervisor.step(ctrl, estimate, dt)
            mode = supervisor.mode.value
        else:
            duty = ctrl.step(target_of_t(t), estimate.contact, duty)
            mode = Mode.FORCE_CONTROL.value
        plant_obj.step(duty, dt, obj)
        trace.append(
            t,
            duty,
            plant_obj.pressure,
            plant_obj.angle,
            reading.force_meas,
            estimate.internal,
            estimate.contact,
            plant_obj.contact_force,
            mode,
        )
    return trace


# ---------------------------------------------------------------------------
# Estimation accuracy (press against a scale to a target, compare estimate)


@dataclass(frozen=True)
class EstimationRow:
    seed: int
    position_angle: float
    target: float
    estimated: float | None
    true_force: float | None
    abs_error: float | None
    flagged: str | None = None

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "position_angle": self.position_angle,
            "target": self.target,
            "estimated": self.estimated,
            "true_force": self.true_force,
            "abs_error": self.abs_error,
            "flagged": self.flagged,
        }


def _estimation_cell(cfg: Config, model: PolynomialModel, seed: int, position: float) -> EstimationRow:
    est = cfg.estimation
    dt = cfg.controller.period
    obj = ObjectModel(position_angle=position, stiffness=est.scale_stiffness)
    plant_obj = _build_plant(cfg, 0, derive_seed(seed, "estimation", position, "plant"))
    margin = cfg.supervisor.extrapolation_margin
    duty = 0.0
    plant_obj.step(duty, dt)
    phase = "press"
    hold_left = int(round(est.settle_s / dt))
    window_left = int(round(est.window_s / dt))
    est_acc, true_acc, count = 0.0, 0.0, 0
    max_ticks = int(round(est.timeout_s / dt))
    for _ in range(max_ticks):
        reading = plant_obj.sense()
        estimate = contact_force(ForceReading(reading.force_meas, reading.angle_meas), model, margin)
        if phase == "press":
            if plant_obj.contact_force >= est.target:
                phase = "settle"
            elif duty >= 100.0:
                return EstimationRow(
                    seed, position, est.target, None, None, None, flagged="unreachable at max duty"
                )
            else:
                duty = min(100.0, duty + est.ramp_rate * dt)
        elif phase == "settle":
            hold_left -= 1
            if hold_left <= 0:
                phase = "measure"
        else:
            est_acc += estimate.contact
            true_acc += plant_obj.contact_force
            count += 1
            window_left -= 1
            if window_left <= 0:
                break
        plant_obj.step(duty, dt, obj)
    if count == 0:
        return EstimationRow(seed, position, est.target, None, None, None, flagged="timeout")
    estimated = est_acc / count
    true_force = true_acc / count
    return EstimationRow(
        seed, position, est.target, estimated, true_force, abs(estimated - true_force)
    )


def run_estimation_accuracy(cfg: Config, seed: int | None = None, models=None) -> list:
    """Scale-press accuracy sweep over the position grid; one row per (seed, position)."""
    master = cfg.seed if seed is None else seed
    if models is None:
        models = calibrate_models(cfg, master)
    model = models[0]
    rows = []
    for s in range(cfg.estimation.n_seeds):
        for position in cfg.estimation.positions:
            rows.append(_estimation_cell(cfg, model, derive_seed(master, "estimation-seed", s), position))
    return rows


# ---------------------------------------------------------------------------
# Step response (contact pre-established, 3 N then 2 N reference)


@dataclass
class StepResult:
    trace: Trace
    metrics: list  # StepMetrics per segment

    def to_dict(self) -> dict:
        return {"segments": [m.to_dict() for m in self.metrics]}


def run_step_response(cfg: Config, seed: int | None = None, models=None) -> list:
    """The step-reference experiment, repeated over n_seeds plants."""
    master = cfg.seed if seed is None else seed
    if models is None:
        models = calibrate_models(cfg, master)
    model = models[0]
    sc = cfg.step
    obj = sc.object.build()
    duration = 2.0 * sc.segment_s

    def target_of_t(t: float) -> float:
        return sc.first_target if t < sc.segment_s else sc.second_target

    results = []
    for s in range(sc.n_seeds):
        plant_obj = _build_plant(cfg, 0, derive_seed(master, "step", s))
        trace = _control_run(
            cfg, plant_obj, model, obj, duration, target_of_t, warm_duty=sc.warm_start_duty
        )
        metrics = [
            compute_step_metrics(trace, sc.first_target, 0.0, sc.segment_s),
            compute_step_metrics(trace, sc.second_target, sc.segment_s, duration),
        ]
        results.append(StepResult(trace=trace, metrics=metrics))
    return results


# ---------------------------------------------------------------------------
# Switching experiment (approach from 0% duty, control after contact)


@dataclass
class SwitchingResult:
    trace: Trace
    metrics: StepMetrics
    switch_time: float | None
    duty_range_post_settle: tuple | None

    def to_dict(self) -> dict:
        return {
            "switch_time": self.switch_time,
            "duty_range_post_settle": list(self.duty_range_post_settle)
            if self.duty_range_post_settle
            else None,
            **self.metrics.to_dict(),
        }


def run_switching_experiment(cfg: Config, seed: int | None = None, models=None) -> list:
    master = cfg.seed if seed is None else seed
    if models is None:
        models = calibrate_models(cfg, master)
    model = models[0]
    sw = cfg.switching
    obj = sw.object.build()
    results = []
    for s in range(sw.n_seeds):
        plant_obj = _build_plant(cfg, 0, derive_seed(master, "switching", s))
        supervisor = _build_supervisor(cfg, sw.target)
        trace = _control_run(cfg, plant_obj, model, obj, sw.duration_s, None, supervisor=supervisor)
        if supervisor.switch_time is None:
            metrics = compute_step_metrics(trace, sw.target, 0.0, sw.duration_s)
            results.append(SwitchingResult(trace, metrics, None, None))
            continue
        t_switch = supervisor.switch_time
        metrics = compute_step_metrics(trace, sw.target, t_switch, sw.duration_s)
        duty_band = None
        if metrics.settled:
            post = [
                trace.duty[i]
                for i in range(len(trace))
                if trace.t[i] >= t_switch + metrics.settling_time
            ]
            duty_band = (min(post), max(post))
        results.append(SwitchingResult(trace, metrics, t_switch, duty_band))
    return results


# ---------------------------------------------------------------------------
# Grasp sweep (three fingers, force balance, outcome statistics)


@dataclass(frozen=True)
class SweepRow:
    object_name: str
    target_force: float
    dropped_pct: float
    deformed_pct: float
    broken_pct: float
    n_trials: int

    def to_dict(self) -> dict:
        return {
            "object": self.object_name,
            "target_force": self.target_force,
            "dropped_pct": self.dropped_pct,
            "deformed_pct": self.deformed_pct,
            "broken_pct": self.broken_pct,
            "n_trials": self.n_trials,
        }


@dataclass
class SweepTable:
    rows: list  # SweepRow

    def for_object(self, name: str) -> list:
        return [r for r in self.rows if r.object_name == name]

    def to_dict(self) -> dict:
        return {"rows": [r.to_dict() for r in self.rows]}


def grasp_trial(
    cfg: Config, object_name: str, setpoint: float, trial: int, master: int, models: list
) -> GraspOutcome:
    """One three-finger grasp: approach, regulate, then judge the outcome.

    Finger targets are (F/2, F/2, F) so the paired fingers balance the
    opposable one exactly.  Failure thresholds draw from a trial RNG keyed by
    (master, object, trial) -- deliberately not by set-point, so sweeps share
    draws across force levels (common random numbers).
    """
    oc = cfg.grasp.objects[object_name]
    obj = oc.build()
    trial_rng = random.Random(derive_seed(master, "grasp", object_name, trial, "thresholds"))
    deform_thr = (
        trial_rng.gauss(obj.deform_threshold, obj.deform_spread)
        if math.isfinite(obj.deform_threshold)
        else math.inf
    )
    break_thr = (
        trial_rng.gauss(obj.break_threshold, obj.break_spread)
        if math.isfinite(obj.break_threshold)
        else math.inf
    )
    targets = [setpoint / 2.0, setpoint / 2.0, setpoint]
    dt = cfg.controller.period
    plants = [
        _build_plant(cfg, f, derive_seed(master, "grasp", object_name, trial, "plant", f))
        for f in range(3)
    ]
    ctrls = [_build_controller(cfg) for _ in range(3)]
    sups = [_build_supervisor(cfg, targets[f]) for f in range(3)]
    margin = cfg.supervisor.extrapolation_margin
    for p in plants:
        p.step(0.0, dt)
    n = int(round(cfg.grasp.duration_s / dt))
    window = int(round(cfg.grasp.settle_window_s / dt))
    peak = [0.0, 0.0, 0.0]
    tail_sums = [0.0, 0.0, 0.0]
    tail_counts = [0, 0, 0]
    for i in range(n):
        for f in range(3):
            p = plants[f]
            reading = p.sense()
            estimate = contact_force(
                ForceReading(reading.force_meas, reading.angle_meas), models[f], margin
            )
            duty = sups[f].step(ctrls[f], estimate, dt)
            p.step(duty, dt, obj)
            if p.contact_force > peak[f]:
                peak[f] = p.contact_force
            if i >= n - window:
                tail_sums[f] += p.contact_force
                tail_counts[f] += 1
    grip = sum(tail_sums[f] / tail_counts[f] for f in range(3))
    deformed = any(pk > deform_thr for pk in peak)
    broken = any(pk > break_thr for pk in peak)
    held = shake_test(grip, obj, random.Random(derive_seed(master, "grasp", object_name, trial, "shake")))
    return GraspOutcome(dropped=not held, deformed=deformed, broken=broken)


def _grasp_cell(args) -> tuple:
    cfg, object_name, setpoint, trial, master, models = args
    outcome = grasp_trial(cfg, object_name, setpoint, trial, master, models)
    return (object_name, setpoint, trial, outcome.dropped, outcome.deformed, outcome.broken)


def run_grasp_sweep(cfg: Config, seed: int | None = None, jobs: int = 1, models=None) -> SweepTable:
    """Outcome percentages per (object, set-point) over n_trials grasps each."""
    master = cfg.seed if seed is None else seed
    if models is None:
        models = calibrate_models(cfg, master)
    tasks = [
        (cfg, name, float(setpoint), trial, master, models)
        for name in sorted(cfg.grasp.objects)
        for setpoint in cfg.grasp.setpoints
        for trial in range(cfg.grasp.n_trials)
    ]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_grasp_cell, tasks, chunksize=4))
    else:
        outcomes = [_grasp_cell(t) for t in tasks]
    rows = []
    for name in sorted(cfg.grasp.objects):
        for setpoint in cfg.grasp.setpoints:
            cell = [o for o in outcomes if o[0] == name and o[1] == float(setpoint)]
            nt = len(cell)
            rows.append(
                SweepRow(
                    object_name=name,
                    target_force=float(setpoint),
                    dropped_pct=100.0 * sum(o[3] for o in cell) / nt,
                    deformed_pct=100.0 * sum(o[4] for o in cell) / nt,
                    broken_pct=100.0 * sum(o[5] for o in cell) / nt,
                    n_trials=nt,
                )
            )
    return SweepTable(rows=rows)


# ---------------------------------------------------------------------------
# Hardness probe (open-loop ramp into an object; slope of angle vs force)


@dataclass
class HardnessResult:
    classification: str | None  # "stiff" | "soft" | None (no contact)
    slope_deg_per_n: float | None
    trace: Trace

    def to_dict(self) -> dict:
        return {"classification": self.classification, "slope_deg_per_n": self.slope_deg_per_n}


def probe_hardness(
    cfg: Config, stiffness: float | None, seed: int, models=None
) -> HardnessResult:
    """Open-loop duty ramp; classify from the post-contact d(angle)/d(force).

    ``stiffness`` None means a free-space probe, which yields no
    classification (guard: no contact, nothing to classify).
    """
    hc = cfg.hardness
    dt = cfg.controller.period
    obj = (
        ObjectModel(position_angle=hc.position_angle, stiffness=stiffness)
        if stiffness is not None
        else None
    )
    model = (models[0] if models else _build_plant(cfg, 0, 0).internal_model)
    plant_obj = _build_plant(cfg, 0, derive_seed(seed, "hardness", stiffness or "free"))
    margin = cfg.supervisor.extrapolation_margin
    duty = 0.0
    plant_obj.step(duty, dt)
    trace = Trace()
    points = []
    n = int(round(hc.duration_s / dt))
    for i in range(n):
        reading = plant_obj.sense()
        estimate = contact_force(ForceReading(reading.force_meas, reading.angle_meas), model, margin)
        duty = min(hc.max_duty, duty + hc.ramp_rate * dt)
        plant_obj.step(duty, dt, obj)
        trace.append(
            i * dt,
            duty,
            plant_obj.pressure,
            plant_obj.angle,
            reading.force_meas,
            estimate.internal,
            estimate.contact,
            plant_obj.contact_force,
            "probe",
        )
        if estimate.contact > hc.min_contact_force:
            points.append((estimate.contact, reading.angle_meas))
    if len(points) < 20:
        return HardnessResult(classification=None, slope_deg_per_n=None, trace=trace)
    # least-squares slope of angle against estimated force
    mf = sum(p[0] for p in points) / len(points)
    ma = sum(p[1] for p in points) / len(points)
    sxx = sum((p[0] - mf) ** 2 for p in points)
    sxy = sum((p[0] - mf) * (p[1] - ma) for p in points)
    slope = sxy / sxx
    classification = "stiff" if slope < hc.slope_threshold else "soft"
    return HardnessResult(classification=classification, slope_deg_per_n=slope, trace=trace)


def run_hardness_probe(cfg: Config, seed: int | None = None, models=None) -> dict:
    """Probe the stiff and soft reference objects; returns both results."""
    master = cfg.seed if seed is None else seed
    if models is None:
        models = calibrate_models(cfg, master)
    return {
        "stiff": probe_hardness(cfg, cfg.hardness.stiff_stiffness, master, models),
        "soft": probe_hardness(cfg, cfg.hardness.soft_stiffness, master, models),
    }
