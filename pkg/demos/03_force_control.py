"""Track force references with the discrete PI controller.

Part 1 runs the step experiment: with contact pre-established, the
reference steps to 3 N and later drops to 2 N.  Part 2 runs the
switching strategy: the finger approaches in open loop from 0% duty, the
controller takes over the moment contact is detected, and the force settles
on 2.5 N without overshooting.

Run:  python demos/03_force_control.py
"""

from softgrip.config import default_config
from softgrip.harness import calibrate_models, run_step_response, run_switching_experiment

cfg = default_config()
models = calibrate_models(cfg, cfg.seed)

print("step response (0 -> 3 N, then 3 -> 2 N), 5 plants:")
for k, res in enumerate(run_step_response(cfg, cfg.seed, models=models)):
    parts = []
    for m in res.metrics:
        parts.append(
            f"{m.target:.0f} N: settle {1000*m.settling_time:.0f} ms, "
            f"RMS {m.rms_error_post_settle:.3f} N"
        )
    print(f"  run {k}: " + " | ".join(parts))

print("\nswitching strategy (approach, detect, control to 2.5 N), 10 plants:")
for k, res in enumerate(run_switching_experiment(cfg, cfg.seed, models=models)):
    m = res.metrics
    lo, hi = res.duty_range_post_settle
    print(
        f"  run {k}: contact at {res.switch_time:.2f} s, settle {1000*m.settling_time:.0f} ms, "
        f"overshoot {100*m.overshoot:.2f}%, RMS {m.rms_error_post_settle:.3f} N, "
        f"duty {lo:.0f}-{hi:.0f}%"
    )

trace = run_switching_experiment(cfg, cfg.seed, models=models)[0].trace
print("\nfirst run, around the switch:")
switch_idx = trace.mode.index("force_control")
for i in range(max(0, switch_idx - 3), min(len(trace), switch_idx + 12), 3):
    print(
        f"  t={trace.t[i]:6.3f}s mode={trace.mode[i]:<13} duty={trace.duty[i]:6.2f}% "
        f"F_est={trace.f_c_est[i]:6.3f} N F_true={trace.f_c_true[i]:6.3f} N"
    )
