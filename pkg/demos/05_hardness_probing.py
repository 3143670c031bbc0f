"""Tell a stiff object from a soft one using only the finger's sensors.

The finger ramps open loop into each object (contact near 40% duty) while
logging bend angle against estimated contact force.  Against something stiff
the angle pins while force keeps climbing; against something soft both grow
together.  The slope d(angle)/d(force) over the contact region separates the
two cases by more than an order of magnitude.

Run:  python demos/05_hardness_probing.py
"""

from softgrip.config import default_config
from softgrip.harness import calibrate_models, probe_hardness, run_hardness_probe

cfg = default_config()
models = calibrate_models(cfg, cfg.seed)
results = run_hardness_probe(cfg, cfg.seed, models=models)

for name, res in results.items():
    print(f"\n{name} probe -> classified {res.classification!r} "
          f"(slope {res.slope_deg_per_n:.1f} deg/N, threshold {cfg.hardness.slope_threshold})")
    trace = res.trace
    marks = [0.5, 1.0, 1.5, 2.0]
    for target in marks:
        idx = next((i for i in range(len(trace)) if trace.f_c_est[i] >= target), None)
        if idx is not None:
            print(f"  at {target:.1f} N estimated: angle {trace.angle[idx]:6.1f} deg, "
                  f"duty {trace.duty[idx]:5.1f}%")

free = probe_hardness(cfg, None, cfg.seed, models=models)
print(f"\nfree-space probe -> classification {free.classification!r} (no contact, no call)")
