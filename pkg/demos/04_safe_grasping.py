"""Sweep grasp set-points over deformable and fragile objects.

Three fingers grasp each object with balanced targets (the paired fingers
each take half the opposable finger's set-point).  Each grasp is lifted and
shaken; the sweep records how often objects drop, deform, or break.  Higher
force grips more reliably but deforms the cups more often -- the eggshell
survives everything at these set-points.

Run:  python demos/04_safe_grasping.py
"""

from softgrip.config import default_config
from softgrip.harness import calibrate_models, run_grasp_sweep

cfg = default_config()
models = calibrate_models(cfg, cfg.seed)
table = run_grasp_sweep(cfg, cfg.seed, models=models)

for name in ("plastic_cup", "paper_cup", "eggshell"):
    rows = sorted(table.for_object(name), key=lambda r: r.target_force, reverse=True)
    print(f"\n{name} ({cfg.grasp.n_trials} grasps per set-point):")
    print(f"  {'target (N)':>10} {'dropped':>8} {'deformed':>9} {'broken':>7}")
    for r in rows:
        print(
            f"  {r.target_force:>10.1f} {r.dropped_pct:>7.0f}% "
            f"{r.deformed_pct:>8.0f}% {r.broken_pct:>6.0f}%"
        )
