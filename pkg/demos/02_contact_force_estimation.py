"""Estimate contact force by pressing the finger against a scale.

The finger presses against a rigid scale at several placements until the
true force (the scale reading) hits 2 N, roughly a 200 g target.  At each
placement the estimate -- measured force minus the predicted internal force
-- is compared with the scale: the error stays within a few hundredths of a
newton even though the raw sensor reading is dominated by the bending
artifact.

Run:  python demos/02_contact_force_estimation.py
"""

from softgrip.config import default_config
from softgrip.harness import calibrate_models, run_estimation_accuracy

cfg = default_config()
models = calibrate_models(cfg, cfg.seed)
rows = run_estimation_accuracy(cfg, cfg.seed, models=models)

print(f"{'position (deg)':>14} {'seed':>5} {'estimate (N)':>13} {'scale (N)':>10} {'|error| (N)':>12}")
shown = 0
for row in rows:
    if row.flagged:
        print(f"{row.position_angle:>14.1f} {row.seed % 1000:>5} flagged: {row.flagged}")
        continue
    if shown < 15:
        print(
            f"{row.position_angle:>14.1f} {row.seed % 1000:>5} "
            f"{row.estimated:>13.3f} {row.true_force:>10.3f} {row.abs_error:>12.4f}"
        )
        shown += 1

errors = [r.abs_error for r in rows if r.abs_error is not None]
print(f"\n{len(errors)} measurements: max |error| {max(errors):.4f} N, "
      f"mean {sum(errors)/len(errors):.4f} N (error budget: 0.15 N)")
