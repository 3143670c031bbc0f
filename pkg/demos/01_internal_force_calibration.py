"""Calibrate the internal-force models of all three fingers.

Bending a finger in free space makes its force strip read a spurious
"internal" force.  This demo runs the staircase ramp-cycle characterization
on the simulated hand, fits polynomials of degree 0..6 to each finger's
(angle, force) cloud, and shows why the BIC selects degree 4.

Run:  python demos/01_internal_force_calibration.py
"""

from softgrip.config import default_config
from softgrip.harness import run_calibration_experiment

cfg = default_config()
result = run_calibration_experiment(cfg, seed=2024)

for finger, report in enumerate(result.reports, start=1):
    print(f"\nfinger {finger}: {report.n_samples} samples, "
          f"angles {report.angle_min:.1f}..{report.angle_max:.1f} deg")
    print(f"  {'degree':>6} {'RSS':>10} {'BIC':>12} {'R^2':>8}")
    for rec in report.records:
        mark = " <-- selected" if rec.degree == report.selected_degree else ""
        print(f"  {rec.degree:>6} {rec.rss:>10.4f} {rec.bic:>12.1f} {rec.r_squared:>8.5f}{mark}")

model = result.reports[0].selected()
print("\nfinger 1 fitted internal force:")
for angle in (0, 20, 40, 60, 80, 100):
    print(f"  {angle:>3} deg -> {max(0.0, model.predict(angle)):.3f} N")
