"""Per-finger internal-force calibration.

A force-sensing resistor glued along a bending finger reads a spurious
"internal" force that grows with the bend angle even in free space.  This
module fits that angle->force relationship with an ordinary-least-squares
polynomial and selects the degree by the Bayesian information criterion
(lower is better), so the fitted model can later be subtracted from live
readings to expose the true contact force.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import (
    InsufficientDataError,
    RankDeficientError,
    SampleParseError,
    ZeroVarianceError,
)

# Variance floor keeping the BIC finite on interpolating (zero-residual) fits.
SIGMA2_FLOOR = 1e-12

# Rank test on the column-equilibrated normal matrix.
_COND_LIMIT = 1e12

DEFAULT_MAX_DEGREE = 6


@dataclass(frozen=True)
class Sample:
    """One free-space observation: bend angle (deg) and force reading (N)."""

    angle: float
    force: float


@dataclass(frozen=True)
class PolynomialModel:
    """Fitted internal-force predictor: force = sum_d weights[d] * angle^d.

    ``angle_min``/``angle_max`` record the calibration support when the model
    came from a fit; hand-built models may leave them as None, which disables
    range checking downstream.
    """

    degree: int
    weights: tuple[float, ...]
    angle_min: float | None = None
    angle_max: float | None = None

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError("degree must be non-negative")
        if len(self.weights) != self.degree + 1:
            raise ValueError("weights length must equal degree + 1")
        if not all(math.isfinite(w) for w in self.weights):
            raise ValueError("weights must be finite")

    def predict(self, angle: float) -> float:
        """Evaluate the raw polynomial at ``angle`` (Horner form, no clamping)."""
        acc = 0.0
        for w in reversed(self.weights):
            acc = acc * angle + w
        return acc

    __call__ = predict


@dataclass(frozen=True)
class DegreeRecord:
    """Fit summary for one candidate degree inside a CalibrationReport."""

    degree: int
    weights: tuple[float, ...] | None
    rss: float | None
    sigma2_hat: float | None
    bic: float | None
    r_squared: float | None
    error: str | None = None


@dataclass(frozen=True)
class CalibrationReport:
    """Per-degree fit records plus the BIC-selected model."""

    records: tuple[DegreeRecord, ...]
    selected_degree: int
    n_samples: int
    angle_min: float
    angle_max: float

    def selected(self) -> PolynomialModel:
        rec = next(r for r in self.records if r.degree == self.selected_degree)
        return PolynomialModel(rec.degree, rec.weights, self.angle_min, self.angle_max)

    def to_dict(self) -> dict:
        return {
            "n_samples": self.n_samples,
            "selected_degree": self.selected_degree,
            "angle_min": self.angle_min,
            "angle_max": self.angle_max,
            "records": [
                {
                    "degree": r.degree,
                    "weights": list(r.weights) if r.weights is not None else None,
                    "rss": r.rss,
                    "sigma2_hat": r.sigma2_hat,
                    "bic": r.bic,
                    "r_squared": r.r_squared,
                    "error": r.error,
                }
                for r in self.records
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CalibrationReport":
        records = tuple(
            DegreeRecord(
                degree=r["degree"],
                weights=tuple(r["weights"]) if r["weights"] is not None else None,
                rss=r["rss"],
                sigma2_hat=r["sigma2_hat"],
                bic=r["bic"],
                r_squared=r["r_squared"],
                error=r.get("error"),
            )
            for r in data["records"]
        )
        return cls(
            records=records,
            selected_degree=data["selected_degree"],
            n_samples=data["n_samples"],
            angle_min=data["angle_min"],
            angle_max=data["angle_max"],
        )


def _design_matrix(angles: np.ndarray, degree: int) -> np.ndarray:
    return np.vander(angles, degree + 1, increasing=True)


def fit_polynomial(samples: list[Sample], degree: int) -> PolynomialModel:
    """Least-squares polynomial fit of force against angle.

    Solves the normal equations on a column-equilibrated design matrix (raw
    degree-6 Vandermonde columns over degree-scale angles span ~13 orders of
    magnitude) and applies one iterative-refinement step so the residual is
    orthogonal to the column space to near machine precision.
    """
    n = len(samples)
    if n < degree + 1:
        raise InsufficientDataError(
            f"need at least {degree + 1} samples for degree {degree}, got {n}"
        )
    x = np.array([s.angle for s in samples], dtype=float)
    y = np.array([s.force for s in samples], dtype=float)
    if not (np.all(np.isfinite(x)) and np.all(np.isfinite(y))):
        raise ValueError("samples must be finite")

    X = _design_matrix(x, degree)
    norms = np.linalg.norm(X, axis=0)
    norms[norms == 0.0] = 1.0
    Xs = X / norms
    G = Xs.T @ Xs
    if np.linalg.cond(G) > _COND_LIMIT:
        raise RankDeficientError(
            f"design matrix rank deficient for degree {degree} "
            "(angles carry too few distinct values?)"
        )
    ws = np.linalg.solve(G, Xs.T @ y)
    ws += np.linalg.solve(G, Xs.T @ (y - Xs @ ws))  # one refinement pass
    w = ws / norms
    return PolynomialModel(
        degree=degree,
        weights=tuple(float(v) for v in w),
        angle_min=float(np.min(x)),
        angle_max=float(np.max(x)),
    )


def residual_sum_of_squares(model: PolynomialModel, samples: list[Sample]) -> float:
    return float(sum((model.predict(s.angle) - s.force) ** 2 for s in samples))


def bic_score(model: PolynomialModel, samples: list[Sample]) -> float:
    """BIC = ln(n)*k - 2*ln(Lhat) with a Gaussian residual likelihood.

    k counts the polynomial coefficients (degree + 1); the noise variance is
    not counted, a constant offset that cannot change the argmin.  The MLE
    variance RSS/n is floored at SIGMA2_FLOOR so interpolating fits stay
    finite.
    """
    n = len(samples)
    if n == 0:
        raise ValueError("samples must be nonempty")
    k = model.degree + 1
    sigma2 = max(residual_sum_of_squares(model, samples) / n, SIGMA2_FLOOR)
    neg2_log_like = n * (math.log(2.0 * math.pi * sigma2) + 1.0)
    return math.log(n) * k + neg2_log_like


def r_squared(model: PolynomialModel, samples: list[Sample]) -> float:
    """Coefficient of determination 1 - RSS/TSS."""
    if len(samples) < 2:
        raise ValueError("need at least 2 samples")
    forces = [s.force for s in samples]
    mean = sum(forces) / len(forces)
    tss = sum((f - mean) ** 2 for f in forces)
    if tss == 0.0:
        raise ZeroVarianceError("all force values identical; R^2 undefined")
    return 1.0 - residual_sum_of_squares(model, samples) / tss


def select_model(samples: list[Sample], max_degree: int = DEFAULT_MAX_DEGREE) -> CalibrationReport:
    """Fit degrees 0..max_degree and select the BIC argmin (ties -> lower degree).

    Degrees whose fit fails are recorded with the error and skipped; only if
    every degree fails is the last error re-raised.
    """
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    n = len(samples)
    if n <= max_degree + 1:
        raise InsufficientDataError(
            f"need more than {max_degree + 1} samples for max_degree {max_degree}, got {n}"
        )
    records = []
    best: tuple[float, int] | None = None
    last_error: Exception | None = None
    for degree in range(max_degree + 1):
        try:
            model = fit_polynomial(samples, degree)
        except (RankDeficientError, InsufficientDataError) as exc:
            last_error = exc
            records.append(
                DegreeRecord(degree, None, None, None, None, None, error=str(exc))
            )
            continue
        rss = residual_sum_of_squares(model, samples)
        sigma2 = max(rss / n, SIGMA2_FLOOR)
        bic = bic_score(model, samples)
        try:
            r2 = r_squared(model, samples)
        except ZeroVarianceError:
            r2 = None
        records.append(DegreeRecord(degree, model.weights, rss, sigma2, bic, r2))
        if best is None or bic < best[0]:
            best = (bic, degree)
    if best is None:
        raise last_error if last_error is not None else RankDeficientError("all fits failed")
    angles = [s.angle for s in samples]
    return CalibrationReport(
        records=tuple(records),
        selected_degree=best[1],
        n_samples=n,
        angle_min=float(min(angles)),
        angle_max=float(max(angles)),
    )


CSV_HEADER = ("angle_deg", "force_n")


def save_samples(path: str | Path, samples: list[Sample]) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_HEADER)
        for s in samples:
            writer.writerow([repr(s.angle), repr(s.force)])


def load_samples(path: str | Path) -> list[Sample]:
    """Read `angle_deg,force_n` CSV; malformed rows raise with the line number."""
    samples = []
    with open(path, "r", newline="") as fh:
        reader = csv.reader(fh)
        for lineno, row in enumerate(reader, start=1):
            if lineno == 1 and row == list(CSV_HEADER):
                continue
            if not row or (len(row) == 1 and not row[0].strip()):
                continue
            if len(row) != 2:
                raise SampleParseError(f"expected 2 fields, got {len(row)}", lineno)
            try:
                angle, force = float(row[0]), float(row[1])
            except ValueError:
                raise SampleParseError(f"non-numeric field in {row!r}", lineno) from None
            if not (math.isfinite(angle) and math.isfinite(force)):
                raise SampleParseError("non-finite value", lineno)
            if force < 0.0:
                raise SampleParseError("force must be >= 0 (FSR cannot read negative)", lineno)
            samples.append(Sample(angle, force))
    return samples


def save_report(path: str | Path, report: CalibrationReport) -> None:
    with open(path, "w") as fh:
        json.dump(report.to_dict(), fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_report(path: str | Path) -> CalibrationReport:
    with open(path, "r") as fh:
        return CalibrationReport.from_dict(json.load(fh))
