"""Feature extraction from intensity profiles and validation against optics.

Textbook predictions for this geometry: single-slit diffraction minima at
+-lambda*L/a, first secondary maxima near +-1.43*lambda*L/a, and two-slit
fringe spacing lambda*L/d.  The validation report measures these features
on simulated profiles and compares them at fixed tolerances.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

import numpy as np
import scipy.signal

from .errors import AnalysisError
from .physics import ExperimentConfig, derive
from .propagation import IntensityProfile
from .qubit import QubitBehavior

__all__ = [
    "AnalyticPredictions",
    "analytic_predictions",
    "find_peaks",
    "fringe_spacing",
    "find_first_minimum",
    "total_probability",
    "CheckResult",
    "ValidationReport",
    "validate",
    "DEFAULT_PEAK_PROMINENCE",
]

# Tolerances used by validate(); these are artifact decisions, the source
# optics claims carry no error bars.
NORMALIZATION_TARGET = 0.95
NORMALIZATION_TOL = 0.02          # absolute, on the in-range probability mass
BEHAVIOR_AGREEMENT_RTOL = 1e-6    # pairwise, between behaviors' total probabilities
FRINGE_SPACING_RTOL = 0.10
FIRST_MINIMUM_TOL_CELLS = 2       # multiples of delta_screen
SECONDARY_MAXIMUM_TOL_CELLS = 5
INTERFERENCE_MIN_PEAKS = 5        # peaks inside the central lobe
DEFAULT_PEAK_PROMINENCE = 0.01    # fraction of the global maximum


@dataclass(frozen=True)
class AnalyticPredictions:
    """Feature positions predicted by elementary diffraction theory (meters)."""

    first_minimum: float      # lambda*L/a
    secondary_maximum: float  # 1.43*lambda*L/a
    fringe_spacing: float     # lambda*L/d


def analytic_predictions(config: ExperimentConfig) -> AnalyticPredictions:
    lam_l = config.wavelength * config.wall_to_screen
    return AnalyticPredictions(
        first_minimum=lam_l / config.slit_width,
        secondary_maximum=1.43 * lam_l / config.slit_width,
        fringe_spacing=lam_l / config.slit_separation,
    )


def find_peaks(profile: IntensityProfile,
               min_prominence_fraction: float = DEFAULT_PEAK_PROMINENCE,
               ) -> list[tuple[float, float]]:
    """Strict local maxima as (position, density), sorted by position.

    A peak qualifies when its topographic prominence exceeds
    ``min_prominence_fraction`` times the global maximum, which filters
    numerical ripple without suppressing genuine secondary maxima.  A
    plateau of equal values bounded by lower neighbors counts once, at its
    leftmost sample.
    """
    if not 0.0 < min_prominence_fraction < 1.0:
        raise ValueError(f"min_prominence_fraction must be in (0, 1), got {min_prominence_fraction}")
    density = np.asarray(profile.density)
    if density.size == 0:
        raise AnalysisError("empty profile")
    _, props = scipy.signal.find_peaks(density, prominence=0.0, plateau_size=1)
    left = props["left_edges"]
    keep = props["prominences"] > min_prominence_fraction * density.max()
    return [(float(profile.positions[i]), float(density[i])) for i in left[keep]]


def fringe_spacing(peaks: Sequence[tuple[float, float]],
                   lobe_halfwidth: float) -> Optional[float]:
    """Median gap between consecutive peaks inside |x| <= lobe_halfwidth.

    The central diffraction lobe is where the fringe comb is cleanest; the
    median is robust to one missed or spurious peak at the lobe edges.
    Returns None when fewer than three peaks fall inside the lobe (no
    fringes, as expected for a which-path-marked run).
    """
    positions = sorted(p for p, _ in peaks if abs(p) <= lobe_halfwidth)
    if len(positions) < 3:
        return None
    return float(np.median(np.diff(positions)))


def find_first_minimum(profile: IntensityProfile) -> float:
    """Position of the first strict local minimum right of the global maximum."""
    density = profile.density
    start = int(np.argmax(density))
    for i in range(start + 1, density.size - 1):
        if density[i] < density[i - 1] and density[i] < density[i + 1]:
            return float(profile.positions[i])
    raise AnalysisError("no local minimum found beyond the global maximum")


def total_probability(profile: IntensityProfile) -> float:
    """Probability mass registered on the screen: sum of density * delta_screen."""
    cfg = profile.config
    delta = (cfg.screen_max - cfg.screen_min) / cfg.n_positions
    return float(profile.density.sum() * delta)


@dataclass(frozen=True)
class CheckResult:
    name: str
    measured: Optional[float]
    expected: float
    tolerance: float
    passed: bool
    note: str = ""


@dataclass(frozen=True)
class ValidationReport:
    """Measured features, predicted values, and pass/fail flags per check."""

    config: ExperimentConfig
    totals: dict[str, float]                 # behavior name -> total probability
    interference: dict[str, bool]            # behavior name -> fringes detected
    fringe_spacing_measured: Optional[float]
    fringe_spacing_expected: float
    first_minimum_measured: Optional[float]  # positive-side, meters
    first_minimum_expected: float
    secondary_maximum_measured: Optional[float]
    secondary_maximum_expected: float
    checks: tuple[CheckResult, ...] = field(default_factory=tuple)

    @property
    def total_probability(self) -> float:
        """Total for the inactive-qubit run (the reference normalization)."""
        return self.totals[QubitBehavior.NONE.value]

    @property
    def interference_detected(self) -> bool:
        """Fringe flag for the inactive-qubit run."""
        return self.interference[QubitBehavior.NONE.value]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        cfg = self.config
        return {
            "config": {
                "electron_mass": cfg.electron_mass,
                "wavelength": cfg.wavelength,
                "planck": cfg.planck,
                "slit_width": cfg.slit_width,
                "slit_separation": cfg.slit_separation,
                "wall_to_screen": cfg.wall_to_screen,
                "screen_min": cfg.screen_min,
                "screen_max": cfg.screen_max,
                "n_positions": cfg.n_positions,
                "geometry_mode": cfg.geometry_mode.value,
            },
            "totals": dict(self.totals),
            "interference": dict(self.interference),
            "measured": {
                "fringe_spacing": self.fringe_spacing_measured,
                "first_minimum": self.first_minimum_measured,
                "secondary_maximum": self.secondary_maximum_measured,
            },
            "expected": {
                "fringe_spacing": self.fringe_spacing_expected,
                "first_minimum": self.first_minimum_expected,
                "secondary_maximum": self.secondary_maximum_expected,
            },
            "checks": [
                {
                    "name": c.name,
                    "measured": c.measured,
                    "expected": c.expected,
                    "tolerance": c.tolerance,
                    "pass": c.passed,
                    **({"note": c.note} if c.note else {}),
                }
                for c in self.checks
            ],
            "passed": self.passed,
        }

    def to_text(self) -> str:
        """Flat serialization, one ``key = value`` per line."""
        def fmt(v) -> str:
            if isinstance(v, bool):
                return "true" if v else "false"
            if v is None:
                return "nan"
            if isinstance(v, float):
                return repr(v)
            return str(v)

        lines = []
        for key, value in self.to_dict()["config"].items():
            lines.append(f"config_{key} = {fmt(value)}")
        for name, value in self.totals.items():
            lines.append(f"total_probability_{name} = {fmt(value)}")
        for name, value in self.interference.items():
            lines.append(f"interference_detected_{name} = {fmt(value)}")
        lines.append(f"fringe_spacing_measured = {fmt(self.fringe_spacing_measured)}")
        lines.append(f"fringe_spacing_expected = {fmt(self.fringe_spacing_expected)}")
        lines.append(f"first_minimum_measured = {fmt(self.first_minimum_measured)}")
        lines.append(f"first_minimum_expected = {fmt(self.first_minimum_expected)}")
        lines.append(f"secondary_maximum_measured = {fmt(self.secondary_maximum_measured)}")
        lines.append(f"secondary_maximum_expected = {fmt(self.secondary_maximum_expected)}")
        for c in self.checks:
            lines.append(f"check_{c.name}_measured = {fmt(c.measured)}")
            lines.append(f"check_{c.name}_expected = {fmt(c.expected)}")
            lines.append(f"check_{c.name}_tolerance = {fmt(c.tolerance)}")
            lines.append(f"check_{c.name}_pass = {fmt(c.passed)}")
        lines.append(f"passed = {fmt(self.passed)}")
        return "\n".join(lines) + "\n"


def _mirrored(profile: IntensityProfile) -> IntensityProfile:
    return IntensityProfile(positions=-profile.positions[::-1],
                            density=profile.density[::-1],
                            behavior=profile.behavior, config=profile.config)


def _interval_check(name: str, measured: Optional[float], expected: float,
                    tolerance: float, note: str = "") -> CheckResult:
    passed = measured is not None and abs(measured - expected) <= tolerance
    return CheckResult(name, measured, expected, tolerance, passed, note)


def validate(profiles: Mapping[QubitBehavior, IntensityProfile],
             config: ExperimentConfig, *,
             peak_threshold: float = DEFAULT_PEAK_PROMINENCE) -> ValidationReport:
    """Cross-check all three behaviors' profiles against the optics predictions.

    Requires one profile per behavior, all computed with ``config``.
    """
    for behavior in QubitBehavior:
        if behavior not in profiles:
            raise ValueError(f"missing profile for behavior {behavior.value!r}")
        p = profiles[behavior]
        if p.config != config:
            raise ValueError(f"profile for {behavior.value!r} was computed with a different config")
        if p.behavior is not behavior:
            raise ValueError(f"profile labeled {p.behavior.value!r} supplied for {behavior.value!r}")

    preds = analytic_predictions(config)
    delta_screen = derive(config).delta_screen

    totals = {b.value: total_probability(profiles[b]) for b in QubitBehavior}
    peaks = {b: find_peaks(profiles[b], peak_threshold) for b in QubitBehavior}
    in_lobe = {
        b: [x for x, _ in peaks[b] if abs(x) <= preds.first_minimum]
        for b in QubitBehavior
    }
    interference = {b.value: len(in_lobe[b]) >= INTERFERENCE_MIN_PEAKS for b in QubitBehavior}

    fringe = fringe_spacing(peaks[QubitBehavior.NONE], preds.first_minimum)

    remembers = profiles[QubitBehavior.REMEMBERS]
    try:
        fmin_pos = find_first_minimum(remembers)
        fmin_neg = -find_first_minimum(_mirrored(remembers))
    except AnalysisError:
        fmin_pos = fmin_neg = None

    smax_pos = smax_neg = None
    if fmin_pos is not None:
        beyond = [x for x, _ in peaks[QubitBehavior.REMEMBERS] if x > fmin_pos]
        smax_pos = min(beyond) if beyond else None
    if fmin_neg is not None:
        beyond = [x for x, _ in peaks[QubitBehavior.REMEMBERS] if x < fmin_neg]
        smax_neg = max(beyond) if beyond else None

    values = list(totals.values())
    scale = max(abs(v) for v in values) or 1.0
    pairwise = max(
        abs(va - vb) for ia, va in enumerate(values) for vb in values[ia + 1:]
    ) / scale

    checks = [
        _interval_check(f"normalization_{b.value}", totals[b.value],
                        NORMALIZATION_TARGET, NORMALIZATION_TOL)
        for b in QubitBehavior
    ]
    checks.append(CheckResult(
        "normalization_pairwise", pairwise, 0.0, BEHAVIOR_AGREEMENT_RTOL,
        pairwise <= BEHAVIOR_AGREEMENT_RTOL,
        note="max relative spread of total probability across behaviors",
    ))
    checks.append(_interval_check(
        "fringe_spacing", fringe, preds.fringe_spacing,
        FRINGE_SPACING_RTOL * preds.fringe_spacing))
    checks.append(_interval_check(
        "first_minimum_positive", fmin_pos, preds.first_minimum,
        FIRST_MINIMUM_TOL_CELLS * delta_screen))
    checks.append(_interval_check(
        "first_minimum_negative", fmin_neg, -preds.first_minimum,
        FIRST_MINIMUM_TOL_CELLS * delta_screen))
    checks.append(_interval_check(
        "secondary_maximum_positive", smax_pos, preds.secondary_maximum,
        SECONDARY_MAXIMUM_TOL_CELLS * delta_screen))
    checks.append(_interval_check(
        "secondary_maximum_negative", smax_neg, -preds.secondary_maximum,
        SECONDARY_MAXIMUM_TOL_CELLS * delta_screen))
    for b, expected_flag in ((QubitBehavior.NONE, True),
                             (QubitBehavior.FORGETS, True),
                             (QubitBehavior.REMEMBERS, False)):
        detected = interference[b.value]
        checks.append(CheckResult(
            f"interference_{b.value}", float(detected), float(expected_flag), 0.0,
            detected == expected_flag,
            note=f"{len(in_lobe[b])} peaks inside the central lobe",
        ))

    return ValidationReport(
        config=config,
        totals=totals,
        interference=interference,
        fringe_spacing_measured=fringe,
        fringe_spacing_expected=preds.fringe_spacing,
        first_minimum_measured=fmin_pos,
        first_minimum_expected=preds.first_minimum,
        secondary_maximum_measured=smax_pos,
        secondary_maximum_expected=preds.secondary_maximum,
        checks=tuple(checks),
    )
