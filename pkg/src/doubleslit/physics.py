"""Physical constants, discretization grids, and the free-particle propagator.

The experiment: electrons of mass ``m`` and de Broglie wavelength ``lambda``
arrive perpendicular to a wall carrying two slits of width ``a`` whose
centers are ``d`` apart, and are detected on a screen a distance ``L``
downstream.  Positions inside the slits and on the screen are coarse
grained into N discrete levels each (N/2 per slit).  The transition
amplitude from a slit position x' to a screen position x is the
free-particle path-integral kernel

    K(x, x') = A * exp(B),
    A = sqrt(m / (2*i*pi*hbar*(L/v))),
    B = i*m*(x - x')^2 / (2*hbar*(L/v)),

with the transit time fixed at L/v for every path (small-angle regime:
L is enormous compared with both the slit scale and the screen span).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import ConfigError, SimulationError

__all__ = [
    "GeometryMode",
    "ExperimentConfig",
    "DerivedQuantities",
    "Grids",
    "derive",
    "build_grids",
    "kernel_prefactor",
    "kernel",
]


class GeometryMode(Enum):
    """Placement rule for the upper slit's coarse-grained positions.

    CORRECTED places the upper slit symmetrically to the lower one, spanning
    [(d-a)/2, (d+a)/2], so the center-to-center separation is d and the
    fringe spacing lands at lambda*L/d.  PAPER_LITERAL keeps the published
    indexing formula, which shifts the upper slit by one full slit width to
    [(d+a)/2, (d+3a)/2] and stretches the effective separation to d+a.
    """

    CORRECTED = "corrected"
    PAPER_LITERAL = "paper"


@dataclass(frozen=True)
class ExperimentConfig:
    """All experimental constants. Defaults reproduce the reference setup.

    Units are SI throughout: kg, m, s, J*s.  ``n_positions`` is the shared
    count of coarse-grained levels on the slit wall and on the screen; it
    must be even so each slit gets exactly half of them.
    """

    electron_mass: float = 9.109e-31
    wavelength: float = 1.23e-10
    planck: float = 6.6261e-34
    slit_width: float = 0.15e-8
    slit_separation: float = 0.615e-8
    wall_to_screen: float = 1.0
    screen_min: float = -0.15
    screen_max: float = 0.15
    n_positions: int = 2000
    geometry_mode: GeometryMode = GeometryMode.CORRECTED

    def __post_init__(self) -> None:
        for name in ("electron_mass", "wavelength", "planck", "slit_width",
                     "slit_separation", "wall_to_screen"):
            value = getattr(self, name)
            if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
                raise ConfigError(f"{name} must be a positive finite number, got {value!r}")
        if not isinstance(self.n_positions, int) or isinstance(self.n_positions, bool):
            raise ConfigError(f"n_positions must be an integer, got {self.n_positions!r}")
        if self.n_positions < 2 or self.n_positions % 2 != 0:
            raise ConfigError(
                f"n_positions must be an even integer >= 2 (each slit gets half), "
                f"got {self.n_positions}"
            )
        if not (math.isfinite(self.screen_min) and math.isfinite(self.screen_max)):
            raise ConfigError("screen bounds must be finite")
        if not self.screen_min < self.screen_max:
            raise ConfigError(
                f"screen_min must be < screen_max, got [{self.screen_min}, {self.screen_max}]"
            )
        if not self.slit_separation > self.slit_width:
            raise ConfigError(
                f"slit_separation ({self.slit_separation}) must exceed "
                f"slit_width ({self.slit_width}); the slits may not overlap"
            )
        if not isinstance(self.geometry_mode, GeometryMode):
            raise ConfigError(f"geometry_mode must be a GeometryMode, got {self.geometry_mode!r}")

    @property
    def reduced_planck(self) -> float:
        """hbar = h / (2*pi)."""
        return self.planck / (2.0 * math.pi)


@dataclass(frozen=True)
class DerivedQuantities:
    """Quantities computed once from an :class:`ExperimentConfig`.

    ``slit_amplitude`` is the discrete amplitude delta_slit/sqrt(2a) carried
    by every coarse-grained slit level (units m^(1/2)); multiplying it by
    the kernel (units 1/m) yields screen amplitude densities in m^(-1/2).
    """

    velocity: float        # m/s, h / (lambda * m)
    delta_slit: float      # m, 2a / N
    delta_screen: float    # m, (Zmax - Zmin) / N
    slit_amplitude: float  # m^(1/2), delta_slit / sqrt(2a)
    transit_time: float    # s, L / v


def derive(config: ExperimentConfig) -> DerivedQuantities:
    """Compute velocity, grid spacings, slit amplitude, and transit time."""
    velocity = config.planck / (config.wavelength * config.electron_mass)
    delta_slit = 2.0 * config.slit_width / config.n_positions
    delta_screen = (config.screen_max - config.screen_min) / config.n_positions
    slit_amplitude = delta_slit / math.sqrt(2.0 * config.slit_width)
    transit_time = config.wall_to_screen / velocity
    values = (velocity, delta_slit, delta_screen, slit_amplitude, transit_time)
    if not all(math.isfinite(v) and v > 0 for v in values):
        raise SimulationError(f"derived quantities are not finite/positive: {values}")
    return DerivedQuantities(velocity, delta_slit, delta_screen, slit_amplitude, transit_time)


@dataclass(frozen=True)
class Grids:
    """Discrete screen and slit-wall positions, in meters.

    ``slit_positions`` holds the lower slit in its first half (indices
    1..N/2 in 1-based terms) and the upper slit in its second half.  Both
    arrays are built from exact half-integer multiples of the spacing around
    exact centers, so for a screen symmetric about zero the grids are
    bitwise antisymmetric: x[N-1-k] == -x[k].  The intensity mirror symmetry
    of the corrected geometry inherits this exactness; a naive evaluation of
    the textbook indexing formula loses it (phases here are ~1e8 radians, so
    a one-ulp grid asymmetry is visible in the profile).
    """

    screen_positions: np.ndarray
    slit_positions: np.ndarray

    @property
    def lower_slit(self) -> np.ndarray:
        return self.slit_positions[: self.slit_positions.size // 2]

    @property
    def upper_slit(self) -> np.ndarray:
        return self.slit_positions[self.slit_positions.size // 2:]


def build_grids(config: ExperimentConfig, derived: DerivedQuantities) -> Grids:
    """Build screen and slit grids for the configured geometry mode.

    Screen: x_i = (i - 0.5)*delta_screen + Zmin, i = 1..N.
    Lower slit: x'_i = (i - 0.5)*delta_slit - (d+a)/2, i = 1..N/2.
    Upper slit (CORRECTED): mirror image of the lower slit.
    Upper slit (PAPER_LITERAL): shifted up by one slit width a relative to
    CORRECTED, reproducing the published indexing formula verbatim.
    """
    n = config.n_positions
    half = n // 2

    # (2i - N - 1)/2 is an exact half-integer, antisymmetric under i -> N+1-i.
    screen_mid = (config.screen_min + config.screen_max) / 2.0
    screen_offsets = (2.0 * np.arange(1, n + 1) - n - 1) / 2.0
    screen = screen_offsets * derived.delta_screen + screen_mid

    slit_offsets = (2.0 * np.arange(1, half + 1) - half - 1) / 2.0
    lower = -config.slit_separation / 2.0 + slit_offsets * derived.delta_slit
    upper_center = config.slit_separation / 2.0
    if config.geometry_mode is GeometryMode.PAPER_LITERAL:
        upper_center += config.slit_width
    upper = upper_center + slit_offsets * derived.delta_slit

    return Grids(screen_positions=screen, slit_positions=np.concatenate([lower, upper]))


def kernel_prefactor(config: ExperimentConfig, derived: DerivedQuantities) -> complex:
    """The position-independent amplitude A = sqrt(m / (2*i*pi*hbar*(L/v))).

    The principal square root is used, so sqrt(1/i) = exp(-i*pi/4).  The
    global phase cancels in any intensity, but a fixed branch keeps
    amplitude-level outputs reproducible.
    """
    denom = 2j * math.pi * config.reduced_planck * derived.transit_time
    return cmath.sqrt(config.electron_mass / denom)


def kernel(x, x_prime, config: ExperimentConfig, derived: DerivedQuantities):
    """Free-particle propagator K(x, x') = A * exp(i*m*(x-x')^2 / (2*hbar*L/v)).

    Accepts scalars or broadcastable arrays of positions (meters) and
    returns complex amplitudes with |K| = |A| for every pair.  Raises
    :class:`SimulationError` if any output is non-finite, which signals
    mis-scaled inputs rather than a recoverable condition.
    """
    phase_scale = config.electron_mass / (2.0 * config.reduced_planck * derived.transit_time)
    displacement = np.subtract(x, x_prime)
    out = kernel_prefactor(config, derived) * np.exp(1j * (phase_scale * np.square(displacement)))
    if not np.all(np.isfinite(out)):
        raise SimulationError("kernel produced a non-finite amplitude; check input scales")
    return out
