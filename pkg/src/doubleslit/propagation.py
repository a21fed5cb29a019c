"""Amplitude accumulation at the screen and the standalone intensity.

For every screen position x_i and screen qubit state e, the marginal
amplitudes from each slit are

    psi_lower[i, e] = sum over i' in the lower slit, e' in {1, 2} of
                      [allowed] * K(x_i, x'_i') * slit_amplitude,

and analogously for the upper slit, with the sums running in ascending
(i', then e') order.  The standalone probability density is then

    p_i = |psi_upper[i,1] + psi_lower[i,1]|^2 + |psi_upper[i,2] + psi_lower[i,2]|^2.

This is the O(N^2) hot loop.  It is vectorized per screen row: the inner
sum over slit positions uses a running (cumulative) sum along the slit
axis, i.e. plain left-to-right accumulation in the fixed ascending order.
Rows are independent, so work may be chunked across threads; each (i, e)
cell is written by exactly one task and the result is bitwise identical
for any thread count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import SimulationError
from .physics import DerivedQuantities, ExperimentConfig, Grids, build_grids, derive, kernel
from .qubit import QubitBehavior, screen_state_weights

__all__ = [
    "AmplitudeField",
    "IntensityProfile",
    "accumulate",
    "intensity",
    "simulate",
    "simulate_all",
]


@dataclass(frozen=True)
class AmplitudeField:
    """Per-(screen position, qubit state) marginal amplitudes, one array per slit.

    ``lower`` and ``upper`` have shape (N, 2); column 0 is screen qubit
    state e=1, column 1 is e=2.  Units are m^(-1/2) (amplitude density).
    """

    lower: np.ndarray
    upper: np.ndarray
    behavior: QubitBehavior
    positions: np.ndarray
    config: ExperimentConfig


@dataclass(frozen=True)
class IntensityProfile:
    """Screen positions paired with the standalone probability density (1/m)."""

    positions: np.ndarray
    density: np.ndarray
    behavior: QubitBehavior
    config: ExperimentConfig


def _slit_sums(screen_block: np.ndarray, slit_half: np.ndarray, weights_half: np.ndarray,
               config: ExperimentConfig, derived: DerivedQuantities) -> np.ndarray:
    """(rows, 2) amplitudes from one slit for a block of screen positions.

    Each screen row is evaluated as its own fixed-shape 1D operation.  This
    is what makes the result independent of how rows are grouped into
    blocks: elementwise kernels may round differently at SIMD tail
    positions, so a 2D evaluation would let the block shape leak into the
    last bits.
    """
    out = np.empty((screen_block.size, 2), dtype=np.complex128)
    for r, x in enumerate(screen_block):
        terms = kernel(x, slit_half, config, derived) * derived.slit_amplitude
        for e_idx in range(2):
            # weights are 0.0/1.0 per slit position; multiplying by 1.0 keeps
            # bits, so NONE and FORGETS (identical weights) yield bitwise-equal
            # sums.  cumsum is the plain left-to-right accumulation in
            # ascending slit order.
            masked = terms * weights_half[:, e_idx]
            out[r, e_idx] = masked.cumsum()[-1]
    return out


def accumulate(config: ExperimentConfig, derived: DerivedQuantities, grids: Grids,
               behavior: QubitBehavior, *, threads: int = 1) -> AmplitudeField:
    """Accumulate marginal slit amplitudes at the screen under a qubit behavior.

    ``threads`` distributes screen rows over a thread pool; the profile is
    bitwise independent of the thread count because every row is computed
    by exactly one task with a fixed inner summation order.
    """
    n = config.n_positions
    if grids.screen_positions.size != n or grids.slit_positions.size != n:
        raise ValueError("grids do not match config.n_positions")
    half = n // 2
    weights = screen_state_weights(behavior, n)
    screen = grids.screen_positions
    halves = ((grids.lower_slit, weights[:half]), (grids.upper_slit, weights[half:]))

    results = []
    for slit_half, weights_half in halves:
        if threads <= 1:
            block = _slit_sums(screen, slit_half, weights_half, config, derived)
        else:
            row_blocks = np.array_split(np.arange(n), threads)
            with ThreadPoolExecutor(max_workers=threads) as pool:
                futures = [
                    pool.submit(_slit_sums, screen[rows], slit_half, weights_half,
                                config, derived)
                    for rows in row_blocks if rows.size
                ]
                block = np.concatenate([f.result() for f in futures], axis=0)
        results.append(block)
    lower, upper = results

    for name, arr in (("lower", lower), ("upper", upper)):
        bad = ~np.isfinite(arr)
        if bad.any():
            i, e = np.argwhere(bad)[0]
            raise SimulationError(
                f"non-finite {name}-slit amplitude at screen index {i + 1}, qubit state {e + 1}"
            )

    return AmplitudeField(lower=lower, upper=upper, behavior=behavior,
                          positions=screen, config=config)


def intensity(field: AmplitudeField) -> IntensityProfile:
    """Standalone probability density from an amplitude field.

    Amplitudes feeding the same screen configuration add coherently; the
    two screen qubit states are exclusive and their probabilities add.
    """
    totals = field.lower + field.upper
    if not np.all(np.isfinite(totals)):
        raise SimulationError("amplitude field contains non-finite entries")
    density = (totals.real ** 2 + totals.imag ** 2).sum(axis=1)
    if (density < 0).any():
        # unreachable for a modulus-squared construction; signals an arithmetic fault
        raise SimulationError("negative probability density")
    return IntensityProfile(positions=field.positions, density=density,
                            behavior=field.behavior, config=field.config)


def simulate(config: ExperimentConfig, behavior: QubitBehavior, *,
             threads: int = 1) -> IntensityProfile:
    """Full pipeline for one behavior: derive -> grids -> accumulate -> intensity."""
    derived = derive(config)
    grids = build_grids(config, derived)
    return intensity(accumulate(config, derived, grids, behavior, threads=threads))


def simulate_all(config: ExperimentConfig, *, threads: int = 1,
                 behaviors: tuple[QubitBehavior, ...] = tuple(QubitBehavior),
                 ) -> dict[QubitBehavior, IntensityProfile]:
    """Run the pipeline for several behaviors, sharing grids and derived values."""
    derived = derive(config)
    grids = build_grids(config, derived)
    return {
        b: intensity(accumulate(config, derived, grids, b, threads=threads))
        for b in behaviors
    }
