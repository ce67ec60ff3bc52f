"""Snapshot Choi states and instantaneous divisibility classification.

The Choi state of a snapshot map is (id (x) N)(|phi+><phi+|) with |phi+> the
computational-basis maximally entangled state. The map is completely positive
exactly when this state is positive semidefinite, so the sign of its minimum
eigenvalue classifies the instant as divisible (memoryless) or not; the
trace-norm excess ||C||_1 - 1 is the equivalent scalar indicator.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EmptyGrid
from .kernel import Spectrum, eig_hermitian, frozen, max_entangled, projector, trace_norm
from .lindblad import LindbladGenerator, SmallTimeMap, extend_and_apply, small_time_map


@dataclass(frozen=True)
class ChoiState:
    """Hermitian unit-trace d^2 x d^2 matrix with cached spectrum.

    (t, epsilon) record which snapshot produced it.
    """

    matrix: np.ndarray
    t: float
    epsilon: float
    spectrum: Spectrum


def choi_state(matrix: np.ndarray, t: float, epsilon: float) -> ChoiState:
    """Wrap a matrix as a ChoiState, enforcing Hermiticity and unit trace."""
    matrix = frozen(matrix)
    spectrum = eig_hermitian(matrix)
    tr = np.trace(matrix).real
    if abs(tr - 1.0) > 1e-9:
        raise ValueError(f"Choi matrix trace {tr!r} is not 1")
    return ChoiState(matrix=matrix, t=t, epsilon=epsilon, spectrum=spectrum)


def choi_of(m: SmallTimeMap) -> ChoiState:
    """Choi state (id (x) N)(|phi+><phi+|) of a snapshot map."""
    bell = projector(max_entangled(m.dim))
    return choi_state(extend_and_apply(m, bell), m.t, m.epsilon)


@dataclass(frozen=True)
class DivisibilityVerdict:
    """Outcome of the instantaneous CP-divisibility test.

    markovian is minimum_eigenvalue >= -tolerance; trace_norm_excess is
    ||C||_1 - 1 and equals twice the total negative spectral weight.
    """

    minimum_eigenvalue: float
    trace_norm_excess: float
    markovian: bool
    tolerance: float


def classify(choi: ChoiState, tolerance: float = 1e-9) -> DivisibilityVerdict:
    lam_min = float(choi.spectrum.eigenvalues[0])
    excess = trace_norm(choi.matrix) - 1.0
    return DivisibilityVerdict(
        minimum_eigenvalue=lam_min,
        trace_norm_excess=excess,
        markovian=lam_min >= -tolerance,
        tolerance=tolerance,
    )


def scan(
    gen: LindbladGenerator,
    t_grid,
    epsilon: float,
    tolerance: float = 1e-9,
) -> list[tuple[float, DivisibilityVerdict]]:
    """Classify instantaneous divisibility at each instant of an ascending grid."""
    grid = [float(t) for t in t_grid]
    if not grid:
        raise EmptyGrid("t_grid is empty")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ValueError("t_grid must be strictly ascending")
    return [
        (t, classify(choi_of(small_time_map(gen, t, epsilon)), tolerance)) for t in grid
    ]
