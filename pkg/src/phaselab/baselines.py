"""Single-polarization baselines: the non-unitary exponential phase
operator on a nonnegative Fock ladder, the Pegg-Barnett truncated-space
unitary, and distribution comparison metrics.

Single-mode operators live on indices 0..n_max and get their own small
container (the doubled Window type cannot describe a nonnegative-only
range). For pointwise distribution comparison the Pegg-Barnett dimension
must equal the doubled grid size, so matched runs use s + 1 = D.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .fockspace import Window
from .formats import round_sig, window_to_json_dict
from .operators import OperatorMatrix
from .phase import PhaseDistribution, PhaseGrid, circular_stats

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class SingleModeWindow:
    """Truncated single-polarization ladder: indices 0..n_max."""

    n_max: int

    def __post_init__(self):
        if self.n_max < 0:
            raise ValueError(f"n_max must be >= 0, got {self.n_max}")

    @property
    def dimension(self) -> int:
        return self.n_max + 1


@dataclass(frozen=True, eq=False)
class SingleModeOperator:
    """Dense complex matrix over a single-mode window."""

    nw: SingleModeWindow
    entries: np.ndarray
    label: str

    def __post_init__(self):
        d = self.nw.dimension
        m = np.array(self.entries, dtype=complex)
        if m.shape != (d, d):
            raise ValueError(f"entries shape {m.shape} does not match ({d},{d})")
        m.setflags(write=False)
        object.__setattr__(self, "entries", m)

    def adjoint(self) -> SingleModeOperator:
        return SingleModeOperator(self.nw, self.entries.conj().T, f"adjoint({self.label})")

    def __matmul__(self, other: SingleModeOperator) -> SingleModeOperator:
        if self.nw != other.nw:
            raise ValueError("product needs identical single-mode windows")
        return SingleModeOperator(
            self.nw, self.entries @ other.entries, f"({self.label} {other.label})"
        )

    def __sub__(self, other: SingleModeOperator) -> SingleModeOperator:
        if self.nw != other.nw:
            raise ValueError("difference needs identical single-mode windows")
        return SingleModeOperator(
            self.nw, self.entries - other.entries, f"({self.label} - {other.label})"
        )


def build_sg_single(nw: SingleModeWindow) -> SingleModeOperator:
    """Unit lowering chain on 0..n_max; annihilates |0>, hence the
    classic unitarity defect E^dag E = I - |0><0|."""
    m = np.zeros((nw.dimension, nw.dimension), dtype=complex)
    for n in range(1, nw.dimension):
        m[n - 1, n] = 1.0
    return SingleModeOperator(nw, m, "sg_single")


def build_cosine_sine_single(
    nw: SingleModeWindow,
) -> tuple[SingleModeOperator, SingleModeOperator]:
    e = build_sg_single(nw).entries
    c = (e + e.conj().T) / 2.0
    s = (e - e.conj().T) / 2.0j
    return (
        SingleModeOperator(nw, c, "cosine_single"),
        SingleModeOperator(nw, s, "sine_single"),
    )


def build_pegg_barnett(nw: SingleModeWindow, phi0: float = 0.0) -> SingleModeOperator:
    """Unitary phase exponential on the truncated space: lowering chain
    with wrap element e^{i (s+1) phi0}, whose eigenstates are the uniform
    phase grid with offset phi0 and eigenvalues e^{i(phi0 + 2 pi k/(s+1))}.
    """
    d = nw.dimension
    m = np.zeros((d, d), dtype=complex)
    for n in range(1, d):
        m[n - 1, n] = 1.0
    m[d - 1, 0] = cmath.exp(1j * d * phi0)
    return SingleModeOperator(nw, m, f"pegg_barnett(phi0={phi0:g})")


def restrict_to_upper(op: OperatorMatrix) -> SingleModeOperator:
    """The (n >= 0) x (n >= 0) sub-block of a doubled-space operator as a
    single-mode matrix over 0..hi."""
    w = op.window
    start = w.position(0)
    block = op.entries[start:, start:]
    return SingleModeOperator(
        SingleModeWindow(w.hi), block, f"upper_block({op.label})"
    )


def single_mode_coherent(
    nw: SingleModeWindow, alpha: complex, tail_threshold: float = 1e-8
) -> np.ndarray:
    """Normalized coherent amplitudes over 0..n_max (plain vector)."""
    alpha = complex(alpha)
    amps = np.empty(nw.dimension, dtype=complex)
    amps[0] = math.exp(-abs(alpha) ** 2 / 2.0)
    for m in range(1, nw.dimension):
        amps[m] = amps[m - 1] * alpha / math.sqrt(m)
    kept = float(np.sum(np.abs(amps) ** 2))
    if 1.0 - kept > tail_threshold:
        raise ValueError(
            f"single-mode coherent tail {1.0 - kept:.3e} exceeds {tail_threshold:g}"
        )
    return amps / math.sqrt(kept)


def pegg_barnett_distribution(amplitudes: np.ndarray, grid: PhaseGrid) -> PhaseDistribution:
    """Phase distribution of a single-mode state over the Pegg-Barnett
    grid states e^{i n phi_k} / sqrt(s+1).

    The state dimension must equal the grid size (s + 1 = D); that is the
    matched-dimension setup for comparing against the doubled space.
    """
    amps = np.asarray(amplitudes, dtype=complex)
    d = len(grid.points)
    if amps.shape != (d,):
        raise ValueError(
            f"state dimension {amps.shape} must match grid size {d} "
            "for an orthonormal phase basis"
        )
    if abs(np.linalg.norm(amps) - 1.0) > 1e-10:
        raise ValueError("single-mode state must be normalized")
    overlaps = np.exp(-1j * np.outer(grid.points, np.arange(d))) @ amps / math.sqrt(d)
    probabilities = np.abs(overlaps) ** 2
    mean, variance = circular_stats(grid.points, probabilities)
    return PhaseDistribution(grid, probabilities, mean, variance)


def compare_distributions(
    p: PhaseDistribution, q: PhaseDistribution
) -> tuple[float, float]:
    """(sup difference, l1 difference) between two distributions on
    identical grids (same size, same offset modulo 2 pi)."""
    if len(p.probabilities) != len(q.probabilities):
        raise ValueError(
            f"grid size mismatch: {len(p.probabilities)} vs {len(q.probabilities)}"
        )
    offset_gap = (p.grid.phi0 - q.grid.phi0) % _TWO_PI
    if min(offset_gap, _TWO_PI - offset_gap) > 1e-12:
        raise ValueError(
            f"grid offset mismatch: {p.grid.phi0!r} vs {q.grid.phi0!r} (mod 2 pi)"
        )
    diff = np.abs(p.probabilities - q.probabilities)
    return float(np.max(diff)), float(np.sum(diff))


def comparison_report(
    baseline: str,
    window: Window,
    sup_diff: float,
    l1_diff: float,
    state_spec: str,
) -> dict:
    """Comparison report object for JSON output."""
    return {
        "baseline": baseline,
        "window": window_to_json_dict(window),
        "sup_diff": round_sig(sup_diff),
        "l1_diff": round_sig(l1_diff),
        "state_spec": state_spec,
    }
