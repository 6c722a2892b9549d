"""Independent brute-force references used by the test suite.

Everything here is computed from first principles with explicit sums and
plain loops, deliberately avoiding the package's vectorized construction
paths. Tests compare the two independent routes to the same numbers, so
nothing in this file may import from phaselab.
"""

import cmath
import math

import numpy as np


def coherent_amplitudes(alpha, m_max):
    """Coherent amplitudes e^{-|a|^2/2} a^m / sqrt(m!) for m = 0..m_max."""
    amps = [complex(math.exp(-abs(alpha) ** 2 / 2.0))]
    for m in range(1, m_max + 1):
        amps.append(amps[-1] * alpha / math.sqrt(m))
    return np.array(amps, dtype=complex)


def doubled_overlap(labels, amplitudes, phi):
    """<phi|psi> up to the 1/sqrt(D) grid normalization: the direct sum
    over basis labels n of c_n e^{-i(n+1/2)phi}."""
    total = 0j
    for n, c in zip(labels, amplitudes):
        total += c * cmath.exp(-1j * (n + 0.5) * phi)
    return total


def single_mode_overlap(amplitudes, phi):
    """Same direct sum for a nonnegative-index single-mode state."""
    total = 0j
    for n, c in enumerate(amplitudes):
        total += c * cmath.exp(-1j * n * phi)
    return total


def circular_mean_variance(angles, weights):
    """Resultant-vector circular statistics by direct summation."""
    resultant = 0j
    for phi, w in zip(angles, weights):
        resultant += w * cmath.exp(1j * phi)
    return cmath.phase(resultant), 1.0 - abs(resultant)


def doubled_distribution(labels, amplitudes, d, phi0=0.0, resolution=1):
    """Phase distribution by direct summation on a grid of d*resolution
    points. resolution > 1 evaluates between the canonical grid points;
    the weights are rescaled so they still sum to ~1."""
    m = d * resolution
    angles = [phi0 + 2.0 * math.pi * k / m for k in range(m)]
    weights = [abs(doubled_overlap(labels, amplitudes, phi)) ** 2 / m for phi in angles]
    return np.array(angles), np.array(weights)


def single_mode_distribution(amplitudes, d, phi0=0.0):
    """Truncated-space single-mode phase distribution on its own d-point
    grid (d must equal the state dimension for exact normalization)."""
    angles = [phi0 + 2.0 * math.pi * k / d for k in range(d)]
    weights = [abs(single_mode_overlap(amplitudes, phi)) ** 2 / d for phi in angles]
    return np.array(angles), np.array(weights)


def brute_single_mode_cs_commutator(n_max):
    """[C, S] for the single-mode exponential phase operator, built with
    explicit loops including the matrix products."""
    dim = n_max + 1
    e = [[0j] * dim for _ in range(dim)]
    for n in range(1, dim):
        e[n - 1][n] = 1.0 + 0j
    edag = [[e[j][i].conjugate() for j in range(dim)] for i in range(dim)]
    c = [[(e[i][j] + edag[i][j]) / 2.0 for j in range(dim)] for i in range(dim)]
    s = [[(e[i][j] - edag[i][j]) / 2j for j in range(dim)] for i in range(dim)]

    def matmul(a, b):
        return [
            [sum(a[i][k] * b[k][j] for k in range(dim)) for j in range(dim)]
            for i in range(dim)
        ]

    cs = matmul(c, s)
    sc = matmul(s, c)
    return np.array([[cs[i][j] - sc[i][j] for j in range(dim)] for i in range(dim)])


def forward_difference(values, step, antiperiodic=True):
    """One-sided difference (h_{j+1} - h_j)/step with anti-periodic wrap,
    matching the 2pi anti-periodicity of half-integer phase amplitudes."""
    n = len(values)
    out = np.empty(n, dtype=complex)
    for j in range(n):
        nxt = -values[0] if (j == n - 1 and antiperiodic) else values[(j + 1) % n]
        out[j] = (nxt - values[j]) / step
    return out
