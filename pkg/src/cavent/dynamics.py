"""Two-atom reduced density matrix after sequential resonant Jaynes-Cummings transits.

Both atoms enter the single-mode cavity in the excited state, one after the
other, each interacting for the same Rabi angle ``gt`` (coupling constant
times transit time; the two never appear separately).  Tracing the field out
of the joint state leaves a real symmetric 4x4 density matrix in the ordered
product basis

    BASIS = (|e1 e2>, |e1 g2>, |g1 e2>, |g1 g2>)

whose ten independent entries are weighted trigonometric sums over the photon
distribution.  Populations carry weight P_n; coherences between branches that
differ by one (two) photon emissions carry weight sqrt(P_n P_{n-1})
(sqrt(P_n P_{n-2})), with out-of-range indices contributing zero.  Every sum
runs over ascending n and is accumulated with exactly-rounded compensated
summation (math.fsum), since terms span many orders of magnitude at <n> = 50.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .errors import ParameterError
from .fields import PhotonDistribution

BASIS = ("ee", "eg", "ge", "gg")


class GammaCoefficients(NamedTuple):
    """The ten real sums filling the two-atom density matrix.

    g1, g2, g3, g5 are the populations of ee, eg, ge, gg (their sum is the
    trace); g4 and g6..g10 are the coherences.
    """

    g1: float
    g2: float
    g3: float
    g4: float
    g5: float
    g6: float
    g7: float
    g8: float
    g9: float
    g10: float


def _check_rabi_angle(gt):
    if not math.isfinite(gt):
        raise ParameterError(f"gt must be finite, got {gt!r}")
    if gt < 0.0:
        raise ParameterError(f"gt must be >= 0, got {gt}")


def gamma_coefficients(dist: PhotonDistribution, gt: float) -> GammaCoefficients:
    """Evaluate the ten density-matrix sums for one photon distribution and Rabi angle."""
    _check_rabi_angle(gt)
    p = dist.probs
    n = np.arange(len(p), dtype=float)

    th1 = gt * np.sqrt(n + 1.0)
    th2 = gt * np.sqrt(n + 2.0)
    th0 = gt * np.sqrt(n)
    thm = gt * np.sqrt(np.maximum(n - 1.0, 0.0))
    c1, s1 = np.cos(th1), np.sin(th1)
    c2, s2 = np.cos(th2), np.sin(th2)
    c0, s0 = np.cos(th0), np.sin(th0)
    sm = np.sin(thm)

    # one- and two-photon coherence weights; zero where the index underflows
    w1 = np.zeros_like(p)
    w1[1:] = np.sqrt(p[1:] * p[:-1])
    w2 = np.zeros_like(p)
    w2[2:] = np.sqrt(p[2:] * p[:-2])

    f = math.fsum
    return GammaCoefficients(
        g1=f(p * c1**4),
        g2=f(p * c1**2 * s1**2),
        g3=f(p * c2**2 * s1**2),
        g4=f(p * s1**2 * c1 * c2),
        g5=f(p * s1**2 * s2**2),
        g6=f(w2 * c1**2 * s0 * sm),
        g7=f(w1 * c1**2 * c0 * s0),
        g8=f(w1 * c1**3 * s0),
        g9=f(w1 * s1**2 * c1 * s0),
        g10=f(w1 * s1**2 * c2 * s0),
    )


def assemble_rho(g: GammaCoefficients) -> np.ndarray:
    """Lay the ten coefficients out as the symmetric 4x4 density matrix.

    Row/column order is BASIS; diagonal (g1, g2, g3, g5), upper off-diagonals
    (1,2)=g7, (1,3)=g8, (1,4)=g6, (2,3)=g4, (2,4)=g9, (3,4)=g10 (1-indexed),
    mirrored below.
    """
    return np.array(
        [
            [g.g1, g.g7, g.g8, g.g6],
            [g.g7, g.g2, g.g4, g.g9],
            [g.g8, g.g4, g.g3, g.g10],
            [g.g6, g.g9, g.g10, g.g5],
        ]
    )
