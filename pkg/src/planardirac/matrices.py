"""Constant 4x4 matrices of the Dirac problem in the standard representation.

All entries are exact small complex integers, so the Clifford-algebra
identities hold to machine exactness (no rounding enters the products).
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "SIGMA",
    "ALPHA",
    "BETA",
    "SIGMA4",
    "GAMMA5",
    "P_PLUS",
    "P_MINUS",
    "IDENTITY4",
    "alpha_dot",
    "sigma4_dot",
]

_S0 = np.eye(2, dtype=complex)
_SX = np.array([[0, 1], [1, 0]], dtype=complex)
_SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
_SZ = np.array([[1, 0], [0, -1]], dtype=complex)
_Z2 = np.zeros((2, 2), dtype=complex)

#: Pauli matrices (x, y, z)
SIGMA = (_SX, _SY, _SZ)


def _block(a, b, c, d) -> np.ndarray:
    return np.block([[a, b], [c, d]])


#: alpha_x, alpha_y, alpha_z
ALPHA = tuple(_block(_Z2, s, s, _Z2) for s in SIGMA)
BETA = _block(_S0, _Z2, _Z2, -_S0)
#: 4x4 spin matrices Sigma_x, Sigma_y, Sigma_z
SIGMA4 = tuple(_block(s, _Z2, _Z2, s) for s in SIGMA)
GAMMA5 = _block(_Z2, _S0, _S0, _Z2)
IDENTITY4 = np.eye(4, dtype=complex)
P_PLUS = (IDENTITY4 + BETA) / 2
P_MINUS = (IDENTITY4 - BETA) / 2


def alpha_dot(vec) -> np.ndarray:
    """alpha . vec for a real or complex 3-vector."""
    return vec[0] * ALPHA[0] + vec[1] * ALPHA[1] + vec[2] * ALPHA[2]


def sigma4_dot(vec) -> np.ndarray:
    """Sigma . vec for a real or complex 3-vector (4x4 spin matrices)."""
    return vec[0] * SIGMA4[0] + vec[1] * SIGMA4[1] + vec[2] * SIGMA4[2]
