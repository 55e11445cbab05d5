"""Finite spectral representations used by the operator laboratory.

Three arenas, each just large enough to host the relations it checks:

* ``MomentumRep`` - four-spinor fields over the angle of a momentum circle of
  fixed radius p > 0, stored as Fourier coefficients.  Orbital rotation acts
  diagonally on modes; direction-dependent matrices act pointwise in angle.
* ``RotorRep`` - four-spinor coefficients over 3D angular momentum states
  |l m> up to a cutoff; hosts commutators that need all three orbital
  components, which a planar field cannot represent.
* ``PolarRep`` - four-spinor fields over (angle mode, radial grid point),
  the arena for the full Hamiltonian and its sector-closure checks.

Angular data is stored in FFT bin order along axis 1, so multiplying by a
low-degree trigonometric polynomial is exact for states that keep a margin
below the Nyquist mode.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

__all__ = ["Op", "MomentumRep", "RotorRep", "PolarRep", "mode_values"]


@dataclass(frozen=True)
class Op:
    """A named linear action on state arrays of one representation."""

    name: str
    fn: Callable[[np.ndarray], np.ndarray]

    def __call__(self, state: np.ndarray) -> np.ndarray:
        return self.fn(state)

    def __add__(self, other: "Op") -> "Op":
        return Op(f"({self.name} + {other.name})", lambda s: self(s) + other(s))

    def __sub__(self, other: "Op") -> "Op":
        return Op(f"({self.name} - {other.name})", lambda s: self(s) - other(s))

    def __rmul__(self, scalar: complex) -> "Op":
        return Op(f"({scalar} * {self.name})", lambda s: scalar * self.fn(s))

    def then(self, other: "Op") -> "Op":
        """Composition other(self(state)) read left to right."""
        return Op(f"{other.name} . {self.name}", lambda s: other(self.fn(s)))


def compose(a: Op, b: Op) -> Op:
    """Operator product a b (apply b first)."""
    return Op(f"{a.name} {b.name}", lambda s: a(b(s)))


def mode_values(n_ang: int) -> np.ndarray:
    """Signed integer mode numbers of the FFT bins, in bin order."""
    return np.rint(np.fft.fftfreq(n_ang) * n_ang).astype(int)


def _trailing(shape_like: np.ndarray) -> tuple[int, ...]:
    return (1,) * (shape_like.ndim - 2)


class _AngularBase:
    """Shared machinery for representations with an FFT mode axis (axis 1)."""

    n_ang: int

    def __init__(self, n_ang: int):
        if n_ang < 16 or (n_ang & (n_ang - 1)) != 0:
            raise ValueError("n_ang must be a power of two >= 16")
        self.n_ang = n_ang
        self.modes = mode_values(n_ang)

    def modes_to_angle(self, c: np.ndarray) -> np.ndarray:
        return np.fft.ifft(c, axis=1) * self.n_ang

    def angle_to_modes(self, psi: np.ndarray) -> np.ndarray:
        return np.fft.fft(psi, axis=1) / self.n_ang

    def matrix_op(self, name: str, mat: np.ndarray) -> Op:
        """Constant 4x4 matrix acting on the spinor axis."""
        return Op(name, lambda c: np.einsum("ij,j...->i...", mat, c))

    def lz_op(self) -> Op:
        """Orbital rotation generator: mode l multiplies by l."""
        def fn(c: np.ndarray) -> np.ndarray:
            lv = self.modes.reshape((1, -1) + _trailing(c))
            return c * lv
        return Op("L_z", fn)

    def field_op(self, name: str, field: np.ndarray) -> Op:
        """Angle-dependent 4x4 matrix field, shape (n_ang, 4, 4), applied pointwise."""
        def fn(c: np.ndarray) -> np.ndarray:
            psi = self.modes_to_angle(c)
            out = np.einsum("aij,ja...->ia...", field, psi)
            return self.angle_to_modes(out)
        return Op(name, fn)

    def scalar_field_op(self, name: str, values: np.ndarray) -> Op:
        """Angle-dependent scalar multiplier, shape (n_ang,)."""
        def fn(c: np.ndarray) -> np.ndarray:
            psi = self.modes_to_angle(c)
            vals = values.reshape((1, -1) + _trailing(c))
            return self.angle_to_modes(psi * vals)
        return Op(name, fn)

    @staticmethod
    def norm(c: np.ndarray) -> float:
        return float(np.linalg.norm(c))

    @staticmethod
    def inner(a: np.ndarray, b: np.ndarray) -> complex:
        return complex(np.vdot(a, b))


class MomentumRep(_AngularBase):
    """Spinor fields on a fixed-radius momentum circle, |p| = p > 0."""

    def __init__(self, l_max: int = 10, p: float = 0.9, n_ang: int = 64):
        super().__init__(n_ang)
        if p <= 0:
            raise ValueError("the momentum-circle representation needs |p| > 0")
        if l_max + 8 >= n_ang // 2:
            raise ValueError("l_max too large for the angular grid margin")
        self.l_max = l_max
        self.p = p
        theta = 2.0 * np.pi * np.arange(n_ang) / n_ang
        self.theta = theta
        # unit momentum direction (planar: z-component identically zero)
        self.phat = np.stack([np.cos(theta), np.sin(theta), np.zeros_like(theta)])

    def random_state(self, rng: np.random.Generator) -> np.ndarray:
        c = np.zeros((4, self.n_ang), dtype=complex)
        occupied = np.abs(self.modes) <= self.l_max
        n_occ = int(occupied.sum())
        vals = rng.normal(size=(4, n_occ)) + 1j * rng.normal(size=(4, n_occ))
        c[:, occupied] = vals
        return c / np.linalg.norm(c)


class RotorRep:
    """Spinor coefficients over |l m> angular-momentum states, l <= l_max.

    Supplies all three components of the orbital generator through their
    exact ladder action, which is what vector commutator checks need.
    """

    def __init__(self, l_max: int = 4):
        self.l_max = l_max
        self.basis = [(l, m) for l in range(l_max + 1) for m in range(-l, l + 1)]
        self.index = {lm: i for i, lm in enumerate(self.basis)}
        n = len(self.basis)
        lz = np.zeros((n, n))
        lp = np.zeros((n, n))
        lm_ = np.zeros((n, n))
        for (l, m), i in self.index.items():
            lz[i, i] = m
            if m + 1 <= l:
                lp[self.index[(l, m + 1)], i] = np.sqrt(l * (l + 1) - m * (m + 1))
            if m - 1 >= -l:
                lm_[self.index[(l, m - 1)], i] = np.sqrt(l * (l + 1) - m * (m - 1))
        self.dim = n
        self._l = {"x": (lp + lm_) / 2.0, "y": (lp - lm_) / 2j, "z": lz}

    def orbital_op(self, axis: str) -> Op:
        mat = self._l[axis]
        return Op(f"L_{axis}", lambda c: np.einsum("ab,jb->ja", mat, c))

    def matrix_op(self, name: str, mat: np.ndarray) -> Op:
        return Op(name, lambda c: np.einsum("ij,jb->ib", mat, c))

    def random_state(self, rng: np.random.Generator) -> np.ndarray:
        c = rng.normal(size=(4, self.dim)) + 1j * rng.normal(size=(4, self.dim))
        return c / np.linalg.norm(c)

    @staticmethod
    def norm(c: np.ndarray) -> float:
        return float(np.linalg.norm(c))


class PolarRep(_AngularBase):
    """Spinor fields over (angular mode, radial point) for position-space checks.

    The angular direction is spectral; the radial direction is a uniform grid
    with a centred finite-difference derivative.
    """

    def __init__(self, rho_min: float = 1e-3, rho_max: float = 8.0,
                 n_rho: int = 400, l_max: int = 6, n_ang: int = 64):
        super().__init__(n_ang)
        if rho_min <= 0 or rho_max <= rho_min:
            raise ValueError("need 0 < rho_min < rho_max")
        self.l_max = l_max
        self.rho = np.linspace(rho_min, rho_max, n_rho)
        self.h = self.rho[1] - self.rho[0]
        self._d = self._derivative_matrix(n_rho, self.h)

    @staticmethod
    def _derivative_matrix(n: int, h: float) -> np.ndarray:
        """Fourth-order centred first derivative, one-sided at the edges."""
        d = np.zeros((n, n))
        for i in range(2, n - 2):
            d[i, i - 2:i + 3] = np.array([1.0, -8.0, 0.0, 8.0, -1.0]) / (12.0 * h)
        edge = np.array([-25.0, 48.0, -36.0, 16.0, -3.0]) / (12.0 * h)
        for i in (0, 1):
            d[i, i:i + 5] = edge
        for i in (n - 1, n - 2):
            d[i, i - 4:i + 1] = -edge[::-1]
        return d

    def d_rho(self, c: np.ndarray) -> np.ndarray:
        return np.einsum("rq,jaq->jar", self._d, c)

    def radial_mult(self, values: np.ndarray, c: np.ndarray) -> np.ndarray:
        return c * values[None, None, :]

    def norm_weighted(self, c: np.ndarray) -> float:
        """Norm with trapezoid radial quadrature (angular modes are orthonormal)."""
        w = np.full_like(self.rho, self.h)
        w[0] = w[-1] = self.h / 2.0
        return float(np.sqrt(np.sum(np.abs(c) ** 2 * w[None, None, :])))

    def random_state(self, rng: np.random.Generator) -> np.ndarray:
        """Band-limited smooth random state vanishing near both radial ends."""
        c = np.zeros((4, self.n_ang, len(self.rho)), dtype=complex)
        occupied = np.where(np.abs(self.modes) <= self.l_max)[0]
        span = self.rho[-1] - self.rho[0]
        centers = self.rho[0] + span * np.array([0.35, 0.5, 0.65])
        widths = span * np.array([0.08, 0.12, 0.1])
        for j in range(4):
            for b in occupied:
                amps = rng.normal(size=3) + 1j * rng.normal(size=3)
                prof = sum(a * np.exp(-((self.rho - c0) / w0) ** 2)
                           for a, c0, w0 in zip(amps, centers, widths))
                c[j, b, :] = prof
        return c / self.norm_weighted(c)
