"""Radial potential profiles and the four-channel potential set.

The problem is specified by the mass m and four circularly symmetric radial
profiles: the sum and difference combinations of the time-like vector and
scalar couplings (sigma and delta channels), the angular component of the
space-like vector coupling (phi channel) and the radial tensor coupling
(tensor channel).  Natural units throughout (hbar = c = 1).

Profiles come from a small set of closed-form families and are closed under
pointwise sum, so composite shapes like coulomb + constant stay expressible
in one configuration entry.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Union

import numpy as np

__all__ = ["Profile", "PotentialSet", "ProfileError"]


class ProfileError(ValueError):
    """Raised for unknown families or invalid family parameters."""


# family name -> (parameter names, vanishes at infinity)
_FAMILIES = {
    "zero": ((), True),
    "constant": (("c",), False),
    "harmonic": (("lam",), False),
    "linear": (("lam",), False),
    "coulomb": (("alpha",), True),
    "woods_saxon": (("v0", "radius", "a"), True),
}


@dataclass(frozen=True)
class Profile:
    """A radial profile: one closed-form term or a pointwise sum of terms."""

    terms: tuple[tuple[str, tuple[float, ...]], ...] = (("zero", ()),)

    @staticmethod
    def make(family: str, **params: float) -> "Profile":
        family = family.strip().lower()
        if family not in _FAMILIES:
            raise ProfileError(
                f"unknown profile family {family!r}; known: {sorted(_FAMILIES)}"
            )
        names, _ = _FAMILIES[family]
        missing = [n for n in names if n not in params]
        extra = [n for n in params if n not in names]
        if missing or extra:
            raise ProfileError(
                f"family {family!r} takes parameters {list(names)}; "
                f"missing {missing}, unexpected {extra}"
            )
        values = tuple(float(params[n]) for n in names)
        if any(not math.isfinite(v) for v in values):
            raise ProfileError(f"non-finite parameter for family {family!r}: {values}")
        if family == "woods_saxon" and values[2] <= 0:
            raise ProfileError("woods_saxon diffuseness a must be > 0")
        return Profile(terms=((family, values),))

    @staticmethod
    def zero() -> "Profile":
        return Profile()

    @staticmethod
    def constant(c: float) -> "Profile":
        return Profile.make("constant", c=c)

    @staticmethod
    def harmonic(lam: float) -> "Profile":
        return Profile.make("harmonic", lam=lam)

    @staticmethod
    def linear(lam: float) -> "Profile":
        return Profile.make("linear", lam=lam)

    @staticmethod
    def coulomb(alpha: float) -> "Profile":
        return Profile.make("coulomb", alpha=alpha)

    @staticmethod
    def woods_saxon(v0: float, radius: float, a: float) -> "Profile":
        return Profile.make("woods_saxon", v0=v0, radius=radius, a=a)

    def __add__(self, other: "Profile") -> "Profile":
        terms = tuple(t for t in self.terms + other.terms if t[0] != "zero")
        return Profile(terms=terms or (("zero", ()),))

    def __call__(self, rho: Union[float, np.ndarray]) -> Union[float, np.ndarray]:
        """Evaluate at rho > 0 (scalar or array)."""
        rho_arr = np.asarray(rho, dtype=float)
        if np.any(rho_arr <= 0.0):
            raise ValueError("profiles are defined for rho > 0 only")
        out = np.zeros_like(rho_arr)
        for family, p in self.terms:
            if family == "zero":
                continue
            elif family == "constant":
                out = out + p[0]
            elif family == "harmonic":
                out = out + p[0] * rho_arr**2
            elif family == "linear":
                out = out + p[0] * rho_arr
            elif family == "coulomb":
                out = out - p[0] / rho_arr
            elif family == "woods_saxon":
                v0, radius, a = p
                out = out + v0 / (1.0 + np.exp((rho_arr - radius) / a))
        if np.isscalar(rho) or np.ndim(rho) == 0:
            return float(out)
        return out

    @property
    def is_zero(self) -> bool:
        return all(f == "zero" or (f == "constant" and p[0] == 0.0)
                   or (f in ("harmonic", "linear") and p[0] == 0.0)
                   or (f == "coulomb" and p[0] == 0.0)
                   or (f == "woods_saxon" and p[0] == 0.0)
                   for f, p in self.terms)

    @property
    def is_constant(self) -> bool:
        """True when every term is rho-independent (zero counts as constant)."""
        return all(f in ("zero", "constant")
                   or (f in ("harmonic", "linear", "coulomb") and p[0] == 0.0)
                   or (f == "woods_saxon" and p[0] == 0.0)
                   for f, p in self.terms)

    @property
    def constant_value(self) -> float:
        if not self.is_constant:
            raise ProfileError("profile is not constant")
        return sum(p[0] for f, p in self.terms if f == "constant")

    @property
    def vanishes_at_infinity(self) -> bool:
        total_const = 0.0
        for f, p in self.terms:
            if not _FAMILIES[f][1]:
                if f == "constant":
                    total_const += p[0]
                elif p[0] != 0.0:
                    return False
        return total_const == 0.0

    def describe(self) -> str:
        parts = []
        for f, p in self.terms:
            names = _FAMILIES[f][0]
            args = ", ".join(f"{n}={v:g}" for n, v in zip(names, p))
            parts.append(f"{f}({args})" if args else f)
        return " + ".join(parts)


@dataclass(frozen=True)
class PotentialSet:
    """Mass plus the four radial profiles of the circular problem."""

    mass: float = 1.0
    sigma: Profile = field(default_factory=Profile.zero)   # sum channel
    delta: Profile = field(default_factory=Profile.zero)   # difference channel
    phi: Profile = field(default_factory=Profile.zero)     # angular vector channel
    tensor: Profile = field(default_factory=Profile.zero)  # radial tensor channel

    def __post_init__(self) -> None:
        if not math.isfinite(self.mass):
            raise ValueError("mass must be finite")

    def evaluate(self, which: str, rho) -> Union[float, np.ndarray]:
        """Evaluate one channel; which is Sigma, Delta, phi or rho_tensor."""
        key = {"sigma": "sigma", "delta": "delta", "phi": "phi",
               "rho_tensor": "tensor", "tensor": "tensor"}.get(which.lower())
        if key is None:
            raise ValueError(f"unknown channel {which!r}")
        return getattr(self, key)(rho)

    def vector_scalar(self, rho) -> tuple[np.ndarray, np.ndarray]:
        """Back out the (vector, scalar) pair from the sum/difference channels."""
        vs = self.sigma(rho)
        vd = self.delta(rho)
        return (vs + vd) / 2.0, (vs - vd) / 2.0

    def is_spin_symmetric(self) -> bool:
        """True when the difference channel is constant and the phi/tensor channels vanish."""
        return self.delta.is_constant and self.phi.is_zero and self.tensor.is_zero

    def is_pseudospin_symmetric(self) -> bool:
        """Mirror condition: constant sum channel, no phi/tensor couplings."""
        return self.sigma.is_constant and self.phi.is_zero and self.tensor.is_zero

    def describe(self) -> dict[str, str]:
        return {
            "mass": f"{self.mass:g}",
            "sigma": self.sigma.describe(),
            "delta": self.delta.describe(),
            "phi": self.phi.describe(),
            "tensor": self.tensor.describe(),
        }
