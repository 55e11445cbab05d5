"""Quantum numbers labelling the invariant sectors of the circular problem.

A sector carries four labels: the orbital label l (integer), the spin
alignment s (+1 or -1), the total angular momentum projection m_j and the
spin-orbit eigenvalue k.  Only two labels are independent; the other two
follow from

    m_j = l + s/2,        k = s * m_j = l*s + 1/2.

m_j and k are half-odd integers, never zero and never integral.  To keep all
consistency checks exact, they are stored as doubled integers (``two_mj`` is
2*m_j, ``two_k`` is 2*k); no floating point enters the bookkeeping.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

__all__ = [
    "QuantumNumbers",
    "from_ls",
    "from_kmj",
    "enumerate_sectors",
    "half_label",
    "parse_half",
]

HalfLike = Union[int, float, str, Fraction]


def half_label(two_x: int) -> str:
    """Render a half-odd integer stored as a doubled int, e.g. 3 -> "3/2"."""
    return f"{two_x}/2"


def parse_half(value: HalfLike) -> int:
    """Return 2*value as an exact int; reject anything that is not a multiple of 1/2."""
    frac = Fraction(value) if not isinstance(value, float) else Fraction(value)
    two = frac * 2
    if two.denominator != 1:
        raise ValueError(f"{value!r} is not an integer multiple of 1/2")
    return int(two)


@dataclass(frozen=True)
class QuantumNumbers:
    """One sector of the circular Dirac problem.

    Attributes
    ----------
    l : int
        Orbital label (eigenvalue of the generalised orbital generator).
    s : int
        Spin alignment, +1 or -1.
    two_mj : int
        Doubled total angular momentum projection, 2*m_j (odd).
    two_k : int
        Doubled spin-orbit eigenvalue, 2*k (odd, nonzero).
    """

    l: int
    s: int
    two_mj: int
    two_k: int

    def __post_init__(self) -> None:
        if self.s not in (-1, 1):
            raise ValueError(f"s must be +1 or -1, got {self.s}")
        if self.two_mj != 2 * self.l + self.s:
            raise ValueError(
                f"inconsistent labels: 2*m_j={self.two_mj} != 2*l+s={2 * self.l + self.s}"
            )
        if self.two_k != self.s * self.two_mj:
            raise ValueError(
                f"inconsistent labels: 2*k={self.two_k} != s*2*m_j={self.s * self.two_mj}"
            )
        # follows from the relations, but guard anyway: k is never integral
        if self.two_k % 2 == 0:
            raise ValueError(f"2*k={self.two_k} must be odd")

    @property
    def mj(self) -> Fraction:
        return Fraction(self.two_mj, 2)

    @property
    def k(self) -> Fraction:
        return Fraction(self.two_k, 2)

    @property
    def k_label(self) -> str:
        return half_label(self.two_k)

    @property
    def mj_label(self) -> str:
        return half_label(self.two_mj)

    @property
    def l_lower(self) -> int:
        """Orbital index carried by the lower spinor component, l + s."""
        return self.l + self.s

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return f"(l={self.l}, s={self.s:+d}, mj={self.mj_label}, k={self.k_label})"


def from_ls(l: int, s: int) -> QuantumNumbers:
    """Build the full quartet from the orbital label and spin alignment."""
    if s not in (-1, 1):
        raise ValueError(f"s must be +1 or -1, got {s}")
    l = int(l)
    two_mj = 2 * l + s
    return QuantumNumbers(l=l, s=s, two_mj=two_mj, two_k=s * two_mj)


def from_kmj(k: HalfLike, mj: HalfLike) -> QuantumNumbers:
    """Build the full quartet from (k, m_j).

    Raises ``ValueError`` when |k| != |m_j| (no such sector) or when k is
    integral or zero (k is always half-odd).
    """
    two_k = parse_half(k)
    two_mj = parse_half(mj)
    if two_k == 0 or two_k % 2 == 0:
        raise ValueError(f"k={Fraction(two_k, 2)} is not in the spectrum: "
                         "k must be a nonzero half-odd integer")
    if abs(two_k) != abs(two_mj):
        raise ValueError(
            f"inconsistent sector: |k|={abs(two_k)}/2 != |m_j|={abs(two_mj)}/2"
        )
    s = 1 if two_k == two_mj else -1
    l = (two_mj - s) // 2
    return QuantumNumbers(l=l, s=s, two_mj=two_mj, two_k=two_k)


def enumerate_sectors(l_max: int) -> list[QuantumNumbers]:
    """All sectors with |l| <= l_max, sorted by (2k, 2m_j)."""
    if l_max < 0:
        raise ValueError("l_max must be >= 0")
    sectors = [from_ls(l, s) for l in range(-l_max, l_max + 1) for s in (-1, 1)]
    sectors.sort(key=lambda q: (q.two_k, q.two_mj))
    return sectors
