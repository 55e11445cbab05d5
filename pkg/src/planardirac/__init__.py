"""Numerical laboratory for the planar, circularly symmetric Dirac problem.

The package solves the coupled radial equations of a 3+1 Dirac particle
confined to the xy-plane under scalar, vector and tensor couplings, verifies
the conserved-generator algebra of the problem on finite spectral
representations, and demonstrates the spin / pseudospin degeneracy pairings
in the bound-state spectrum.
"""

__version__ = "0.1.0"

from .quantum_numbers import QuantumNumbers, from_kmj, from_ls, enumerate_sectors
from .potentials import PotentialSet, Profile
from .radial import RadialGrid, RadialSolution, find_bound_states
from .degeneracy import spin_partner, pseudospin_partner, verify_degeneracy

__all__ = [
    "QuantumNumbers",
    "from_kmj",
    "from_ls",
    "enumerate_sectors",
    "PotentialSet",
    "Profile",
    "RadialGrid",
    "RadialSolution",
    "find_bound_states",
    "spin_partner",
    "pseudospin_partner",
    "verify_degeneracy",
    "__version__",
]
