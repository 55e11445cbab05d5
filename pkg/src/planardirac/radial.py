"""Bound states of the coupled first-order radial system by two-sided shooting.

For a sector with spin-orbit eigenvalue k the radial amplitudes obey

    g' = (k/rho) g - W g + (m + E - V_delta) f
    f' = -(k/rho) f + W f + (m - E + V_sigma) g,       W = U_tensor + s V_phi,

with s = k/m_j.  Regular solutions behave like rho^max(k, 1-k) (upper) and
rho^max(k+1, -k) (lower) at the origin; bound solutions decay at large rho.
A trial energy is accepted when the outward- and inward-integrated solutions
are proportional at a matching radius, detected through the normalised
matching determinant D(E) = g_out f_in - g_in f_out.  Roots are bracketed on
an adaptive energy mesh (sign changes of D plus jumps of the outward node
count) and polished by Brent's method.

Under spin (pseudospin) symmetry the upper (lower) amplitude decouples into
a scalar second-order equation with centrifugal strength k(k-1) (k(k+1));
``second_order_solve`` runs the same shooting machinery on that equation and
rebuilds the companion amplitude from the first-order relation, providing an
internal cross-check of the coupled solver.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import simpson, solve_ivp
from scipy.optimize import brentq

from .potentials import PotentialSet
from .quantum_numbers import QuantumNumbers

logger = logging.getLogger(__name__)

__all__ = [
    "RadialGrid",
    "RadialSolution",
    "radial_rhs",
    "integrate",
    "find_bound_states",
    "second_order_solve",
    "grid_for_problem",
    "SymmetryError",
]

_RESCALE_LIMIT = 1e6
_NODE_FLOOR = 1e-9


class SymmetryError(ValueError):
    """Raised when a decoupled solve is requested without its symmetry condition."""


@dataclass(frozen=True)
class RadialGrid:
    """Uniform radial grid on [rho_min, rho_max]."""

    rho_min: float = 1e-4
    rho_max: float = 10.0
    n_points: int = 2000

    def __post_init__(self) -> None:
        if self.rho_min <= 0:
            raise ValueError("rho_min must be > 0")
        if self.rho_min > 1e-3 * self.rho_max:
            raise ValueError("rho_min must not exceed 1e-3 * rho_max")
        if self.n_points < 200:
            raise ValueError("n_points must be >= 200")

    @property
    def rho(self) -> np.ndarray:
        return np.linspace(self.rho_min, self.rho_max, self.n_points)

    def refined(self, factor: int = 2) -> "RadialGrid":
        return RadialGrid(self.rho_min, self.rho_max, factor * (self.n_points - 1) + 1)


@dataclass
class RadialSolution:
    """One normalised bound state of a sector."""

    sector: QuantumNumbers
    n: int                      # interior sign changes of g
    eps: float
    rho: np.ndarray
    g: np.ndarray
    f: np.ndarray
    norm_residual: float
    match_residual: float
    n_f: int = 0                # interior sign changes of f

    @property
    def grid_points(self) -> int:
        return len(self.rho)


def radial_rhs(rho, g, f, sector: QuantumNumbers, eps: float,
               pots: PotentialSet):
    """Right-hand sides (dg/drho, df/drho) of the coupled system."""
    k = float(sector.k)
    w = pots.tensor(rho) + sector.s * pots.phi(rho)
    m = pots.mass
    dg = (k / rho) * g - w * g + (m + eps - pots.delta(rho)) * f
    df = -(k / rho) * f + w * f + (m - eps + pots.sigma(rho)) * g
    return dg, df


def _coefficients(sector, eps, pots, rho):
    """Local system matrix entries a, b, c with y' = [[a, b], [c, -a]] y."""
    k = float(sector.k)
    w = pots.tensor(rho) + sector.s * pots.phi(rho)
    a = k / rho - w
    b = pots.mass + eps - pots.delta(rho)
    c = pots.mass - eps + pots.sigma(rho)
    return a, b, c


def _forbidden_rate(sector, eps, pots, rho):
    """a^2 + b c: positive in classically forbidden regions (decay rate squared)."""
    a, b, c = _coefficients(sector, eps, pots, rho)
    return a * a + b * c


def _outward_seed(sector, eps, pots, rho0: float) -> np.ndarray:
    """Regular-solution amplitudes at rho0 from the indicial exponents."""
    k = float(sector.k)
    _, b, c = _coefficients(sector, eps, pots, rho0)
    if k > 0:
        return np.array([1.0, c * rho0 / (2.0 * k + 1.0)])
    return np.array([b * rho0 / (1.0 - 2.0 * k), 1.0])


def _inward_seed(sector, eps, pots, rho1: float) -> np.ndarray:
    """Locally decaying eigenvector of the system matrix at rho1."""
    a, b, c = _coefficients(sector, eps, pots, rho1)
    q = a * a + b * c
    if q <= 0.0:
        raise ValueError(
            f"no decaying solution at rho_max={rho1:g} for eps={eps:g}; "
            "enlarge the grid or shrink the energy window")
    lam = -math.sqrt(q)
    v1 = np.array([b, lam - a])
    v2 = np.array([a + lam, c])
    v = v1 if np.abs(v1).max() >= np.abs(v2).max() else v2
    return v / np.abs(v).max()


def _integrate_chunked(points: np.ndarray, y0: np.ndarray, rhs,
                       rtol: float, n_chunks: int = 12) -> np.ndarray:
    """Integrate y' = rhs(rho, y) along points, renormalising to avoid overflow.

    Returns the trajectory sampled at the given points with a single overall
    (positive) scale; the scale itself is irrelevant for matching and is fixed
    later by normalisation.
    """
    n = len(points)
    ys = np.empty((len(y0), n))
    ys[:, 0] = y0
    bounds = np.unique(np.linspace(0, n - 1, n_chunks + 1).astype(int))
    y = np.asarray(y0, dtype=float)
    for i0, i1 in zip(bounds[:-1], bounds[1:]):
        seg = points[i0:i1 + 1]
        sol = solve_ivp(rhs, (seg[0], seg[-1]), y, t_eval=seg,
                        method="DOP853", rtol=rtol, atol=1e-12)
        if not sol.success:
            raise RuntimeError(f"radial integration failed: {sol.message}")
        ys[:, i0:i1 + 1] = sol.y
        y = sol.y[:, -1].copy()
        scale = float(np.abs(y).max())
        if scale > _RESCALE_LIMIT:
            y /= scale
            ys[:, :i1 + 1] /= scale
    return ys


def _pair_rhs(sector, eps, pots):
    def rhs(rho, y):
        dg, df = radial_rhs(rho, y[0], y[1], sector, eps, pots)
        return np.array([dg, df])
    return rhs


def integrate(direction: str, sector: QuantumNumbers, eps: float,
              pots: PotentialSet, grid: RadialGrid,
              rtol: float = 1e-10) -> tuple[np.ndarray, np.ndarray]:
    """One-sided trajectory (g, f) sampled on the grid, in ascending rho order.

    ``direction`` is "outward" (regular seed at rho_min) or "inward"
    (decaying seed at rho_max).  The overall scale of the trajectory is
    arbitrary.
    """
    rho = grid.rho
    rhs = _pair_rhs(sector, eps, pots)
    if direction == "outward":
        ys = _integrate_chunked(rho, _outward_seed(sector, eps, pots, rho[0]),
                                rhs, rtol)
        return ys[0], ys[1]
    if direction == "inward":
        ys = _integrate_chunked(rho[::-1], _inward_seed(sector, eps, pots, rho[-1]),
                                rhs, rtol)
        return ys[0][::-1], ys[1][::-1]
    raise ValueError(f"direction must be 'outward' or 'inward', got {direction!r}")


def _count_nodes(values: np.ndarray, floor: float = _NODE_FLOOR) -> int:
    """Sign changes of a sampled amplitude, ignoring the sub-threshold tail."""
    v = np.asarray(values)
    big = np.abs(v) > floor * np.abs(v).max()
    sig = v[big]
    if len(sig) < 2:
        return 0
    return int(np.sum(sig[1:] * sig[:-1] < 0.0))


def _coarse_indices(n: int, target: int = 280) -> np.ndarray:
    if n <= target:
        return np.arange(n)
    return np.unique(np.linspace(0, n - 1, target).astype(int))


@dataclass
class _ShootSetup:
    sector: QuantumNumbers
    pots: PotentialSet
    grid: RadialGrid
    i_match: int
    rtol: float
    coarse: np.ndarray = field(default_factory=lambda: np.empty(0, int))

    def __post_init__(self):
        self.rho = self.grid.rho
        left = self.rho[:self.i_match + 1]
        right = self.rho[self.i_match:]
        self.left_pts = left[_coarse_indices(len(left))]
        self.right_pts = right[_coarse_indices(len(right))][::-1]

    def match(self, eps: float) -> tuple[float, int]:
        """Normalised matching determinant and outward node count at energy eps."""
        rhs = _pair_rhs(self.sector, eps, self.pots)
        try:
            seed_in = _inward_seed(self.sector, eps, self.pots, self.rho[-1])
        except ValueError:
            return math.nan, -1
        out = _integrate_chunked(self.left_pts,
                                 _outward_seed(self.sector, eps, self.pots,
                                               self.rho[0]), rhs, self.rtol)
        inw = _integrate_chunked(self.right_pts, seed_in, rhs, self.rtol)
        go, fo = out[0, -1], out[1, -1]
        gi, fi = inw[0, -1], inw[1, -1]
        denom = math.sqrt((go * go + fo * fo) * (gi * gi + fi * fi))
        if denom == 0.0:
            return math.nan, -1
        d_hat = (go * fi - gi * fo) / denom
        return d_hat, _count_nodes(out[0])


def _choose_match_index(sector, pots, grid, eps_mid: float) -> int:
    """Index of the most classically allowed grid point (fallback: one third in)."""
    rho = grid.rho
    probe = rho[_coarse_indices(len(rho), 400)]
    q = _forbidden_rate(sector, eps_mid, pots, probe)
    if np.all(q > 0.0):
        return grid.n_points // 3
    i_probe = int(np.argmin(q))
    return int(np.searchsorted(rho, probe[i_probe]))


def _bracket_roots(match_fn, window: tuple[float, float], n_scan: int,
                   warnings: list[str]) -> list[tuple[float, float]]:
    lo, hi = window
    pad = 1e-9 * max(1.0, abs(lo), abs(hi))
    mesh = list(np.linspace(lo + pad, hi - pad, n_scan))
    data = [match_fn(e) for e in mesh]
    brackets: list[tuple[float, float]] = []
    stack = [(mesh[i], data[i], mesh[i + 1], data[i + 1], 0)
             for i in range(len(mesh) - 1)]
    while stack:
        e1, (d1, n1), e2, (d2, n2), depth = stack.pop()
        if math.isnan(d1) or math.isnan(d2):
            if not math.isnan(d1) or not math.isnan(d2):
                warnings.append(
                    f"energy subinterval [{e1:g}, {e2:g}] skipped: no decaying "
                    "solution at the outer boundary for part of the window")
            continue
        sign_change = d1 * d2 < 0.0
        node_jump = n2 - n1
        if sign_change and node_jump <= 1:
            brackets.append((e1, e2))
            continue
        if node_jump >= 1 or sign_change:
            if e2 - e1 < 1e-12 * max(1.0, abs(e1), abs(e2)) or depth > 48:
                if sign_change:
                    brackets.append((e1, e2))
                else:
                    warnings.append(
                        f"node count jumps by {node_jump} across "
                        f"[{e1:.12g}, {e2:.12g}] without a determinant sign "
                        "change: possible unresolved (double) root")
                continue
            em = 0.5 * (e1 + e2)
            dm = match_fn(em)
            stack.append((e1, (d1, n1), em, dm, depth + 1))
            stack.append((em, dm, e2, (d2, n2), depth + 1))
    return brackets


def _assemble(setup: _ShootSetup, eps: float) -> tuple[np.ndarray, np.ndarray, float]:
    """Full-resolution matched trajectory, normalised to unit probability."""
    rho = setup.rho
    im = setup.i_match
    rhs = _pair_rhs(setup.sector, eps, setup.pots)
    out = _integrate_chunked(rho[:im + 1],
                             _outward_seed(setup.sector, eps, setup.pots, rho[0]),
                             rhs, setup.rtol)
    inw = _integrate_chunked(rho[im:][::-1],
                             _inward_seed(setup.sector, eps, setup.pots, rho[-1]),
                             rhs, setup.rtol)
    inw = inw[:, ::-1]
    vo = out[:, -1]
    vi = inw[:, 0]
    alpha = float(vi @ vo) / float(vi @ vi)
    g = np.concatenate([out[0], alpha * inw[0, 1:]])
    f = np.concatenate([out[1], alpha * inw[1, 1:]])
    norm_sq = simpson(g * g + f * f, x=rho)
    scale = 1.0 / math.sqrt(norm_sq)
    g *= scale
    f *= scale
    norm_residual = abs(simpson(g * g + f * f, x=rho) - 1.0)
    return g, f, norm_residual


def find_bound_states(sector: QuantumNumbers, pots: PotentialSet,
                      energy_window: tuple[float, float], max_nodes: int,
                      grid: RadialGrid, rtol: float = 1e-10,
                      n_scan: int = 48,
                      warnings: list[str] | None = None) -> list[RadialSolution]:
    """All bound states of the sector inside the energy window, ordered by energy.

    States are labelled by the interior node count of g, normalised to unit
    probability, and deduplicated.  Non-fatal anomalies (possible missed
    roots, removable-singularity crossings) are reported through the optional
    ``warnings`` list and the module logger.
    """
    lo, hi = energy_window
    if not (math.isfinite(lo) and math.isfinite(hi)) or hi <= lo:
        raise ValueError("energy window must be finite with lo < hi")
    warns: list[str] = [] if warnings is None else warnings
    rho = grid.rho
    for eps_edge in (lo, hi):
        b_vals = pots.mass + eps_edge - np.asarray(pots.delta(rho))
        if np.any(b_vals > 0) and np.any(b_vals < 0):
            msg = (f"eps={eps_edge:g}: m + eps - V_delta changes sign across the "
                   "grid (removable singularity of the decoupled form); the "
                   "first-order system remains regular")
            warns.append(msg)
            logger.info(msg)

    i_match = _choose_match_index(sector, pots, grid, 0.5 * (lo + hi))
    setup = _ShootSetup(sector, pots, grid, i_match, rtol)
    brackets = _bracket_roots(setup.match, (lo, hi), n_scan, warns)

    solutions: dict[int, RadialSolution] = {}
    for a, b in brackets:
        try:
            eps_root = brentq(lambda e: setup.match(e)[0], a, b,
                              xtol=1e-14, rtol=4 * np.finfo(float).eps)
        except ValueError:
            continue
        d_res = abs(setup.match(eps_root)[0])
        g, f, norm_res = _assemble(setup, eps_root)
        n_g = _count_nodes(g)
        n_f = _count_nodes(f)
        sol = RadialSolution(sector=sector, n=n_g, eps=float(eps_root),
                             rho=rho, g=g, f=f, norm_residual=norm_res,
                             match_residual=d_res, n_f=n_f)
        if n_g > max_nodes:
            continue
        if n_g in solutions and solutions[n_g].match_residual <= d_res:
            continue
        solutions[n_g] = sol

    out = sorted(solutions.values(), key=lambda s: s.eps)
    nodes_sorted = [s.n for s in out]
    if nodes_sorted != sorted(nodes_sorted):
        msg = (f"sector (k={sector.k_label}, mj={sector.mj_label}): node counts "
               f"{nodes_sorted} are not increasing with energy; a root was "
               "probably missed")
        warns.append(msg)
        logger.warning(msg)
    for w in warns:
        logger.debug("find_bound_states: %s", w)
    return out


# ---------------------------------------------------------------------------
# decoupled second-order solves under spin / pseudospin symmetry
# ---------------------------------------------------------------------------

def _second_order_q(sector, pots, which: str, eps: float, rho):
    k = float(sector.k)
    cent = k * (k - 1.0) if which == "upper_g" else k * (k + 1.0)
    b = pots.mass + eps - np.asarray(pots.delta(rho))
    c = pots.mass - eps + np.asarray(pots.sigma(rho))
    return cent / (rho * rho) + b * c


def second_order_solve(sector: QuantumNumbers, pots: PotentialSet, which: str,
                       energy_window: tuple[float, float], max_nodes: int,
                       grid: RadialGrid, rtol: float = 1e-10,
                       n_scan: int = 48) -> list[RadialSolution]:
    """Bound states from the decoupled scalar equation for g (or f).

    Requires the spin-symmetry condition for ``which="upper_g"`` or the
    pseudospin condition for ``which="lower_f"``; otherwise the dropped
    coupling term (the radial derivative of the difference / sum channel)
    would be nonzero and the scalar equation would not hold.
    """
    if which == "upper_g":
        if not pots.is_spin_symmetric():
            raise SymmetryError(
                "upper_g decoupling needs a constant difference channel and no "
                "phi/tensor couplings")
        nu = max(float(sector.k), 1.0 - float(sector.k))
    elif which == "lower_f":
        if not pots.is_pseudospin_symmetric():
            raise SymmetryError(
                "lower_f decoupling needs a constant sum channel and no "
                "phi/tensor couplings")
        nu = max(float(sector.k) + 1.0, -float(sector.k))
    else:
        raise ValueError("which must be 'upper_g' or 'lower_f'")

    rho = grid.rho
    lo, hi = energy_window
    k = float(sector.k)

    def rhs_for(eps):
        def rhs(r, y):
            return np.array([y[1], _second_order_q(sector, pots, which, eps, r) * y[0]])
        return rhs

    left_pts = rho[_coarse_indices(len(rho) // 2)]
    i_match = _choose_match_index(sector, pots, grid, 0.5 * (lo + hi))
    left_pts = rho[:i_match + 1][_coarse_indices(i_match + 1)]
    right_pts = rho[i_match:][_coarse_indices(len(rho) - i_match)][::-1]

    def match(eps: float) -> tuple[float, int]:
        q_end = _second_order_q(sector, pots, which, eps, rho[-1])
        if q_end <= 0:
            return math.nan, -1
        rhs = rhs_for(eps)
        y0 = np.array([1.0, nu / rho[0]])
        out = _integrate_chunked(left_pts, y0, rhs, rtol)
        y1 = np.array([1.0, -math.sqrt(q_end)])
        inw = _integrate_chunked(right_pts, y1, rhs, rtol)
        uo, do = out[0, -1], out[1, -1]
        ui, di = inw[0, -1], inw[1, -1]
        denom = math.sqrt((uo * uo + do * do) * (ui * ui + di * di))
        if denom == 0.0:
            return math.nan, -1
        return (uo * di - ui * do) / denom, _count_nodes(out[0])

    warns: list[str] = []
    brackets = _bracket_roots(match, (lo, hi), n_scan, warns)
    solutions: dict[int, RadialSolution] = {}
    for a, b in brackets:
        try:
            eps_root = brentq(lambda e: match(e)[0], a, b,
                              xtol=1e-14, rtol=4 * np.finfo(float).eps)
        except ValueError:
            continue
        rhs = rhs_for(eps_root)
        out = _integrate_chunked(rho[:i_match + 1], np.array([1.0, nu / rho[0]]),
                                 rhs, rtol)
        q_end = _second_order_q(sector, pots, which, eps_root, rho[-1])
        inw = _integrate_chunked(rho[i_match:][::-1],
                                 np.array([1.0, -math.sqrt(q_end)]), rhs, rtol)
        inw = inw[:, ::-1]
        alpha = float(inw[:, 0] @ out[:, -1]) / float(inw[:, 0] @ inw[:, 0])
        u = np.concatenate([out[0], alpha * inw[0, 1:]])
        du = np.concatenate([out[1], alpha * inw[1, 1:]])
        # companion amplitude from the first-order relation (W = 0 here)
        if which == "upper_g":
            den = pots.mass + eps_root - np.asarray(pots.delta(rho))
            comp = (du - (k / rho) * u) / den
            g, f = u, comp
        else:
            den = pots.mass - eps_root + np.asarray(pots.sigma(rho))
            comp = (du + (k / rho) * u) / den
            g, f = comp, u
        norm_sq = simpson(g * g + f * f, x=rho)
        g = g / math.sqrt(norm_sq)
        f = f / math.sqrt(norm_sq)
        n_g = _count_nodes(g)
        n_key = _count_nodes(u / math.sqrt(norm_sq))
        sol = RadialSolution(sector=sector, n=n_g, eps=float(eps_root), rho=rho,
                             g=g, f=f,
                             norm_residual=abs(simpson(g * g + f * f, x=rho) - 1.0),
                             match_residual=abs(match(eps_root)[0]),
                             n_f=_count_nodes(f))
        if n_key > max_nodes:
            continue
        if n_key in solutions:
            continue
        solutions[n_key] = sol
    return sorted(solutions.values(), key=lambda s: s.eps)


# ---------------------------------------------------------------------------
# grid sizing
# ---------------------------------------------------------------------------

def grid_for_problem(pots: PotentialSet, sector: QuantumNumbers,
                     energy_window: tuple[float, float],
                     n_points: int = 2000, rho_min: float = 1e-4,
                     decay_exponent: float = 20.0,
                     rho_cap: float = 200.0) -> RadialGrid:
    """Grid whose outer edge gives at least e^-decay_exponent of envelope decay.

    Scans outward from the outermost classical turning point accumulating the
    local decay rate for both window edges.
    """
    probe = np.linspace(rho_min, rho_cap, 4000)
    need = decay_exponent
    best = None
    for eps in energy_window:
        q = _forbidden_rate(sector, eps, pots, probe)
        allowed = q < 0
        i_turn = int(np.max(np.where(allowed)[0])) + 1 if np.any(allowed) else 0
        kappa = np.sqrt(np.clip(q, 0.0, None))
        accum = np.concatenate([[0.0], np.cumsum(
            0.5 * (kappa[1:] + kappa[:-1]) * np.diff(probe))])
        target = accum[i_turn] + need
        if accum[-1] < target:
            raise ValueError(
                f"cannot reach e^-{need:g} decay inside rho <= {rho_cap:g} "
                f"for eps={eps:g}")
        i_edge = int(np.searchsorted(accum, target))
        cand = probe[min(i_edge, len(probe) - 1)]
        best = cand if best is None else max(best, cand)
    rho_max = 1.1 * best
    return RadialGrid(rho_min=rho_min, rho_max=float(rho_max), n_points=n_points)
