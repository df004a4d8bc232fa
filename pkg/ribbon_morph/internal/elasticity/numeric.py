import logging
import math
from typing import Optional, Sequence

import numpy as np
from scipy.linalg import cho_factor, cho_solve
from scipy.optimize import brentq

from ribbon_morph.internal.dto.dto import (
    EquilibriumSolution,
    ResidualStrain,
    RibbonSection,
    SurfaceStressSpec,
)
from ribbon_morph.internal.elasticity.functional import (
    Scaling,
    assemble,
    build_plies,
    phi_derivative,
    surface_vector,
    unknown_vector,
)

logger = logging.getLogger(__name__)

DEFAULT_SCAN_POINTS = 2000
FLAT_PROFILE = 1e-9


class _Problem:
    """Nondimensional energy of one section and load case."""

    def __init__(
            self,
            section: RibbonSection,
            f_plus: Optional[SurfaceStressSpec],
            f_minus: Optional[SurfaceStressSpec],
            residual: Optional[Sequence[ResidualStrain]],
    ) -> None:
        self.scaling = Scaling.for_section(section)
        self.plies = build_plies(section, residual, self.scaling)
        self.f_minus = surface_vector(f_minus, self.scaling.surface_stress)
        self.f_plus = surface_vector(f_plus, self.scaling.surface_stress)

    def profile(self, phis: np.ndarray) -> np.ndarray:
        form = assemble(self.plies, phis, self.f_minus, self.f_plus)
        x = np.linalg.solve(form.matrix, -form.linear[..., None])[..., 0]
        return form.constant + 0.5 * np.einsum("...i,...i->...", form.linear, x)

    def stationary_x(self, phi: float) -> tuple[np.ndarray, float, np.ndarray]:
        form = assemble(self.plies, phi, self.f_minus, self.f_plus)
        x = cho_solve(cho_factor(form.matrix), -form.linear)
        return x, float(form.energy(x)), form.gradient(x)

    def slope(self, phi: float) -> float:
        x, _, _ = self.stationary_x(phi)
        return phi_derivative(self.plies, phi, x, self.f_minus, self.f_plus)

    def energy(self, x: np.ndarray, phi: float) -> float:
        return float(assemble(self.plies, phi, self.f_minus, self.f_plus).energy(x))


def _refine(problem: _Problem, phi: float, half_width: float) -> float:
    lo, hi = phi - half_width, phi + half_width
    g_lo, g_hi = problem.slope(lo), problem.slope(hi)
    if g_lo == 0.0:
        return lo
    if g_hi == 0.0:
        return hi
    if g_lo < 0.0 < g_hi:
        return brentq(problem.slope, lo, hi, xtol=1e-15, rtol=4.0 * np.finfo(float).eps, maxiter=200)
    return phi


def solve_stationary_numeric(
        section: RibbonSection,
        f_plus: Optional[SurfaceStressSpec] = None,
        f_minus: Optional[SurfaceStressSpec] = None,
        residual: Optional[Sequence[ResidualStrain]] = None,
        scan_points: int = DEFAULT_SCAN_POINTS,
) -> EquilibriumSolution:
    """Minimises the energy over all eight unknowns.

    For each angle of a dense scan the remaining seven unknowns follow from
    one linear solve; the lowest scan point is refined by a root search on
    the analytic slope of the reduced energy. The returned labelling has
    kappa1 >= kappa2.
    """
    problem = _Problem(section, f_plus, f_minus, residual)
    phis = -0.5 * math.pi + math.pi * np.arange(scan_points) / scan_points
    profile = problem.profile(phis)

    spread = float(profile.max() - profile.min())
    degenerate = spread <= FLAT_PROFILE * float(np.abs(profile).max())
    if degenerate:
        phi = 0.0
        logger.debug("flat energy profile over phi", extra={"data": {"spread": spread}})
    else:
        best = int(np.lexsort((np.abs(phis), profile))[0])
        phi = _refine(problem, float(phis[best]), math.pi / scan_points)

    x, energy, grad = problem.stationary_x(phi)
    slope = 0.0 if degenerate else phi_derivative(problem.plies, phi, x, problem.f_minus, problem.f_plus)

    length = problem.scaling.length
    kappa1, kappa2 = float(x[0] / length), float(x[1] / length)
    if degenerate:
        # equal curvatures: keep phi = 0 and only order the labels
        kappa1, kappa2 = max(kappa1, kappa2), min(kappa1, kappa2)
    return EquilibriumSolution(
        kappa1=kappa1,
        kappa2=kappa2,
        phi=phi,
        q=float(x[2] / length),
        eps_xx=float(x[3]),
        eps_yy=float(x[4]),
        eps_xy=float(x[5]),
        eps_zz=float(x[6]),
        energy=energy * problem.scaling.energy,
        degenerate=degenerate,
        gradient_norm=float(np.linalg.norm(np.append(grad, slope))),
    ).canonical()


def finite_difference_gradient(
        section: RibbonSection,
        solution: EquilibriumSolution,
        f_plus: Optional[SurfaceStressSpec] = None,
        f_minus: Optional[SurfaceStressSpec] = None,
        residual: Optional[Sequence[ResidualStrain]] = None,
        step: float = 1e-5,
) -> np.ndarray:
    """Central differences of the nondimensional energy over (x, phi)."""
    problem = _Problem(section, f_plus, f_minus, residual)
    point = np.append(unknown_vector(solution, problem.scaling), solution.phi)

    def energy(p: np.ndarray) -> float:
        return problem.energy(p[:7], float(p[7]))

    grad = np.empty(8)
    for k in range(8):
        delta = np.zeros(8)
        delta[k] = step
        grad[k] = (energy(point + delta) - energy(point - delta)) / (2.0 * step)
    return grad


def nondimensional_energy(
        section: RibbonSection,
        point: np.ndarray,
        f_plus: Optional[SurfaceStressSpec] = None,
        f_minus: Optional[SurfaceStressSpec] = None,
        residual: Optional[Sequence[ResidualStrain]] = None,
) -> float:
    """Energy at ``point = (x, phi)`` in units of E_ref * H."""
    problem = _Problem(section, f_plus, f_minus, residual)
    return problem.energy(np.asarray(point[:7], dtype=float), float(point[7]))
