import math
from dataclasses import replace

from ribbon_morph.internal.dto.dto import (
    EquilibriumSolution,
    RibbonSection,
    StressDecomposition,
    SurfaceStressSpec,
    TwoSurfaceSolution,
)
from ribbon_morph.internal.elasticity.functional import energy_density, gradient_norm
from ribbon_morph.internal.errors import InvalidInputError


def _require_homogeneous(section: RibbonSection) -> None:
    if section.is_layered:
        raise InvalidInputError("closed-form solutions need a homogeneous section; use the numeric solver")


def _principal_solution(section: RibbonSection, load: SurfaceStressSpec) -> EquilibriumSolution:
    E, nu, H = section.youngs_modulus, section.poisson_ratio, section.thickness
    f1, f2 = load.f1, load.f2

    kappa1 = 6.0 * (f1 - nu * f2) / (E * H ** 2)
    kappa2 = 6.0 * (f2 - nu * f1) / (E * H ** 2)
    q = -6.0 * nu * (f1 + f2) / (E * H ** 2)
    eps11 = -(f1 - nu * f2) / (E * H)
    eps22 = -(f2 - nu * f1) / (E * H)
    eps33 = nu * (f1 + f2) / (E * H)

    phi = load.orientation
    c, s = math.cos(phi), math.sin(phi)
    return EquilibriumSolution(
        kappa1=kappa1,
        kappa2=kappa2,
        phi=phi,
        q=q,
        eps_xx=eps11 * c * c + eps22 * s * s,
        eps_yy=eps11 * s * s + eps22 * c * c,
        eps_xy=(eps22 - eps11) * s * c,
        eps_zz=eps33,
        degenerate=load.is_isotropic,
    )


def solve_single_surface(section: RibbonSection, f_minus: SurfaceStressSpec) -> EquilibriumSolution:
    """Surface stress on the bottom face only: curvature axes follow the stress axes."""
    _require_homogeneous(section)
    solution = _principal_solution(section, f_minus)
    return replace(
        solution,
        energy=energy_density(section, solution, f_minus=f_minus),
        gradient_norm=gradient_norm(section, solution, f_minus=f_minus),
    )


def decouple_two_surfaces(f_plus: SurfaceStressSpec, f_minus: SurfaceStressSpec) -> StressDecomposition:
    plus, minus = f_plus.tensor(), f_minus.tensor()
    return StressDecomposition(
        stretch=SurfaceStressSpec.from_tensor(plus + minus),
        bend=SurfaceStressSpec.from_tensor(minus - plus),
    )


def solve_two_surface(
        section: RibbonSection,
        f_plus: SurfaceStressSpec,
        f_minus: SurfaceStressSpec,
) -> TwoSurfaceSolution:
    """Bending from the difference of the face stresses, stretching from their sum."""
    _require_homogeneous(section)
    parts = decouple_two_surfaces(f_plus, f_minus)
    bending = _principal_solution(section, parts.bend)
    stretching = _principal_solution(section, parts.stretch)

    solution = replace(
        bending,
        eps_xx=stretching.eps_xx,
        eps_yy=stretching.eps_yy,
        eps_xy=stretching.eps_xy,
        eps_zz=stretching.eps_zz,
    )
    solution = replace(
        solution,
        energy=energy_density(section, solution, f_minus=f_minus, f_plus=f_plus),
        gradient_norm=gradient_norm(section, solution, f_minus=f_minus, f_plus=f_plus),
    )
    return TwoSurfaceSolution(
        solution=solution,
        stretch_strain=stretching.membrane_tensor,
        decomposition=parts,
    )
