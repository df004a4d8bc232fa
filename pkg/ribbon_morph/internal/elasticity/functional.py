"""Quadratic energy per unit area of a (possibly layered) ribbon section.

Unknowns are ordered x = (k1, k2, q, e_xx, e_yy, e_xy, e_zz) with the
principal-axis angle phi kept apart. The strain at height z above the
reference plane is collected as v = (g_xx, g_yy, g_zz, g_xy):

    v(z) = (A + z B(phi)) x + g0

so for fixed phi the energy is 1/2 x'Kx + b'x + c with every thickness
integral taken exactly per ply.
"""
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from ribbon_morph.internal.dto.dto import (
    EquilibriumSolution,
    ResidualStrain,
    RibbonSection,
    SurfaceStressSpec,
)
from ribbon_morph.internal.errors import InvalidInputError

UNKNOWNS = ("kappa1", "kappa2", "q", "eps_xx", "eps_yy", "eps_xy", "eps_zz")

MEMBRANE = np.zeros((4, 7))
MEMBRANE[0, 3] = 1.0
MEMBRANE[1, 4] = 1.0
MEMBRANE[2, 6] = 1.0
MEMBRANE[3, 5] = 1.0


@dataclass(frozen=True)
class Ply:
    z_bottom: float
    z_top: float
    stiffness: np.ndarray
    residual: np.ndarray

    @property
    def moments(self) -> tuple[float, float, float]:
        a, b = self.z_bottom, self.z_top
        return b - a, (b * b - a * a) / 2.0, (b ** 3 - a ** 3) / 3.0


@dataclass(frozen=True)
class Scaling:
    length: float
    stress: float

    @property
    def surface_stress(self) -> float:
        return self.stress * self.length

    @property
    def energy(self) -> float:
        return self.stress * self.length

    @staticmethod
    def identity() -> "Scaling":
        return Scaling(length=1.0, stress=1.0)

    @staticmethod
    def for_section(section: RibbonSection) -> "Scaling":
        moduli = [layer.youngs_modulus for layer in section.layers] or [section.youngs_modulus]
        return Scaling(length=section.thickness, stress=max(moduli))


@dataclass(frozen=True)
class QuadraticForm:
    matrix: np.ndarray
    linear: np.ndarray
    constant: float

    def energy(self, x: np.ndarray) -> np.ndarray:
        quadratic = 0.5 * np.einsum("...i,...ij,...j->...", x, self.matrix, x)
        return quadratic + np.einsum("...i,...i->...", self.linear, x) + self.constant

    def gradient(self, x: np.ndarray) -> np.ndarray:
        return np.einsum("...ij,...j->...i", self.matrix, x) + self.linear


def stiffness_matrix(youngs_modulus: float, poisson_ratio: float) -> np.ndarray:
    lam = youngs_modulus * poisson_ratio / ((1.0 + poisson_ratio) * (1.0 - 2.0 * poisson_ratio))
    mu = youngs_modulus / (2.0 * (1.0 + poisson_ratio))
    c = np.zeros((4, 4))
    c[:3, :3] = lam
    c += np.diag([2.0 * mu, 2.0 * mu, 2.0 * mu, 4.0 * mu])
    return c


def bending_operator(phi) -> np.ndarray:
    phi = np.asarray(phi, dtype=float)
    c, s = np.cos(phi), np.sin(phi)
    out = np.zeros(phi.shape + (4, 7))
    out[..., 0, 0], out[..., 0, 1] = c * c, s * s
    out[..., 1, 0], out[..., 1, 1] = s * s, c * c
    out[..., 2, 2] = 1.0
    out[..., 3, 0], out[..., 3, 1] = -s * c, s * c
    return out


def bending_operator_derivative(phi) -> np.ndarray:
    phi = np.asarray(phi, dtype=float)
    c, s = np.cos(phi), np.sin(phi)
    sc2, cos2 = 2.0 * s * c, c * c - s * s
    out = np.zeros(phi.shape + (4, 7))
    out[..., 0, 0], out[..., 0, 1] = -sc2, sc2
    out[..., 1, 0], out[..., 1, 1] = sc2, -sc2
    out[..., 3, 0], out[..., 3, 1] = -cos2, cos2
    return out


def surface_vector(spec: Optional[SurfaceStressSpec], scale: float = 1.0) -> np.ndarray:
    if spec is None:
        return np.zeros(4)
    f = spec.tensor() / scale
    return np.array([f[0, 0], f[1, 1], 0.0, 2.0 * f[0, 1]])


def reference_plane(section: RibbonSection) -> float:
    """Height of the plane-stress stiffness centroid above the bottom face."""
    if not section.is_layered:
        return 0.5 * section.thickness
    weight, moment, bottom = 0.0, 0.0, 0.0
    for layer in section.layers:
        w = layer.youngs_modulus / (1.0 - layer.poisson_ratio ** 2) * layer.thickness
        weight += w
        moment += w * (bottom + 0.5 * layer.thickness)
        bottom += layer.thickness
    return moment / weight


def build_plies(
        section: RibbonSection,
        residual: Optional[Sequence[ResidualStrain]] = None,
        scaling: Scaling = Scaling.identity(),
) -> List[Ply]:
    layers = section.layers
    if not layers:
        g = residual[0] if residual else ResidualStrain()
        materials = [(section.thickness, section.youngs_modulus, section.poisson_ratio, g)]
    else:
        if residual is not None and len(residual) != len(layers):
            raise InvalidInputError(f"expected {len(layers)} residual strains, got {len(residual)}")
        strains = residual if residual is not None else [layer.residual_strain for layer in layers]
        materials = [
            (layer.thickness, layer.youngs_modulus, layer.poisson_ratio, g)
            for layer, g in zip(layers, strains)
        ]

    z = -reference_plane(section)
    plies = []
    for thickness, youngs_modulus, poisson_ratio, g in materials:
        plies.append(Ply(
            z_bottom=z / scaling.length,
            z_top=(z + thickness) / scaling.length,
            stiffness=stiffness_matrix(youngs_modulus / scaling.stress, poisson_ratio),
            residual=g.vector(),
        ))
        z += thickness
    return plies


def assemble(
        plies: Sequence[Ply],
        phi,
        f_minus: np.ndarray,
        f_plus: np.ndarray,
) -> QuadraticForm:
    """Energy as a quadratic form in x at one angle or an array of angles."""
    b_op = bending_operator(phi)
    a_op = MEMBRANE
    at = a_op.T

    matrix = np.zeros(b_op.shape[:-2] + (7, 7))
    linear = np.zeros(b_op.shape[:-2] + (7,))
    constant = 0.0
    for ply in plies:
        m0, m1, m2 = ply.moments
        c = ply.stiffness
        g = ply.residual
        cb = c @ b_op
        bt = np.swapaxes(b_op, -1, -2)
        cross = at @ cb
        matrix = matrix + m0 * (at @ c @ a_op) + m1 * (cross + np.swapaxes(cross, -1, -2)) + m2 * (bt @ cb)
        linear = linear + m0 * (at @ (c @ g)) + m1 * (bt @ (c @ g))
        constant += 0.5 * m0 * float(g @ c @ g)

    bottom, top = plies[0], plies[-1]
    bt = np.swapaxes(b_op, -1, -2)
    linear = linear + at @ f_minus + bottom.z_bottom * (bt @ f_minus)
    linear = linear + at @ f_plus + top.z_top * (bt @ f_plus)
    constant += float(f_minus @ bottom.residual) + float(f_plus @ top.residual)
    return QuadraticForm(matrix=matrix, linear=linear, constant=constant)


def phi_derivative(
        plies: Sequence[Ply],
        phi: float,
        x: np.ndarray,
        f_minus: np.ndarray,
        f_plus: np.ndarray,
) -> float:
    """Partial derivative of the energy in phi at fixed x."""
    b_op = bending_operator(phi)
    d_op = bending_operator_derivative(phi)
    a_op = MEMBRANE

    bx, dx, ax = b_op @ x, d_op @ x, a_op @ x
    total = 0.0
    for ply in plies:
        _, m1, m2 = ply.moments
        c = ply.stiffness
        total += m1 * float(ax @ c @ dx) + m2 * float(bx @ c @ dx) + m1 * float(ply.residual @ c @ dx)

    total += plies[0].z_bottom * float(f_minus @ dx) + plies[-1].z_top * float(f_plus @ dx)
    return total


def unknown_vector(solution: EquilibriumSolution, scaling: Scaling = Scaling.identity()) -> np.ndarray:
    length = scaling.length
    return np.array([
        solution.kappa1 * length,
        solution.kappa2 * length,
        solution.q * length,
        solution.eps_xx,
        solution.eps_yy,
        solution.eps_xy,
        solution.eps_zz,
    ])


def energy_density(
        section: RibbonSection,
        trial: EquilibriumSolution,
        f_minus: Optional[SurfaceStressSpec] = None,
        f_plus: Optional[SurfaceStressSpec] = None,
        residual: Optional[Sequence[ResidualStrain]] = None,
) -> float:
    """Energy per unit area of ``trial`` (surface work plus bulk strain energy)."""
    plies = build_plies(section, residual)
    form = assemble(plies, trial.phi, surface_vector(f_minus), surface_vector(f_plus))
    return float(form.energy(unknown_vector(trial)))


def gradient_norm(
        section: RibbonSection,
        solution: EquilibriumSolution,
        f_minus: Optional[SurfaceStressSpec] = None,
        f_plus: Optional[SurfaceStressSpec] = None,
        residual: Optional[Sequence[ResidualStrain]] = None,
) -> float:
    """Norm of the analytic energy gradient over all eight unknowns, nondimensional."""
    scaling = Scaling.for_section(section)
    plies = build_plies(section, residual, scaling)
    fm = surface_vector(f_minus, scaling.surface_stress)
    fp = surface_vector(f_plus, scaling.surface_stress)
    x = unknown_vector(solution, scaling)
    form = assemble(plies, solution.phi, fm, fp)
    grad = np.append(form.gradient(x), phi_derivative(plies, solution.phi, x, fm, fp))
    return float(np.linalg.norm(grad))
