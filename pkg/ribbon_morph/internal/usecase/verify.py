"""Oracle suites: closed forms checked against independent computations."""
import math
from typing import List

import numpy as np

from ribbon_morph.internal.dto.dto import (
    PrincipalCurvatureState,
    RibbonSection,
    SurfaceStressSpec,
    VerificationResult,
)
from ribbon_morph.internal.dto.request import VerifyRequest
from ribbon_morph.internal.elasticity.closed_form import solve_single_surface
from ribbon_morph.internal.elasticity.numeric import solve_stationary_numeric
from ribbon_morph.internal.errors import ResidualError
from ribbon_morph.internal.geometry.core import (
    centerline_points,
    descriptors,
    frame_axes,
    identity_residual,
    orthogonality_residual,
)
from ribbon_morph.internal.geometry.oracle import integrate_edge_numeric, integrate_frames_numeric
from ribbon_morph.internal.surface.surface import edge_points
from ribbon_morph.internal.usecase.interfaces import ILogger
from ribbon_morph.internal.utils.angles import axis_angle_difference

ODE_SPAN = 20.0
ODE_STEP = 1e-3
EDGE_SPAN = 1.0


def random_state(rng: np.random.Generator, bound: float) -> PrincipalCurvatureState:
    k1, k2 = rng.uniform(-bound, bound, size=2)
    return PrincipalCurvatureState(float(k1), float(k2), float(rng.uniform(-math.pi, math.pi)))


def identity_suite(rng: np.random.Generator, cases: int) -> List[VerificationResult]:
    identity, orthogonality, period = 0.0, 0.0, 0.0
    s = np.linspace(0.0, 10.0, 16)
    for _ in range(cases):
        state = random_state(rng, 10.0)
        identity = max(identity, identity_residual(state))
        orthogonality = max(orthogonality, orthogonality_residual(state, s))

        d = descriptors(state)
        if d.alpha == 0.0:
            continue
        s0 = float(rng.uniform(0.0, 10.0))
        shift = centerline_points(state, s0 + 2.0 * math.pi / d.alpha) - centerline_points(state, s0)
        period = max(period, float(np.linalg.norm(shift - d.axial_advance * d.axis)) / max(1.0, d.pitch))

    return [
        VerificationResult("identity", "alpha^2 = beta^2 + tau^2", identity, cases),
        VerificationResult("identity", "frame orthonormality", orthogonality, cases),
        VerificationResult("identity", "one turn advances one pitch along the axis", period, cases),
    ]


def ode_suite(rng: np.random.Generator, cases: int) -> List[VerificationResult]:
    frames_dev, edge_dev = 0.0, 0.0
    for _ in range(cases):
        state = random_state(rng, 3.0)
        frames = integrate_frames_numeric(state, ODE_SPAN, ODE_STEP)
        s = np.linspace(0.0, ODE_SPAN, len(frames))
        tangent, width, normal = frame_axes(state, s)
        numeric = {
            "position": np.array([f.position for f in frames]),
            "tangent": np.array([f.tangent for f in frames]),
            "normal": np.array([f.normal for f in frames]),
        }
        closed = {"position": centerline_points(state, s), "tangent": tangent, "normal": normal}
        for key in numeric:
            frames_dev = max(frames_dev, float(np.max(np.abs(numeric[key] - closed[key]))))

        edge = integrate_edge_numeric(state, EDGE_SPAN, ODE_STEP)
        t = np.linspace(0.0, EDGE_SPAN, len(edge))
        edge_dev = max(edge_dev, float(np.max(np.abs(edge - edge_points(state, t)))))

    return [
        VerificationResult("ode", "centerline and frames match integration", frames_dev, cases),
        VerificationResult("ode", "cross-width line matches integration", edge_dev, cases),
    ]


def _random_load(rng: np.random.Generator):
    section = RibbonSection(
        thickness=float(10.0 ** rng.uniform(-4, -2)),
        youngs_modulus=float(10.0 ** rng.uniform(5, 10)),
        poisson_ratio=float(rng.uniform(0.0, 0.49)),
    )
    f1, f2 = rng.uniform(-1.0, 1.0, size=2)
    scale = float(10.0 ** rng.uniform(-2, 1))
    return section, SurfaceStressSpec(f1 * scale, f2 * scale, float(rng.uniform(-math.pi, math.pi)))


def elasticity_suite(rng: np.random.Generator, cases: int, scan_points: int = 2000) -> List[VerificationResult]:
    agreement, gradient = 0.0, 0.0
    for _ in range(cases):
        section, load = _random_load(rng)
        closed = solve_single_surface(section, load).canonical()
        numeric = solve_stationary_numeric(section, f_minus=load, scan_points=scan_points)

        k_scale = max(abs(closed.kappa1), abs(closed.kappa2))
        e_scale = max(abs(closed.eps_xx), abs(closed.eps_yy), abs(closed.eps_xy), abs(closed.eps_zz))
        deviations = [
            abs(numeric.kappa1 - closed.kappa1) / k_scale,
            abs(numeric.kappa2 - closed.kappa2) / k_scale,
            abs(numeric.q - closed.q) / k_scale,
            axis_angle_difference(numeric.phi, closed.phi) * abs(closed.kappa1 - closed.kappa2) / k_scale,
        ]
        for name in ("eps_xx", "eps_yy", "eps_xy", "eps_zz"):
            deviations.append(abs(getattr(numeric, name) - getattr(closed, name)) / e_scale)

        agreement = max(agreement, max(deviations))
        gradient = max(gradient, numeric.gradient_norm, closed.gradient_norm)

    return [
        VerificationResult("elasticity", "numeric stationary point matches closed form", agreement, cases),
        VerificationResult("elasticity", "energy gradient vanishes at the solution", gradient, cases),
    ]


class VerifyUseCase:
    def __init__(self, logger: ILogger, scan_points: int) -> None:
        self._logger: ILogger = logger
        self._scan_points = scan_points

    def verify(self, request: VerifyRequest) -> List[VerificationResult]:
        rng = np.random.default_rng(request.seed)
        results = identity_suite(rng, request.identity_cases)
        results += ode_suite(rng, request.ode_cases)
        results += elasticity_suite(rng, request.elasticity_cases, self._scan_points)

        for r in results:
            self._logger.debug("suite finished", suite=r.suite, invariant=r.invariant, residual=r.residual)
        return results

    @staticmethod
    def check(results: List[VerificationResult], tolerance: float) -> None:
        for r in results:
            if not r.passed(tolerance):
                raise ResidualError(r.invariant, r.residual, tolerance)
