"""Closed-form kinematics of a ribbon with constant principal curvatures.

Along the centerline the material frame (d_x, d_y, N) obeys

    d_x' = -beta N,   d_y' = tau N,   N' = beta d_x - tau d_y

with beta = k1 cos^2 phi + k2 sin^2 phi, tau = (k1 - k2) sin phi cos phi and
alpha^2 = beta^2 + tau^2. Starting from the laboratory triad the solution is
a screw motion, so every quantity below is written through the guarded
helpers in ``series`` and stays finite in the flat limit.
"""
import math
from typing import Tuple

import numpy as np

from ribbon_morph.internal.dto.dto import (
    FrameState,
    HelixDescriptors,
    MorphologyClass,
    PrincipalCurvatureState,
)
from ribbon_morph.internal.dto.enums import Morphology
from ribbon_morph.internal.errors import InvalidInputError
from ribbon_morph.internal.geometry.series import excess_term, sinc_term, versine_term

DEFAULT_TOLERANCE = 1e-9


def curvature_invariants(state: PrincipalCurvatureState) -> Tuple[float, float, float]:
    """(alpha, beta, tau) of the centerline."""
    c, s = math.cos(state.phi), math.sin(state.phi)
    beta = state.kappa1 * c * c + state.kappa2 * s * s
    tau = (state.kappa1 - state.kappa2) * s * c
    alpha = math.hypot(state.kappa1 * c, state.kappa2 * s)
    return alpha, beta, tau


def width_invariants(state: PrincipalCurvatureState) -> Tuple[float, float, float]:
    """(alpha, beta, tau) of a material line running across the width."""
    c, s = math.cos(state.phi), math.sin(state.phi)
    beta = state.kappa1 * s * s + state.kappa2 * c * c
    tau = (state.kappa1 - state.kappa2) * s * c
    alpha = math.hypot(state.kappa1 * s, state.kappa2 * c)
    return alpha, beta, tau


def descriptors(state: PrincipalCurvatureState, tol: float = DEFAULT_TOLERANCE) -> HelixDescriptors:
    alpha, beta, tau = curvature_invariants(state)

    if alpha == 0.0:
        # flat, or bent across the width only: the centerline stays straight
        return HelixDescriptors(
            alpha=0.0,
            beta=0.0,
            tau=0.0,
            helix_angle=0.0,
            radius=0.0,
            pitch=0.0,
            axis=np.zeros(3),
            chirality=0,
            axis_defined=False,
            axial_advance=0.0,
            axis_point=np.zeros(3),
        )

    ratio = min(1.0, max(-1.0, tau / alpha))
    chirality = 0 if abs(tau) <= tol * alpha else (1 if tau > 0 else -1)
    helix_angle = math.asin(ratio) if chirality != 0 else 0.0
    # divided in two steps: alpha * alpha underflows for tiny curvatures
    beta_a, tau_a = beta / alpha, tau / alpha

    return HelixDescriptors(
        alpha=alpha,
        beta=beta,
        tau=tau,
        helix_angle=helix_angle,
        radius=abs(beta_a) / alpha,
        pitch=2.0 * math.pi * abs(tau_a) / alpha,
        axis=np.array([tau_a, beta_a, 0.0]),
        chirality=chirality,
        axis_defined=True,
        axial_advance=2.0 * math.pi * tau_a / alpha,
        axis_point=np.array([0.0, 0.0, -beta_a / alpha]),
    )


def centerline_points(state: PrincipalCurvatureState, s) -> np.ndarray:
    """Vectorised centerline, shape ``s.shape + (3,)``."""
    alpha, beta, tau = curvature_invariants(state)
    s = np.asarray(s, dtype=float)
    f1 = excess_term(alpha, s)
    f2 = versine_term(alpha, s)
    return np.stack([s - beta * beta * f1, beta * tau * f1, -beta * f2], axis=-1)


def centerline_point(state: PrincipalCurvatureState, s: float) -> np.ndarray:
    if not math.isfinite(s):
        raise InvalidInputError(f"arclength must be finite, got {s}")
    return centerline_points(state, s)


def frame_axes(state: PrincipalCurvatureState, s) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Vectorised (d_x, d_y, N) along the centerline."""
    alpha, beta, tau = curvature_invariants(state)
    s = np.asarray(s, dtype=float)
    f2 = versine_term(alpha, s)
    g = sinc_term(alpha, s)
    cos_as = np.cos(alpha * s)

    tangent = np.stack([1.0 - beta * beta * f2, beta * tau * f2, -beta * g], axis=-1)
    width = np.stack([beta * tau * f2, 1.0 - tau * tau * f2, tau * g], axis=-1)
    normal = np.stack([beta * g, -tau * g, cos_as], axis=-1)
    return tangent, width, normal


def frame_at(state: PrincipalCurvatureState, s: float) -> FrameState:
    if not math.isfinite(s):
        raise InvalidInputError(f"arclength must be finite, got {s}")
    tangent, width, normal = frame_axes(state, s)
    c, sn = math.cos(state.phi), math.sin(state.phi)
    return FrameState(
        position=centerline_points(state, s),
        tangent=tangent,
        normal=normal,
        binormal=np.cross(tangent, normal),
        r1=c * tangent - sn * width,
        r2=sn * tangent + c * width,
    )


def classify(
        state: PrincipalCurvatureState,
        tol: float = DEFAULT_TOLERANCE,
        scale: float = 1.0,
) -> MorphologyClass:
    """Assigns exactly one morphology; every band is relative to alpha.

    ``scale`` is the reference curvature for the flat test. A ribbon bent
    only across its width (alpha = 0 but a curvature present) keeps a
    straight centerline on a developable trough and is reported as a
    cylindrical helix of zero radius.
    """
    if not tol > 0:
        raise InvalidInputError(f"tolerance must be positive, got {tol}")

    gauss = state.kappa1 * state.kappa2
    mean = 0.5 * (state.kappa1 + state.kappa2)
    alpha, beta, tau = curvature_invariants(state)

    if state.kappa_max <= tol * scale:
        kind = Morphology.FLAT
    elif alpha == 0.0:
        kind = Morphology.CYLINDRICAL_HELIX
    elif abs(tau) <= tol * alpha and abs(beta) > tol * alpha:
        kind = Morphology.RING
    elif abs(beta) <= tol * alpha:
        kind = Morphology.PURELY_TWISTED
    elif abs(gauss) <= tol * alpha * alpha:
        kind = Morphology.CYLINDRICAL_HELIX
    elif gauss < 0:
        kind = Morphology.GENERAL_HELIX_SADDLE
    else:
        kind = Morphology.GENERAL_HELIX_CONVEX

    return MorphologyClass(kind=kind, gauss_curvature=gauss, mean_curvature=mean)


def mirror(state: PrincipalCurvatureState) -> PrincipalCurvatureState:
    """Mirror image: same alpha and beta, opposite torsion."""
    return PrincipalCurvatureState(state.kappa2, state.kappa1, 0.5 * math.pi - state.phi)


def identity_residual(state: PrincipalCurvatureState) -> float:
    alpha, beta, tau = curvature_invariants(state)
    return abs(alpha * alpha - beta * beta - tau * tau) / max(alpha * alpha, 1.0)


def orthogonality_residual(state: PrincipalCurvatureState, s) -> float:
    """Largest deviation of (d_x, d_y, N) from an orthonormal triad over ``s``."""
    tangent, width, normal = frame_axes(state, np.atleast_1d(s))
    frames = np.stack([tangent, width, normal], axis=-2)
    gram = frames @ np.swapaxes(frames, -1, -2)
    return float(np.max(np.abs(gram - np.eye(3))))
