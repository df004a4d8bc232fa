"""Two-parameter ribbon surface Q(s, t).

The cross-width material line through the origin is transported along the
centerline by the moving frame:

    Q(s, t) = P(s) + [X~(t), Y~(t), Z~(t)] . A(s)

where the rows of A(s) are (d_x, d_y, N) at arclength s. The expanded
scalar form below is the primary evaluator; the composition is kept for
cross-checking.
"""
import math

import numpy as np

from ribbon_morph.internal.dto.dto import PrincipalCurvatureState, RibbonExtent, TriangleMesh
from ribbon_morph.internal.geometry.core import (
    centerline_points,
    curvature_invariants,
    frame_axes,
    width_invariants,
)
from ribbon_morph.internal.geometry.series import excess_term, sinc_term, versine_term


def edge_points(state: PrincipalCurvatureState, t) -> np.ndarray:
    alpha_w, beta_w, tau = width_invariants(state)
    t = np.asarray(t, dtype=float)
    f1 = excess_term(alpha_w, t)
    f2 = versine_term(alpha_w, t)
    return np.stack([beta_w * tau * f1, t - beta_w * beta_w * f1, -beta_w * f2], axis=-1)


def edge_curve(state: PrincipalCurvatureState, t: float) -> np.ndarray:
    return edge_points(state, t)


def rotation_matrix(state: PrincipalCurvatureState, s: float) -> np.ndarray:
    tangent, width, normal = frame_axes(state, s)
    return np.vstack([tangent, width, normal])


def surface_points(state: PrincipalCurvatureState, s, t) -> np.ndarray:
    """Broadcast evaluation of Q over arrays ``s`` and ``t``."""
    s, t = np.broadcast_arrays(np.asarray(s, dtype=float), np.asarray(t, dtype=float))
    alpha, beta, tau = curvature_invariants(state)

    center = centerline_points(state, s)
    edge = edge_points(state, t)
    ex, ey, ez = edge[..., 0], edge[..., 1], edge[..., 2]

    f2 = versine_term(alpha, s)
    g = sinc_term(alpha, s)
    cos_as = np.cos(alpha * s)

    x = center[..., 0] + ex * (1.0 - beta * beta * f2) + ey * beta * tau * f2 + ez * beta * g
    y = center[..., 1] + ex * beta * tau * f2 + ey * (1.0 - tau * tau * f2) - ez * tau * g
    z = center[..., 2] - ex * beta * g + ey * tau * g + ez * cos_as
    return np.stack([x, y, z], axis=-1)


def surface_point(state: PrincipalCurvatureState, s: float, t: float) -> np.ndarray:
    return surface_points(state, s, t)


def composed_surface_point(state: PrincipalCurvatureState, s: float, t: float) -> np.ndarray:
    return centerline_points(state, s) + edge_points(state, t) @ rotation_matrix(state, s)


def tessellate(state: PrincipalCurvatureState, extent: RibbonExtent) -> TriangleMesh:
    ns, nt = extent.samples_s, extent.samples_t
    s_values = np.linspace(0.0, extent.length, ns)
    t_values = np.linspace(-0.5 * extent.width, 0.5 * extent.width, nt)
    s_grid, t_grid = np.meshgrid(s_values, t_values, indexing="ij")

    vertices = surface_points(state, s_grid, t_grid).reshape(-1, 3)
    params = np.stack([s_grid.ravel(), t_grid.ravel()], axis=-1)

    i, j = np.meshgrid(np.arange(ns - 1), np.arange(nt - 1), indexing="ij")
    v00 = (i * nt + j).ravel()
    v01 = v00 + 1
    v10 = v00 + nt
    v11 = v10 + 1
    triangles = np.empty((2 * v00.size, 3), dtype=np.int64)
    triangles[0::2] = np.stack([v00, v10, v11], axis=-1)
    triangles[1::2] = np.stack([v00, v11, v01], axis=-1)

    return TriangleMesh(
        vertices=vertices,
        triangles=triangles,
        params=params,
        samples_s=ns,
        samples_t=nt,
        state=state,
    )


def mesh_area(mesh: TriangleMesh) -> float:
    a, b, c = (mesh.vertices[mesh.triangles[:, k]] for k in range(3))
    return float(0.5 * np.linalg.norm(np.cross(b - a, c - a), axis=1).sum())


def tubule_threshold_width(state: PrincipalCurvatureState) -> float:
    """Width at which successive coils of a cylindrical helix close up: D cos(Phi)."""
    alpha, beta, tau = curvature_invariants(state)
    if alpha == 0.0 or tau == 0.0:
        return math.inf
    return 2.0 * math.pi * abs(tau / alpha) * abs(beta / alpha) / alpha
