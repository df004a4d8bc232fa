import math
from typing import Tuple

import numpy as np

from ribbon_morph.internal.dto.dto import TriangleMesh
from ribbon_morph.internal.errors import InvalidInputError


def _cot(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    cross = np.linalg.norm(np.cross(u, v), axis=-1)
    return np.einsum("...k,...k->...", u, v) / cross


def discrete_curvatures(mesh: TriangleMesh, at: int) -> Tuple[float, float]:
    """Gauss curvature (angle defect) and mean curvature (cotangent Laplacian)
    at an interior vertex, both normalised by the mixed Voronoi area.

    Returns ``(K, H)`` with ``H >= 0``.
    """
    if not 0 <= at < mesh.vertex_count:
        raise InvalidInputError(f"vertex {at} out of range")
    if mesh.is_boundary(at):
        raise InvalidInputError(f"vertex {at} lies on the mesh boundary")

    ring = mesh.triangles[np.any(mesh.triangles == at, axis=1)]
    # rotate every incident triangle so that the queried vertex comes first
    shift = np.argmax(ring == at, axis=1)
    order = (shift[:, None] + np.arange(3)[None, :]) % 3
    ring = np.take_along_axis(ring, order, axis=1)

    p = mesh.vertices[ring[:, 0]]
    q = mesh.vertices[ring[:, 1]]
    r = mesh.vertices[ring[:, 2]]

    angle_p = np.arccos(np.clip(
        np.einsum("ik,ik->i", q - p, r - p)
        / (np.linalg.norm(q - p, axis=1) * np.linalg.norm(r - p, axis=1)),
        -1.0, 1.0,
    ))
    cot_q = _cot(p - q, r - q)
    cot_r = _cot(p - r, q - r)
    area = 0.5 * np.linalg.norm(np.cross(q - p, r - p), axis=1)

    pq2 = np.einsum("ik,ik->i", q - p, q - p)
    pr2 = np.einsum("ik,ik->i", r - p, r - p)
    voronoi = (pr2 * cot_q + pq2 * cot_r) / 8.0

    obtuse_p = angle_p > 0.5 * math.pi
    obtuse_other = (cot_q < 0) | (cot_r < 0)
    mixed = np.where(obtuse_p, area / 2.0, np.where(obtuse_other, area / 4.0, voronoi))
    a_mixed = float(mixed.sum())

    gauss = (2.0 * math.pi - float(angle_p.sum())) / a_mixed

    laplace = (cot_r[:, None] * (q - p) + cot_q[:, None] * (r - p)).sum(axis=0) / (2.0 * a_mixed)
    mean = 0.5 * float(np.linalg.norm(laplace))
    return gauss, mean
