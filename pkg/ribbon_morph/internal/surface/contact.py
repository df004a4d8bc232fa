"""Edge-contact query between non-adjacent coils of a tessellated ribbon.

The ribbon is cut along its length into patches of arclength
pi / (2 kappa_max). Patches three or more apart are at least pi / kappa_max
apart along the centerline and count as non-adjacent. A KD-tree broad phase
pairs every vertex with its nearest non-adjacent vertex; the narrow phase
measures exact triangle-triangle distances between the two vertex fans of
every pair whose vertex distance is within 2 h_max of the closest one.
"""
import logging
import math

import numpy as np
from scipy.spatial import cKDTree

from ribbon_morph.internal.dto.dto import ContactResult, TriangleMesh

logger = logging.getLogger(__name__)

_EPS = 1e-300
_CHUNK = 100_000
_PATCH_GAP = 3


def _dot(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    return np.einsum("ij,ij->i", u, v)


def _safe(x: np.ndarray) -> np.ndarray:
    return np.where(np.abs(x) > _EPS, x, 1.0)


def _point_segment(p: np.ndarray, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    ab = b - a
    t = np.clip(_dot(p - a, ab) / _safe(_dot(ab, ab)), 0.0, 1.0)
    return np.linalg.norm(p - (a + t[:, None] * ab), axis=1)


def _point_triangle(p: np.ndarray, tri: np.ndarray) -> np.ndarray:
    a, b, c = tri[:, 0], tri[:, 1], tri[:, 2]
    ab, ac, ap = b - a, c - a, p - a
    d00, d01, d11 = _dot(ab, ab), _dot(ab, ac), _dot(ac, ac)
    d20, d21 = _dot(ap, ab), _dot(ap, ac)
    denom = d00 * d11 - d01 * d01
    ok = denom > 1e-14 * d00 * d11
    v = (d11 * d20 - d01 * d21) / _safe(denom)
    w = (d00 * d21 - d01 * d20) / _safe(denom)
    inside = ok & (v >= 0) & (w >= 0) & (v + w <= 1)

    normal = np.cross(ab, ac)
    plane = np.abs(_dot(ap, normal)) / _safe(np.linalg.norm(normal, axis=1))
    edges = np.minimum.reduce([
        _point_segment(p, a, b),
        _point_segment(p, b, c),
        _point_segment(p, c, a),
    ])
    return np.where(inside, plane, edges)


def _segment_segment(p1: np.ndarray, q1: np.ndarray, p2: np.ndarray, q2: np.ndarray) -> np.ndarray:
    d1, d2, r = q1 - p1, q2 - p2, p1 - p2
    a, e, f = _dot(d1, d1), _dot(d2, d2), _dot(d2, r)
    c, b = _dot(d1, r), _dot(d1, d2)
    denom = a * e - b * b

    s = np.where(denom > 1e-14 * a * e, np.clip((b * f - c * e) / _safe(denom), 0.0, 1.0), 0.0)
    t = (b * s + f) / _safe(e)

    low, high = t < 0.0, t > 1.0
    s = np.where(low, np.clip(-c / _safe(a), 0.0, 1.0), s)
    s = np.where(high, np.clip((b - c) / _safe(a), 0.0, 1.0), s)
    t = np.clip(t, 0.0, 1.0)

    return np.linalg.norm((p1 + s[:, None] * d1) - (p2 + t[:, None] * d2), axis=1)


def _segment_hits_triangle(p: np.ndarray, q: np.ndarray, tri: np.ndarray) -> np.ndarray:
    a, b, c = tri[:, 0], tri[:, 1], tri[:, 2]
    d = q - p
    e1, e2 = b - a, c - a
    h = np.cross(d, e2)
    det = _dot(e1, h)
    scale = np.linalg.norm(d, axis=1) * np.linalg.norm(e1, axis=1) * np.linalg.norm(e2, axis=1)
    usable = np.abs(det) > 1e-12 * scale
    inv = 1.0 / _safe(det)
    sv = p - a
    u = inv * _dot(sv, h)
    qv = np.cross(sv, e1)
    v = inv * _dot(d, qv)
    t = inv * _dot(e2, qv)
    return usable & (u >= 0) & (v >= 0) & (u + v <= 1) & (t >= 0) & (t <= 1)


def triangle_distances(first: np.ndarray, second: np.ndarray) -> np.ndarray:
    """Exact distances between paired triangles, arrays of shape (n, 3, 3)."""
    hits = np.zeros(first.shape[0], dtype=bool)
    best = np.full(first.shape[0], np.inf)
    for k in range(3):
        k1 = (k + 1) % 3
        hits |= _segment_hits_triangle(first[:, k], first[:, k1], second)
        hits |= _segment_hits_triangle(second[:, k], second[:, k1], first)
        best = np.minimum(best, _point_triangle(first[:, k], second))
        best = np.minimum(best, _point_triangle(second[:, k], first))
        for m in range(3):
            m1 = (m + 1) % 3
            best = np.minimum(best, _segment_segment(first[:, k], first[:, k1], second[:, m], second[:, m1]))
    return np.where(hits, 0.0, best)


def _vertex_fans(mesh: TriangleMesh) -> np.ndarray:
    corners = mesh.triangles.ravel()
    owners = np.repeat(np.arange(mesh.triangle_count), 3)
    order = np.argsort(corners, kind="stable")
    counts = np.bincount(corners, minlength=mesh.vertex_count)
    starts = np.cumsum(counts) - counts
    slots = np.arange(corners.size) - np.repeat(starts, counts)
    fans = np.full((mesh.vertex_count, int(counts.max())), -1, dtype=np.int64)
    fans[corners[order], slots] = owners[order]
    return fans


def _longest_edge(mesh: TriangleMesh) -> float:
    tri = mesh.vertices[mesh.triangles]
    edges = tri - np.roll(tri, 1, axis=1)
    return float(np.linalg.norm(edges, axis=2).max())


def _nearest_far_vertices(mesh: TriangleMesh, patch: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    nearest = np.full(mesh.vertex_count, np.inf)
    partner = np.full(mesh.vertex_count, -1, dtype=np.int64)
    for p in range(int(patch.max()) - _PATCH_GAP + 1):
        near = np.flatnonzero(patch == p)
        far = np.flatnonzero(patch >= p + _PATCH_GAP)
        if near.size == 0 or far.size == 0:
            continue
        dist, idx = cKDTree(mesh.vertices[far]).query(mesh.vertices[near])
        nearest[near] = dist
        partner[near] = far[idx]
    return nearest, partner


def edge_contact(mesh: TriangleMesh, clearance: float) -> ContactResult:
    state = mesh.state
    kappa_max = state.kappa_max if state is not None else 0.0
    if kappa_max == 0.0:
        return ContactResult(min_gap=math.inf, touching=False)

    patch = np.floor(mesh.params[:, 0] * (2.0 * kappa_max / math.pi)).astype(np.int64)
    if patch.max() < _PATCH_GAP:
        return ContactResult(min_gap=math.inf, touching=False)

    nearest, partner = _nearest_far_vertices(mesh, patch)
    vertex_gap = float(nearest.min())
    if not math.isfinite(vertex_gap):
        return ContactResult(min_gap=math.inf, touching=False)

    reach = vertex_gap + 2.0 * _longest_edge(mesh)
    sources = np.flatnonzero(nearest <= reach)
    targets = partner[sources]

    fans = _vertex_fans(mesh)
    width = fans.shape[1]
    first = np.repeat(fans[sources][:, :, None], width, axis=2).ravel()
    second = np.repeat(fans[targets][:, None, :], width, axis=1).ravel()
    valid = (first >= 0) & (second >= 0)
    keys = np.unique(first[valid] * mesh.triangle_count + second[valid])
    first, second = np.divmod(keys, mesh.triangle_count)

    gap = vertex_gap
    for start in range(0, keys.size, _CHUNK):
        a = mesh.vertices[mesh.triangles[first[start:start + _CHUNK]]]
        b = mesh.vertices[mesh.triangles[second[start:start + _CHUNK]]]
        gap = min(gap, float(triangle_distances(a, b).min()))

    logger.debug(
        "edge contact evaluated",
        extra={"data": {"vertex_gap": vertex_gap, "min_gap": gap, "pairs": int(keys.size)}},
    )
    return ContactResult(min_gap=gap, touching=gap <= clearance)
