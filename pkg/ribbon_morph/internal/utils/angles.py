import math

import numpy as np


HALF_PI = 0.5 * math.pi


def normalize_angle(theta: float) -> float:
    """Wraps an axis angle into [-pi/2, pi/2); axes are pi-periodic."""
    wrapped = (theta + HALF_PI) % math.pi - HALF_PI
    if wrapped >= HALF_PI:
        wrapped -= math.pi
    return float(wrapped)


def axis_angle_difference(a: float, b: float) -> float:
    return float(np.angle(np.exp(2j * (a - b))) / 2.0)


def principal_axis(theta: float) -> np.ndarray:
    # axis measured clockwise from d_x towards -d_y
    return np.array([math.cos(theta), -math.sin(theta)])


def tensor_from_principal(v1: float, v2: float, theta: float) -> np.ndarray:
    e1 = principal_axis(theta)
    e2 = np.array([-e1[1], e1[0]])
    return v1 * np.outer(e1, e1) + v2 * np.outer(e2, e2)


def principal_from_tensor(tensor: np.ndarray, isotropic_tol: float = 1e-12) -> tuple[float, float, float]:
    """Principal values (largest first) and axis angle of a symmetric 2x2 tensor."""
    sym = 0.5 * (np.asarray(tensor, dtype=float) + np.asarray(tensor, dtype=float).T)
    values, vectors = np.linalg.eigh(sym)
    v1, v2 = float(values[1]), float(values[0])
    scale = max(abs(v1), abs(v2))
    if v1 - v2 <= isotropic_tol * scale or scale == 0.0:
        return v1, v2, 0.0
    vx, vy = vectors[:, 1]
    return v1, v2, normalize_angle(math.atan2(-vy, vx))
