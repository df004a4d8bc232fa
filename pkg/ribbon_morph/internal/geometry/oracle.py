"""Independent RK4 integration of the director equations, used for verification."""
import math
from typing import List

import numpy as np

from ribbon_morph.internal.dto.dto import FrameState, PrincipalCurvatureState
from ribbon_morph.internal.errors import InvalidInputError


def _rk4_propagator(generator: np.ndarray, h: float) -> np.ndarray:
    # one classical RK4 step of y' = A y is exactly this polynomial in hA
    ha = h * generator
    ha2 = ha @ ha
    ha3 = ha2 @ ha
    return np.eye(generator.shape[0]) + ha + ha2 / 2.0 + ha3 / 6.0 + ha3 @ ha / 24.0


def _director_generator(rows) -> np.ndarray:
    """12x12 generator for the stacked state (P, r1, r2, N)."""
    a = np.zeros((4, 4))
    for target, terms in rows.items():
        for source, coeff in terms.items():
            a[target, source] = coeff
    return np.kron(a, np.eye(3))


def _initial_state(state: PrincipalCurvatureState) -> np.ndarray:
    c, s = math.cos(state.phi), math.sin(state.phi)
    return np.concatenate([
        np.zeros(3),
        np.array([c, -s, 0.0]),
        np.array([s, c, 0.0]),
        np.array([0.0, 0.0, 1.0]),
    ])


def _steps(span: float, step: float) -> tuple[int, float]:
    if not step > 0:
        raise InvalidInputError(f"integration step must be positive, got {step}")
    if span == 0.0:
        return 0, 0.0
    n = max(1, math.ceil(abs(span) / step - 1e-9))
    return n, span / n


def _march(y0: np.ndarray, propagator: np.ndarray, n: int) -> np.ndarray:
    out = np.empty((n + 1, y0.size))
    out[0] = y0
    for k in range(n):
        out[k + 1] = propagator @ out[k]
    return out


def integrate_frames_numeric(
        state: PrincipalCurvatureState,
        s_max: float,
        step: float,
) -> List[FrameState]:
    """Frames at the uniform grid 0, h, ..., s_max with h <= step."""
    c, s = math.cos(state.phi), math.sin(state.phi)
    k1, k2 = state.kappa1, state.kappa2
    p, r1, r2, n = 0, 1, 2, 3
    generator = _director_generator({
        p: {r1: c, r2: s},
        r1: {n: -k1 * c},
        r2: {n: -k2 * s},
        n: {r1: k1 * c, r2: k2 * s},
    })

    count, h = _steps(s_max, step)
    ys = _march(_initial_state(state), _rk4_propagator(generator, h), count)

    frames = []
    for y in ys:
        pos, d1, d2, normal = y[0:3], y[3:6], y[6:9], y[9:12]
        tangent = c * d1 + s * d2
        frames.append(FrameState(
            position=pos,
            tangent=tangent,
            normal=normal,
            binormal=np.cross(tangent, normal),
            r1=d1,
            r2=d2,
        ))
    return frames


def integrate_edge_numeric(state: PrincipalCurvatureState, t_end: float, step: float) -> np.ndarray:
    """Points of the cross-width material line through the origin, from 0 to ``t_end``."""
    c, s = math.cos(state.phi), math.sin(state.phi)
    k1, k2 = state.kappa1, state.kappa2
    p, r1, r2, n = 0, 1, 2, 3
    generator = _director_generator({
        p: {r1: -s, r2: c},
        r1: {n: k1 * s},
        r2: {n: -k2 * c},
        n: {r1: -k1 * s, r2: k2 * c},
    })

    count, h = _steps(t_end, step)
    ys = _march(_initial_state(state), _rk4_propagator(generator, h), count)
    return ys[:, 0:3]
