import math
from typing import Callable, Dict, List

import numpy as np
from scipy.optimize import bisect

from ribbon_morph.internal.dto.dto import PrincipalCurvatureState, SweepSpec
from ribbon_morph.internal.dto.enums import BoundaryKind
from ribbon_morph.internal.errors import InvalidInputError
from ribbon_morph.internal.geometry.core import curvature_invariants
from ribbon_morph.internal.sweep.sweep import point_state

# scale-free indicators: beta / alpha, tau / alpha, K / alpha^2
_INDICATORS: Dict[BoundaryKind, Callable[[PrincipalCurvatureState], float]] = {}


def _indicator(kind: BoundaryKind):
    def register(fn):
        _INDICATORS[kind] = fn
        return fn
    return register


@_indicator(BoundaryKind.TWIST)
def _twist(state: PrincipalCurvatureState) -> float:
    alpha, beta, _ = curvature_invariants(state)
    return beta / alpha if alpha > 0 else math.nan


@_indicator(BoundaryKind.RING)
def _ring(state: PrincipalCurvatureState) -> float:
    alpha, _, tau = curvature_invariants(state)
    return tau / alpha if alpha > 0 else math.nan


@_indicator(BoundaryKind.CYLINDER)
def _cylinder(state: PrincipalCurvatureState) -> float:
    alpha, _, _ = curvature_invariants(state)
    return (state.kappa1 / alpha) * (state.kappa2 / alpha) if alpha > 0 else math.nan


def find_boundary(spec: SweepSpec, kind: BoundaryKind) -> List[float]:
    """Parameter values where the indicator of ``kind`` vanishes along a 1-D scan."""
    scanned = [axis for axis in spec.axes if axis.count > 1]
    if len(scanned) != 1:
        raise InvalidInputError(f"boundary search needs exactly one scanned axis, got {len(scanned)}")
    axis = scanned[0]
    base = dict(spec.fixed)
    base.update({a.name: a.min for a in spec.axes if a is not axis})
    indicator = _INDICATORS[kind]

    def value(x: float) -> float:
        state, _ = point_state(spec, {**base, axis.name: float(x)})
        return indicator(state)

    grid = axis.values()
    values = np.array([value(x) for x in grid])
    xtol = 1e-10 * abs(axis.max - axis.min)

    found: List[float] = []
    on_grid = np.abs(values) <= spec.tolerance
    for k, x in enumerate(grid):
        if on_grid[k]:
            found.append(float(x))
    for k in range(len(grid) - 1):
        v0, v1 = values[k], values[k + 1]
        if on_grid[k] or on_grid[k + 1] or not (np.isfinite(v0) and np.isfinite(v1)):
            continue
        if v0 * v1 < 0:
            found.append(float(bisect(value, grid[k], grid[k + 1], xtol=xtol)))
    return sorted(found)
