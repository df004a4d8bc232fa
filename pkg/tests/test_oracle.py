import math

import numpy as np
import pytest

from ribbon_morph.internal.dto.dto import PrincipalCurvatureState
from ribbon_morph.internal.errors import InvalidInputError
from ribbon_morph.internal.geometry.core import centerline_points, curvature_invariants, frame_at, frame_axes
from ribbon_morph.internal.geometry.oracle import integrate_edge_numeric, integrate_frames_numeric
from ribbon_morph.internal.surface.surface import edge_points
from tests.conftest import QUARTER_PI, random_states


def test_frames_match_integration(rng):
    for state in random_states(rng, 100, 1.0):
        frames = integrate_frames_numeric(state, 20.0, 1e-3)
        s = np.linspace(0.0, 20.0, len(frames))
        tangent, width, normal = frame_axes(state, s)

        np.testing.assert_allclose([f.position for f in frames], centerline_points(state, s), atol=1e-8)
        np.testing.assert_allclose([f.tangent for f in frames], tangent, atol=1e-8)
        np.testing.assert_allclose([f.normal for f in frames], normal, atol=1e-8)
        np.testing.assert_allclose([f.width_director for f in frames], width, atol=1e-8)


def test_cross_width_line_matches_integration(rng):
    for state in random_states(rng, 20, 3.0):
        edge = integrate_edge_numeric(state, 1.0, 1e-3)
        t = np.linspace(0.0, 1.0, len(edge))

        np.testing.assert_allclose(edge, edge_points(state, t), atol=1e-8)

def test_closed_frames_satisfy_frenet_equations(rng):
    h = 1e-4
    for state in random_states(rng, 50, 1.0):
        _, beta, tau = curvature_invariants(state)
        s = float(rng.uniform(0.0, 10.0))
        ahead, behind, here = frame_at(state, s + h), frame_at(state, s - h), frame_at(state, s)

        def rate(name):
            return (getattr(ahead, name) - getattr(behind, name)) / (2.0 * h)

        np.testing.assert_allclose(rate("tangent"), -beta * here.normal, atol=1e-7)
        np.testing.assert_allclose(rate("normal"), beta * here.tangent + tau * here.binormal, atol=1e-7)
        np.testing.assert_allclose(rate("binormal"), -tau * here.normal, atol=1e-7)


def test_normal_turns_over_after_half_a_coil():
    state = PrincipalCurvatureState(1.0, 0.0, QUARTER_PI)
    alpha, _, _ = curvature_invariants(state)

    np.testing.assert_allclose(frame_at(state, math.pi / alpha).normal, [0.0, 0.0, -1.0], atol=1e-12)


def test_pure_twist_keeps_centerline_straight():
    frames = integrate_frames_numeric(PrincipalCurvatureState(1.0, -1.0, QUARTER_PI), 20.0, 1e-3)
    positions = np.array([f.position for f in frames])

    np.testing.assert_allclose(positions[:, 1:], 0.0, atol=1e-8)
    np.testing.assert_allclose(positions[:, 0], np.linspace(0.0, 20.0, len(frames)), atol=1e-8)



def test_grid_covers_span():
    frames = integrate_frames_numeric(PrincipalCurvatureState(1.0, 0.0, QUARTER_PI), 1.0, 0.3)

    assert len(frames) == 5
    np.testing.assert_allclose(frames[0].position, 0.0)


def test_zero_span_returns_start():
    edge = integrate_edge_numeric(PrincipalCurvatureState(1.0, 1.0, 0.0), 0.0, 1e-3)
    assert edge.shape == (1, 3)


@pytest.mark.parametrize("step", [0.0, -1e-3])
def test_step_must_be_positive(step):
    with pytest.raises(InvalidInputError):
        integrate_frames_numeric(PrincipalCurvatureState(1.0, 0.0, 0.0), 1.0, step)
