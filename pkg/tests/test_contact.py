import math

import numpy as np
import pytest

from ribbon_morph.internal.dto.dto import PrincipalCurvatureState, RibbonExtent
from ribbon_morph.internal.surface.contact import edge_contact, triangle_distances
from ribbon_morph.internal.surface.surface import tessellate
from tests.conftest import QUARTER_PI

UNIT = np.array([[0.0, 0.0, 0.0], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0]])


class TestTriangleDistances:
    def test_parallel_offset(self):
        d = triangle_distances(UNIT[None], (UNIT + [0.0, 0.0, 1.0])[None])
        assert d[0] == pytest.approx(1.0)

    def test_side_by_side(self):
        d = triangle_distances(UNIT[None], (UNIT + [2.0, 0.0, 0.0])[None])
        assert d[0] == pytest.approx(1.0)

    def test_crossing(self):
        vertical = np.array([[0.2, 0.2, -1.0], [0.2, 0.2, 1.0], [0.3, 0.1, 0.0]])
        d = triangle_distances(UNIT[None], vertical[None])
        assert d[0] == 0.0

    def test_batched(self):
        first = np.stack([UNIT, UNIT])
        second = np.stack([UNIT + [0.0, 0.0, 1.0], UNIT + [0.0, 0.0, 3.0]])
        np.testing.assert_allclose(triangle_distances(first, second), [1.0, 3.0])


class TestEdgeContact:
    def test_ring_longer_than_circumference_touches(self):
        mesh = tessellate(PrincipalCurvatureState(1.0, 1.0, 0.0), RibbonExtent(8.0, 0.5, 200, 10))
        result = edge_contact(mesh, 0.01)

        assert result.touching
        assert result.min_gap < 1e-3

    def test_open_ring_is_clear(self):
        mesh = tessellate(PrincipalCurvatureState(1.0, 1.0, 0.0), RibbonExtent(5.0, 0.5, 200, 10))
        result = edge_contact(mesh, 0.01)

        assert not result.touching
        assert result.min_gap > 0.5

    def test_flat_ribbon_has_no_contact(self):
        mesh = tessellate(PrincipalCurvatureState(0.0, 0.0, 0.0), RibbonExtent(5.0, 0.5, 20, 4))
        result = edge_contact(mesh, 0.01)

        assert result.min_gap == math.inf
        assert not result.touching

    @pytest.mark.parametrize("width,touching", [(3.0, False), (4.0, False), (5.0, True), (6.0, True)])
    def test_helix_closes_into_tubule(self, width, touching):
        # coils meet at width pi * sqrt(2)
        state = PrincipalCurvatureState(1.0, 0.0, QUARTER_PI)
        mesh = tessellate(state, RibbonExtent(20.0, width, 240, 24))

        assert edge_contact(mesh, 0.01).touching is touching

    def test_gap_shrinks_as_helix_widens(self):
        state = PrincipalCurvatureState(1.0, 0.0, QUARTER_PI)
        gaps = [
            edge_contact(tessellate(state, RibbonExtent(20.0, width, 240, 24)), 0.01).min_gap
            for width in (3.6, 3.8, 4.0, 4.2, 4.4)
        ]

        assert np.all(np.diff(gaps) < 0.0)
        assert gaps[-1] < 0.2 * gaps[0]
