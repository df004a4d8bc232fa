import pytest

from ribbon_morph.internal.dto.dto import PrincipalCurvatureState, RibbonExtent
from ribbon_morph.internal.errors import InvalidInputError
from ribbon_morph.internal.surface.curvature import discrete_curvatures
from ribbon_morph.internal.surface.surface import tessellate
from tests.conftest import QUARTER_PI

EXTENT = RibbonExtent(6.0, 0.6, samples_s=400, samples_t=40)
MIDDLE = 200 * 40 + 20


def test_ring_is_spherical():
    k, h = discrete_curvatures(tessellate(PrincipalCurvatureState(1.0, 1.0, 0.0), EXTENT), MIDDLE)

    assert k == pytest.approx(1.0, rel=2e-2)
    assert h == pytest.approx(1.0, rel=2e-2)


def test_purely_twisted_ribbon_is_a_minimal_surface():
    k, h = discrete_curvatures(tessellate(PrincipalCurvatureState(1.0, -1.0, QUARTER_PI), EXTENT), MIDDLE)

    assert k == pytest.approx(-1.0, rel=2e-2)
    assert h == pytest.approx(0.0, abs=1e-2)


@pytest.mark.parametrize("phi", [0.0, 0.4, QUARTER_PI])
def test_rolled_ribbon_is_developable(phi):
    k, h = discrete_curvatures(tessellate(PrincipalCurvatureState(1.0, 0.0, phi), EXTENT), MIDDLE)

    assert abs(k) < 1e-2
    assert h == pytest.approx(0.5, rel=2e-2)


def test_flat_ribbon():
    k, h = discrete_curvatures(tessellate(PrincipalCurvatureState(0.0, 0.0, 0.0), EXTENT), MIDDLE)

    assert k == pytest.approx(0.0, abs=1e-9)
    assert h == pytest.approx(0.0, abs=1e-9)


@pytest.mark.parametrize("vertex", [0, 39, 40 * 399 + 5, -1, 400 * 40])
def test_rejects_boundary_and_missing_vertices(vertex):
    mesh = tessellate(PrincipalCurvatureState(1.0, 1.0, 0.0), EXTENT)
    with pytest.raises(InvalidInputError):
        discrete_curvatures(mesh, vertex)
