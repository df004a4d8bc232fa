import logging
import math

import numpy as np
import pytest

from ribbon_morph.internal.dto.dto import Prestretch, RibbonSection
from ribbon_morph.internal.dto.enums import Morphology
from ribbon_morph.internal.elasticity.laminate import laminate_prestretch_to_residual, prestretched_section
from ribbon_morph.internal.elasticity.numeric import solve_stationary_numeric
from ribbon_morph.internal.errors import InvalidInputError
from ribbon_morph.internal.geometry.core import classify, curvature_invariants, descriptors
from tests.conftest import ACRYLIC, LATEX


class TestResidualStrain:
    def test_stretch_along_ribbon_axis(self):
        [g] = laminate_prestretch_to_residual([LATEX], [Prestretch(0.1, 0.2, 0.0)])

        assert (g.xx, g.yy, g.xy) == pytest.approx((0.1, 0.2, 0.0))
        assert g.zz == pytest.approx(-0.49 / 0.51 * 0.3)

    def test_cut_angle_rotates_stretch(self):
        [g] = laminate_prestretch_to_residual([LATEX], [Prestretch(0.1, 0.0, 0.5 * math.pi)], cut_angle=0.5 * math.pi)
        assert (g.xx, g.yy, g.xy) == pytest.approx((0.1, 0.0, 0.0), abs=1e-15)

    def test_unstretched_layer(self):
        [g] = laminate_prestretch_to_residual([ACRYLIC], [None])
        assert np.all(g.vector() == 0.0)

    def test_length_mismatch(self):
        with pytest.raises(InvalidInputError):
            laminate_prestretch_to_residual([LATEX, ACRYLIC], [None])

    def test_large_stretch_warns(self, caplog):
        with caplog.at_level(logging.WARNING):
            laminate_prestretch_to_residual([LATEX], [Prestretch(0.35, 0.0, 0.0)])
        assert "beyond linear range" in caplog.text

    def test_section_stacks_layers(self):
        section = prestretched_section([LATEX, ACRYLIC], [Prestretch(0.1, 0.1), None])

        assert section.thickness == pytest.approx(0.148e-2)
        assert section.youngs_modulus == ACRYLIC.youngs_modulus
        assert section.layers[0].residual_strain.xx == pytest.approx(0.1)

    def test_layer_thicknesses_must_add_up(self):
        with pytest.raises(InvalidInputError):
            RibbonSection(thickness=1.0, youngs_modulus=1.0, poisson_ratio=0.3, layers=(LATEX,))


class TestBilayerShapes:
    def test_equal_biaxial_stretch_rolls_a_ring_at_every_cut(self):
        radii = []
        for degrees in range(0, 91, 15):
            section = prestretched_section([LATEX, ACRYLIC], [Prestretch(0.1, 0.1), None], math.radians(degrees))
            sol = solve_stationary_numeric(section)

            assert sol.degenerate
            assert classify(sol.curvature_state()).kind is Morphology.RING
            radii.append(1.0 / sol.kappa1)

        assert max(radii) - min(radii) <= 1e-8 * abs(radii[0])

    def test_crossed_stretch_on_both_faces_twists_purely(self):
        section = prestretched_section(
            [LATEX, ACRYLIC, LATEX],
            [Prestretch(0.1, 0.0, 0.5 * math.pi), None, Prestretch(0.1, 0.0, 0.0)],
            cut_angle=0.25 * math.pi,
        )
        sol = solve_stationary_numeric(section)
        alpha, beta, _ = curvature_invariants(sol.curvature_state())

        assert abs(beta) <= 1e-10 * alpha
        assert sol.kappa2 == pytest.approx(-sol.kappa1, rel=1e-8)
        assert classify(sol.curvature_state()).kind is Morphology.PURELY_TWISTED

    def test_anisotropic_stretch_gives_helix(self):
        section = prestretched_section(
            [LATEX, ACRYLIC],
            [Prestretch(0.2, 0.1, 0.5 * math.pi), None],
            cut_angle=math.pi / 6.0,
        )
        sol = solve_stationary_numeric(section)

        assert not sol.degenerate
        assert classify(sol.curvature_state()).is_helix
        assert sol.gradient_norm <= 1e-8

    def test_helix_angle_over_cut_angles(self):
        # 2:1 stretch on the latex, strip cut every 15 degrees from the stretch axis
        angles = []
        for degrees in range(0, 91, 15):
            section = prestretched_section([LATEX, ACRYLIC], [Prestretch(0.2, 0.1), None], math.radians(degrees))
            d = descriptors(solve_stationary_numeric(section).curvature_state())
            angles.append(d.helix_angle)
            if 0 < degrees < 90:
                assert d.chirality != 0

        assert angles[0] == pytest.approx(0.0, abs=1e-6)
        assert angles[-1] == pytest.approx(0.0, abs=1e-6)
        interior = np.array(angles[1:-1])
        assert np.all(np.sign(interior) == np.sign(interior[0]))
        magnitude = np.abs(angles)
        peak = int(np.argmax(magnitude))
        assert 0 < peak < len(angles) - 1
        assert np.all(np.diff(magnitude[:peak + 1]) > 0)
        assert np.all(np.diff(magnitude[peak:]) < 0)
