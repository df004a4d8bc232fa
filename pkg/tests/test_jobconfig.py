import math
from pathlib import Path

import pytest

from ribbon_morph.internal.dto.enums import JobMode, SweepMode, UnitSystem
from ribbon_morph.internal.errors import ConfigError
from ribbon_morph.internal.jobconfig import builders
from ribbon_morph.internal.jobconfig.parser import load_config, parse_config, serialize_config

CONFIGS = Path(__file__).resolve().parent.parent / "configs"

MINIMAL = """
mode = "geometric"

[geometry]
kappa1 = 1.0
kappa2 = 0.0
"""

TWO_SURFACE = """
mode = "two_surface"

[mechanics]
youngs_modulus = 1.0e9
poisson_ratio = 0.3
thickness = 1.0e-4

[mechanics.f_minus]
f1 = 1.0
"""


class TestParse:
    def test_minimal_geometric_job(self):
        cfg = parse_config(MINIMAL)

        assert cfg.mode is JobMode.GEOMETRIC
        assert cfg.units is UnitSystem.SI
        assert cfg.geometry.phi == 0.0
        assert (cfg.extent.length, cfg.extent.width) == (10.0, 1.0)
        assert (cfg.extent.samples_s, cfg.extent.samples_t) == (200, 20)
        assert cfg.output.formats == ["obj"]
        assert cfg.output.tolerance is None
        assert cfg.clearance == 0.01

    def test_conflicting_blocks_are_named(self):
        document = MINIMAL + "\n[mechanics]\nthickness = 1.0\n"
        with pytest.raises(ConfigError) as e:
            parse_config(document)

        assert "[geometry]" in str(e.value)
        assert "[mechanics]" in str(e.value)
        assert e.value.mode == "geometric"

    def test_missing_block(self):
        with pytest.raises(ConfigError, match=r"requires \[sweep\]"):
            parse_config('mode = "sweep"\n')

    def test_unknown_key(self):
        with pytest.raises(ConfigError) as e:
            parse_config(MINIMAL + "curvature = 3\n")
        assert e.value.field == "geometry.curvature"

    def test_missing_field_is_named(self):
        with pytest.raises(ConfigError) as e:
            parse_config('mode = "geometric"\n[geometry]\nkappa1 = 1.0\n')
        assert e.value.field == "geometry.kappa2"

    def test_mode_specific_requirement(self):
        with pytest.raises(ConfigError, match="f_plus"):
            parse_config(TWO_SURFACE)

    def test_single_surface_rejects_top_face(self):
        document = TWO_SURFACE.replace("two_surface", "single_surface") + "\n[mechanics.f_plus]\nf1 = 1.0\n"
        with pytest.raises(ConfigError, match="f_plus"):
            parse_config(document)

    @pytest.mark.parametrize("fragment", [
        '\n[output]\nformats = ["stl"]\n',
        '\n[extent]\nwidth = -1.0\n',
        '\n[output]\ntolerance = 0.0\n',
    ])
    def test_rejects_bad_values(self, fragment):
        with pytest.raises(ConfigError):
            parse_config(MINIMAL + fragment)

    def test_malformed_document(self):
        with pytest.raises(ConfigError, match="malformed"):
            parse_config("mode = ")

    def test_unreadable_file(self, tmp_path):
        with pytest.raises(ConfigError):
            load_config(tmp_path / "missing.toml")

    def test_unknown_sweep_parameter(self):
        document = 'mode = "sweep"\n[sweep]\n[[sweep.axes]]\nname = "colour"\nmin = 0.0\nmax = 1.0\ncount = 2\n'
        with pytest.raises(ConfigError, match="colour"):
            parse_config(document)


class TestRoundTrip:
    @pytest.mark.parametrize("name", sorted(p.name for p in CONFIGS.glob("*.toml")))
    def test_sample_jobs(self, name):
        cfg = load_config(CONFIGS / name)
        assert parse_config(serialize_config(cfg)) == cfg

    def test_defaults_are_written_out(self):
        text = serialize_config(parse_config(MINIMAL))

        assert "samples_s = 200" in text
        assert "tolerance" not in text


class TestBuilders:
    def test_geometric_job(self):
        cfg = load_config(CONFIGS / "purely_twisted.toml")
        state = builders.curvature_state(cfg)
        extent = builders.ribbon_extent(cfg, samples=(50, 5))

        assert (state.kappa1, state.kappa2, state.phi) == (-1.0, 1.0, pytest.approx(0.25 * math.pi))
        assert (extent.samples_s, extent.samples_t) == (50, 5)

    def test_centimetre_megapascal_units(self):
        cfg = load_config(CONFIGS / "biaxial_ring.toml")
        section = builders.ribbon_section(cfg)
        extent = builders.ribbon_extent(cfg)

        assert section.thickness == pytest.approx(0.148e-2)
        assert section.layers[0].youngs_modulus == pytest.approx(1.4e6)
        assert section.layers[0].residual_strain.xx == pytest.approx(0.1)
        assert extent.length == pytest.approx(1.0)
        assert builders.clearance(cfg) == pytest.approx(0.148e-2)

    def test_curvature_converted_to_si(self):
        cfg = parse_config('mode = "geometric"\nunits = "cm-MPa"\n[geometry]\nkappa1 = 1.0\nkappa2 = 0.5\n')
        state = builders.curvature_state(cfg)

        assert (state.kappa1, state.kappa2) == pytest.approx((100.0, 50.0))

    def test_surface_loads(self):
        cfg = load_config(CONFIGS / "two_surface.toml")
        f_plus, f_minus = builders.surface_loads(cfg)

        assert (f_plus.f1, f_plus.f2) == (0.0, 1.0)
        assert (f_minus.f1, f_minus.f2) == (1.0, 0.0)

    def test_sweep_spec_fills_extent(self):
        cfg = load_config(CONFIGS / "sweep_width.toml")
        spec = builders.sweep_spec(cfg)

        assert spec.mode is SweepMode.GEOMETRIC
        assert spec.axis_names == ["width"]
        assert spec.fixed["length"] == 20.0
        assert "width" not in spec.fixed
        assert spec.clearance == pytest.approx(0.01)
        assert spec.contact_enabled
        assert spec.tolerance == 1e-9

    def test_sweep_tolerance_override(self):
        cfg = load_config(CONFIGS / "sweep_kappa2.toml")

        assert builders.sweep_spec(cfg, tolerance=1e-6).tolerance == 1e-6
        assert not builders.sweep_spec(cfg).contact_enabled

    def test_missing_block(self):
        with pytest.raises(ConfigError):
            builders.sweep_spec(parse_config(MINIMAL))
