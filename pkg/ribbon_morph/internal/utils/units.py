from dataclasses import dataclass

from ribbon_morph.internal.dto.enums import UnitSystem


@dataclass(frozen=True)
class UnitScale:
    """Multipliers that take a declared unit system to SI."""
    length: float
    stress: float

    @property
    def surface_stress(self) -> float:
        return self.stress * self.length

    @property
    def curvature(self) -> float:
        return 1.0 / self.length


_SCALES = {
    UnitSystem.SI: UnitScale(length=1.0, stress=1.0),
    UnitSystem.CM_MPA: UnitScale(length=1e-2, stress=1e6),
}


def unit_scale(system: UnitSystem) -> UnitScale:
    return _SCALES[system]


# dimension tag per sweepable parameter
PARAMETER_DIMENSIONS = {
    "kappa1": "curvature",
    "kappa2": "curvature",
    "phi": "angle",
    "width": "length",
    "length": "length",
    "thickness": "length",
    "youngs_modulus": "stress",
    "poisson_ratio": "ratio",
    "f1_minus": "surface_stress",
    "f2_minus": "surface_stress",
    "orientation_minus": "angle",
    "f1_plus": "surface_stress",
    "f2_plus": "surface_stress",
    "orientation_plus": "angle",
    "f2_ratio": "ratio",
    "cut_angle": "angle",
    "prestretch_scale": "ratio",
}


def to_si(name: str, value: float, system: UnitSystem) -> float:
    dimension = PARAMETER_DIMENSIONS[name]
    if dimension in ("angle", "ratio"):
        return value
    return value * getattr(unit_scale(system), dimension)
