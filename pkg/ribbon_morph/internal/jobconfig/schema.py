from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ribbon_morph.internal.dto.enums import JobMode, SweepMode, UnitSystem
from ribbon_morph.internal.utils.units import PARAMETER_DIMENSIONS


class _Block(BaseModel):
    model_config = ConfigDict(
        extra="forbid",
        frozen=True,
        validate_assignment=True,
    )


class GeometryBlock(_Block):
    kappa1: float
    kappa2: float
    phi: float = 0.0


class SurfaceStressBlock(_Block):
    f1: float = 0.0
    f2: float = 0.0
    orientation: float = 0.0


class PrestretchBlock(_Block):
    p1: float = 0.0
    p2: float = 0.0
    orientation: float = 0.0


class LayerBlock(_Block):
    thickness: float = Field(gt=0)
    youngs_modulus: float = Field(gt=0)
    poisson_ratio: float = Field(ge=0, lt=0.5)
    prestretch: Optional[PrestretchBlock] = None


class MechanicsBlock(_Block):
    youngs_modulus: Optional[float] = Field(None, gt=0)
    poisson_ratio: Optional[float] = Field(None, ge=0, lt=0.5)
    thickness: Optional[float] = Field(None, gt=0)
    f_minus: Optional[SurfaceStressBlock] = None
    f_plus: Optional[SurfaceStressBlock] = None
    layers: Optional[List[LayerBlock]] = None
    cut_angle: float = 0.0


class SweepAxisBlock(_Block):
    name: str
    min: float
    max: float
    count: int = Field(ge=1)

    @field_validator('name')
    @classmethod
    def validate_name(cls, v: str) -> str:
        if v not in PARAMETER_DIMENSIONS:
            raise ValueError(f"unknown sweep parameter '{v}'")
        return v


class SweepBlock(_Block):
    mode: SweepMode = SweepMode.GEOMETRIC
    axes: List[SweepAxisBlock] = Field(min_length=1, max_length=3)
    fixed: Dict[str, float] = Field(default_factory=dict)
    detect_contact: Optional[bool] = None
    layers: Optional[List[LayerBlock]] = None

    @field_validator('fixed')
    @classmethod
    def validate_fixed(cls, v: Dict[str, float]) -> Dict[str, float]:
        unknown = sorted(set(v) - set(PARAMETER_DIMENSIONS))
        if unknown:
            raise ValueError(f"unknown fixed parameters: {', '.join(unknown)}")
        return v


class ExtentBlock(_Block):
    length: float = Field(10.0, gt=0)
    width: float = Field(1.0, gt=0)
    samples_s: int = Field(200, ge=2)
    samples_t: int = Field(20, ge=2)
    thickness: float = Field(0.01, gt=0)


class OutputBlock(_Block):
    formats: List[str] = Field(default_factory=lambda: ["obj"])
    directory: str = "out"
    tolerance: Optional[float] = Field(None, gt=0)
    clearance: Optional[float] = Field(None, gt=0)

    @field_validator('formats')
    @classmethod
    def validate_formats(cls, v: List[str]) -> List[str]:
        bad = [f for f in v if f not in ("obj", "ply", "csv")]
        if bad:
            raise ValueError(f"unsupported output formats: {', '.join(bad)}")
        return v


_MODE_BLOCK = {
    JobMode.GEOMETRIC: "geometry",
    JobMode.SINGLE_SURFACE: "mechanics",
    JobMode.TWO_SURFACE: "mechanics",
    JobMode.LAMINATE: "mechanics",
    JobMode.SWEEP: "sweep",
}


class JobConfig(_Block):
    mode: JobMode
    units: UnitSystem = UnitSystem.SI
    geometry: Optional[GeometryBlock] = None
    mechanics: Optional[MechanicsBlock] = None
    sweep: Optional[SweepBlock] = None
    extent: ExtentBlock = Field(default_factory=ExtentBlock)
    output: OutputBlock = Field(default_factory=OutputBlock)

    @model_validator(mode='after')
    def validate_blocks(self) -> 'JobConfig':
        present = [name for name in ("geometry", "mechanics", "sweep") if getattr(self, name) is not None]
        expected = _MODE_BLOCK[self.mode]
        if len(present) > 1:
            raise ValueError(
                f"conflicting blocks [{'] and ['.join(present)}]: mode '{self.mode.value}' takes only [{expected}]"
            )
        if present != [expected]:
            found = f"[{present[0]}]" if present else "no block"
            raise ValueError(f"mode '{self.mode.value}' requires [{expected}], found {found}")
        if self.mechanics is not None:
            self._validate_mechanics(self.mechanics)
        return self

    def _validate_mechanics(self, m: MechanicsBlock) -> None:
        mode = self.mode.value
        if self.mode is JobMode.LAMINATE:
            if not m.layers:
                raise ValueError(f"mode '{mode}' requires mechanics.layers")
            return
        if m.layers:
            raise ValueError(f"mechanics.layers is only valid in mode 'laminate', not '{mode}'")
        for name in ("youngs_modulus", "poisson_ratio", "thickness", "f_minus"):
            if getattr(m, name) is None:
                raise ValueError(f"mode '{mode}' requires mechanics.{name}")
        if self.mode is JobMode.TWO_SURFACE and m.f_plus is None:
            raise ValueError(f"mode '{mode}' requires mechanics.f_plus")
        if self.mode is JobMode.SINGLE_SURFACE and m.f_plus is not None:
            raise ValueError(f"mechanics.f_plus is not allowed in mode '{mode}'")

    @property
    def clearance(self) -> float:
        return self.output.clearance if self.output.clearance is not None else self.extent.thickness
