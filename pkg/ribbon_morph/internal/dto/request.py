from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Tuple

from ribbon_morph.internal.dto.enums import MeshFormat
from ribbon_morph.internal.geometry.core import DEFAULT_TOLERANCE
from ribbon_morph.internal.jobconfig.schema import JobConfig

STDOUT = "-"


@dataclass(frozen=True)
class JobRequest:
    config: JobConfig
    out_dir: Path
    mesh_formats: List[MeshFormat] = field(default_factory=list)
    samples: Optional[Tuple[int, int]] = None
    tolerance: Optional[float] = None

    @property
    def to_stdout(self) -> bool:
        return str(self.out_dir) == STDOUT

    @property
    def classification_tolerance(self) -> float:
        if self.tolerance is not None:
            return self.tolerance
        return self.config.output.tolerance or DEFAULT_TOLERANCE


@dataclass(frozen=True)
class VerifyRequest:
    tolerance: float
    seed: int
    ode_cases: int = 10
    elasticity_cases: int = 20
    identity_cases: int = 1000
