from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field


class RunReport(BaseModel):
    """Outcome of one job: resolved inputs, results and verification residuals."""
    mode: str
    units: str
    inputs: Dict[str, Any]
    morphology: str
    gauss_curvature: float
    mean_curvature: float
    descriptors: Dict[str, Any]
    solution: Optional[Dict[str, Any]] = None
    residuals: Dict[str, float] = Field(default_factory=dict)
    tolerances: Dict[str, float] = Field(default_factory=dict)
    outputs: List[str] = Field(default_factory=list)

    model_config = ConfigDict(frozen=True)

    @property
    def failures(self) -> Dict[str, float]:
        return {
            name: value
            for name, value in self.residuals.items()
            if name in self.tolerances and not value <= self.tolerances[name]
        }

    @property
    def passed(self) -> bool:
        return not self.failures
