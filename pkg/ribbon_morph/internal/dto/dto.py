import logging
import math
from dataclasses import dataclass, field, replace
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from ribbon_morph.internal.dto.enums import Morphology, SweepMode
from ribbon_morph.internal.errors import InvalidInputError
from ribbon_morph.internal.utils.angles import (
    normalize_angle,
    principal_from_tensor,
    tensor_from_principal,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PrincipalCurvatureState:
    kappa1: float
    kappa2: float
    phi: float

    def __post_init__(self):
        for name in ("kappa1", "kappa2", "phi"):
            if not math.isfinite(getattr(self, name)):
                raise InvalidInputError(f"{name} must be finite, got {getattr(self, name)}")

    @property
    def normalized_phi(self) -> float:
        return normalize_angle(self.phi)

    @property
    def is_flat(self) -> bool:
        return self.kappa1 == 0.0 and self.kappa2 == 0.0

    @property
    def kappa_max(self) -> float:
        return max(abs(self.kappa1), abs(self.kappa2))

    def normalized(self) -> "PrincipalCurvatureState":
        return replace(self, phi=self.normalized_phi)


@dataclass(frozen=True, eq=False)
class HelixDescriptors:
    alpha: float
    beta: float
    tau: float
    helix_angle: float
    radius: float
    pitch: float
    axis: np.ndarray
    chirality: int
    axis_defined: bool = True
    axial_advance: float = 0.0
    axis_point: np.ndarray = field(default_factory=lambda: np.zeros(3))

    def as_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "beta": self.beta,
            "tau": self.tau,
            "helix_angle": self.helix_angle,
            "radius": self.radius,
            "pitch": self.pitch,
            "axis": [float(v) for v in self.axis] if self.axis_defined else None,
            "chirality": self.chirality,
            "axial_advance": self.axial_advance,
        }


@dataclass(frozen=True, eq=False)
class FrameState:
    position: np.ndarray
    tangent: np.ndarray
    normal: np.ndarray
    binormal: np.ndarray
    r1: np.ndarray
    r2: np.ndarray

    @property
    def width_director(self) -> np.ndarray:
        # d_y completes (T, d_y, N) to a right-handed triad
        return -self.binormal


@dataclass(frozen=True)
class MorphologyClass:
    kind: Morphology
    gauss_curvature: float
    mean_curvature: float

    @property
    def is_helix(self) -> bool:
        return self.kind in (
            Morphology.CYLINDRICAL_HELIX,
            Morphology.GENERAL_HELIX_SADDLE,
            Morphology.GENERAL_HELIX_CONVEX,
        )


DEFAULT_LENGTH = 10.0
DEFAULT_WIDTH = 1.0
DEFAULT_THICKNESS = 0.01


@dataclass(frozen=True)
class RibbonExtent:
    length: float
    width: float
    samples_s: int = 200
    samples_t: int = 20

    def __post_init__(self):
        if self.samples_s < 2 or self.samples_t < 2:
            raise InvalidInputError(
                f"sample counts must be at least 2, got {self.samples_s}x{self.samples_t}"
            )
        if not (self.length > 0 and self.width > 0):
            raise InvalidInputError(f"length and width must be positive, got L={self.length}, w={self.width}")
        if self.width > self.length:
            logger.warning(
                "ribbon wider than long",
                extra={"data": {"length": self.length, "width": self.width}},
            )


@dataclass(frozen=True, eq=False)
class TriangleMesh:
    vertices: np.ndarray
    triangles: np.ndarray
    params: np.ndarray
    samples_s: int
    samples_t: int
    state: Optional[PrincipalCurvatureState] = None

    @property
    def vertex_count(self) -> int:
        return int(self.vertices.shape[0])

    @property
    def triangle_count(self) -> int:
        return int(self.triangles.shape[0])

    def grid_index(self, vertex: int) -> Tuple[int, int]:
        return divmod(int(vertex), self.samples_t)

    def is_boundary(self, vertex: int) -> bool:
        i, j = self.grid_index(vertex)
        return i in (0, self.samples_s - 1) or j in (0, self.samples_t - 1)


@dataclass(frozen=True)
class ContactResult:
    min_gap: float
    touching: bool


@dataclass(frozen=True)
class SurfaceStressSpec:
    f1: float = 0.0
    f2: float = 0.0
    orientation: float = 0.0

    def tensor(self) -> np.ndarray:
        return tensor_from_principal(self.f1, self.f2, self.orientation)

    @property
    def is_isotropic(self) -> bool:
        return abs(self.f1 - self.f2) <= 1e-12 * max(abs(self.f1), abs(self.f2))

    @staticmethod
    def from_tensor(tensor: np.ndarray) -> "SurfaceStressSpec":
        f1, f2, theta = principal_from_tensor(tensor)
        return SurfaceStressSpec(f1=f1, f2=f2, orientation=theta)


@dataclass(frozen=True)
class Prestretch:
    p1: float = 0.0
    p2: float = 0.0
    orientation: float = 0.0

    def tensor(self, cut_angle: float = 0.0) -> np.ndarray:
        return tensor_from_principal(self.p1, self.p2, self.orientation - cut_angle)


@dataclass(frozen=True)
class ResidualStrain:
    xx: float = 0.0
    yy: float = 0.0
    xy: float = 0.0
    zz: float = 0.0

    def vector(self) -> np.ndarray:
        # ordering shared with the strain vector (xx, yy, zz, xy)
        return np.array([self.xx, self.yy, self.zz, self.xy])


@dataclass(frozen=True)
class Layer:
    thickness: float
    youngs_modulus: float
    poisson_ratio: float
    residual_strain: ResidualStrain = field(default_factory=ResidualStrain)

    def __post_init__(self):
        _check_material(self.thickness, self.youngs_modulus, self.poisson_ratio)


@dataclass(frozen=True)
class RibbonSection:
    thickness: float
    youngs_modulus: float
    poisson_ratio: float
    layers: Tuple[Layer, ...] = ()

    def __post_init__(self):
        _check_material(self.thickness, self.youngs_modulus, self.poisson_ratio)
        if self.layers:
            total = sum(layer.thickness for layer in self.layers)
            if not math.isclose(total, self.thickness, rel_tol=1e-9):
                raise InvalidInputError(
                    f"layer thicknesses sum to {total}, section thickness is {self.thickness}"
                )

    @property
    def is_layered(self) -> bool:
        return len(self.layers) > 0

    @staticmethod
    def laminate(layers: List[Layer]) -> "RibbonSection":
        """Section whose nominal E and nu are those of the stiffest layer."""
        if not layers:
            raise InvalidInputError("laminate needs at least one layer")
        stiffest = max(layers, key=lambda layer: layer.youngs_modulus)
        return RibbonSection(
            thickness=sum(layer.thickness for layer in layers),
            youngs_modulus=stiffest.youngs_modulus,
            poisson_ratio=stiffest.poisson_ratio,
            layers=tuple(layers),
        )


def _check_material(thickness: float, youngs_modulus: float, poisson_ratio: float) -> None:
    if not thickness > 0:
        raise InvalidInputError(f"thickness must be positive, got {thickness}")
    if not youngs_modulus > 0:
        raise InvalidInputError(f"Young's modulus must be positive, got {youngs_modulus}")
    if not 0.0 <= poisson_ratio < 0.5:
        raise InvalidInputError(f"Poisson ratio must lie in [0, 0.5), got {poisson_ratio}")


@dataclass(frozen=True)
class EquilibriumSolution:
    kappa1: float
    kappa2: float
    phi: float
    q: float = 0.0
    eps_xx: float = 0.0
    eps_yy: float = 0.0
    eps_xy: float = 0.0
    eps_zz: float = 0.0
    energy: float = 0.0
    degenerate: bool = False
    gradient_norm: float = 0.0

    @property
    def membrane_tensor(self) -> np.ndarray:
        return np.array([[self.eps_xx, self.eps_xy], [self.eps_xy, self.eps_yy]])

    def _principal_frame(self) -> Tuple[np.ndarray, np.ndarray]:
        c, s = math.cos(self.phi), math.sin(self.phi)
        return np.array([c, -s]), np.array([s, c])

    @property
    def eps11(self) -> float:
        r1, _ = self._principal_frame()
        return float(r1 @ self.membrane_tensor @ r1)

    @property
    def eps22(self) -> float:
        _, r2 = self._principal_frame()
        return float(r2 @ self.membrane_tensor @ r2)

    @property
    def eps12(self) -> float:
        r1, r2 = self._principal_frame()
        return float(r1 @ self.membrane_tensor @ r2)

    @property
    def eps33(self) -> float:
        return self.eps_zz

    def curvature_state(self) -> PrincipalCurvatureState:
        return PrincipalCurvatureState(self.kappa1, self.kappa2, self.phi)

    def canonical(self) -> "EquilibriumSolution":
        """Same physical state labelled with kappa1 >= kappa2 and phi in [-pi/2, pi/2)."""
        if self.kappa1 >= self.kappa2:
            return replace(self, phi=normalize_angle(self.phi))
        return replace(
            self,
            kappa1=self.kappa2,
            kappa2=self.kappa1,
            phi=normalize_angle(self.phi + 0.5 * math.pi),
        )

    def as_dict(self) -> dict:
        return {
            "kappa1": self.kappa1,
            "kappa2": self.kappa2,
            "phi": self.phi,
            "q": self.q,
            "eps_xx": self.eps_xx,
            "eps_yy": self.eps_yy,
            "eps_xy": self.eps_xy,
            "eps_zz": self.eps_zz,
            "eps11": self.eps11,
            "eps22": self.eps22,
            "eps33": self.eps33,
            "energy": self.energy,
            "degenerate": self.degenerate,
            "gradient_norm": self.gradient_norm,
        }


@dataclass(frozen=True)
class StressDecomposition:
    stretch: SurfaceStressSpec
    bend: SurfaceStressSpec


@dataclass(frozen=True, eq=False)
class TwoSurfaceSolution:
    solution: EquilibriumSolution
    stretch_strain: np.ndarray
    decomposition: StressDecomposition


@dataclass(frozen=True)
class SweepAxis:
    name: str
    min: float
    max: float
    count: int

    def __post_init__(self):
        if not (math.isfinite(self.min) and math.isfinite(self.max)):
            raise InvalidInputError(f"axis '{self.name}' range must be finite")
        if self.count < 2 and not (self.count == 1 and self.min == self.max):
            raise InvalidInputError(f"axis '{self.name}' needs count >= 2, got {self.count}")

    def values(self) -> np.ndarray:
        return np.linspace(self.min, self.max, self.count)


@dataclass(frozen=True)
class LaminateSpec:
    layers: Tuple[Layer, ...]
    prestretch: Tuple[Optional[Prestretch], ...]


@dataclass(frozen=True)
class SweepSpec:
    axes: Tuple[SweepAxis, ...]
    fixed: Dict[str, float] = field(default_factory=dict)
    mode: SweepMode = SweepMode.GEOMETRIC
    detect_contact: Optional[bool] = None
    clearance: Optional[float] = None
    tolerance: float = 1e-9
    coarse_samples: Tuple[int, int] = (120, 12)
    fine_samples: Tuple[int, int] = (480, 48)
    laminate: Optional[LaminateSpec] = None

    def __post_init__(self):
        if not 1 <= len(self.axes) <= 3:
            raise InvalidInputError(f"a sweep has 1 to 3 axes, got {len(self.axes)}")
        names = [axis.name for axis in self.axes]
        if len(set(names)) != len(names):
            raise InvalidInputError(f"duplicate sweep axes: {names}")

    @property
    def axis_names(self) -> List[str]:
        return [axis.name for axis in self.axes]

    @property
    def contact_enabled(self) -> bool:
        if self.detect_contact is not None:
            return self.detect_contact
        return "width" in self.axis_names


@dataclass(frozen=True)
class PhaseRecord:
    index: Tuple[int, ...]
    parameters: Dict[str, float]
    morphology: MorphologyClass
    descriptors: HelixDescriptors
    tubule: Optional[bool] = None
    min_gap: Optional[float] = None
    degenerate: bool = False
    solution: Optional[EquilibriumSolution] = None


@dataclass
class PhaseTable:
    axes: List[str]
    records: List[PhaseRecord] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self) -> Iterator[PhaseRecord]:
        return iter(self.records)

    def kinds(self) -> List[Morphology]:
        return [record.morphology.kind for record in self.records]


@dataclass(frozen=True)
class VerificationResult:
    suite: str
    invariant: str
    residual: float
    cases: int

    def passed(self, tolerance: float) -> bool:
        return bool(self.residual <= tolerance)
