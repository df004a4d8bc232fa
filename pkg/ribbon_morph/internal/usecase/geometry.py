from typing import Dict, List, Optional

import numpy as np

from ribbon_morph.internal.dto.dto import EquilibriumSolution, PrincipalCurvatureState, RibbonExtent
from ribbon_morph.internal.dto.enums import JobMode
from ribbon_morph.internal.dto.report import RunReport
from ribbon_morph.internal.dto.request import JobRequest
from ribbon_morph.internal.errors import ConfigError, ResidualError
from ribbon_morph.internal.geometry.core import (
    centerline_points,
    classify,
    descriptors,
    identity_residual,
    orthogonality_residual,
)
from ribbon_morph.internal.jobconfig.builders import curvature_state, ribbon_extent
from ribbon_morph.internal.surface.surface import surface_points, tessellate
from ribbon_morph.internal.usecase.interfaces import ILogger, IMeshRepo, IReportRepo

RESIDUAL_SAMPLES = 64
REPORT_FILE = "report.json"
MESH_STEM = "ribbon"


def geometric_residuals(state: PrincipalCurvatureState, length: float) -> Dict[str, float]:
    s = np.linspace(0.0, length, RESIDUAL_SAMPLES)
    edge_gap = np.linalg.norm(surface_points(state, s, np.zeros_like(s)) - centerline_points(state, s), axis=-1)
    return {
        "identity": identity_residual(state),
        "frame_orthogonality": orthogonality_residual(state, s),
        "surface_centerline": float(np.max(edge_gap)),
    }


class GeometryUseCase:
    def __init__(
            self,
            mesh_repo: IMeshRepo,
            report_repo: IReportRepo,
            logger: ILogger,
            residual_tolerance: float,
    ) -> None:
        self._mesh_repo: IMeshRepo = mesh_repo
        self._report_repo: IReportRepo = report_repo
        self._logger: ILogger = logger
        self._residual_tolerance = residual_tolerance

    def geometry(self, request: JobRequest) -> RunReport:
        if request.config.mode is not JobMode.GEOMETRIC:
            raise ConfigError(
                f"geometry needs mode 'geometric', got '{request.config.mode.value}'",
                field="mode",
                mode=request.config.mode.value,
            )
        return self.report(request, curvature_state(request.config))

    def report(
            self,
            request: JobRequest,
            state: PrincipalCurvatureState,
            solution: Optional[EquilibriumSolution] = None,
            write: bool = True,
    ) -> RunReport:
        """Descriptors, class and residuals for ``state``; writes mesh and report when asked."""
        cfg = request.config
        extent = ribbon_extent(cfg, request.samples)
        tol = request.classification_tolerance
        morphology = classify(state, tol, 1.0 / extent.length)

        residuals = geometric_residuals(state, extent.length)
        if solution is not None:
            residuals["gradient_norm"] = solution.gradient_norm

        outputs: List[str] = []
        if write and request.mesh_formats:
            outputs = [str(p) for p in self.export(request, state, extent)]

        report = RunReport(
            mode=cfg.mode.value,
            units=cfg.units.value,
            inputs=cfg.model_dump(mode="json", exclude_none=True),
            morphology=morphology.kind.value,
            gauss_curvature=morphology.gauss_curvature,
            mean_curvature=morphology.mean_curvature,
            descriptors=descriptors(state, tol).as_dict(),
            solution=solution.as_dict() if solution is not None else None,
            residuals=residuals,
            tolerances={name: self._residual_tolerance for name in residuals},
            outputs=outputs,
        )
        if write:
            self._report_repo.export_report(report, request.out_dir / REPORT_FILE)
        return report

    def export(self, request: JobRequest, state: PrincipalCurvatureState, extent: RibbonExtent) -> List:
        mesh = tessellate(state, extent)
        paths = []
        for fmt in request.mesh_formats:
            paths.append(self._mesh_repo.export_mesh(mesh, fmt, request.out_dir / f"{MESH_STEM}.{fmt.value}"))
        self._logger.debug("mesh written", vertices=mesh.vertex_count, triangles=mesh.triangle_count)
        return paths

    @staticmethod
    def check(report: RunReport) -> None:
        for name, value in report.failures.items():
            raise ResidualError(name, value, report.tolerances[name])
