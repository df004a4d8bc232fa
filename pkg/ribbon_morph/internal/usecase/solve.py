from ribbon_morph.internal.dto.dto import EquilibriumSolution
from ribbon_morph.internal.dto.enums import JobMode
from ribbon_morph.internal.dto.report import RunReport
from ribbon_morph.internal.dto.request import JobRequest
from ribbon_morph.internal.elasticity.closed_form import solve_single_surface, solve_two_surface
from ribbon_morph.internal.elasticity.numeric import solve_stationary_numeric
from ribbon_morph.internal.errors import ConfigError
from ribbon_morph.internal.jobconfig.builders import curvature_state, ribbon_section, surface_loads
from ribbon_morph.internal.usecase.geometry import GeometryUseCase
from ribbon_morph.internal.usecase.interfaces import ILogger


class SolveUseCase:
    def __init__(
            self,
            geometry: GeometryUseCase,
            logger: ILogger,
            scan_points: int,
    ) -> None:
        self._geometry: GeometryUseCase = geometry
        self._logger: ILogger = logger
        self._scan_points = scan_points

    def equilibrium(self, request: JobRequest) -> EquilibriumSolution:
        cfg = request.config
        if not cfg.mode.is_mechanical:
            raise ConfigError(
                f"solve needs a mechanical mode, got '{cfg.mode.value}'",
                field="mode",
                mode=cfg.mode.value,
            )

        section = ribbon_section(cfg)
        if cfg.mode is JobMode.LAMINATE:
            solution = solve_stationary_numeric(section, scan_points=self._scan_points)
        else:
            f_plus, f_minus = surface_loads(cfg)
            if cfg.mode is JobMode.TWO_SURFACE:
                solution = solve_two_surface(section, f_plus, f_minus).solution
            else:
                solution = solve_single_surface(section, f_minus)

        if solution.degenerate:
            self._logger.info("isotropic load, curvature axes undetermined", mode=cfg.mode.value)
        return solution

    def solve(self, request: JobRequest) -> RunReport:
        solution = self.equilibrium(request)
        return self._geometry.report(request, solution.curvature_state(), solution)

    def state_for(self, request: JobRequest):
        """Curvature state of any single-point job, solving first when mechanical."""
        if request.config.mode is JobMode.GEOMETRIC:
            return curvature_state(request.config), None
        solution = self.equilibrium(request)
        return solution.curvature_state(), solution

    def classify(self, request: JobRequest) -> RunReport:
        state, solution = self.state_for(request)
        return self._geometry.report(request, state, solution, write=False)

    def mesh(self, request: JobRequest) -> RunReport:
        state, solution = self.state_for(request)
        return self._geometry.report(request, state, solution)
