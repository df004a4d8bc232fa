import argparse
import logging

from dataclasses import dataclass

from ribbon_morph.config.config import AppConfig
from ribbon_morph.internal.logger.logger import Logger, formatter_for
from ribbon_morph.internal.presentation.commands import CommandsRouter
from ribbon_morph.internal.repository.mesh import MeshRepository
from ribbon_morph.internal.repository.report import ReportRepository
from ribbon_morph.internal.repository.table import TableRepository
from ribbon_morph.internal.usecase.geometry import GeometryUseCase
from ribbon_morph.internal.usecase.solve import SolveUseCase
from ribbon_morph.internal.usecase.sweep import SweepUseCase
from ribbon_morph.internal.usecase.verify import VerifyUseCase


class App:
    def __init__(self, cfg: AppConfig, quiet: bool = False):
        self.cfg = cfg
        self.quiet = quiet
        self.logger = None
        self.repositories = None
        self.uc = None
        self.routers = None

        self._configure()

    def _configure(self):
        self._init_logger()

        self.logger.debug("app configuring...", config=self.cfg.model_dump())

        self._init_repositories()
        self._init_use_cases()
        self._init_services()

        self.logger.debug("app configured successfully")

    def _init_logger(self):
        level = logging.getLevelName(self.cfg.logging.level)
        if self.quiet:
            level = max(level, logging.WARNING)
        self.logger = Logger(
            level=level,
            formatter=formatter_for(self.cfg.logging.fmt),
        )

    def _init_repositories(self):
        self.repositories = Repositories(
            mesh=MeshRepository(),
            table=TableRepository(),
            report=ReportRepository(),
        )

    def _init_use_cases(self):
        solver = self.cfg.solver
        geometry = GeometryUseCase(
            mesh_repo=self.repositories.mesh,
            report_repo=self.repositories.report,
            logger=self.logger,
            residual_tolerance=solver.residual_tolerance,
        )
        self.uc = UseCases(
            geometry=geometry,
            solve=SolveUseCase(
                geometry=geometry,
                logger=self.logger,
                scan_points=solver.phi_scan_points,
            ),
            sweep=SweepUseCase(
                table_repo=self.repositories.table,
                logger=self.logger,
                coarse_samples=solver.coarse_samples,
                fine_samples=solver.fine_samples,
            ),
            verify=VerifyUseCase(
                logger=self.logger,
                scan_points=solver.phi_scan_points,
            ),
        )

    def _init_services(self):
        self.routers = Routers(
            commands=CommandsRouter(
                logger=self.logger,
                geometry_use_case=self.uc.geometry,
                solve_use_case=self.uc.solve,
                sweep_use_case=self.uc.sweep,
                verify_use_case=self.uc.verify,
                tolerance=self.cfg.solver.tolerance,
                residual_tolerance=self.cfg.solver.residual_tolerance,
                seed=self.cfg.solver.seed,
            ),
        )

    def run(self, args: argparse.Namespace) -> int:
        return self.routers.commands.dispatch(args)


@dataclass
class Repositories:
    mesh: MeshRepository
    table: TableRepository
    report: ReportRepository


@dataclass
class UseCases:
    geometry: GeometryUseCase
    solve: SolveUseCase
    sweep: SweepUseCase
    verify: VerifyUseCase


@dataclass
class Routers:
    commands: CommandsRouter
