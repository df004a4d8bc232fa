import argparse
import json
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple

from ribbon_morph.config.config import parse_samples
from ribbon_morph.internal.dto.enums import MeshFormat
from ribbon_morph.internal.dto.report import RunReport
from ribbon_morph.internal.dto.request import JobRequest, VerifyRequest
from ribbon_morph.internal.errors import ConfigError, ExportError, InvalidInputError, ResidualError
from ribbon_morph.internal.jobconfig.parser import load_config
from ribbon_morph.internal.presentation.decorators import enriched_logger
from ribbon_morph.internal.presentation.interfaces import (
    IGeometryUseCase,
    ILogger,
    ISolveUseCase,
    ISweepUseCase,
    IVerifyUseCase,
)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_CONFIG = 2
EXIT_RESIDUAL = 3

COMMANDS = ("solve", "geometry", "mesh", "sweep", "classify", "verify")


class CommandsRouter:
    def __init__(
            self,
            logger: ILogger,
            geometry_use_case: IGeometryUseCase,
            solve_use_case: ISolveUseCase,
            sweep_use_case: ISweepUseCase,
            verify_use_case: IVerifyUseCase,
            tolerance: float,
            residual_tolerance: float,
            seed: int,
    ):
        self.__logger = logger
        self.__geometry_use_case = geometry_use_case
        self.__solve_use_case = solve_use_case
        self.__sweep_use_case = sweep_use_case
        self.__verify_use_case = verify_use_case
        self.__tolerance = tolerance
        self.__residual_tolerance = residual_tolerance
        self.__seed = seed
        self.__handlers: Dict[str, Callable[[argparse.Namespace], None]] = {}
        self.__register_router()

    def dispatch(self, args: argparse.Namespace) -> int:
        handler = self.__handlers.get(args.command)
        if handler is None:
            print(f"unknown command '{args.command}'", file=sys.stderr)
            return EXIT_CONFIG
        try:
            handler(args)
        except (ConfigError, InvalidInputError) as e:
            print(f"config error: {e}", file=sys.stderr)
            return EXIT_CONFIG
        except ResidualError as e:
            print(f"verification failed: {e}", file=sys.stderr)
            return EXIT_RESIDUAL
        except ExportError as e:
            print(f"export failed: {e}", file=sys.stderr)
            return EXIT_FAILURE
        return EXIT_OK

    def __register_router(self) -> None:
        class_name = self.__class__.__name__

        def route(name: str):
            def register(func):
                self.__handlers[name] = enriched_logger(self.__logger, class_name)(func)
                return func
            return register

        @route("geometry")
        def geometry(args: argparse.Namespace) -> None:
            report = self.__geometry_use_case.geometry(self.__job_request(args))
            self.__finish(args, report)

        @route("solve")
        def solve(args: argparse.Namespace) -> None:
            report = self.__solve_use_case.solve(self.__job_request(args))
            self.__finish(args, report)

        @route("mesh")
        def mesh(args: argparse.Namespace) -> None:
            report = self.__solve_use_case.mesh(self.__job_request(args, default_mesh=[MeshFormat.OBJ]))
            if not args.quiet:
                for path in report.outputs:
                    print(path)
            self.__geometry_use_case.check(report)

        @route("classify")
        def classify(args: argparse.Namespace) -> None:
            report = self.__solve_use_case.classify(self.__job_request(args))
            if not args.quiet:
                print(json.dumps({
                    "morphology": report.morphology,
                    "gauss_curvature": report.gauss_curvature,
                    "mean_curvature": report.mean_curvature,
                    **report.descriptors,
                }))
            self.__geometry_use_case.check(report)

        @route("sweep")
        def sweep(args: argparse.Namespace) -> None:
            rows, path = self.__sweep_use_case.sweep(self.__job_request(args))
            if path is not None and not args.quiet:
                print(path)
            self.__logger.info("sweep finished", rows=rows, path=path)

        @route("verify")
        def verify(args: argparse.Namespace) -> None:
            tolerance = args.tol if args.tol is not None else self.__residual_tolerance
            request = VerifyRequest(
                tolerance=tolerance,
                seed=args.seed if args.seed is not None else self.__seed,
                ode_cases=args.cases if args.cases is not None else 10,
            )
            results = self.__verify_use_case.verify(request)
            if not args.quiet:
                for r in results:
                    print(json.dumps({
                        "suite": r.suite,
                        "invariant": r.invariant,
                        "residual": r.residual,
                        "cases": r.cases,
                        "passed": r.passed(tolerance),
                    }))
            self.__verify_use_case.check(results, tolerance)

    def __finish(self, args: argparse.Namespace, report: RunReport) -> None:
        if not args.quiet:
            print(report.model_dump_json(indent=2))
        self.__geometry_use_case.check(report)

    def __job_request(self, args: argparse.Namespace, default_mesh: Optional[List[MeshFormat]] = None) -> JobRequest:
        if not args.config:
            raise ConfigError(f"'{args.command}' needs --config", field="config")
        cfg = load_config(args.config)

        formats = [args.format] if args.format else cfg.output.formats
        mesh_formats = [MeshFormat(f) for f in formats if f in ("obj", "ply")] or (default_mesh or [])

        samples: Optional[Tuple[int, int]] = None
        if args.samples:
            try:
                samples = parse_samples(args.samples)
            except ValueError as e:
                raise ConfigError(str(e), field="samples") from e

        out_dir = args.out if args.out is not None else cfg.output.directory
        return JobRequest(
            config=cfg,
            out_dir=Path(out_dir),
            mesh_formats=mesh_formats,
            samples=samples,
            tolerance=args.tol if args.tol is not None else cfg.output.tolerance or self.__tolerance,
        )
