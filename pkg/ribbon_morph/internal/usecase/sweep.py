import math
import sys
from typing import Optional, Tuple

from ribbon_morph.internal.dto.enums import JobMode
from ribbon_morph.internal.dto.request import JobRequest
from ribbon_morph.internal.errors import ConfigError
from ribbon_morph.internal.jobconfig.builders import sweep_spec
from ribbon_morph.internal.sweep.sweep import iter_sweep
from ribbon_morph.internal.usecase.interfaces import ILogger, ITableRepo

TABLE_FILE = "sweep.csv"


class SweepUseCase:
    def __init__(
            self,
            table_repo: ITableRepo,
            logger: ILogger,
            coarse_samples: Tuple[int, int],
            fine_samples: Tuple[int, int],
    ) -> None:
        self._table_repo: ITableRepo = table_repo
        self._logger: ILogger = logger
        self._coarse_samples = coarse_samples
        self._fine_samples = fine_samples

    def sweep(self, request: JobRequest) -> Tuple[int, Optional[str]]:
        """Streams the phase table; returns the row count and the file written, if any."""
        cfg = request.config
        if cfg.mode is not JobMode.SWEEP:
            raise ConfigError(f"sweep needs mode 'sweep', got '{cfg.mode.value}'", field="mode", mode=cfg.mode.value)

        spec = sweep_spec(cfg, self._coarse_samples, self._fine_samples, request.tolerance)
        self._logger.info(
            "sweep started",
            axes=spec.axis_names,
            points=math.prod(axis.count for axis in spec.axes),
            contact=spec.contact_enabled,
        )

        if request.to_stdout:
            rows = self._table_repo.write(sys.stdout, spec.axis_names, iter_sweep(spec))
            return rows, None

        path = request.out_dir / TABLE_FILE
        rows = self._table_repo.export_table(spec.axis_names, iter_sweep(spec), path)
        return rows, str(path)
