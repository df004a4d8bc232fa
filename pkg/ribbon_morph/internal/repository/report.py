from pathlib import Path
from typing import Union

from ribbon_morph.internal.dto.report import RunReport
from ribbon_morph.internal.errors import ExportError


class ReportRepository:
    def render(self, report: RunReport) -> str:
        return report.model_dump_json(indent=2) + "\n"

    def export_report(self, report: RunReport, path: Union[str, Path]) -> Path:
        path = Path(path)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(self.render(report), encoding="utf-8")
        except OSError as e:
            raise ExportError(str(path), e) from e
        return path
