from pathlib import Path
from typing import Iterable, List, Protocol, TextIO, Union

from ribbon_morph.internal.dto.dto import PhaseRecord, TriangleMesh
from ribbon_morph.internal.dto.enums import MeshFormat
from ribbon_morph.internal.dto.report import RunReport


class IMeshRepo(Protocol):
    def render(self, mesh: TriangleMesh, fmt: MeshFormat) -> bytes: ...

    def export_mesh(self, mesh: TriangleMesh, fmt: MeshFormat, path: Union[str, Path]) -> Path: ...


class ITableRepo(Protocol):
    def write(self, stream: TextIO, axes: List[str], records: Iterable[PhaseRecord]) -> int: ...

    def export_table(self, axes: List[str], records: Iterable[PhaseRecord], path: Union[str, Path]) -> int: ...


class IReportRepo(Protocol):
    def render(self, report: RunReport) -> str: ...

    def export_report(self, report: RunReport, path: Union[str, Path]) -> Path: ...


class ILogger(Protocol):
    def debug(self, message: str, *args, **kwargs) -> None: ...

    def info(self, message: str, *args, **kwargs) -> None: ...

    def warn(self, message: str, *args, **kwargs) -> None: ...

    def error(self, message: str, *args, **kwargs) -> None: ...
