import csv
import math
from pathlib import Path
from typing import Iterable, List, TextIO, Union

from ribbon_morph.internal.dto.dto import PhaseRecord
from ribbon_morph.internal.errors import ExportError

OUTPUT_COLUMNS = [
    "morphology",
    "alpha",
    "beta",
    "tau",
    "helix_angle",
    "radius",
    "pitch",
    "chirality",
    "gauss_curvature",
    "mean_curvature",
    "degenerate",
    "tubule",
    "min_gap",
]


def _num(v: float) -> str:
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    return format(float(v) + 0.0, ".9g")


def _flag(v) -> str:
    return "" if v is None else str(bool(v)).lower()


class TableRepository:
    """Streams phase records as CSV, one row per grid point."""

    def header(self, axes: List[str]) -> List[str]:
        return [f"i{k}" for k in range(len(axes))] + list(axes) + OUTPUT_COLUMNS

    def row(self, axes: List[str], record: PhaseRecord) -> List[str]:
        d = record.descriptors
        return (
            [str(i) for i in record.index]
            + [_num(record.parameters[name]) for name in axes]
            + [
                record.morphology.kind.value,
                _num(d.alpha),
                _num(d.beta),
                _num(d.tau),
                _num(d.helix_angle),
                _num(d.radius),
                _num(d.pitch),
                str(d.chirality),
                _num(record.morphology.gauss_curvature),
                _num(record.morphology.mean_curvature),
                _flag(record.degenerate),
                _flag(record.tubule),
                "" if record.min_gap is None else _num(record.min_gap),
            ]
        )

    def write(self, stream: TextIO, axes: List[str], records: Iterable[PhaseRecord]) -> int:
        writer = csv.writer(stream, lineterminator="\r\n")
        writer.writerow(self.header(axes))
        count = 0
        for record in records:
            writer.writerow(self.row(axes, record))
            count += 1
        return count

    def export_table(self, axes: List[str], records: Iterable[PhaseRecord], path: Union[str, Path]) -> int:
        path = Path(path)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            with path.open("w", encoding="ascii", newline="") as f:
                return self.write(f, axes, records)
        except OSError as e:
            raise ExportError(str(path), e) from e
