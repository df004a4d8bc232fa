from pathlib import Path
from typing import Union

from ribbon_morph.internal.dto.dto import TriangleMesh
from ribbon_morph.internal.dto.enums import MeshFormat
from ribbon_morph.internal.errors import ExportError


def _num(v: float) -> str:
    # + 0.0 folds -0.0 into 0.0
    return format(float(v) + 0.0, ".9g")


def _obj(mesh: TriangleMesh) -> str:
    lines = [f"v {_num(x)} {_num(y)} {_num(z)}" for x, y, z in mesh.vertices]
    lines += [f"f {a + 1} {b + 1} {c + 1}" for a, b, c in mesh.triangles]
    return "\n".join(lines) + "\n"


def _ply(mesh: TriangleMesh) -> str:
    header = [
        "ply",
        "format ascii 1.0",
        f"element vertex {mesh.vertex_count}",
        "property double x",
        "property double y",
        "property double z",
        f"element face {mesh.triangle_count}",
        "property list uchar int vertex_indices",
        "end_header",
    ]
    lines = header + [f"{_num(x)} {_num(y)} {_num(z)}" for x, y, z in mesh.vertices]
    lines += [f"3 {a} {b} {c}" for a, b, c in mesh.triangles]
    return "\n".join(lines) + "\n"


_WRITERS = {
    MeshFormat.OBJ: _obj,
    MeshFormat.PLY: _ply,
}


class MeshRepository:
    def render(self, mesh: TriangleMesh, fmt: MeshFormat) -> bytes:
        return _WRITERS[fmt](mesh).encode("ascii")

    def export_mesh(self, mesh: TriangleMesh, fmt: MeshFormat, path: Union[str, Path]) -> Path:
        path = Path(path)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_bytes(self.render(mesh, fmt))
        except OSError as e:
            raise ExportError(str(path), e) from e
        return path
