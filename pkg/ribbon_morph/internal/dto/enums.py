from enum import Enum


class Morphology(Enum):
    FLAT = "flat"
    RING = "ring"
    CYLINDRICAL_HELIX = "cylindrical_helix"
    PURELY_TWISTED = "purely_twisted"
    GENERAL_HELIX_SADDLE = "general_helix_saddle"
    GENERAL_HELIX_CONVEX = "general_helix_convex"


class JobMode(Enum):
    GEOMETRIC = "geometric"
    SINGLE_SURFACE = "single_surface"
    TWO_SURFACE = "two_surface"
    LAMINATE = "laminate"
    SWEEP = "sweep"

    @property
    def is_mechanical(self) -> bool:
        return self in (JobMode.SINGLE_SURFACE, JobMode.TWO_SURFACE, JobMode.LAMINATE)


class SweepMode(Enum):
    GEOMETRIC = "geometric"
    MECHANICAL = "mechanical"


class BoundaryKind(Enum):
    TWIST = "twist"
    RING = "ring"
    CYLINDER = "cylinder"


class MeshFormat(Enum):
    OBJ = "obj"
    PLY = "ply"


class UnitSystem(Enum):
    SI = "SI"
    CM_MPA = "cm-MPa"
