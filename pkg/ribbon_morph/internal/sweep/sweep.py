import itertools
import logging
from dataclasses import replace
from typing import Dict, Iterator, Optional, Tuple

from ribbon_morph.internal.dto.dto import (
    DEFAULT_LENGTH,
    DEFAULT_THICKNESS,
    DEFAULT_WIDTH,
    EquilibriumSolution,
    PhaseRecord,
    PhaseTable,
    PrincipalCurvatureState,
    RibbonExtent,
    RibbonSection,
    SurfaceStressSpec,
    SweepSpec,
)
from ribbon_morph.internal.dto.enums import SweepMode
from ribbon_morph.internal.elasticity.closed_form import solve_single_surface, solve_two_surface
from ribbon_morph.internal.elasticity.laminate import prestretched_section
from ribbon_morph.internal.elasticity.numeric import solve_stationary_numeric
from ribbon_morph.internal.errors import InvalidInputError
from ribbon_morph.internal.geometry.core import classify, descriptors
from ribbon_morph.internal.surface.contact import edge_contact
from ribbon_morph.internal.surface.surface import tessellate

logger = logging.getLogger(__name__)

GEOMETRIC_PARAMETERS = frozenset({"kappa1", "kappa2", "phi", "width", "length"})
MECHANICAL_PARAMETERS = frozenset({
    "youngs_modulus",
    "poisson_ratio",
    "thickness",
    "f1_minus",
    "f2_minus",
    "orientation_minus",
    "f1_plus",
    "f2_plus",
    "orientation_plus",
    "f2_ratio",
    "cut_angle",
    "prestretch_scale",
    "width",
    "length",
})


def _check_names(spec: SweepSpec) -> None:
    allowed = GEOMETRIC_PARAMETERS if spec.mode is SweepMode.GEOMETRIC else MECHANICAL_PARAMETERS
    unknown = sorted(set(spec.axis_names).union(spec.fixed) - allowed)
    if unknown:
        raise InvalidInputError(f"unknown {spec.mode.value} sweep parameters: {', '.join(unknown)}")


def grid_points(spec: SweepSpec) -> Iterator[Tuple[Tuple[int, ...], Dict[str, float]]]:
    """Grid points in row-major order, the first axis varying slowest."""
    columns = [list(enumerate(axis.values())) for axis in spec.axes]
    for combo in itertools.product(*columns):
        params = dict(spec.fixed)
        params.update({axis.name: float(value) for axis, (_, value) in zip(spec.axes, combo)})
        yield tuple(index for index, _ in combo), params


def mechanical_solution(spec: SweepSpec, params: Dict[str, float]) -> EquilibriumSolution:
    """Routes one grid point through the matching elasticity solver."""
    if spec.laminate is not None:
        scale = params.get("prestretch_scale", 1.0)
        stretches = [
            None if p is None else replace(p, p1=p.p1 * scale, p2=p.p2 * scale)
            for p in spec.laminate.prestretch
        ]
        section = prestretched_section(spec.laminate.layers, stretches, params.get("cut_angle", 0.0))
        return solve_stationary_numeric(section)

    try:
        section = RibbonSection(
            thickness=params["thickness"],
            youngs_modulus=params["youngs_modulus"],
            poisson_ratio=params["poisson_ratio"],
        )
    except KeyError as e:
        raise InvalidInputError(f"mechanical sweep needs parameter {e.args[0]}") from e

    f1_minus = params.get("f1_minus", 0.0)
    if "f2_minus" in params:
        f2_minus = params["f2_minus"]
    else:
        f2_minus = params.get("f2_ratio", 0.0) * f1_minus
    f_minus = SurfaceStressSpec(f1_minus, f2_minus, params.get("orientation_minus", 0.0))
    f_plus = SurfaceStressSpec(
        params.get("f1_plus", 0.0),
        params.get("f2_plus", 0.0),
        params.get("orientation_plus", 0.0),
    )

    if f_plus.f1 == 0.0 and f_plus.f2 == 0.0:
        return solve_single_surface(section, f_minus)
    return solve_two_surface(section, f_plus, f_minus).solution


def point_state(
        spec: SweepSpec,
        params: Dict[str, float],
) -> Tuple[PrincipalCurvatureState, Optional[EquilibriumSolution]]:
    if spec.mode is SweepMode.GEOMETRIC:
        try:
            state = PrincipalCurvatureState(params["kappa1"], params["kappa2"], params["phi"])
        except KeyError as e:
            raise InvalidInputError(f"geometric sweep needs parameter {e.args[0]}") from e
        return state, None
    solution = mechanical_solution(spec, params)
    return solution.curvature_state(), solution


def _contact(spec: SweepSpec, state: PrincipalCurvatureState, params: Dict[str, float]) -> Tuple[bool, float]:
    length = params.get("length", DEFAULT_LENGTH)
    width = params.get("width", DEFAULT_WIDTH)
    clearance = spec.clearance if spec.clearance is not None else params.get("thickness", DEFAULT_THICKNESS)

    coarse = edge_contact(tessellate(state, RibbonExtent(length, width, *spec.coarse_samples)), clearance)
    if not coarse.touching:
        return False, coarse.min_gap

    fine = edge_contact(tessellate(state, RibbonExtent(length, width, *spec.fine_samples)), clearance)
    logger.debug(
        "tubule candidate confirmed on fine mesh",
        extra={"data": {"width": width, "coarse_gap": coarse.min_gap, "fine_gap": fine.min_gap}},
    )
    return fine.touching, fine.min_gap


def iter_sweep(spec: SweepSpec) -> Iterator[PhaseRecord]:
    """Streams one record per grid point without holding the table in memory."""
    _check_names(spec)
    for index, params in grid_points(spec):
        state, solution = point_state(spec, params)
        scale = 1.0 / params.get("length", DEFAULT_LENGTH)

        tubule, min_gap = None, None
        if spec.contact_enabled:
            tubule, min_gap = _contact(spec, state, params)

        yield PhaseRecord(
            index=index,
            parameters=params,
            morphology=classify(state, spec.tolerance, scale),
            descriptors=descriptors(state, spec.tolerance),
            tubule=tubule,
            min_gap=min_gap,
            degenerate=solution.degenerate if solution is not None else False,
            solution=solution,
        )


def run_sweep(spec: SweepSpec) -> PhaseTable:
    return PhaseTable(axes=spec.axis_names, records=list(iter_sweep(spec)))
