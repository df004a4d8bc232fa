"""Conversion of a validated job into SI domain objects.

Every quantity crosses the unit boundary here exactly once; nothing
downstream knows which unit system the document declared.
"""
from typing import List, Optional, Tuple

from ribbon_morph.internal.dto.dto import (
    LaminateSpec,
    Layer,
    Prestretch,
    PrincipalCurvatureState,
    RibbonExtent,
    RibbonSection,
    SurfaceStressSpec,
    SweepAxis,
    SweepSpec,
)
from ribbon_morph.internal.dto.enums import JobMode
from ribbon_morph.internal.elasticity.laminate import prestretched_section
from ribbon_morph.internal.geometry.core import DEFAULT_TOLERANCE
from ribbon_morph.internal.errors import ConfigError
from ribbon_morph.internal.jobconfig.schema import JobConfig, LayerBlock, SurfaceStressBlock
from ribbon_morph.internal.utils.units import to_si, unit_scale


def curvature_state(cfg: JobConfig) -> PrincipalCurvatureState:
    if cfg.geometry is None:
        raise ConfigError("job has no [geometry] block", field="geometry", mode=cfg.mode.value)
    k = unit_scale(cfg.units).curvature
    return PrincipalCurvatureState(cfg.geometry.kappa1 * k, cfg.geometry.kappa2 * k, cfg.geometry.phi)


def ribbon_extent(cfg: JobConfig, samples: Optional[Tuple[int, int]] = None) -> RibbonExtent:
    scale = unit_scale(cfg.units).length
    samples_s, samples_t = samples or (cfg.extent.samples_s, cfg.extent.samples_t)
    return RibbonExtent(
        length=cfg.extent.length * scale,
        width=cfg.extent.width * scale,
        samples_s=samples_s,
        samples_t=samples_t,
    )


def clearance(cfg: JobConfig) -> float:
    return cfg.clearance * unit_scale(cfg.units).length


def _surface_stress(block: Optional[SurfaceStressBlock], cfg: JobConfig) -> SurfaceStressSpec:
    if block is None:
        return SurfaceStressSpec()
    f = unit_scale(cfg.units).surface_stress
    return SurfaceStressSpec(block.f1 * f, block.f2 * f, block.orientation)


def surface_loads(cfg: JobConfig) -> Tuple[SurfaceStressSpec, SurfaceStressSpec]:
    """(f_plus, f_minus) in N/m."""
    m = cfg.mechanics
    return _surface_stress(m.f_plus, cfg), _surface_stress(m.f_minus, cfg)


def _layers(blocks: List[LayerBlock], cfg: JobConfig) -> Tuple[Tuple[Layer, ...], Tuple[Optional[Prestretch], ...]]:
    scale = unit_scale(cfg.units)
    layers = tuple(
        Layer(
            thickness=b.thickness * scale.length,
            youngs_modulus=b.youngs_modulus * scale.stress,
            poisson_ratio=b.poisson_ratio,
        )
        for b in blocks
    )
    stretches = tuple(
        None if b.prestretch is None else Prestretch(b.prestretch.p1, b.prestretch.p2, b.prestretch.orientation)
        for b in blocks
    )
    return layers, stretches


def ribbon_section(cfg: JobConfig) -> RibbonSection:
    m = cfg.mechanics
    if cfg.mode is JobMode.LAMINATE:
        layers, stretches = _layers(m.layers, cfg)
        return prestretched_section(layers, stretches, m.cut_angle)
    scale = unit_scale(cfg.units)
    return RibbonSection(
        thickness=m.thickness * scale.length,
        youngs_modulus=m.youngs_modulus * scale.stress,
        poisson_ratio=m.poisson_ratio,
    )


def sweep_spec(
        cfg: JobConfig,
        coarse_samples: Tuple[int, int] = (120, 12),
        fine_samples: Tuple[int, int] = (480, 48),
        tolerance: Optional[float] = None,
) -> SweepSpec:
    s = cfg.sweep
    if s is None:
        raise ConfigError("job has no [sweep] block", field="sweep", mode=cfg.mode.value)

    axes = tuple(
        SweepAxis(
            name=a.name,
            min=to_si(a.name, a.min, cfg.units),
            max=to_si(a.name, a.max, cfg.units),
            count=a.count,
        )
        for a in s.axes
    )
    fixed = {name: to_si(name, value, cfg.units) for name, value in s.fixed.items()}
    swept = {a.name for a in axes}
    # extent fills the ribbon size unless it is swept or pinned
    scale = unit_scale(cfg.units).length
    for name, value in (("length", cfg.extent.length), ("width", cfg.extent.width)):
        if name not in fixed and name not in swept:
            fixed[name] = value * scale

    # without an explicit clearance a swept or pinned thickness is used per point
    gap = None
    if cfg.output.clearance is not None or not ({"thickness"} & (swept | set(fixed))):
        gap = clearance(cfg)

    laminate = None
    if s.layers:
        laminate = LaminateSpec(*_layers(s.layers, cfg))

    return SweepSpec(
        axes=axes,
        fixed=fixed,
        mode=s.mode,
        detect_contact=s.detect_contact,
        clearance=gap,
        tolerance=tolerance or cfg.output.tolerance or DEFAULT_TOLERANCE,
        coarse_samples=coarse_samples,
        fine_samples=fine_samples,
        laminate=laminate,
    )
