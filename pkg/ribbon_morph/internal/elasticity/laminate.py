import logging
from dataclasses import replace
from typing import List, Optional, Sequence

import numpy as np

from ribbon_morph.internal.dto.dto import Layer, Prestretch, ResidualStrain, RibbonSection
from ribbon_morph.internal.errors import InvalidInputError

logger = logging.getLogger(__name__)

LINEAR_RANGE = 0.3


def laminate_prestretch_to_residual(
        layers: Sequence[Layer],
        prestretch: Sequence[Optional[Prestretch]],
        cut_angle: float = 0.0,
) -> List[ResidualStrain]:
    """Residual strain of layers bonded while stretched.

    The bonded layer keeps its pre-stretch as a residual that it releases by
    contracting; the thickness component is the plane-stress value
    -nu / (1 - nu) * trace. ``cut_angle`` is the angle from the stretching
    frame to the ribbon axis.
    """
    if len(layers) != len(prestretch):
        raise InvalidInputError(f"{len(layers)} layers but {len(prestretch)} pre-stretch entries")

    out = []
    for index, (layer, stretch) in enumerate(zip(layers, prestretch)):
        if stretch is None:
            out.append(ResidualStrain())
            continue
        if max(abs(stretch.p1), abs(stretch.p2)) > LINEAR_RANGE:
            logger.warning(
                "pre-stretch beyond linear range",
                extra={"data": {"layer": index, "p1": stretch.p1, "p2": stretch.p2}},
            )
        t = stretch.tensor(cut_angle)
        nu = layer.poisson_ratio
        out.append(ResidualStrain(
            xx=float(t[0, 0]),
            yy=float(t[1, 1]),
            xy=float(t[0, 1]),
            zz=float(-nu / (1.0 - nu) * np.trace(t)),
        ))
    return out


def prestretched_section(
        layers: Sequence[Layer],
        prestretch: Sequence[Optional[Prestretch]],
        cut_angle: float = 0.0,
) -> RibbonSection:
    residuals = laminate_prestretch_to_residual(layers, prestretch, cut_angle)
    return RibbonSection.laminate([
        replace(layer, residual_strain=residual) for layer, residual in zip(layers, residuals)
    ])
