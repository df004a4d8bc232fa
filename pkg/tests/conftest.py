import logging
import math

import numpy as np
import pytest

from ribbon_morph.internal.dto.dto import Layer, PrincipalCurvatureState
from ribbon_morph.internal.dto.enums import Morphology
from ribbon_morph.internal.logger.logger import ROOT_LOGGER

QUARTER_PI = 0.25 * math.pi

# latex and acrylic in SI
LATEX = Layer(thickness=0.048e-2, youngs_modulus=1.4e6, poisson_ratio=0.49)
ACRYLIC = Layer(thickness=0.1e-2, youngs_modulus=10.3e6, poisson_ratio=0.37)

# (kappa1, kappa2) at phi = pi/4, expected class and handedness
SPECTRUM_CASES = {
    "a": ((1.0, 0.0), Morphology.CYLINDRICAL_HELIX, 1),
    "b": ((1.0, 0.5), Morphology.GENERAL_HELIX_CONVEX, 1),
    "c": ((1.0, 1.0), Morphology.RING, 0),
    "d": ((0.0, 1.0), Morphology.CYLINDRICAL_HELIX, -1),
    "e": ((0.5, 1.0), Morphology.GENERAL_HELIX_CONVEX, -1),
    "f": ((-1.0, 1.0), Morphology.PURELY_TWISTED, -1),
}


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240229)


@pytest.fixture
def spectrum_state():
    def make(panel: str) -> PrincipalCurvatureState:
        (k1, k2), _, _ = SPECTRUM_CASES[panel]
        return PrincipalCurvatureState(k1, k2, QUARTER_PI)
    return make


def random_states(rng: np.random.Generator, count: int, bound: float):
    for _ in range(count):
        k1, k2 = rng.uniform(-bound, bound, size=2)
        yield PrincipalCurvatureState(float(k1), float(k2), float(rng.uniform(-math.pi, math.pi)))


@pytest.fixture(autouse=True)
def package_logging():
    # App wiring detaches the package logger from root; reattach for caplog
    yield
    root = logging.getLogger(ROOT_LOGGER)
    root.handlers.clear()
    root.propagate = True
    root.setLevel(logging.NOTSET)
