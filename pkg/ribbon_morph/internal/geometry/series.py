"""Entire functions behind the helical closed forms.

Each helper is the exact expression divided through by the proper power
of ``a`` so that it stays finite at ``a = 0``; below ``|a s| < 1e-4`` the
three-term Taylor expansion is used instead of the cancelling quotient.
"""
from typing import Callable

import numpy as np

TAYLOR_THRESHOLD = 1e-4


def _guarded(
        a,
        s,
        exact: Callable[[np.ndarray, np.ndarray], np.ndarray],
        taylor: Callable[[np.ndarray, np.ndarray], np.ndarray],
):
    a = np.asarray(a, dtype=float)
    s = np.asarray(s, dtype=float)
    small = np.abs(a * s) < TAYLOR_THRESHOLD
    safe_a = np.where(small, 1.0, a)
    out = np.where(small, taylor(a, s), exact(safe_a, s))
    return out[()] if out.ndim == 0 else out


def sinc_term(a, s):
    """sin(a s) / a"""
    return _guarded(
        a, s,
        lambda a, s: np.sin(a * s) / a,
        lambda a, s: s - a ** 2 * s ** 3 / 6.0 + a ** 4 * s ** 5 / 120.0,
    )


def versine_term(a, s):
    """(1 - cos(a s)) / a**2"""
    return _guarded(
        a, s,
        lambda a, s: 2.0 * np.sin(0.5 * a * s) ** 2 / a ** 2,
        lambda a, s: s ** 2 / 2.0 - a ** 2 * s ** 4 / 24.0 + a ** 4 * s ** 6 / 720.0,
    )


def excess_term(a, s):
    """(a s - sin(a s)) / a**3"""
    return _guarded(
        a, s,
        lambda a, s: (a * s - np.sin(a * s)) / a ** 3,
        lambda a, s: s ** 3 / 6.0 - a ** 2 * s ** 5 / 120.0 + a ** 4 * s ** 7 / 5040.0,
    )
