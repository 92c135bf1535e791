"""Deterministic low-discrepancy sampling used by the sup/inf probes.

All probes in the package sample with an unscrambled Halton sequence so that
repeated runs see exactly the same points.  Ball samples are generated once on
the unit ball and scaled, which makes quantities like ``sup_{|xi|<=r} F``
monotone in ``r`` by construction.
"""
from __future__ import annotations

from functools import lru_cache

import numpy as np
from scipy.stats import qmc


@lru_cache(maxsize=64)
def _halton_cached(dim: int, m: int) -> np.ndarray:
    pts = qmc.Halton(d=dim, scramble=False).random(m)
    pts.setflags(write=False)
    return pts


def halton(dim: int, m: int) -> np.ndarray:
    """First ``m`` points of the unscrambled Halton sequence in [0,1)^dim."""
    return _halton_cached(dim, m)


def domain_points(n: int, m: int) -> np.ndarray:
    """Low-discrepancy points of the unit domain [0,1]^n, shape (m, n)."""
    return halton(n, m)


def unit_sphere(n: int, m: int) -> np.ndarray:
    """Points on the unit sphere |xi| = 1 in R^n, shape (m, n)."""
    if n == 1:
        signs = np.where(halton(1, m)[:, 0] < 0.5, -1.0, 1.0)
        return signs[:, None]
    theta = 2.0 * np.pi * halton(1, m)[:, 0]
    return np.stack([np.cos(theta), np.sin(theta)], axis=-1)


def unit_ball(n: int, m: int) -> np.ndarray:
    """Points of the closed unit ball, half volume-uniform, half on the sphere.

    The boundary shell is included because for convex integrands vanishing at
    the origin the supremum over the ball lives on the sphere.
    """
    m_in = m // 2
    m_bd = m - m_in
    if n == 1:
        u = halton(1, m_in)[:, 0]
        inner = (2.0 * u - 1.0)[:, None]
    else:
        uv = halton(2, m_in)
        rad = np.sqrt(uv[:, 0])
        ang = 2.0 * np.pi * uv[:, 1]
        inner = np.stack([rad * np.cos(ang), rad * np.sin(ang)], axis=-1)
    return np.concatenate([inner, unit_sphere(n, m_bd)], axis=0)


def joint_domain_ball(n: int, m: int, radius: float) -> tuple[np.ndarray, np.ndarray]:
    """Paired sample of Omega x B_radius, shapes (m, n) and (m, n)."""
    return domain_points(n, m), radius * unit_ball(n, m)
