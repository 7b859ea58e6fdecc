"""Gaussian-area certificates for rotationally symmetric surfaces."""

import json as _json

from . import _core
from ._core import __version__, bound_names, kummer_m, riemann_hurwitz_genus, stability_residual, tricomi_u_half


def _surface(surface):
    return surface if isinstance(surface, str) else _json.dumps(surface)


def area(surface):
    return _json.loads(_core.area(_surface(surface)))


def entropy(surface, tau_points=121, y_points=33):
    return _json.loads(_core.entropy(_surface(surface), tau_points, y_points))


def gaussian_volume_ball(R=float("inf")):
    return _json.loads(_core.gaussian_volume_ball(R))


def verify_bounds(name="all", resolution=0):
    return _json.loads(_core.verify_bounds(name, resolution))


def select_parameters(g, R):
    return _json.loads(_core.select_parameters(g, R))


def inversion_max_area(g, R, resolution=200):
    return _json.loads(_core.inversion_max_area(g, R, resolution))


def jacobi_zeros():
    return _json.loads(_core.jacobi_zeros())


def verify_no_positive_radial(lambdas=(), sign_grid_points=10000):
    return _json.loads(_core.verify_no_positive_radial(list(lambdas), sign_grid_points))


def sphere_profile_first_zero():
    return _json.loads(_core.sphere_profile_first_zero())


def parse_config(text):
    return _json.loads(_core.config_roundtrip(text))


__all__ = [
    "__version__",
    "area",
    "bound_names",
    "entropy",
    "gaussian_volume_ball",
    "inversion_max_area",
    "jacobi_zeros",
    "kummer_m",
    "parse_config",
    "riemann_hurwitz_genus",
    "select_parameters",
    "sphere_profile_first_zero",
    "stability_residual",
    "tricomi_u_half",
    "verify_bounds",
    "verify_no_positive_radial",
]
