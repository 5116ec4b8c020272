"""Exact non-stationary Euler solutions on Riemannian manifolds and their numerical checks."""

import json

from ._eulerwaves import (
    DEFAULT_SEED,
    EulerWavesError,
    __version__,
    assoc_legendre,
    bessel_j,
    bessel_j_zero,
    bessel_y,
    catalogue,
    ck_beta,
    crossproduct_root,
    describe,
    field,
    hyperbolic_beta,
    jacobi_poly,
    list_text,
    run_cli,
    trace,
    twisted_alpha,
    verify_json,
)


def verify(key, params=None, *, grid=0, times=None, tol=None, seed=DEFAULT_SEED, richardson=True):
    """Run the verification battery and return the report as a dict."""
    text = verify_json(key, params or {}, grid, list(times or []), tol, seed, richardson)
    return json.loads(text)


__all__ = [
    "DEFAULT_SEED",
    "EulerWavesError",
    "__version__",
    "assoc_legendre",
    "bessel_j",
    "bessel_j_zero",
    "bessel_y",
    "catalogue",
    "ck_beta",
    "crossproduct_root",
    "describe",
    "field",
    "hyperbolic_beta",
    "jacobi_poly",
    "list_text",
    "run_cli",
    "trace",
    "twisted_alpha",
    "verify",
    "verify_json",
]
