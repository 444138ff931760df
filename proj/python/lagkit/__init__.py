"""Python bindings for the lagkit immersion verifier."""

import json

from ._core import (
    Error,
    ParseError,
    Spec,
    affine_image,
    catalog,
    catalog_names,
    circle_product,
    evaluate,
    metric,
    parse,
    run_cli,
    sectional_curvature,
)
from . import _core

__all__ = [
    "Error",
    "ParseError",
    "Spec",
    "affine_image",
    "catalog",
    "catalog_listing",
    "catalog_names",
    "check",
    "circle_product",
    "crosscheck",
    "evaluate",
    "metric",
    "parse",
    "run_cli",
    "sectional_curvature",
]


def check(spec, samples=20, seed=42, tol=1e-8, tol_third=1e-6, checks=None, quadric=None):
    """Run the verifier suite; returns the JSON report as a dict."""
    return json.loads(_core._check_json(spec, samples, seed, tol, tol_third, checks, quadric))


def crosscheck(spec, order=2, step=None, points=20, seed=42):
    """Compare jet derivatives with finite differences per order."""
    return json.loads(_core._crosscheck_json(spec, order, step, points, seed))


def catalog_listing():
    return json.loads(_core.catalog_json())
