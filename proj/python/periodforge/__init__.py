"""Period maps, Eisenstein series and Laurent solutions for the A2, B2 and G2 elliptic families."""

import json

from ._periodforge import (
    ConvergenceError,
    DegenerateFrameError,
    DiscriminantError,
    InconsistencyError,
    PoleError,
    act,
    dedekind_eta,
    discriminant,
    evaluate_F,
    frame_equivalence,
    generators,
    invert,
    periods,
    series_csv,
    series_json,
    verify_json,
    wp,
    wp_prime,
    wzeta,
    x_of_z,
    y_of_z,
)


def series(type, infinity=1, order=16):
    """Exact Laurent solution as a dict (coefficients as rational strings)."""
    return json.loads(series_json(type, infinity, order))


def verify(suite, seed=20240601):
    """Run a certification suite; returns the report as a dict."""
    return json.loads(verify_json(suite, seed))


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
