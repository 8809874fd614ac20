"""Bier balls of flag complexes, their face-ring idealizations and invariants."""

import json

from ._core import (
    BierflagError,
    Complex,
    find_shelling,
    gamma_from_h,
    h_from_gamma,
    h_r_delta,
    is_cohen_macaulay,
    koszul,
    poincare_from_hilbert,
    presentation,
    quadratic_gb_test,
    serre_profile,
    top_gamma_via_euler,
)
from . import _core

__all__ = [
    "BierflagError",
    "Complex",
    "analyze",
    "betti",
    "error_kind",
    "find_shelling",
    "gamma",
    "gamma_from_h",
    "h_from_gamma",
    "h_r_delta",
    "is_cohen_macaulay",
    "koszul",
    "poincare_from_hilbert",
    "presentation",
    "quadratic_gb_test",
    "serre_profile",
    "top_gamma_via_euler",
    "verify",
]


def gamma(complex):
    """Gamma vector of the idealization of a pure complex."""
    return gamma_from_h(h_r_delta(complex))


def analyze(complex, characteristics=()):
    """Full invariant report, as a dict."""
    return json.loads(_core._analyze(complex, list(characteristics)))


def betti(input, mode="hochster", characteristics=(), i_max=4):
    """Betti tables; input is a dict in the CLI's JSON input format."""
    if not isinstance(input, str):
        input = json.dumps(input)
    return json.loads(_core._betti(input, mode, list(characteristics), i_max))


def verify(corpus_dir, characteristics=()):
    """Checks every fixture in a directory; returns the report dict."""
    return json.loads(_core._verify(str(corpus_dir), list(characteristics)))


def error_kind(exc):
    """Error kind name carried by a BierflagError."""
    return str(exc).split(":", 1)[0]
