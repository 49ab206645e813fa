"""Finite commutative rings, bi-amalgamations and their ideal-theoretic properties."""

import json

from ._core import (
    Config,
    Error,
    Hom,
    Ideal,
    Module,
    Ring,
    ScriptParseError,
    __version__,
    amalg,
    biamalg,
    compose,
    config,
    cyclic_module,
    duplicate,
    example_config,
    example_script,
    format_script,
    identity,
    maximal_ideals,
    polyquo,
    product,
    quotient,
    random_config,
    span,
    trivext,
    zmod,
)
from . import _core


def is_local(ring):
    return json.loads(_core._is_local(ring))


def is_gaussian(ring):
    return json.loads(_core._is_gaussian(ring))


def is_arithmetical(ring, bruteforce=False):
    f = _core._is_arithmetical_bruteforce if bruteforce else _core._is_arithmetical
    return json.loads(f(ring))


def is_prufer(ring):
    return json.loads(_core._is_prufer(ring))


def is_total_quotient_ring(ring):
    return json.loads(_core._is_total_quotient_ring(ring))


def content_sample(ring, max_degree=3, trials=200, seed=0):
    return json.loads(_core._content_sample(ring, max_degree, trials, seed))


def verify(result_id, cfg, mode="gaussian"):
    """Theorem report for "thm2.1", "prop2.4.1".."prop2.4.3" or "prop2.6"."""
    return json.loads(_core._verify(result_id, cfg, mode))


def verify_localization(cfg, p):
    return json.loads(_core._verify_localization(cfg, p))


def example_report(example_id):
    return json.loads(_core._example_report(example_id))


def run_script(text, seed=0, max_elements=4096, fail_fast=False):
    """Returns (report, exit_code); the report has the CLI's JSON schema."""
    report, code = _core._run_script(text, seed, max_elements, fail_fast)
    return json.loads(report), code
