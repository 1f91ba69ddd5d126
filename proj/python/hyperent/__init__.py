"""Cascaded polarization hyperentanglement simulator."""

import json

from ._hyperent import (
    SCHEMA_VERSION,
    Circuit,
    HyperentError,
    Scheme,
    build_cascade,
    cascade_source_distribution,
    expected_state,
    monte_carlo_rate,
    n_tot,
    oracle_success,
    p_failure_terms,
    p_success,
    p_success_scenarios,
    parse_scheme,
    pr_pairs,
    render_factored,
    report_json,
    simulate,
    simulate_stochastic,
    verify,
)


def report(command, **kwargs):
    """Run a report command and return it as a dict."""
    return json.loads(report_json(command, **kwargs))


__all__ = [
    "SCHEMA_VERSION",
    "Circuit",
    "HyperentError",
    "Scheme",
    "build_cascade",
    "cascade_source_distribution",
    "expected_state",
    "monte_carlo_rate",
    "n_tot",
    "oracle_success",
    "p_failure_terms",
    "p_success",
    "p_success_scenarios",
    "parse_scheme",
    "pr_pairs",
    "render_factored",
    "report",
    "report_json",
    "simulate",
    "simulate_stochastic",
    "verify",
]
