"""Partial regularities and a*-invariants of Borel-type monomial ideals.

Thin wrapper over the compiled core. Degrees that would be -infinity are
returned as float('-inf'); everything else is exact integer arithmetic.
"""

from ._borel import (
    Ideal,
    betti,
    borel_failing_index,
    decompose,
    fuzz,
    invariants,
    is_borel_type,
    is_irredundant,
    is_stable,
    is_strongly_stable,
    m_ideal,
    parse,
    recompose,
    reg_via_stable_truncation,
    run_properties,
    satiety,
    sequential_chain,
    verify,
)

__all__ = [
    "Ideal",
    "betti",
    "borel_failing_index",
    "decompose",
    "fuzz",
    "invariants",
    "is_borel_type",
    "is_irredundant",
    "is_stable",
    "is_strongly_stable",
    "m_ideal",
    "parse",
    "recompose",
    "reg_via_stable_truncation",
    "run_properties",
    "satiety",
    "sequential_chain",
    "verify",
]

__version__ = "0.1.0"
