"""The full invariant pipeline for one L-space-form polynomial.

Chains polynomial -> formal semigroup -> gap function -> convex envelope ->
Upsilon, and assembles the JSON report the CLI prints.  All rationals in the
report are exact "p/q" strings.
"""

from __future__ import annotations

from .gapfunctions import GapFunction
from .laurent import IntLaurentPoly
from .piecewise import PLFunction, legendre_fenchel
from .rationals import format_rational
from .semigroups import FormalSemigroup


def semigroup_of(delta: IntLaurentPoly) -> FormalSemigroup:
    return FormalSemigroup.from_alexander(delta)


def gap_function_of(delta: IntLaurentPoly) -> GapFunction:
    return GapFunction.from_semigroup(semigroup_of(delta))


def hull_of(delta: IntLaurentPoly) -> PLFunction:
    return gap_function_of(delta).envelope()


def upsilon_of(delta: IntLaurentPoly) -> PLFunction:
    """Upsilon on [0, 2]: the Legendre-Fenchel transform of the gap function."""
    return legendre_fenchel(hull_of(delta))


def knot_invariants(delta: IntLaurentPoly, name: str | None = None) -> dict:
    """Everything the pipeline knows about one polynomial, JSON-ready."""
    semigroup = semigroup_of(delta)
    gapfn = GapFunction.from_semigroup(semigroup)
    hull = gapfn.envelope()
    upsilon = legendre_fenchel(hull)
    closed, witness = semigroup.is_closed_under_addition()
    report = {
        "name": name,
        "alexander": delta.to_pairs(),
        "genus": semigroup.genus,
        "surgery_threshold": semigroup.surgery_threshold,
        "semigroup": semigroup.to_json(),
        "gap_function": gapfn.to_json(),
        "hull": hull.to_json(),
        "upsilon": upsilon.to_json(),
        "upsilon_breakpoints": [
            [format_rational(x), format_rational(y)] for x, y in upsilon.vertices
        ],
        "upsilon_slopes": [format_rational(s) for s in upsilon.segment_slopes()],
        "semigroup_closed": closed,
        "closure_witness": list(witness) if witness else None,
        "symmetric": delta.is_symmetric(),
    }
    if name is None:
        del report["name"]
    return report
