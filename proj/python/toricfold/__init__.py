"""Lattice symmetries, deformations and local moduli quotients of smooth toric surfaces."""

import json

from ._toricfold import (
    Fan,
    FanError,
    QuotientError,
    ToricfoldError,
    __version__,
    blow_down,
    blow_up,
    catalog,
    catalog_names,
    change_basis,
    cone_singularities,
    demazure_roots,
    fans_isomorphic,
    foldability,
    lattice_automorphisms,
    minimal_model,
    oracle_dimension,
    quotient,
    random_foldable_fan,
    render_svg,
    report_json,
    weight_decomposition,
)


def report(fan, source="python"):
    """Full report of a fan as a dict, the same document the CLI prints."""
    return json.loads(report_json(fan, source))


__all__ = [
    "Fan",
    "FanError",
    "QuotientError",
    "ToricfoldError",
    "blow_down",
    "blow_up",
    "catalog",
    "catalog_names",
    "change_basis",
    "cone_singularities",
    "demazure_roots",
    "fans_isomorphic",
    "foldability",
    "lattice_automorphisms",
    "minimal_model",
    "oracle_dimension",
    "quotient",
    "random_foldable_fan",
    "render_svg",
    "report",
    "weight_decomposition",
]
