"""Exact invariants of cone singularities from Hodge diamonds."""

import json

from ._core import (
    InputError,
    ValidationError,
    catalog_names,
    determinantal,
    q_binomial,
    verify_all,
)
from . import _core


def catalog_diamond(name):
    """Builtin Hodge diamond as a dict: {"dim", "hodge", "rhm", "hrh_bound"}."""
    return json.loads(_core.catalog_diamond_json(name))


def cone_report(source, delta=0, embed_codim=1, hrh_base=""):
    """Full singularity report as a dict.

    `source` is a builtin catalog name or a diamond dict in the file format.
    """
    if isinstance(source, str):
        text = _core.cone_report_json(source, delta, embed_codim, hrh_base)
    else:
        text = _core.cone_report_json_from_text(
            json.dumps(source), delta, embed_codim
        )
    return json.loads(text)


__all__ = [
    "InputError",
    "ValidationError",
    "catalog_names",
    "catalog_diamond",
    "cone_report",
    "determinantal",
    "q_binomial",
    "verify_all",
]
