"""Python access to the cubmcf library.

Elements of Z[x] are passed as triples of integers (c0, c1, c2) meaning
c0 + c1*x + c2*x^2. Families use the same strings as the command-line tool,
for example "simplest:a=4" or "ennola1:a=5". Library errors surface as
ValueError with the error code as message prefix.
"""

import json

from . import _cubmcf
from ._cubmcf import decomposition, norm

__all__ = ["expand", "classify", "catalog", "pythagoras", "scan", "decomposition", "norm"]


def expand(family, root="", algo="jpa", max_iter=0):
    """Expansion record of (1, |r|, r^2) (or its iJPA pair) for the root r."""
    return json.loads(_cubmcf.expand_json(family, root, algo, max_iter))


def classify(family, root="", max_iter=0):
    """Classified semiconvergents of the JPA expansion for a catalogued family."""
    return json.loads(_cubmcf.classify_json(family, root, max_iter))


def catalog(family):
    return json.loads(_cubmcf.catalog_json(family))["entries"]


def pythagoras(family, gamma, cap=8):
    return json.loads(_cubmcf.pythagoras_json(family, tuple(gamma), cap))


def scan(fields, trace_bound=60, jobs=1):
    """Scan ingested fields; `fields` is the parsed ingest list or its JSON text."""
    text = fields if isinstance(fields, str) else json.dumps(fields)
    return json.loads(_cubmcf.scan_json(text, trace_bound, jobs))
