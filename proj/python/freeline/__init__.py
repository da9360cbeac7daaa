"""Freeness invariants of complex projective line arrangements.

Arrangements are JSON documents ``{"field": {"modulus": [...]}, "lines": [...]}``
(or the same thing as a dict). Reports come back as plain dicts; invariants
that can grow are decimal strings, as in the CLI.
"""

import json

from . import _core
from ._core import (ArrangementError, FieldError, InvariantError, SCHEMA, degree_bounds, tau_max,
                    theorem_ids)

__all__ = [
    "ArrangementError", "FieldError", "InvariantError", "SCHEMA", "analyze", "degree_bounds",
    "gallery", "gallery_names", "normalize", "tau_max", "theorem_ids", "tjurina", "verify",
    "weak_combinatorics",
]


def _text(arrangement):
    if isinstance(arrangement, str):
        return arrangement
    return json.dumps(arrangement)


def gallery_names():
    return list(_core.gallery_names())


def gallery(name):
    """Document of a built-in arrangement, as a dict."""
    return json.loads(_core.gallery_document(name))


def normalize(arrangement):
    return json.loads(_core.normalize(_text(arrangement)))


def analyze(arrangement, cap=None, certified=False, defect=True, theorems=(), name="input"):
    return json.loads(_core.analyze(_text(arrangement), cap, certified, defect, list(theorems), name))


def verify(arrangement, theorem, name="input"):
    return json.loads(_core.verify(_text(arrangement), theorem, name))


def weak_combinatorics(arrangement):
    """(d, m, {r: n_r})."""
    d, m, n = _core.weak_combinatorics(_text(arrangement))
    return d, m, dict(n)


def tjurina(arrangement):
    return _core.tjurina(_text(arrangement))
