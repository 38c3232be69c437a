"""Exact analysis of matrices over Q(t) that commute with their derivative.

Matrices are nested lists of expression strings (integers are accepted and
converted), e.g. ``[["t^2", "t^3"], ["-t", "-t^2"]]``.
"""

import json

from . import _core
from ._core import DomainError, ParseError, ShapeError

__all__ = [
    "DomainError",
    "ParseError",
    "ShapeError",
    "canonical",
    "check_commute",
    "classify",
    "decompose",
    "diagonalize",
    "load",
    "make_type2",
    "newton_experiment",
    "wronskian",
]


def _grid(entries):
    return [[str(x) for x in row] for row in entries]


def load(path):
    """Read a matrix file and return its canonical entries."""
    with open(path, encoding="utf-8") as fh:
        return _core.parse_matrix(fh.read())


def canonical(entries):
    return _core.canonical(_grid(entries))


def check_commute(entries):
    """True iff M M' = M' M."""
    return _core.check_commute(_grid(entries))


def classify(entries):
    return json.loads(_core.classify(_grid(entries)))


def decompose(entries, root_bound=None):
    return json.loads(_core.decompose(_grid(entries), root_bound))


def diagonalize(entries, root_bound=None):
    return json.loads(_core.diagonalize(_grid(entries), root_bound))


def wronskian(*exprs):
    return json.loads(_core.wronskian([str(e) for e in exprs]))


def make_type2(f, seed=0):
    return _core.make_type2([str(e) for e in f], seed)


def newton_experiment(n, r, trials, seed=0, **kwargs):
    return json.loads(_core.newton_experiment(n, r, trials, seed, **kwargs))
