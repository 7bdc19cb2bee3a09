"""Resolution graphs, Hirzebruch-Jung bamboos and lens spaces of surface singularities.

Graphs, branch lists and pipeline reports are plain dicts following the JSON
schemas of the ``singlink`` command-line tool.
"""

import json

from . import _core
from ._core import (
    SinglinkError,
    hj_evaluate,
    hj_expand,
    lens_equivalent,
    lens_of_quasi_ordinary,
    resolve_quasi_ordinary,
)

SinglinkError.code = property(lambda self: self.args[0])

__all__ = [
    "SinglinkError",
    "check_graph",
    "hj_evaluate",
    "hj_expand",
    "lens_equivalent",
    "lens_of_quasi_ordinary",
    "minimize",
    "resolve_curve",
    "resolve_cyclic",
    "resolve_from_covering",
    "resolve_quasi_ordinary",
    "run_cli",
]


def _dump(value):
    return value if isinstance(value, str) else json.dumps(value)


def check_graph(graph):
    return json.loads(_core.check_graph(_dump(graph)))


def minimize(graph, policy="lowest", seed=0):
    return json.loads(_core.minimize(_dump(graph), policy, seed))


def resolve_curve(branches, merge_duplicates=False):
    return json.loads(_core.resolve_curve(_dump(branches), merge_duplicates))


def resolve_cyclic(branches, d, minimize=True):
    return json.loads(_core.resolve_cyclic(_dump(branches), d, minimize))


def resolve_from_covering(covering, minimize=True):
    return json.loads(_core.resolve_from_covering(_dump(covering), minimize))


def run_cli(*args):
    """Runs one command line in-process; returns (status, stdout, stderr)."""
    return _core.run_cli(list(args))
