"""Runtime enumeration caps.

Every exhaustive routine checks a cap before it starts so that oversized
requests fail loudly instead of silently truncating.  Caps are process-wide
and mutable; the explicit-graph cap can additionally be overridden through
the ``LEELAB_CAP_NODES`` environment variable.
"""

from __future__ import annotations

import os

from .errors import CapacityError

_DEFAULTS = {
    # Words enumerated by iter_words and the brute-force oracles.
    "word_enum": 2**24,
    # Nodes in an explicitly materialized Lee graph.
    "graph_nodes": 2**16,
    # Nodes admitted to exact independent-set counting.
    "count_nodes": 64,
    # Independent sets streamed by enumerate_independent_sets.
    "indset_enum": 2**20,
    # Subspaces enumerated by the linear-code density oracle.
    "subspaces": 10**6,
    # Nodes admitted to the branch-and-bound maximum-code search.
    "mis_nodes": 2**16,
}

_caps = dict(_DEFAULTS)

ENV_GRAPH_CAP = "LEELAB_CAP_NODES"


def get_cap(name: str) -> int:
    if name == "graph_nodes":
        env = os.environ.get(ENV_GRAPH_CAP)
        if env is not None:
            return int(env)
    return _caps[name]


def set_cap(name: str, value: int) -> None:
    if name not in _caps:
        raise KeyError(f"unknown cap {name!r}")
    if value < 1:
        raise ValueError("caps must be positive")
    _caps[name] = value


def reset_caps() -> None:
    _caps.update(_DEFAULTS)


def check_cap(name: str, requested: int, what: str) -> None:
    """Raise CapacityError when `requested` exceeds the named cap."""
    cap = get_cap(name)
    if requested > cap:
        raise CapacityError(
            f"{what} needs {requested} items which exceeds the "
            f"{name!r} cap of {cap}"
        )
