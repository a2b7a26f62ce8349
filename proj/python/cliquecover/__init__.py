"""Clique cover construction, exact solving and bound verification.

Thin wrapper over the native extension: functions that produce certificates
or traces return parsed JSON objects (dicts) instead of strings.
"""

import json

try:
    from cliquecover._cliquecover import *  # installed package layout
    from cliquecover._cliquecover import (
        build_3cover as _build_3cover,
        build_4cover as _build_4cover,
        exact_min_cover as _exact_min_cover,
        reduce_sequence as _reduce_sequence,
        validate_cover as _validate_cover,
    )
except ImportError:  # in-tree build: extension next to the package on sys.path
    from _cliquecover import *  # noqa: F401,F403
    from _cliquecover import (
        build_3cover as _build_3cover,
        build_4cover as _build_4cover,
        exact_min_cover as _exact_min_cover,
        reduce_sequence as _reduce_sequence,
        validate_cover as _validate_cover,
    )


def build_3cover(g, refine=False):
    """Constructive 3-clique cover certificate of a K5-free graph, as a dict."""
    return json.loads(_build_3cover(g, refine))


def build_4cover(g):
    """Constructive 4-clique cover certificate, as a dict."""
    return json.loads(_build_4cover(g))


def exact_min_cover(g, t, node_limit=0):
    """Minimum t-clique cover certificate, as a dict."""
    return json.loads(_exact_min_cover(g, t, node_limit))


def reduce_sequence(entries):
    """Reduction trace of a greedy sequence, as a dict."""
    return json.loads(_reduce_sequence(entries))


def validate_cover(g, cert):
    """Validate a certificate (dict or JSON string) against a graph."""
    if not isinstance(cert, str):
        cert = json.dumps(cert)
    return _validate_cover(g, cert)
