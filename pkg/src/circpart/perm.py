"""Permutations of Z_n as image tuples.

A permutation of degree n is a tuple p of length n with p[v] the image of
vertex v. Composition applies the right factor first, matching the usual
function-composition order.
"""

from __future__ import annotations

import math
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .circulant import ArcPartition, CirculantGraph

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def is_permutation(p) -> bool:
    return sorted(p) == list(range(len(p)))


def compose(p: Perm, q: Perm) -> Perm:
    """The permutation v -> p(q(v)); q acts first."""
    if len(p) != len(q):
        raise ValueError(f"degree mismatch: {len(p)} vs {len(q)}")
    return tuple(p[q[v]] for v in range(len(p)))


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for v, w in enumerate(p):
        out[w] = v
    return tuple(out)


def multiplier_perm(n: int, j: int) -> Perm:
    """The map v -> j*v mod n for a unit j; fixes 0 and is a group automorphism."""
    if math.gcd(j % n, n) != 1:
        raise ValueError(f"{j} is not a unit mod {n}")
    return tuple((j * v) % n for v in range(n))


def is_automorphism(graph: "CirculantGraph", p: Perm) -> bool:
    """True iff p maps the arc/edge set of the graph onto itself."""
    if len(p) != graph.n:
        raise ValueError(f"degree mismatch: permutation of {len(p)} on graph of order {graph.n}")
    arcs = graph.arc_set
    if graph.directed:
        return all((p[u], p[v]) in arcs for u, v in graph.arcs)
    return all(((p[u], p[v]) if p[u] < p[v] else (p[v], p[u])) in arcs for u, v in graph.arcs)


def respects(p: Perm, partition: "ArcPartition") -> bool:
    """True iff the image of the set of parts equals the set of parts.

    Defined only for automorphisms of the partitioned graph; anything else
    raises ValueError. Parts may permute among themselves. Depends only on
    the parts' arc sets, not on their metadata or order.
    """
    if len(p) != partition.n:
        raise ValueError(f"degree mismatch: permutation of {len(p)} on partition of order {partition.n}")
    universe = partition.universe
    if partition.directed:
        def image(a):
            return (p[a[0]], p[a[1]])
    else:
        def image(a):
            u, v = p[a[0]], p[a[1]]
            return (u, v) if u < v else (v, u)
    if {image(a) for a in universe} != universe:
        raise ValueError("permutation is not an automorphism of the partitioned graph")
    keys = partition.part_keys()
    return all(frozenset(image(a) for a in part.arcs) in keys for part in partition.parts)


def format_perm(p: Perm) -> str:
    """One-line image list, e.g. ``[0, 3, 2, 5, 4, 1]``."""
    return "[" + ", ".join(str(v) for v in p) + "]"


def parse_perm(text: str) -> Perm:
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    try:
        p = tuple(int(tok) for tok in body.split(",") if tok.strip())
    except ValueError as exc:
        raise ValueError(f"malformed permutation {text!r}: {exc}") from None
    if not is_permutation(p):
        raise ValueError(f"{text!r} is not a permutation of 0..{len(p) - 1}")
    return p
