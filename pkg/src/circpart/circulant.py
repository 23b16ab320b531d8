"""Circulant graphs and digraphs, with their two canonical edge partitions.

``Circ(n; S)`` has vertex set Z_n and an arc from g to g+s for every g and
every s in the connection set S. Kind "B" groups arcs by the generator that
produced them; kind "C" refines "B" by splitting each generator class along
the cosets of the cyclic subgroup that generator spans, so every part of "C"
is the arc set of one monochromatic cycle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

DIRECTED = "directed"
UNDIRECTED = "undirected"

PARTITION_KINDS = ("B", "C")


class InvalidInstanceError(ValueError):
    """Raised for malformed connection sets or instance strings."""


def canonical_edge(u: int, v: int) -> tuple[int, int]:
    """Unordered pair stored as (min label, max label)."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class ConnectionSet:
    """The pair (n, S) defining Circ(n; S), in directed or undirected mode."""

    n: int
    elements: tuple[int, ...]
    mode: str

    def __post_init__(self):
        if self.mode not in (DIRECTED, UNDIRECTED):
            raise InvalidInstanceError(f"unknown mode {self.mode!r}")
        if self.n < 2:
            raise InvalidInstanceError(f"need n >= 2, got n={self.n}")
        if not self.elements:
            raise InvalidInstanceError("connection set must be nonempty")
        if list(self.elements) != sorted(set(self.elements)):
            raise InvalidInstanceError("elements must be strictly ascending without duplicates")
        for s in self.elements:
            if not 1 <= s <= self.n - 1:
                raise InvalidInstanceError(f"element {s} outside 1..{self.n - 1}")
        if self.mode == UNDIRECTED:
            missing = sorted(s for s in self.elements if self.n - s not in self.elements)
            if missing:
                raise InvalidInstanceError(
                    f"undirected connection set must contain n-s for every s; missing inverses of {missing}"
                )

    @property
    def directed(self) -> bool:
        return self.mode == DIRECTED

    def is_inverse_closed(self) -> bool:
        return all(self.n - s in self.elements for s in self.elements)


@dataclass(frozen=True)
class CirculantGraph:
    """Circ(n; S) with precomputed arc set and adjacency.

    Directed graphs store every ordered pair (g, g+s); undirected graphs
    store each edge once as (min label, max label). ``succ``/``pred`` list
    out- and in-neighbors per vertex (equal, and symmetric, in undirected
    mode).
    """

    cs: ConnectionSet
    arcs: tuple[tuple[int, int], ...]
    arc_set: frozenset
    succ: tuple[tuple[int, ...], ...]
    pred: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return self.cs.n

    @property
    def elements(self) -> tuple[int, ...]:
        return self.cs.elements

    @property
    def mode(self) -> str:
        return self.cs.mode

    @property
    def directed(self) -> bool:
        return self.cs.directed

    def generators_of(self, arc: tuple[int, int]) -> tuple[int, ...]:
        """The connection-set elements that produce this arc or edge."""
        u, v = arc
        if self.directed:
            return ((v - u) % self.n,)
        return tuple(s for s in self.elements if (v - u) % self.n == s or (u - v) % self.n == s)


def build(n: int, elements, mode: str) -> CirculantGraph:
    """Construct and validate Circ(n; S) for the given mode."""
    cs = ConnectionSet(n, tuple(sorted(set(elements))), mode)
    if cs.directed:
        arcs = tuple(sorted((g, (g + s) % n) for s in cs.elements for g in range(n)))
        succ = tuple(tuple(sorted((u + s) % n for s in cs.elements)) for u in range(n))
        pred = tuple(tuple(sorted((u - s) % n for s in cs.elements)) for u in range(n))
    else:
        arcs = tuple(sorted({canonical_edge(g, (g + s) % n) for s in cs.elements for g in range(n)}))
        nbrs = tuple(tuple(sorted({(u + s) % n for s in cs.elements})) for u in range(n))
        succ = pred = nbrs
    return CirculantGraph(cs, arcs, frozenset(arcs), succ, pred)


def is_connected(graph: CirculantGraph) -> bool:
    """True iff the connection set generates all of Z_n, i.e. gcd(n, S) = 1."""
    return math.gcd(graph.n, *graph.elements) == 1


def parse_instance(text: str) -> ConnectionSet:
    """Parse ``n:s1,s2,...`` with optional ``:d`` or ``:u`` mode suffix.

    Whitespace-insensitive; elements may appear in any order. Without a
    suffix the mode is inferred: undirected when S is inverse-closed,
    directed otherwise.
    """
    fields = [f.strip() for f in text.strip().split(":")]
    if len(fields) not in (2, 3):
        raise InvalidInstanceError(f"expected 'n:s1,s2,...[:d|:u]', got {text!r}")
    try:
        n = int(fields[0])
        elements = tuple(sorted({int(tok) for tok in fields[1].split(",") if tok.strip()}))
    except ValueError as exc:
        raise InvalidInstanceError(f"malformed instance {text!r}: {exc}") from None
    if len(fields) == 3:
        tag = fields[2].lower()
        if tag == "d":
            mode = DIRECTED
        elif tag == "u":
            mode = UNDIRECTED
        else:
            raise InvalidInstanceError(f"mode suffix must be 'd' or 'u', got {fields[2]!r}")
    else:
        inverse_closed = all(1 <= s <= n - 1 and n - s in elements for s in elements) if n >= 2 else False
        mode = UNDIRECTED if inverse_closed else DIRECTED
    return ConnectionSet(n, elements, mode)


def from_instance(text: str) -> CirculantGraph:
    cs = parse_instance(text)
    return build(cs.n, cs.elements, cs.mode)


def instance_key(cs: ConnectionSet) -> str:
    """Canonical one-line form, e.g. ``8:1,2:d``."""
    return f"{cs.n}:{','.join(str(s) for s in cs.elements)}:{'d' if cs.directed else 'u'}"


@dataclass(frozen=True, eq=False)
class Part:
    """One cell of an arc partition.

    Identity is the frozen sorted arc list alone; the generator and coset
    metadata are informational and never split parts with equal arc sets.
    """

    arcs: tuple[tuple[int, int], ...]
    generators: tuple[int, ...]
    coset_rep: int | None = None

    def __eq__(self, other):
        return isinstance(other, Part) and self.arcs == other.arcs

    def __hash__(self):
        return hash(self.arcs)

    def __len__(self):
        return len(self.arcs)


@dataclass(frozen=True)
class ArcPartition:
    """A partition of the full arc or edge set of a circulant graph."""

    kind: str
    n: int
    directed: bool
    parts: tuple[Part, ...]

    def __post_init__(self):
        if self.kind not in PARTITION_KINDS:
            raise ValueError(f"kind must be one of {PARTITION_KINDS}, got {self.kind!r}")
        universe = frozenset(a for part in self.parts for a in part.arcs)
        if sum(len(part.arcs) for part in self.parts) != len(universe):
            raise ValueError("parts must be pairwise disjoint")
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "_keys", frozenset(frozenset(part.arcs) for part in self.parts))

    def part_keys(self) -> frozenset:
        """Frozen arc sets of all parts, for O(1) membership tests."""
        return self._keys


def partition_by_generator(graph: CirculantGraph) -> ArcPartition:
    """Kind "B": arcs grouped by the generator that produced them.

    Directed graphs get one part per generator. In undirected mode s and
    n-s yield identical edge sets; duplicates are merged and the merged
    part records both generators.
    """
    n = graph.n
    groups: dict[tuple, list[int]] = {}
    for s in graph.elements:
        if graph.directed:
            arcs = tuple(sorted((g, (g + s) % n) for g in range(n)))
        else:
            arcs = tuple(sorted({canonical_edge(g, (g + s) % n) for g in range(n)}))
        groups.setdefault(arcs, []).append(s)
    parts = tuple(
        Part(arcs, tuple(gens))
        for arcs, gens in sorted(groups.items(), key=lambda kv: kv[1][0])
    )
    return ArcPartition("B", n, graph.directed, parts)


def partition_by_cycle(graph: CirculantGraph) -> ArcPartition:
    """Kind "C": generator classes split along cosets of the generator's subgroup.

    Each part is the arc set of a single monochromatic cycle (a lone edge
    for an order-2 generator in undirected mode). Refines kind "B".
    """
    n = graph.n
    groups: dict[tuple, tuple[list[int], int]] = {}
    for s in graph.elements:
        step = math.gcd(n, s)  # number of cosets of <s>
        for rep in range(step):
            coset = range(rep, n, step)
            if graph.directed:
                arcs = tuple(sorted((x, (x + s) % n) for x in coset))
            else:
                arcs = tuple(sorted({canonical_edge(x, (x + s) % n) for x in coset}))
            entry = groups.setdefault(arcs, ([], rep))
            entry[0].append(s)
    parts = tuple(
        Part(arcs, tuple(gens), rep)
        for arcs, (gens, rep) in sorted(groups.items(), key=lambda kv: (kv[1][0][0], kv[1][1]))
    )
    return ArcPartition("C", n, graph.directed, parts)


def arc_partition(graph: CirculantGraph, kind: str) -> ArcPartition:
    if kind == "B":
        return partition_by_generator(graph)
    if kind == "C":
        return partition_by_cycle(graph)
    raise ValueError(f"kind must be one of {PARTITION_KINDS}, got {kind!r}")


def refines(fine: ArcPartition, coarse: ArcPartition) -> bool:
    """True iff every part of ``fine`` lies inside a single part of ``coarse``."""
    if fine.universe != coarse.universe:
        raise ValueError("partitions cover different arc sets")
    owner = {}
    for i, part in enumerate(coarse.parts):
        for a in part.arcs:
            owner[a] = i
    return all(len({owner[a] for a in part.arcs}) == 1 for part in fine.parts)
