"""Search and certification engines.

* ``enumerate_respecting``: backtracking enumeration of all automorphisms
  (optionally fixing vertex 0) that respect an arc partition.
* ``brute_oracle``: the same set computed by filtering every permutation,
  straight from the definitions, as an independent cross-check.
* ``normalize_to_multiplier``: recovers the unit j with p(s) = j*s for all
  generators s, one residue per prime power, combined by CRT.
* ``propagation_certifier``: the fixed-set closure that certifies, with no
  reference to any particular automorphism, that pointwise-fixed generators
  force every vertex to be fixed exactly when the graph is connected.
* ``coset_image_check``: images of cosets of a subgroup generated by part
  of the connection set are again cosets.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass

from .circulant import ArcPartition, CirculantGraph, is_connected
from .perm import Perm, is_automorphism, multiplier_perm, respects
from .zmod import MultiplierWitness, crt_combine, factorize

DEFAULT_ORACLE_LIMIT = 9
DEFAULT_SEARCH_CAP = 64

_OUT, _IN, _EDGE = 0, 1, 2


class ResourceLimitError(RuntimeError):
    """Raised when a search would exceed its configured size or solution cap."""


@dataclass(frozen=True)
class SearchConfig:
    """Knobs for the backtracking enumerator.

    Vertex images are assigned in breadth-first order from vertex 0; that
    order is fixed. ``oracle_mode`` swaps in the brute-force filter, which
    is only permitted up to ``oracle_limit``. Exceeding ``max_solutions``
    raises rather than truncating, so a capped run can never be mistaken
    for a complete one.
    """

    fix_zero: bool = True
    oracle_mode: bool = False
    max_solutions: int | None = None
    oracle_limit: int = DEFAULT_ORACLE_LIMIT
    hard_cap: int = DEFAULT_SEARCH_CAP


def _bfs_order(graph: CirculantGraph):
    """BFS vertex order from 0 (then any later components from their smallest
    vertex), visiting neighbors in ascending generator order. Returns the
    order plus, for each non-root vertex, the discovering (parent, arc
    direction) pair used to derive candidate images."""
    n = graph.n
    parents: list = [None] * n
    seen = [False] * n
    order = []
    for root in range(n):
        if seen[root]:
            continue
        seen[root] = True
        order.append(root)
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for s in graph.elements:
                if graph.directed:
                    moves = (((u + s) % n, _OUT), ((u - s) % n, _IN))
                else:
                    moves = (((u + s) % n, _EDGE), ((u - s) % n, _EDGE))
                for w, rel in moves:
                    if not seen[w]:
                        seen[w] = True
                        parents[w] = (u, rel)
                        order.append(w)
                        queue.append(w)
    return order, parents


def _incident_lists(graph: CirculantGraph):
    """Per vertex: (other endpoint, arc-points-out flag) for every incident arc."""
    inc: list[list] = [[] for _ in range(graph.n)]
    for u, v in graph.arcs:
        if graph.directed:
            inc[u].append((v, True))
            inc[v].append((u, False))
        else:
            inc[u].append((v, True))
            inc[v].append((u, True))
    return [tuple(entries) for entries in inc]


def enumerate_respecting(
    graph: CirculantGraph, partition: ArcPartition, cfg: SearchConfig | None = None
) -> list[Perm]:
    """All automorphisms of ``graph`` respecting ``partition``, ascending by image tuple.

    Depth-first assignment of vertex images in BFS order from 0, pruned by
    two incremental invariants: every arc between assigned vertices must map
    to an arc, and the induced part-to-part map must stay injective in both
    directions (with matching part sizes). Completed assignments still get a
    full automorphism-plus-respect re-check before being emitted.
    """
    if cfg is None:
        cfg = SearchConfig()
    if cfg.oracle_mode:
        return brute_oracle(graph, partition, fix_zero=cfg.fix_zero, limit=cfg.oracle_limit)
    n = graph.n
    if n > cfg.hard_cap:
        raise ResourceLimitError(f"n={n} exceeds the search cap {cfg.hard_cap}")
    if partition.universe != graph.arc_set:
        raise ValueError("partition does not partition this graph's arcs")

    part_of = {}
    for idx, part in enumerate(partition.parts):
        for arc in part.arcs:
            part_of[arc] = idx
    part_sizes = tuple(len(part.arcs) for part in partition.parts)

    order, parents = _bfs_order(graph)
    incident = _incident_lists(graph)
    arc_set = graph.arc_set
    directed = graph.directed

    images = [-1] * n
    used = [False] * n
    part_map = [-1] * len(partition.parts)
    part_map_inv = [-1] * len(partition.parts)
    solutions: list[Perm] = []

    def candidates(u):
        parent = parents[u]
        if parent is None:
            if u == 0 and cfg.fix_zero:
                return (0,)
            return tuple(v for v in range(n) if not used[v])
        w, rel = parent
        pool = graph.succ[images[w]] if rel != _IN else graph.pred[images[w]]
        return tuple(v for v in pool if not used[v])

    def try_assign(u, v):
        added = []
        for w, points_out in incident[u]:
            pw = images[w]
            if pw < 0:
                continue
            if directed:
                src = (u, w) if points_out else (w, u)
                dst = (v, pw) if points_out else (pw, v)
            else:
                src = (u, w) if u < w else (w, u)
                dst = (v, pw) if v < pw else (pw, v)
            ok = dst in arc_set
            if ok:
                sp = part_of[src]
                dp = part_of[dst]
                mapped = part_map[sp]
                if mapped >= 0:
                    ok = mapped == dp
                elif part_map_inv[dp] >= 0 or part_sizes[sp] != part_sizes[dp]:
                    ok = False
                else:
                    part_map[sp] = dp
                    part_map_inv[dp] = sp
                    added.append((sp, dp))
            if not ok:
                for sp, dp in added:
                    part_map[sp] = -1
                    part_map_inv[dp] = -1
                return None
        return added

    def dfs(depth):
        if depth == n:
            p = tuple(images)
            if is_automorphism(graph, p) and respects(p, partition):
                solutions.append(p)
                if cfg.max_solutions is not None and len(solutions) > cfg.max_solutions:
                    raise ResourceLimitError(
                        f"more than max_solutions={cfg.max_solutions} respecting automorphisms"
                    )
            return
        u = order[depth]
        for v in candidates(u):
            added = try_assign(u, v)
            if added is None:
                continue
            images[u] = v
            used[v] = True
            dfs(depth + 1)
            images[u] = -1
            used[v] = False
            for sp, dp in added:
                part_map[sp] = -1
                part_map_inv[dp] = -1

    dfs(0)
    solutions.sort()
    return solutions


def brute_oracle(
    graph: CirculantGraph,
    partition: ArcPartition,
    fix_zero: bool = True,
    limit: int = DEFAULT_ORACLE_LIMIT,
) -> list[Perm]:
    """Filter every permutation (fixing 0 when asked) straight by the definitions.

    Deliberately shares no machinery with the backtracking path: the arc-set
    image is compared wholesale and the respect condition is literal set
    equality between the family of parts and its image.
    """
    n = graph.n
    if n > limit:
        raise ResourceLimitError(f"n={n} exceeds the oracle limit {limit}")
    if partition.universe != graph.arc_set:
        raise ValueError("partition does not partition this graph's arcs")
    universe = graph.arc_set
    directed = graph.directed
    part_keys = {frozenset(part.arcs) for part in partition.parts}

    def image_arc(p, a):
        u, v = p[a[0]], p[a[1]]
        if directed or u < v:
            return (u, v)
        return (v, u)

    if fix_zero:
        candidates = ((0,) + rest for rest in itertools.permutations(range(1, n)))
    else:
        candidates = itertools.permutations(range(n))

    found = []
    for p in candidates:
        ok = True
        for a in universe:
            if image_arc(p, a) not in universe:
                ok = False
                break
        if not ok:
            continue
        if {frozenset(image_arc(p, a) for a in part.arcs) for part in partition.parts} != part_keys:
            continue
        found.append(tuple(p))
    found.sort()
    return found


def normalize_to_multiplier(graph: CirculantGraph, p: Perm) -> MultiplierWitness | None:
    """Recover the multiplier behind an automorphism of a connected circulant.

    For each prime power q dividing n, picks the smallest generator s not
    divisible by that prime (one exists by connectivity), solves
    p(s) = j_q * s (mod q), and combines the residues by CRT into j. Returns
    the witness when p(s) = j*s holds for every generator; returns None when
    the construction breaks down (a residue fails to be a unit, or the final
    verification misses), which happens exactly when p does not respect the
    cycle partition. Structural violations (disconnected graph, p moving 0,
    p not an automorphism) raise ValueError instead.
    """
    n = graph.n
    if len(p) != n:
        raise ValueError(f"degree mismatch: permutation of {len(p)} on graph of order {n}")
    if not is_connected(graph):
        raise ValueError("normalization requires a connected graph")
    if p[0] != 0:
        raise ValueError("normalization requires an automorphism fixing vertex 0")
    if not is_automorphism(graph, p):
        raise ValueError("not an automorphism of the graph")

    residues = []
    for prime, exponent in factorize(n):
        q = prime**exponent
        s = next(s for s in graph.elements if s % prime != 0)
        j_q = (p[s] * pow(s % q, -1, q)) % q
        if j_q % prime == 0:
            return None  # p(s) has the wrong order mod q
        residues.append((q, j_q))
    combined = crt_combine((r, q) for q, r in residues)
    for s in graph.elements:
        if p[s] != (combined * s) % n:
            return None
    return MultiplierWitness(tuple(residues), combined)


@dataclass(frozen=True)
class PropagationStage:
    """One outer step of the closure: extending the fixed subgroup by one generator.

    ``subgroup_order`` is the order of the subgroup spanned by the previous
    generators, ``next_order`` the order of the incoming generator, and
    ``d`` their gcd; every intermediate fixed set must be a union of cosets
    of the subgroup of order d. ``rounds`` records the vertices newly added
    by each application of the closure rule.
    """

    k: int
    s_next: int
    subgroup_order: int
    next_order: int
    d: int
    start: tuple[int, ...]
    rounds: tuple[tuple[int, ...], ...]
    final: tuple[int, ...]
    closed: bool
    coset_union_ok: bool


@dataclass(frozen=True)
class PropagationTrace:
    n: int
    generator_order: tuple[int, ...]
    stages: tuple[PropagationStage, ...]
    final_fixed: tuple[int, ...]
    covered: bool

    @property
    def total_rounds(self) -> int:
        return sum(len(stage.rounds) for stage in self.stages)

    def coset_invariant_ok(self) -> bool:
        return all(stage.coset_union_ok for stage in self.stages)


def _mask_multiples(n: int, step: int) -> int:
    mask = 0
    for x in range(0, n, step):
        mask |= 1 << x
    return mask


def _mask_to_tuple(mask: int, n: int) -> tuple[int, ...]:
    return tuple(x for x in range(n) if mask >> x & 1)


def _is_coset_union(mask: int, n: int, d: int) -> bool:
    """Is the bitset a union of cosets of the subgroup of order d?"""
    q = n // d
    for rep in range(q):
        coset = 0
        for x in range(rep, n, q):
            coset |= 1 << x
        hit = mask & coset
        if hit != 0 and hit != coset:
            return False
    return True


def propagation_certifier(graph: CirculantGraph, order: tuple[int, ...] | None = None) -> PropagationTrace:
    """Replay the fixed-set closure over the generators, one stage per new generator.

    Stage k starts from the union of the subgroup spanned by the first k
    generators with the cycle of the next one, then repeatedly adds every
    vertex x of the enlarged subgroup whose two predecessors x - s_next and
    x - s_y (for some earlier generator s_y) are both already in the set.
    Each stage should close up to the enlarged subgroup; after the last
    stage the set covers Z_n exactly when the graph is connected.
    """
    n = graph.n
    if order is None:
        gens = graph.elements
    else:
        gens = tuple(order)
        if sorted(gens) != list(graph.elements):
            raise ValueError(f"order {order!r} is not an arrangement of the connection set")

    stages = []
    step = math.gcd(n, gens[0])  # the fixed subgroup starts as <s_1>
    for k in range(1, len(gens)):
        s_next = gens[k]
        subgroup_order = n // step
        next_order = n // math.gcd(n, s_next)
        d = math.gcd(subgroup_order, next_order)
        new_step = math.gcd(step, s_next)
        members = range(0, n, new_step)

        fixed = _mask_multiples(n, step) | _mask_multiples(n, math.gcd(n, s_next))
        start = _mask_to_tuple(fixed, n)
        coset_ok = _is_coset_union(fixed, n, d)
        earlier = gens[:k]
        rounds = []
        while True:
            added = 0
            for x in members:
                if fixed >> x & 1:
                    continue
                if not fixed >> ((x - s_next) % n) & 1:
                    continue
                for s_y in earlier:
                    if fixed >> ((x - s_y) % n) & 1:
                        added |= 1 << x
                        break
            if not added:
                break
            fixed |= added
            rounds.append(_mask_to_tuple(added, n))
            coset_ok = coset_ok and _is_coset_union(fixed, n, d)

        target = _mask_multiples(n, new_step)
        stages.append(
            PropagationStage(
                k=k,
                s_next=s_next,
                subgroup_order=subgroup_order,
                next_order=next_order,
                d=d,
                start=start,
                rounds=tuple(rounds),
                final=_mask_to_tuple(fixed, n),
                closed=fixed == target,
                coset_union_ok=coset_ok,
            )
        )
        step = new_step

    final_fixed = stages[-1].final if stages else tuple(range(0, n, step))
    covered = len(final_fixed) == n and all(stage.closed for stage in stages)
    return PropagationTrace(n, gens, tuple(stages), final_fixed, covered)


def coset_image_check(graph: CirculantGraph, p: Perm, subset) -> bool:
    """For G the subgroup generated by ``subset``, is every p(x + G) a coset of G?

    Holds for every automorphism that respects the cycle partition. The
    empty subset generates the trivial subgroup, for which the check is
    vacuous.
    """
    n = graph.n
    if len(p) != n:
        raise ValueError(f"degree mismatch: permutation of {len(p)} on graph of order {n}")
    step = math.gcd(n, *subset) if subset else n
    subgroup = list(range(0, n, step))
    for x in range(step):
        image = {p[(x + h) % n] for h in subgroup}
        base = p[x]
        if image != {(base + h) % n for h in subgroup}:
            return False
    return True
