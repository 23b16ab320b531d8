#!/usr/bin/env python3
"""Why connectivity matters: a disconnected circulant has far more
cycle-respecting automorphisms than multiplier maps.

Circ(6; {2,4}) splits into two triangles; any permutation that fixes 0,
keeps the even triangle on itself and permutes the odd one respects the
cycle partition, giving 12 automorphisms against only 2 multipliers.
A connected contrast (the 6-cycle) collapses back to the multipliers.
"""

import circpart as cp


def show(n, elements):
    graph = cp.build(n, elements, cp.UNDIRECTED)
    partition = cp.partition_by_cycle(graph)
    sols = cp.enumerate_respecting(graph, partition)
    mult = cp.multipliers(n, elements)
    mult_perms = {cp.multiplier_perm(n, j) for j in mult}
    print(f"instance {cp.instance_key(graph.cs)} (connected: {cp.is_connected(graph)})")
    print(f"  cycle partition: {len(partition.parts)} parts")
    for part in partition.parts:
        print(f"    s={','.join(map(str, part.generators))} coset={part.coset_rep}: {part.arcs}")
    print(f"  multipliers j with j*S = S: {mult}")
    print(f"  automorphisms fixing 0 that respect the cycle partition: {len(sols)}")
    for p in sols:
        marker = "  <- multiplier" if p in mult_perms else ""
        print(f"    {cp.format_perm(p)}{marker}")
    print()


def main():
    show(6, (2, 4))
    show(6, (1, 5))


if __name__ == "__main__":
    main()
