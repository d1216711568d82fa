"""Partial-order extension by topological sorting, with cycle witnesses.

A finite relation extends to a partial order iff its digraph has no
directed cycle through two or more distinct nodes (self-loops are
harmless: partial orders are reflexive).  On success we return the
lexicographically least topological linearization, so output is
deterministic; on failure, an explicit directed cycle.
"""

from __future__ import annotations

import heapq
from typing import Hashable, Iterable, Mapping, Sequence, TypeVar

N = TypeVar("N", bound=Hashable)


def lex_topological_order(
    nodes: Sequence[N],
    successors: Mapping[N, Iterable[N]],
) -> tuple[list[N] | None, list[N] | None]:
    """Return (order, None) if acyclic, else (None, cycle).

    ``nodes`` must be given in the order that should break ties (the
    least available node is emitted first).  ``successors`` may mention
    only nodes from ``nodes``; self-loops are ignored.  A returned cycle
    [v0, ..., vk] has edges v0 -> v1 -> ... -> vk -> v0 with k >= 1.
    """
    index = {node: i for i, node in enumerate(nodes)}
    indegree = {node: 0 for node in nodes}
    out: dict[N, list[N]] = {node: [] for node in nodes}
    for src, dsts in successors.items():
        seen = set()
        for dst in dsts:
            if dst == src or dst in seen:
                continue
            seen.add(dst)
            out[src].append(dst)
            indegree[dst] += 1

    heap = [index[n] for n in nodes if indegree[n] == 0]
    heapq.heapify(heap)
    order: list[N] = []
    while heap:
        node = nodes[heapq.heappop(heap)]
        order.append(node)
        for dst in out[node]:
            indegree[dst] -= 1
            if indegree[dst] == 0:
                heapq.heappush(heap, index[dst])
    if len(order) == len(nodes):
        return order, None
    remaining = [n for n in nodes if indegree[n] > 0]
    return None, _find_cycle(remaining, out)


def _find_cycle(remaining: Sequence[N], out: Mapping[N, Sequence[N]]) -> list[N]:
    # DFS with gray/black colouring over the stalled subgraph.
    alive = set(remaining)
    GRAY, BLACK = 1, 2
    color: dict[N, int] = {}
    for start in remaining:
        if start in color:
            continue
        color[start] = GRAY
        path = [start]
        stack = [iter([d for d in out[start] if d in alive])]
        while stack:
            advanced = False
            for dst in stack[-1]:
                if color.get(dst) == GRAY:
                    return path[path.index(dst):]
                if dst not in color:
                    color[dst] = GRAY
                    path.append(dst)
                    stack.append(iter([d for d in out[dst] if d in alive]))
                    advanced = True
                    break
            if not advanced:
                color[path.pop()] = BLACK
                stack.pop()
    raise AssertionError("stalled topological sort without a cycle")
