"""Chains and antichains of a finite poset via bipartite matching.

Elements are indexed ``0..n-1`` and the strict order is given as a
predicate ``less(u, v)``; it must be transitive, since a minimum path cover
of a transitively closed DAG is a minimum chain cover (Dilworth).
"""

from __future__ import annotations

from typing import Callable


def maximum_matching(adj: list[list[int]], n_right: int) -> list[int]:
    """Kuhn's algorithm; returns ``match_left[u]`` (right partner or -1).

    Left vertices are tried in index order and neighbours scanned in list
    order, which makes the result deterministic.
    """
    match_right = [-1] * n_right
    match_left = [-1] * len(adj)

    def augment(u: int, seen: list[bool]) -> bool:
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                if match_right[v] < 0 or augment(match_right[v], seen):
                    match_right[v] = u
                    match_left[u] = v
                    return True
        return False

    for u in range(len(adj)):
        augment(u, [False] * n_right)
    return match_left


class ChainDecomposition:
    """Minimum chain cover and a maximum antichain of ``range(n)`` under ``less``."""

    def __init__(self, n: int, less: Callable[[int, int], bool]):
        self.n = n
        self.adj = [[v for v in range(n) if v != u and less(u, v)] for u in range(n)]
        self.match_left = maximum_matching(self.adj, n)
        self.matching_size = sum(1 for v in self.match_left if v >= 0)

    @property
    def width(self) -> int:
        return self.n - self.matching_size

    def chains(self) -> list[list[int]]:
        """Each chain listed from its least element upwards."""
        has_pred = [False] * self.n
        for v in self.match_left:
            if v >= 0:
                has_pred[v] = True
        out = []
        for start in range(self.n):
            if has_pred[start]:
                continue
            chain = [start]
            while self.match_left[chain[-1]] >= 0:
                chain.append(self.match_left[chain[-1]])
            out.append(chain)
        return out

    def antichain(self) -> list[int]:
        """A maximum antichain, read off a minimum vertex cover (König)."""
        match_right = [-1] * self.n
        for u, v in enumerate(self.match_left):
            if v >= 0:
                match_right[v] = u
        # alternating reachability from unmatched left vertices
        z_left = [False] * self.n
        z_right = [False] * self.n
        stack = [u for u in range(self.n) if self.match_left[u] < 0]
        for u in stack:
            z_left[u] = True
        while stack:
            u = stack.pop()
            for v in self.adj[u]:
                if not z_right[v] and self.match_left[u] != v:
                    z_right[v] = True
                    w = match_right[v]
                    if w >= 0 and not z_left[w]:
                        z_left[w] = True
                        stack.append(w)
        # cover = (L \ Z) ∪ (R ∩ Z); the antichain avoids it on both sides
        return [x for x in range(self.n) if z_left[x] and not z_right[x]]
