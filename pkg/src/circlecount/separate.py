"""Variable-interaction analysis for separable enumeration.

Two variables interact when some term of some form involves both.  The
connected components of that graph split every form of the system into
independent blocks, which is what makes meet-in-the-middle counting,
factored exponential sums, and histogram convolutions exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .forms import FormSystem


def interaction_edges(system: FormSystem) -> List[Tuple[int, int]]:
    edges = set()
    for f in system.forms:
        for e in f.terms:
            support = [i for i, k in enumerate(e) if k]
            for a in range(len(support)):
                for b in range(a + 1, len(support)):
                    edges.add((support[a], support[b]))
    return sorted(edges)


def components(system: FormSystem, exclude: Sequence[int] = ()) -> List[List[int]]:
    """Connected components of the interaction graph minus `exclude`,
    singletons included, in increasing-variable order."""
    excluded = set(exclude)
    parent = list(range(system.n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra

    for a, b in interaction_edges(system):
        if a not in excluded and b not in excluded:
            union(a, b)
    groups = {}
    for v in range(system.n):
        if v in excluded:
            continue
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


@dataclass
class SplitPlan:
    """How to enumerate the lattice: possibly fix `interface` variables in an
    outer loop, after which `left`/`right` variables never interact."""

    interface: List[int] = field(default_factory=list)
    left: List[int] = field(default_factory=list)
    right: List[int] = field(default_factory=list)

    @property
    def separable(self) -> bool:
        return not self.interface


def _partition_components(comps: List[List[int]], weights: Sequence[float]
                          ) -> Tuple[List[int], List[int]]:
    """Greedy balance of component log-costs into two halves."""
    scored = sorted(comps, key=lambda c: -sum(weights[v] for v in c))
    left: List[int] = []
    right: List[int] = []
    wl = wr = 0.0
    for comp in scored:
        w = sum(weights[v] for v in comp)
        if wl <= wr:
            left.extend(comp)
            wl += w
        else:
            right.extend(comp)
            wr += w
    if not right and left:
        right = [left.pop()] if len(left) > 1 else right
    return sorted(left), sorted(right)


def plan_split(system: FormSystem, range_sizes: Optional[Sequence[int]] = None
               ) -> Optional[SplitPlan]:
    """Plan a meet-in-the-middle split.

    Returns a plan with an empty interface when the system is separable into
    two independent halves, a plan with interface variables to pin first
    otherwise, or None when no useful split exists (single inseparable
    variable block that cannot be opened).
    """
    sizes = list(range_sizes) if range_sizes is not None else [3] * system.n
    weights = [math.log(max(2, s)) for s in sizes]
    comps = components(system)
    if len(comps) >= 2:
        left, right = _partition_components(comps, weights)
        if left and right:
            return SplitPlan([], left, right)
    if system.n < 3:
        return None
    # Single entangled block: greedily pin high-degree vertices until the
    # remainder falls apart.
    degree = {v: 0 for v in range(system.n)}
    for a, b in interaction_edges(system):
        degree[a] += 1
        degree[b] += 1
    interface: List[int] = []
    remaining = set(range(system.n))
    while len(remaining) > 2:
        comps = components(system, exclude=interface)
        if len(comps) >= 2:
            left, right = _partition_components(comps, weights)
            if left and right:
                return SplitPlan(sorted(interface), left, right)
        pick = max(remaining, key=lambda v: (degree[v], -v))
        interface.append(pick)
        remaining.discard(pick)
    return None
