"""Finite metric graphs with exact rational edge lengths.

Lengths are :class:`fractions.Fraction` values measured in units of pi,
so the angle 2*pi/3 is stored as Fraction(2, 3) and every comparison in
the package is exact.  Graphs are undirected and may contain loops and
parallel arcs, which vertex links of small complexes genuinely produce.

The girth here is the length of a shortest closed loop that never
backtracks (reverses along the arc it just used).  Such a loop always
contains an embedded cycle of no greater length, so two independent
computations are provided: one deletes each arc in turn and asks for a
shortest path between its endpoints, the other enumerates embedded
cycles outright.  They must agree, and the test suite insists on it.
"""

from __future__ import annotations

import dataclasses
import heapq
from collections import Counter
from fractions import Fraction

__all__ = [
    "MetricGraph",
    "brady_link",
    "format_length",
    "parse_length",
]

Arc = tuple[str, str, Fraction]

INFINITY = Fraction(10**9)


@dataclasses.dataclass(frozen=True)
class MetricGraph:
    """An undirected metric graph; arcs are (end, end, length) triples."""

    nodes: tuple[str, ...]
    arcs: tuple[Arc, ...]

    def __post_init__(self) -> None:
        if len(set(self.nodes)) != len(self.nodes):
            raise ValueError("duplicate node names")
        for u, v, length in self.arcs:
            if u not in self.nodes or v not in self.nodes:
                raise ValueError(f"arc ({u}, {v}) mentions an unknown node")
            if length <= 0:
                raise ValueError(f"arc ({u}, {v}) has non-positive length {length}")

    # -- local structure ------------------------------------------------

    def incidence(self) -> dict[str, list[tuple[int, int]]]:
        """node -> list of (arc index, end) with end 0 for u, 1 for v.
        A loop contributes both of its ends."""
        table: dict[str, list[tuple[int, int]]] = {n: [] for n in self.nodes}
        for i, (u, v, _) in enumerate(self.arcs):
            table[u].append((i, 0))
            table[v].append((i, 1))
        return table

    def degree(self, node: str) -> int:
        return len(self.incidence()[node])

    def degree_multiset(self) -> tuple[int, ...]:
        inc = self.incidence()
        return tuple(sorted(len(inc[n]) for n in self.nodes))

    # -- metric ---------------------------------------------------------

    def distance(self, source: str, target: str, skip_arc: int | None = None) -> Fraction:
        """Exact shortest-path distance; INFINITY when disconnected."""
        dist = {source: Fraction(0)}
        heap: list[tuple[Fraction, str]] = [(Fraction(0), source)]
        adjacency: dict[str, list[tuple[str, Fraction]]] = {n: [] for n in self.nodes}
        for i, (u, v, length) in enumerate(self.arcs):
            if i == skip_arc:
                continue
            adjacency[u].append((v, length))
            adjacency[v].append((u, length))
        while heap:
            d, node = heapq.heappop(heap)
            if node == target:
                return d
            if d > dist.get(node, INFINITY):
                continue
            for other, length in adjacency[node]:
                nd = d + length
                if nd < dist.get(other, INFINITY):
                    dist[other] = nd
                    heapq.heappush(heap, (nd, other))
        return dist.get(target, INFINITY)

    def girth(self) -> Fraction:
        """Shortest embedded cycle, via deletion of each arc in turn."""
        best = INFINITY
        for i, (u, v, length) in enumerate(self.arcs):
            if u == v:
                best = min(best, length)
            else:
                through = self.distance(u, v, skip_arc=i)
                if through < INFINITY:
                    best = min(best, through + length)
        return best

    def girth_exhaustive(self) -> Fraction:
        """Shortest embedded cycle, by direct enumeration.

        Loops and parallel pairs are the cycles on fewer than three
        nodes; longer cycles are grown from their least node so each is
        produced once up to rotation and reflection.
        """
        best = INFINITY
        by_pair: dict[tuple[str, str], list[Fraction]] = {}
        for u, v, length in self.arcs:
            if u == v:
                best = min(best, length)
            else:
                by_pair.setdefault((min(u, v), max(u, v)), []).append(length)
        for lengths in by_pair.values():
            if len(lengths) >= 2:
                pair = sorted(lengths)
                best = min(best, pair[0] + pair[1])

        order = {n: i for i, n in enumerate(self.nodes)}
        adjacency: dict[str, list[tuple[str, Fraction]]] = {n: [] for n in self.nodes}
        for u, v, length in self.arcs:
            if u != v:
                adjacency[u].append((v, length))
                adjacency[v].append((u, length))

        def grow(root: str, node: str, used: set[str], total: Fraction) -> None:
            nonlocal best
            if total >= best:
                return
            for other, length in adjacency[node]:
                if other == root and len(used) >= 3:
                    best = min(best, total + length)
                elif other not in used and order[other] > order[root]:
                    used.add(other)
                    grow(root, other, used, total + length)
                    used.remove(other)

        for root in self.nodes:
            grow(root, root, {root}, Fraction(0))
        return best

    # -- operations -----------------------------------------------------

    def smooth(self) -> MetricGraph:
        """Suppress every node of degree two, adding the lengths of its
        two arcs.  A node whose both germs lie on one loop stays, since
        a circle needs at least one node to survive."""
        nodes = list(self.nodes)
        arcs = [tuple(arc) for arc in self.arcs]
        while True:
            inc: dict[str, list[int]] = {n: [] for n in nodes}
            for i, (u, v, _) in enumerate(arcs):
                inc[u].append(i)
                inc[v].append(i)
            target = None
            for n in sorted(nodes):
                ends = inc[n]
                if len(ends) == 2 and ends[0] != ends[1]:
                    target = n
                    break
            if target is None:
                return MetricGraph(tuple(nodes), tuple(arcs))
            i, j = inc[target]
            u1, v1, l1 = arcs[i]
            u2, v2, l2 = arcs[j]
            merged = (
                u1 if v1 == target else v1,
                u2 if v2 == target else v2,
                l1 + l2,
            )
            arcs = [arc for k, arc in enumerate(arcs) if k not in (i, j)]
            arcs.append(merged)
            nodes.remove(target)

    def is_bipartite(self) -> bool:
        color: dict[str, int] = {}
        for start in self.nodes:
            if start in color:
                continue
            color[start] = 0
            frontier = [start]
            while frontier:
                node = frontier.pop()
                for u, v, _ in self.arcs:
                    if node not in (u, v):
                        continue
                    other = v if node == u else u
                    if other == node:
                        return False
                    if other not in color:
                        color[other] = 1 - color[node]
                        frontier.append(other)
                    elif color[other] == color[node]:
                        return False
        return True

    def arc_census(self) -> Counter:
        return Counter(
            (min(u, v), max(u, v), length) for u, v, length in self.arcs
        )

    def is_automorphism(self, mapping: dict[str, str]) -> bool:
        if sorted(mapping) != sorted(self.nodes) or sorted(mapping.values()) != sorted(self.nodes):
            return False
        image = Counter(
            (min(mapping[u], mapping[v]), max(mapping[u], mapping[v]), length)
            for u, v, length in self.arcs
        )
        return image == self.arc_census()

    # -- serialisation --------------------------------------------------

    def to_lines(self) -> list[str]:
        lines = [f"node {n}" for n in self.nodes]
        lines.extend(f"arc {u} {v} {format_length(length)}" for u, v, length in self.arcs)
        return lines

    @staticmethod
    def from_lines(lines: list[str]) -> MetricGraph:
        nodes: list[str] = []
        arcs: list[Arc] = []
        for raw in lines:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if parts[0] == "node" and len(parts) == 2:
                nodes.append(parts[1])
            elif parts[0] == "arc" and len(parts) == 4:
                arcs.append((parts[1], parts[2], parse_length(parts[3])))
            else:
                raise ValueError(f"bad graph line {raw!r}")
        return MetricGraph(tuple(nodes), tuple(arcs))

    def to_dot(self) -> str:
        lines = ["graph {"]
        for n in self.nodes:
            lines.append(f'  "{n}";')
        for u, v, length in self.arcs:
            lines.append(f'  "{u}" -- "{v}" [label="{format_length(length)}"];')
        lines.append("}")
        return "\n".join(lines)


def format_length(length: Fraction) -> str:
    return f"{length.numerator}/{length.denominator}"


def parse_length(text: str) -> Fraction:
    num, _, den = text.partition("/")
    if not den:
        raise ValueError(f"length must be written p/q, got {text!r}")
    value = Fraction(int(num), int(den))
    if value <= 0:
        raise ValueError(f"length must be positive, got {text!r}")
    return value


def brady_link() -> MetricGraph:
    """The cubic graph on eight nodes from the reference construction:
    an eight-cycle of arcs of length pi/3 with the four long diagonals
    of length 2*pi/3.  Girth 2*pi, every node of degree three."""
    nodes = tuple(f"v{i}" for i in range(1, 9))
    arcs = []
    for i in range(8):
        arcs.append((nodes[i], nodes[(i + 1) % 8], Fraction(1, 3)))
    for i in range(4):
        arcs.append((nodes[i], nodes[i + 4], Fraction(2, 3)))
    return MetricGraph(nodes, tuple(arcs))
