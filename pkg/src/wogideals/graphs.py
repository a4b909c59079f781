"""Weighted oriented graphs, their edge ideals, and the structural machinery
behind the depth-zero characterization.

Vertices are 0-based ints; an edge (u, v) is oriented from u to v and
contributes the generator x_u * x_v^(weight of v).  The JSON file format is
1-based (see graph_to_json / graph_from_json).
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import (
    InvalidParameters,
    NoEdges,
    NotAnEdge,
    NotDominantPseudoForest,
)
from .monomials import MonomialIdeal, RingContext, minimize_generators

INDUCED_CYCLE_VERTEX_CAP = 16


@dataclass(frozen=True)
class WeightedOrientedGraph:
    """A simple graph with one orientation per edge and positive vertex weights."""

    n: int
    edges: tuple[tuple[int, int], ...]
    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise InvalidParameters("a graph needs at least one vertex")
        weights = tuple(int(w) for w in self.weights)
        if len(weights) != self.n:
            raise InvalidParameters("one weight per vertex is required")
        if any(w < 1 for w in weights):
            raise InvalidParameters("weights must be positive integers")
        edges = []
        seen = set()
        for e in self.edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidParameters(f"edge {e} out of range")
            if u == v:
                raise InvalidParameters("loops are not allowed")
            pair = (min(u, v), max(u, v))
            if pair in seen:
                raise InvalidParameters(
                    f"two edges on the pair {pair}; at most one orientation per pair"
                )
            seen.add(pair)
            edges.append((u, v))
        edges.sort(key=lambda e: (min(e), max(e), e[0]))
        object.__setattr__(self, "edges", tuple(edges))
        object.__setattr__(self, "weights", weights)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def underlying_pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple((min(u, v), max(u, v)) for u, v in self.edges)

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def in_degree(self, v: int) -> int:
        return sum(1 for _, t in self.edges if t == v)

    def out_degree(self, v: int) -> int:
        return sum(1 for s, _ in self.edges if s == v)

    def is_leaf(self, v: int) -> bool:
        return self.degree(v) == 1

    def context(self) -> RingContext:
        return RingContext(self.n)

    def with_weights(self, weights: Sequence[int]) -> "WeightedOrientedGraph":
        return WeightedOrientedGraph(self.n, self.edges, tuple(weights))


def _adjacency(n: int, pairs: Iterable[tuple[int, int]]) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in pairs:
        adj[u].append(v)
        adj[v].append(u)
    return adj


def _components(n: int, adj: list[list[int]]) -> list[list[int]]:
    seen = [False] * n
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        comp = []
        queue = deque([start])
        seen[start] = True
        while queue:
            v = queue.popleft()
            comp.append(v)
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def edge_ideal(graph: WeightedOrientedGraph) -> MonomialIdeal:
    """One generator x_u * x_v^w(v) per oriented edge (u, v); minimized."""
    if not graph.edges:
        raise NoEdges("the graph has no edges")
    ctx = graph.context()
    gens = []
    for u, v in graph.edges:
        exps = [0] * graph.n
        exps[u] = 1
        exps[v] = graph.weights[v]
        gens.append(ctx.monomial(exps))
    return minimize_generators(gens)


def is_connected(graph: WeightedOrientedGraph) -> bool:
    adj = _adjacency(graph.n, graph.underlying_pairs)
    return len(_components(graph.n, adj)) == 1


def is_tree(graph: WeightedOrientedGraph) -> bool:
    return is_connected(graph) and graph.num_edges == graph.n - 1


def is_bipartite(graph: WeightedOrientedGraph) -> bool:
    adj = _adjacency(graph.n, graph.underlying_pairs)
    color = [-1] * graph.n
    for start in range(graph.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def induced_cycles(graph: WeightedOrientedGraph) -> list[tuple[int, ...]]:
    """All induced (chordless) cycles, each returned in cyclic vertex order.

    Exhaustive vertex-subset search; fine at desk scale, capped at 16
    vertices.
    """
    n = graph.n
    if n > INDUCED_CYCLE_VERTEX_CAP:
        raise InvalidParameters(
            f"induced-cycle search is capped at {INDUCED_CYCLE_VERTEX_CAP} vertices"
        )
    pairs = set(graph.underlying_pairs)
    adj = _adjacency(n, pairs)
    cycles = []
    for mask in range(1, 1 << n):
        if mask.bit_count() < 3:
            continue
        verts = [v for v in range(n) if mask >> v & 1]
        inside = [[w for w in adj[v] if mask >> w & 1] for v in verts]
        if any(len(nb) != 2 for nb in inside):
            continue
        # all degrees are 2; connectivity makes the induced subgraph a cycle
        sub_adj = {v: nb for v, nb in zip(verts, inside)}
        seen = {verts[0]}
        queue = deque([verts[0]])
        while queue:
            v = queue.popleft()
            for w in sub_adj[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        if len(seen) == len(verts):
            cycles.append(_cycle_order(verts, sub_adj))
    return cycles


def _cycle_order(verts: list[int], sub_adj: dict[int, list[int]]) -> tuple[int, ...]:
    start = min(verts)
    nxt = min(sub_adj[start])
    order = [start, nxt]
    while len(order) < len(verts):
        cur, prev = order[-1], order[-2]
        a, b = sub_adj[cur]
        order.append(b if a == prev else a)
    return tuple(order)


def is_unicyclic(graph: WeightedOrientedGraph) -> bool:
    return is_connected(graph) and len(induced_cycles(graph)) == 1


def _natural_pseudoforest_definitional(graph: WeightedOrientedGraph) -> bool:
    """Every component is unicyclic, its cycle is consistently oriented, and
    the attached trees point away from the cycle."""
    directed = set(graph.edges)
    pairs = graph.underlying_pairs
    adj = _adjacency(graph.n, pairs)
    try:
        all_cycles = induced_cycles(graph)
    except InvalidParameters:
        return _indegree_characterization(graph)
    for comp in _components(graph.n, adj):
        comp_set = set(comp)
        comp_edges = [p for p in pairs if p[0] in comp_set]
        if len(comp_edges) != len(comp):
            return False
        comp_cycles = [c for c in all_cycles if set(c) <= comp_set]
        if len(comp_cycles) != 1:
            return False
        cycle = comp_cycles[0]
        k = len(cycle)
        forward = all((cycle[i], cycle[(i + 1) % k]) in directed for i in range(k))
        backward = all((cycle[(i + 1) % k], cycle[i]) in directed for i in range(k))
        if not (forward or backward):
            return False
        cycle_pairs = {
            (min(cycle[i], cycle[(i + 1) % k]), max(cycle[i], cycle[(i + 1) % k]))
            for i in range(k)
        }
        dist = {v: 0 for v in cycle}
        queue = deque(cycle)
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w in comp_set and w not in dist:
                    dist[w] = dist[v] + 1
                    queue.append(w)
        for u, v in comp_edges:
            if (u, v) in cycle_pairs:
                continue
            if dist[u] == dist[v]:
                return False
            parent, child = (u, v) if dist[u] < dist[v] else (v, u)
            if (parent, child) not in directed:
                return False
    return True


def _indegree_characterization(graph: WeightedOrientedGraph) -> bool:
    indeg = [0] * graph.n
    for _, v in graph.edges:
        indeg[v] += 1
    return all(d == 1 for d in indeg)


def is_naturally_oriented_max_pseudoforest(graph: WeightedOrientedGraph) -> bool:
    """Definitional check; coincides with every vertex having in-degree 1."""
    definitional = _natural_pseudoforest_definitional(graph)
    assert definitional == _indegree_characterization(graph)
    return definitional


@dataclass(frozen=True)
class PseudoForestCertificate:
    """One chosen in-edge per vertex, spanning a naturally oriented maximal
    pseudo-forest whose non-leaves all have weight at least 2."""

    chosen_in_edge: tuple[tuple[int, int], ...]

    def subgraph(self, graph: WeightedOrientedGraph) -> WeightedOrientedGraph:
        return WeightedOrientedGraph(graph.n, self.chosen_in_edge, graph.weights)

    def is_valid_for(self, graph: WeightedOrientedGraph) -> bool:
        if len(self.chosen_in_edge) != graph.n:
            return False
        edge_set = set(graph.edges)
        if any(e not in edge_set for e in self.chosen_in_edge):
            return False
        if any(e[1] != v for v, e in enumerate(self.chosen_in_edge)):
            return False
        sub = self.subgraph(graph)
        if not is_naturally_oriented_max_pseudoforest(sub):
            return False
        return all(
            sub.is_leaf(v) or graph.weights[v] >= 2 for v in range(graph.n)
        )


def depth_zero_certificate(
    graph: WeightedOrientedGraph,
) -> Optional[PseudoForestCertificate]:
    """Search for a spanning naturally oriented maximal pseudo-forest whose
    non-leaf vertices all weigh at least 2; None when no such subgraph exists.

    Picking one in-edge per vertex always yields in-degree exactly 1, so the
    weight condition reduces to a per-edge constraint: a chosen in-edge must
    come out of a vertex of weight at least 2 (sources end up with degree at
    least 2 in the subgraph).  The choices are therefore independent and the
    eager filter below never needs to backtrack.
    """
    order = sorted(range(graph.n), key=lambda v: (-graph.degree(v), v))
    chosen: list[Optional[tuple[int, int]]] = [None] * graph.n
    for v in order:
        candidates = sorted(
            u for u, t in graph.edges if t == v and graph.weights[u] >= 2
        )
        if not candidates:
            return None
        chosen[v] = (candidates[0], v)
    cert = PseudoForestCertificate(tuple(chosen))
    assert cert.is_valid_for(graph)
    return cert


def dominant_generator_test(
    graph: WeightedOrientedGraph, edge: tuple[int, int]
) -> bool:
    """Combinatorial dominance of the generator of one oriented edge: an
    endpoint is a leaf, or the edge is the only one into its head and the
    head weighs more than 1."""
    u, v = edge
    if (u, v) not in graph.edges:
        raise NotAnEdge(f"{edge} is not an oriented edge of the graph")
    if graph.is_leaf(u) or graph.is_leaf(v):
        return True
    return graph.in_degree(v) == 1 and graph.weights[v] >= 2


def dominant_set_graph_test(graph: WeightedOrientedGraph) -> bool:
    """Combinatorial test for the generators forming a dominant set of size n:
    the graph is a naturally oriented maximal pseudo-forest whose vertices are
    leaves or weigh at least 2."""
    if not is_naturally_oriented_max_pseudoforest(graph):
        return False
    return all(graph.is_leaf(v) or graph.weights[v] >= 2 for v in range(graph.n))


def pseudoforest_invariants(graph: WeightedOrientedGraph) -> tuple[int, int]:
    """Closed (pdim, reg) formulas for a dominant naturally oriented maximal
    pseudo-forest: (edge count, total weight minus edge count)."""
    if not dominant_set_graph_test(graph):
        raise NotDominantPseudoForest(
            "the closed formulas need a dominant naturally oriented pseudo-forest"
        )
    return graph.num_edges, sum(graph.weights) - graph.num_edges


# ---------------------------------------------------------------------------
# constructors


def _default_weights(n: int, weights: Optional[Sequence[int]]) -> tuple[int, ...]:
    return tuple(weights) if weights is not None else (1,) * n


def path_graph(
    n: int, weights: Optional[Sequence[int]] = None
) -> WeightedOrientedGraph:
    if n < 2:
        raise InvalidParameters("a path needs at least 2 vertices")
    edges = tuple((i, i + 1) for i in range(n - 1))
    return WeightedOrientedGraph(n, edges, _default_weights(n, weights))


def cycle_naturally_oriented(
    n: int, weights: Sequence[int]
) -> WeightedOrientedGraph:
    if n < 3:
        raise InvalidParameters("a cycle needs at least 3 vertices")
    edges = tuple((i, (i + 1) % n) for i in range(n))
    return WeightedOrientedGraph(n, edges, tuple(weights))


def star_graph(
    n: int,
    weights: Optional[Sequence[int]] = None,
    orientation: str = "out",
) -> WeightedOrientedGraph:
    """Star with center 0; 'out' points at the leaves, 'in' at the center."""
    if n < 2:
        raise InvalidParameters("a star needs at least 2 vertices")
    if orientation not in ("out", "in"):
        raise InvalidParameters("orientation must be 'out' or 'in'")
    edges = tuple(
        (0, i) if orientation == "out" else (i, 0) for i in range(1, n)
    )
    return WeightedOrientedGraph(n, edges, _default_weights(n, weights))


def complete_graph(
    n: int,
    weights: Optional[Sequence[int]] = None,
    orientation: str = "forward",
) -> WeightedOrientedGraph:
    """Complete graph; 'forward' orients every edge toward the larger index."""
    if n < 2:
        raise InvalidParameters("a complete graph needs at least 2 vertices")
    if orientation not in ("forward", "backward"):
        raise InvalidParameters("orientation must be 'forward' or 'backward'")
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            edges.append((u, v) if orientation == "forward" else (v, u))
    return WeightedOrientedGraph(n, tuple(edges), _default_weights(n, weights))


def depth_zero_family(
    t: int,
    l: int,
    r: int,
    y_edges: Optional[Sequence[bool] | int] = None,
) -> WeightedOrientedGraph:
    """The depth-zero family: a complete graph on 3 + t vertices with l leaves
    hanging off the first vertex.

    Vertices 0,1,2 carry the naturally oriented triangle with weights
    (2 + r, 2, 2); the t extra clique vertices and the l leaves weigh 1.
    Clique edges into the extra vertices point at them, leaf edges point at
    the leaves.  The mutual orientation of the extra clique vertices does not
    affect the invariants; `y_edges` chooses it (default: toward the larger
    index; an int seeds a randomizer; a bool sequence fixes each edge, True
    meaning toward the larger index, in lexicographic pair order).
    """
    if t < 0 or l < 0 or r < 0:
        raise InvalidParameters("t, l, r must be nonnegative")
    n = 3 + t + l
    ys = [3 + j for j in range(t)]
    zs = [3 + t + j for j in range(l)]
    edges = [(1, 0), (2, 1), (0, 2)]
    for y in ys:
        edges.extend(((0, y), (1, y), (2, y)))
    y_pairs = [(a, b) for i, a in enumerate(ys) for b in ys[i + 1 :]]
    if isinstance(y_edges, int) and not isinstance(y_edges, bool):
        rng = random.Random(y_edges)
        flags = [rng.random() < 0.5 for _ in y_pairs]
    elif y_edges is None:
        flags = [True] * len(y_pairs)
    else:
        flags = [bool(b) for b in y_edges]
        if len(flags) != len(y_pairs):
            raise InvalidParameters(
                f"expected {len(y_pairs)} orientation flags, got {len(flags)}"
            )
    for (a, b), toward_larger in zip(y_pairs, flags):
        edges.append((a, b) if toward_larger else (b, a))
    for z in zs:
        edges.append((0, z))
    weights = [2 + r, 2, 2] + [1] * t + [1] * l
    return WeightedOrientedGraph(n, tuple(edges), tuple(weights))


def cycle_with_leaves(
    cycle_weights: Sequence[int], num_leaves: int
) -> WeightedOrientedGraph:
    """Naturally oriented cycle with weight-1 leaves attached to vertex 0."""
    k = len(cycle_weights)
    if k < 3:
        raise InvalidParameters("a cycle needs at least 3 vertices")
    if num_leaves < 0:
        raise InvalidParameters("the leaf count must be nonnegative")
    n = k + num_leaves
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges.extend((0, k + j) for j in range(num_leaves))
    weights = list(cycle_weights) + [1] * num_leaves
    return WeightedOrientedGraph(n, tuple(edges), tuple(weights))


def bipartite_depth_zero_witness(n: int, r: int) -> WeightedOrientedGraph:
    """A bipartite witness with pdim n and reg r (r >= 4): a naturally
    oriented 4-cycle with weights (2, 2, 2, r - 2) plus n - 4 leaves."""
    if n < 4:
        raise InvalidParameters("need at least 4 vertices")
    if r < 4:
        raise InvalidParameters("the target regularity must be at least 4")
    return cycle_with_leaves((2, 2, 2, r - 2), n - 4)


def lift_graph(
    graph: WeightedOrientedGraph, var: int, r: int
) -> WeightedOrientedGraph:
    """Re-weight and re-orient an unweighted connected graph so that the edge
    ideal becomes the input's ideal with one variable raised to the (r+1)-st
    power: every edge at that vertex points into it and it gets weight r + 1.
    Remaining edges point at the larger index (their orientation is
    immaterial at weight 1)."""
    if any(w != 1 for w in graph.weights):
        raise InvalidParameters("lift_graph expects an unweighted graph")
    if not is_connected(graph):
        raise InvalidParameters("lift_graph expects a connected graph")
    if not 0 <= var < graph.n:
        raise InvalidParameters(f"vertex {var} out of range")
    if r < 0:
        raise InvalidParameters("the shift r must be nonnegative")
    edges = []
    for u, v in graph.underlying_pairs:
        if var in (u, v):
            other = u if v == var else v
            edges.append((other, var))
        else:
            edges.append((u, v))
    weights = [1] * graph.n
    weights[var] = r + 1
    return WeightedOrientedGraph(graph.n, tuple(edges), tuple(weights))


# ---------------------------------------------------------------------------
# serialization


def graph_to_json(graph: WeightedOrientedGraph) -> dict:
    return {
        "n": graph.n,
        "weights": list(graph.weights),
        "edges": [{"from": u + 1, "to": v + 1} for u, v in graph.edges],
    }


def graph_from_json(data: dict) -> WeightedOrientedGraph:
    """Strict reader for the 1-based JSON format; edges must carry an explicit
    orientation (undirected inputs are rejected)."""
    if not isinstance(data, dict):
        raise InvalidParameters("graph JSON must be an object")
    try:
        n = int(data["n"])
        weights = [int(w) for w in data["weights"]]
        raw_edges = data["edges"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidParameters(f"malformed graph JSON: {exc}") from exc
    edges = []
    for e in raw_edges:
        if not isinstance(e, dict) or "from" not in e or "to" not in e:
            raise InvalidParameters(
                "each edge must be an object with 'from' and 'to' (1-based)"
            )
        u, v = int(e["from"]), int(e["to"])
        if not (1 <= u <= n and 1 <= v <= n):
            raise InvalidParameters(f"edge endpoint out of range in {e}")
        edges.append((u - 1, v - 1))
    return WeightedOrientedGraph(n, tuple(edges), tuple(weights))


def export_cas_script(graph: WeightedOrientedGraph) -> str:
    """A plain-text computer-algebra script (ring + edge ideal) for external
    cross-validation."""
    ideal = edge_ideal(graph)
    names = ",".join(graph.context().var_names)
    gens = ", ".join(str(m) for m in ideal.mingens)
    return f"R = QQ[{names}];\nI = ideal({gens});\n"
