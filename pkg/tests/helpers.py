"""Shared builders for the test suite."""

from __future__ import annotations

import random

from wogideals import (
    Monomial,
    MonomialIdeal,
    RingContext,
    WeightedOrientedGraph,
    cycle_naturally_oriented,
    depth_zero_family,
    minimize_generators,
    parse_monomial,
    path_graph,
    star_graph,
)

# 5 vertices, 8 oriented edges, weights (5, 4, 3, 1, 3); its edge ideal has
# 8 pairwise-incomparable generators of mixed degrees
DEMO_EDGES = ((0, 1), (0, 3), (1, 2), (1, 4), (3, 2), (3, 4), (4, 0), (4, 2))
DEMO_WEIGHTS = (5, 4, 3, 1, 3)
DEMO_GENERATORS = (
    "x1*x2^4",
    "x1*x4",
    "x2*x3^3",
    "x2*x5^3",
    "x4*x3^3",
    "x4*x5^3",
    "x5*x1^5",
    "x5*x3^3",
)


def demo_graph() -> WeightedOrientedGraph:
    return WeightedOrientedGraph(5, DEMO_EDGES, DEMO_WEIGHTS)


def demo_generators(ctx: RingContext) -> list[Monomial]:
    return [parse_monomial(ctx, text) for text in DEMO_GENERATORS]


def broom() -> WeightedOrientedGraph:
    """Tree on 5 vertices with pdim 3 and reg 1 (star plus one subdivided edge)."""
    return WeightedOrientedGraph(5, ((0, 1), (0, 2), (0, 3), (3, 4)), (1,) * 5)


def random_ideal(
    rng: random.Random, max_vars: int = 8, max_gens: int = 10, max_exp: int = 3
) -> MonomialIdeal:
    n = rng.randint(2, max_vars)
    ctx = RingContext(n)
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        exps = [0] * n
        for v in rng.sample(range(n), rng.randint(1, min(n, 4))):
            exps[v] = rng.randint(1, max_exp)
        gens.append(ctx.monomial(exps))
    gens = [g for g in gens if not g.is_one]
    if not gens:
        gens = [ctx.variable(0)]
    return minimize_generators(gens)


def random_connected_wog(
    rng: random.Random, max_n: int = 5, weight_cap: int = 3
) -> WeightedOrientedGraph:
    """A connected weighted oriented graph: random spanning tree plus extras."""
    n = rng.randint(2, max_n)
    pairs = set()
    for v in range(1, n):
        u = rng.randrange(v)
        pairs.add((u, v))
    extras = rng.randint(0, n)
    for _ in range(extras):
        u, v = rng.sample(range(n), 2)
        pairs.add((min(u, v), max(u, v)))
    edges = tuple((v, u) if rng.random() < 0.5 else (u, v) for u, v in sorted(pairs))
    weights = tuple(rng.randint(1, weight_cap) for _ in range(n))
    return WeightedOrientedGraph(n, edges, weights)


def random_dominant_pseudoforest(
    rng: random.Random, max_n: int = 8, weight_cap: int = 4
) -> WeightedOrientedGraph:
    """A naturally oriented maximal pseudo-forest (possibly disconnected)
    whose non-leaf vertices weigh at least 2."""
    n = rng.randint(3, max_n)
    sizes = []
    left = n
    while left >= 3:
        size = rng.randint(3, left)
        sizes.append(size)
        left -= size
    if left:
        sizes[-1] += left
    edges: list[tuple[int, int]] = []
    base = 0
    for size in sizes:
        cycle_len = rng.randint(3, size)
        for i in range(cycle_len):
            edges.append((base + i, base + (i + 1) % cycle_len))
        for child in range(cycle_len, size):
            parent = rng.randrange(child)
            edges.append((base + parent, base + child))
        base += size
    degree = [0] * n
    for u, v in edges:
        degree[u] += 1
        degree[v] += 1
    weights = tuple(
        rng.randint(1, weight_cap) if degree[v] == 1 else rng.randint(2, weight_cap)
        for v in range(n)
    )
    return WeightedOrientedGraph(n, tuple(edges), weights)


def corpus_graphs() -> list[WeightedOrientedGraph]:
    """A deterministic mixed bag of weighted oriented graphs."""
    rng = random.Random(2024)
    graphs = [
        demo_graph(),
        broom(),
        path_graph(4),
        path_graph(5),
        star_graph(5),
        star_graph(4, (2, 1, 1, 3), orientation="in"),
        cycle_naturally_oriented(3, (2, 2, 2)),
        cycle_naturally_oriented(3, (1, 1, 1)),
        cycle_naturally_oriented(4, (2, 2, 3, 2)),
        cycle_naturally_oriented(5, (1, 1, 1, 1, 1)),
        depth_zero_family(0, 0, 0),
        depth_zero_family(1, 1, 0),
        depth_zero_family(0, 0, 1),
        depth_zero_family(2, 1, 1),
    ]
    graphs.extend(random_connected_wog(rng) for _ in range(12))
    return graphs


def corpus_ideals() -> list[MonomialIdeal]:
    """Named examples plus seeded random ideals."""
    rng = random.Random(99)
    ctx = RingContext(4)
    out = [
        minimize_generators([ctx.monomial((1, 1, 0, 0))]),
        minimize_generators([ctx.monomial((1, 1, 0, 0)), ctx.monomial((0, 0, 1, 1))]),
        minimize_generators(
            [ctx.monomial((2, 1, 0, 0)), ctx.monomial((0, 2, 1, 0)), ctx.monomial((1, 0, 2, 0))]
        ),
    ]
    from wogideals import edge_ideal

    out.extend(edge_ideal(g) for g in corpus_graphs()[:10])
    out.extend(random_ideal(rng, max_vars=6, max_gens=8) for _ in range(12))
    return out
