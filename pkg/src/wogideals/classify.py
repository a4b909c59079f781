"""Exhaustive enumeration of weighted oriented graphs under caps, invariant
atlases with witnesses, closed-form evaluators, and falsifiable theorem
verification.

Soundness inclusions (everything enumerated lies inside the closed form) are
checked without any caps-related excuse: a violation falsifies the statement
or the engine.  Closed-form tuples that the caps cannot reach are reported as
unrealized (inconclusive), never as passes.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Iterator, Optional

from .betti import betti_table
from .errors import (
    InvalidParameters,
    NOutOfScope,
    NTooLarge,
    UnknownTheorem,
)
from .fields import GF2, FieldChoice
from .graphs import (
    WeightedOrientedGraph,
    depth_zero_certificate,
    dominant_set_graph_test,
    edge_ideal,
    graph_from_json,
    graph_to_json,
)
from .monomials import krull_dim

ENUMERATION_VERTEX_CAP = 7

THEOREMS = (
    "dd_wo",
    "ddr_wo",
    "tree_wo",
    "bpt_wo",
    "depth_zero_characterization",
    "pseudoforest_formulas",
)

PROJECTIONS = ("dd", "ddr", "betti_size", "full")


@dataclass(frozen=True)
class EnumerationConfig:
    """Caps for one exhaustive sweep."""

    n: int
    weight_cap: int = 1
    reg_cap: Optional[int] = None
    class_filter: str = "all"
    dedup: bool = True

    def __post_init__(self) -> None:
        if self.n < 2:
            raise InvalidParameters("enumeration needs at least 2 vertices")
        if self.weight_cap < 1:
            raise InvalidParameters("the weight cap must be at least 1")
        if self.class_filter not in ("all", "tree", "bipartite"):
            raise InvalidParameters("class filter must be all, tree or bipartite")
        if self.reg_cap is not None and self.reg_cap < 1:
            raise InvalidParameters("the regularity cap must be at least 1")

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "weight_cap": self.weight_cap,
            "reg_cap": self.reg_cap,
            "class_filter": self.class_filter,
            "dedup": self.dedup,
        }


@dataclass(frozen=True)
class InvariantTuple:
    """The four homological invariants of one weighted oriented graph."""

    depth: int
    dim: int
    reg: int
    pdim: int

    def project(self, projection: str) -> tuple[int, ...]:
        if projection == "dd":
            return (self.depth, self.dim)
        if projection == "ddr":
            return (self.depth, self.dim, self.reg)
        if projection == "betti_size":
            return (self.pdim, self.reg)
        if projection == "full":
            return (self.depth, self.dim, self.reg, self.pdim)
        raise InvalidParameters(f"unknown projection {projection!r}")


def graph_invariants(
    graph: WeightedOrientedGraph,
    field_choice: FieldChoice = GF2,
    _cache: Optional[dict] = None,
) -> InvariantTuple:
    """depth/dim/reg/pdim of the edge ideal; cache is keyed by the generator
    exponent vectors so re-orientations producing the same ideal are free."""
    ideal = edge_ideal(graph)
    key = tuple(m.exponents for m in ideal.mingens)
    hit = _cache.get(key) if _cache is not None else None
    if hit is None:
        table = betti_table(ideal, field_choice)
        hit = (table.pdim, table.reg, krull_dim(ideal))
        if _cache is not None:
            _cache[key] = hit
    pd, rg, dim = hit
    return InvariantTuple(depth=graph.n - pd, dim=dim, reg=rg, pdim=pd)


# ---------------------------------------------------------------------------
# enumeration


def _connected_mask(n: int, pairs: list[tuple[int, int]], mask: int) -> bool:
    adj = [[] for _ in range(n)]
    for idx, (u, v) in enumerate(pairs):
        if mask >> idx & 1:
            adj[u].append(v)
            adj[v].append(u)
    seen = [False] * n
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == n


def _edge_permutation_maps(n: int, pairs: list[tuple[int, int]]) -> list[list[int]]:
    index = {p: i for i, p in enumerate(pairs)}
    maps = []
    for perm in itertools.permutations(range(n)):
        maps.append(
            [index[tuple(sorted((perm[u], perm[v])))] for u, v in pairs]
        )
    return maps


def _is_canonical(mask: int, maps: list[list[int]]) -> bool:
    for emap in maps:
        other = 0
        m = mask
        while m:
            low = m & -m
            m ^= low
            other |= 1 << emap[low.bit_length() - 1]
        if other < mask:
            return False
    return True


def enumerate_connected_graphs(
    n: int, dedup: bool = True
) -> Iterator[tuple[tuple[int, int], ...]]:
    """All connected simple graphs on n labeled vertices, as sorted edge
    tuples; with dedup, one lexicographically-least representative per
    isomorphism class (minimum over all vertex relabelings)."""
    if n > ENUMERATION_VERTEX_CAP:
        raise NTooLarge(f"enumeration is capped at {ENUMERATION_VERTEX_CAP} vertices")
    if n < 1:
        raise InvalidParameters("need at least one vertex")
    pairs = list(itertools.combinations(range(n), 2))
    maps = _edge_permutation_maps(n, pairs)[1:] if dedup else []
    for mask in range(1, 1 << len(pairs)):
        if not _connected_mask(n, pairs, mask):
            continue
        if dedup and not _is_canonical(mask, maps):
            continue
        yield tuple(p for i, p in enumerate(pairs) if mask >> i & 1)


def _bipartite_edges(n: int, edges: tuple[tuple[int, int], ...]) -> bool:
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    color = [-1] * n
    for start in range(n):
        if color[start] != -1:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def _passes_class_filter(cfg: EnumerationConfig, edges: tuple) -> bool:
    if cfg.class_filter == "tree":
        return len(edges) == cfg.n - 1
    if cfg.class_filter == "bipartite":
        return _bipartite_edges(cfg.n, edges)
    return True


def _orient(edges: tuple[tuple[int, int], ...], omask: int) -> tuple:
    return tuple(
        (v, u) if omask >> i & 1 else (u, v) for i, (u, v) in enumerate(edges)
    )


def _weight_vectors(n: int, cap: int) -> Iterator[tuple[int, ...]]:
    return itertools.product(range(1, cap + 1), repeat=n)


def enumerate_wogs(cfg: EnumerationConfig) -> Iterator[WeightedOrientedGraph]:
    """Every orientation and every weight vector of every connected underlying
    graph passing the class filter."""
    for edges in enumerate_connected_graphs(cfg.n, cfg.dedup):
        if not _passes_class_filter(cfg, edges):
            continue
        for omask in range(1 << len(edges)):
            oriented = _orient(edges, omask)
            for weights in _weight_vectors(cfg.n, cfg.weight_cap):
                yield WeightedOrientedGraph(cfg.n, oriented, weights)


# ---------------------------------------------------------------------------
# atlases


@dataclass
class Atlas:
    """A set of invariant tuples, each with the first witness that produced it."""

    n: int
    projection: str
    config: EnumerationConfig
    tuples: dict[tuple[int, ...], WeightedOrientedGraph] = field(default_factory=dict)

    def add(self, tup: tuple[int, ...], witness: WeightedOrientedGraph) -> None:
        if tup not in self.tuples:
            self.tuples[tup] = witness

    def merge(self, other: "Atlas") -> "Atlas":
        if (self.n, self.projection) != (other.n, other.projection):
            raise InvalidParameters("cannot merge atlases of different shapes")
        merged = Atlas(self.n, self.projection, self.config, dict(self.tuples))
        for tup, witness in other.tuples.items():
            merged.add(tup, witness)
        return merged

    def tuple_set(self) -> set[tuple[int, ...]]:
        return set(self.tuples)

    def reverify(self, field_choice: FieldChoice = GF2) -> list[tuple]:
        """Recompute every witness; the tuples that fail to reproduce."""
        bad = []
        for tup, witness in self.tuples.items():
            if graph_invariants(witness, field_choice).project(self.projection) != tup:
                bad.append(tup)
        return bad

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "projection": self.projection,
            "config": self.config.to_json(),
            "tuples": [
                {"tuple": list(tup), "witness": graph_to_json(witness)}
                for tup, witness in sorted(self.tuples.items())
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Atlas":
        cfg = EnumerationConfig(
            n=data["config"]["n"],
            weight_cap=data["config"]["weight_cap"],
            reg_cap=data["config"]["reg_cap"],
            class_filter=data["config"]["class_filter"],
            dedup=data["config"]["dedup"],
        )
        atlas = cls(data["n"], data["projection"], cfg)
        for item in data["tuples"]:
            atlas.add(tuple(item["tuple"]), graph_from_json(item["witness"]))
        return atlas

    def to_csv(self) -> str:
        header = {
            "dd": "depth,dim",
            "ddr": "depth,dim,reg",
            "betti_size": "pdim,reg",
            "full": "depth,dim,reg,pdim",
        }[self.projection]
        lines = [header]
        lines.extend(",".join(str(x) for x in tup) for tup in sorted(self.tuples))
        return "\n".join(lines) + "\n"


def _work_units(cfg: EnumerationConfig, jobs: int) -> list[tuple]:
    """(edges, orientation-lo, orientation-hi) shards in deterministic order."""
    units = []
    for edges in enumerate_connected_graphs(cfg.n, cfg.dedup):
        if not _passes_class_filter(cfg, edges):
            continue
        total = 1 << len(edges)
        if jobs <= 1 or total < 4 * jobs:
            units.append((edges, 0, total))
        else:
            step = math.ceil(total / (4 * jobs))
            units.extend(
                (edges, lo, min(lo + step, total)) for lo in range(0, total, step)
            )
    return units


def _run_units(worker, payloads: list[tuple], jobs: int) -> list:
    if jobs <= 1:
        return [worker(p) for p in payloads]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(worker, payloads))


def _atlas_worker(payload: tuple) -> tuple[int, dict]:
    cfg, projection, field_choice, edges, lo, hi = payload
    cache: dict = {}
    count = 0
    found: dict[tuple[int, ...], WeightedOrientedGraph] = {}
    for omask in range(lo, hi):
        oriented = _orient(edges, omask)
        for weights in _weight_vectors(cfg.n, cfg.weight_cap):
            graph = WeightedOrientedGraph(cfg.n, oriented, weights)
            tup = graph_invariants(graph, field_choice, cache).project(projection)
            count += 1
            if tup not in found:
                found[tup] = graph
    return count, found


def _compute_atlas_counted(
    cfg: EnumerationConfig,
    projection: str,
    field_choice: FieldChoice,
    jobs: int,
) -> tuple["Atlas", int]:
    if projection not in PROJECTIONS:
        raise InvalidParameters(f"unknown projection {projection!r}")
    atlas = Atlas(cfg.n, projection, cfg)
    payloads = [
        (cfg, projection, field_choice, edges, lo, hi)
        for edges, lo, hi in _work_units(cfg, jobs)
    ]
    total = 0
    for count, found in _run_units(_atlas_worker, payloads, jobs):
        total += count
        for tup, witness in found.items():
            atlas.add(tup, witness)
    return atlas, total


def compute_atlas(
    cfg: EnumerationConfig,
    projection: str,
    field_choice: FieldChoice = GF2,
    jobs: int = 1,
) -> Atlas:
    """Sweep the configured graphs and collect projected invariant tuples."""
    return _compute_atlas_counted(cfg, projection, field_choice, jobs)[0]


def compute_dd_set(
    cfg: EnumerationConfig, field_choice: FieldChoice = GF2, jobs: int = 1
) -> Atlas:
    return compute_atlas(cfg, "dd", field_choice, jobs)


def compute_ddr_set(
    cfg: EnumerationConfig, field_choice: FieldChoice = GF2, jobs: int = 1
) -> Atlas:
    return compute_atlas(cfg, "ddr", field_choice, jobs)


def compute_betti_size_set(
    cfg: EnumerationConfig, field_choice: FieldChoice = GF2, jobs: int = 1
) -> Atlas:
    return compute_atlas(cfg, "betti_size", field_choice, jobs)


# ---------------------------------------------------------------------------
# closed forms


def closed_form_dd_unweighted(n: int) -> set[tuple[int, int]]:
    """Depth/dimension pairs of connected unweighted graphs on n vertices."""
    if n < 2:
        raise InvalidParameters("closed forms need n >= 2")
    out = set()
    for b in range(1, n):
        bound = b + 1 - -(-b // (n - b))
        for a in range(1, min(b, bound) + 1):
            out.add((a, b))
    return out


def closed_form_dd_wo(n: int) -> set[tuple[int, int]]:
    """Adds the depth-zero pairs (0, b) for 1 <= b <= n - 2."""
    out = closed_form_dd_unweighted(n)
    out.update((0, b) for b in range(1, n - 1))
    return out


def closed_form_ddr_wo(n: int, reg_cap: int) -> set[tuple[int, int, int]]:
    """Triples up to the regularity cap; depth zero forces regularity >= 3."""
    if reg_cap < 1:
        raise InvalidParameters("the regularity cap must be at least 1")
    out = set()
    for a, b in closed_form_dd_unweighted(n):
        out.update((a, b, c) for c in range(1, reg_cap + 1))
    for b in range(1, n - 1):
        out.update((0, b, c) for c in range(3, reg_cap + 1))
    return out


def _p_range(n: int) -> range:
    return range(-(-n // 2), n)


def closed_form_tree_wo(n: int, reg_cap: int) -> set[tuple[int, int]]:
    """Betti-table sizes of weighted oriented trees, truncated at reg_cap."""
    if n < 4:
        raise NOutOfScope("the tree closed form is stated for n >= 4")
    if reg_cap < 1:
        raise InvalidParameters("the regularity cap must be at least 1")
    return {(p, r) for p in _p_range(n) for r in range(1, reg_cap + 1)}


def closed_form_bpt_wo(n: int, reg_cap: int) -> set[tuple[int, int]]:
    """Betti-table sizes of weighted oriented connected bipartite graphs,
    truncated at reg_cap; pdim can hit n only with regularity >= 4."""
    if n < 4:
        raise NOutOfScope("the bipartite closed form is stated for n >= 4")
    if reg_cap < 1:
        raise InvalidParameters("the regularity cap must be at least 1")
    out = {(p, r) for p in _p_range(n) for r in range(1, reg_cap + 1)}
    out.update((n, r) for r in range(4, reg_cap + 1))
    return out


def closed_form_tree_unweighted(n: int) -> set[tuple[int, int]]:
    """Betti-table sizes of unweighted trees on n vertices (finite set)."""
    if n < 4:
        raise NOutOfScope("the tree closed form is stated for n >= 4")
    out = set()
    for r in range(1, n):
        if 2 * r >= n:
            break
        out.update((p, r) for p in range(-(-n // 2), n - r + 1))
    return out


def closed_form_bpt_unweighted(n: int) -> set[tuple[int, int]]:
    """Betti-table sizes of unweighted connected bipartite graphs on n
    vertices (finite set)."""
    if n < 4:
        raise NOutOfScope("the bipartite closed form is stated for n >= 4")
    out = set()
    for r in range(1, n):
        if 2 * r >= n - (n % 2):
            break
        out.update((p, r) for p in range(-(-n // 2), n - 1))
    out.add((n - 1, 1))
    if n % 2 == 1:
        out.add((-(-n // 2), n // 2))
    return out


# ---------------------------------------------------------------------------
# verification


@dataclass
class TheoremReport:
    """Outcome of one capped verification run."""

    theorem: str
    config: EnumerationConfig
    field: FieldChoice
    checked: int
    violations: list
    unrealized: list
    realized: Optional[int] = None
    expected: Optional[int] = None
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def inconclusive(self) -> bool:
        return bool(self.unrealized)

    @property
    def exit_code(self) -> int:
        if not self.passed:
            return 1
        return 3 if self.inconclusive else 0

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "config": self.config.to_json(),
            "field": str(self.field),
            "checked": self.checked,
            "passed": self.passed,
            "violations": self.violations,
            "unrealized": [list(t) for t in self.unrealized],
            "realized": self.realized,
            "expected": self.expected,
            "notes": self.notes,
        }

    def to_text(self) -> str:
        lines = [
            f"theorem {self.theorem} on n={self.config.n}, "
            f"W<={self.config.weight_cap}"
            + (f", reg<={self.config.reg_cap}" if self.config.reg_cap else "")
            + f" over {self.field}",
            f"checked: {self.checked}",
        ]
        if self.expected is not None:
            lines.append(f"realized: {self.realized}/{self.expected}")
        for note in self.notes:
            lines.append(f"note: {note}")
        if self.violations:
            lines.append(f"FALSIFIED: {len(self.violations)} violation(s)")
            lines.extend(f"  {v}" for v in self.violations[:10])
        elif self.unrealized:
            lines.append(
                "INCONCLUSIVE: closed-form tuples unrealized under the caps: "
                + ", ".join(str(t) for t in self.unrealized)
            )
        else:
            lines.append("PASS")
        return "\n".join(lines)


def _soundness_membership(theorem: str, n: int):
    """Membership predicate of the untruncated closed form."""
    if theorem == "dd_wo":
        allowed = closed_form_dd_wo(n)
        return lambda t: t in allowed
    if theorem == "ddr_wo":
        dd_unw = closed_form_dd_unweighted(n)

        def member(t: tuple) -> bool:
            a, b, c = t
            if a == 0:
                return 1 <= b <= n - 2 and c >= 3
            return (a, b) in dd_unw and c >= 1

        return member
    if theorem == "tree_wo":
        p_ok = set(_p_range(n))
        return lambda t: t[0] in p_ok and t[1] >= 1
    if theorem == "bpt_wo":
        p_ok = set(_p_range(n))
        return lambda t: (t[0] in p_ok and t[1] >= 1) or (t[0] == n and t[1] >= 4)
    raise UnknownTheorem(theorem)


def _set_theorem_report(
    theorem: str,
    cfg: EnumerationConfig,
    field_choice: FieldChoice,
    jobs: int,
) -> TheoremReport:
    projection = {
        "dd_wo": "dd",
        "ddr_wo": "ddr",
        "tree_wo": "betti_size",
        "bpt_wo": "betti_size",
    }[theorem]
    forced_class = {
        "dd_wo": "all",
        "ddr_wo": "all",
        "tree_wo": "tree",
        "bpt_wo": "bipartite",
    }[theorem]
    cfg = replace(cfg, class_filter=forced_class)
    if theorem == "dd_wo":
        truncated = closed_form_dd_wo(cfg.n)
    else:
        if cfg.reg_cap is None:
            raise InvalidParameters(f"{theorem} needs a regularity cap")
        truncated = {
            "ddr_wo": lambda: closed_form_ddr_wo(cfg.n, cfg.reg_cap),
            "tree_wo": lambda: closed_form_tree_wo(cfg.n, cfg.reg_cap),
            "bpt_wo": lambda: closed_form_bpt_wo(cfg.n, cfg.reg_cap),
        }[theorem]()
    member = _soundness_membership(theorem, cfg.n)
    atlas, total = _compute_atlas_counted(cfg, projection, field_choice, jobs)
    enumerated = atlas.tuple_set()
    violations = [
        {"tuple": list(t), "witness": graph_to_json(atlas.tuples[t])}
        for t in sorted(enumerated)
        if not member(t)
    ]
    unrealized = sorted(truncated - enumerated)
    notes = []
    if cfg.reg_cap is not None:
        notes.append(
            f"closed form truncated at reg <= {cfg.reg_cap}; higher values "
            "are not checked by this run"
        )
    return TheoremReport(
        theorem=theorem,
        config=cfg,
        field=field_choice,
        checked=total,
        violations=violations,
        unrealized=unrealized,
        realized=len(truncated) - len(unrealized),
        expected=len(truncated),
        notes=notes,
    )


def _depth_zero_worker(payload: tuple) -> tuple[int, list]:
    cfg, field_choice, edges, lo, hi = payload
    cache: dict = {}
    checked = 0
    mismatches = []
    for omask in range(lo, hi):
        oriented = _orient(edges, omask)
        for weights in _weight_vectors(cfg.n, cfg.weight_cap):
            graph = WeightedOrientedGraph(cfg.n, oriented, weights)
            cert = depth_zero_certificate(graph)
            engine_zero = graph_invariants(graph, field_choice, cache).depth == 0
            checked += 1
            if (cert is not None) != engine_zero:
                mismatches.append(
                    {
                        "witness": graph_to_json(graph),
                        "certificate": cert is not None,
                        "engine_depth_zero": engine_zero,
                    }
                )
    return checked, mismatches


def _pseudoforest_worker(payload: tuple) -> tuple[int, list]:
    cfg, field_choice, edges, lo, hi = payload
    cache: dict = {}
    checked = 0
    bad = []
    for omask in range(lo, hi):
        oriented = _orient(edges, omask)
        for weights in _weight_vectors(cfg.n, cfg.weight_cap):
            graph = WeightedOrientedGraph(cfg.n, oriented, weights)
            if not dominant_set_graph_test(graph):
                continue
            inv = graph_invariants(graph, field_choice, cache)
            checked += 1
            expect = (graph.num_edges, sum(graph.weights) - graph.num_edges)
            if (inv.pdim, inv.reg) != expect:
                bad.append(
                    {
                        "witness": graph_to_json(graph),
                        "engine": [inv.pdim, inv.reg],
                        "formula": list(expect),
                    }
                )
    return checked, bad


def _check_theorem_report(
    theorem: str,
    cfg: EnumerationConfig,
    field_choice: FieldChoice,
    jobs: int,
) -> TheoremReport:
    worker = (
        _depth_zero_worker
        if theorem == "depth_zero_characterization"
        else _pseudoforest_worker
    )
    payloads = [
        (cfg, field_choice, edges, lo, hi) for edges, lo, hi in _work_units(cfg, jobs)
    ]
    checked = 0
    violations: list = []
    for part_checked, part_bad in _run_units(worker, payloads, jobs):
        checked += part_checked
        violations.extend(part_bad)
    return TheoremReport(
        theorem=theorem,
        config=cfg,
        field=field_choice,
        checked=checked,
        violations=violations,
        unrealized=[],
    )


def verify_theorem(
    theorem: str,
    cfg: EnumerationConfig,
    field_choice: FieldChoice = GF2,
    jobs: int = 1,
) -> TheoremReport:
    """Exhaustively test one statement under the configured caps."""
    if theorem in ("dd_wo", "ddr_wo", "tree_wo", "bpt_wo"):
        return _set_theorem_report(theorem, cfg, field_choice, jobs)
    if theorem in ("depth_zero_characterization", "pseudoforest_formulas"):
        return _check_theorem_report(theorem, cfg, field_choice, jobs)
    raise UnknownTheorem(f"unknown theorem {theorem!r}; pick one of {THEOREMS}")
