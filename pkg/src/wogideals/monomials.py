"""Monomials, minimal generating sets, dominance, and height of monomial ideals.

Everything is exact integer arithmetic on dense exponent vectors.  A
RingContext fixes the variable order once; all values are immutable, so
operations are pure and safe to evaluate concurrently.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import (
    ContextMismatch,
    EmptyGenerators,
    EmptySet,
    InvalidParameters,
    NotAMember,
    UnitGenerator,
)


@dataclass(frozen=True)
class RingContext:
    """A polynomial ring presented as an ordered tuple of variable names."""

    num_vars: int
    var_names: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.num_vars, int) or self.num_vars < 1:
            raise InvalidParameters("a ring context needs at least one variable")
        names = tuple(self.var_names) or tuple(f"x{i + 1}" for i in range(self.num_vars))
        if len(names) != self.num_vars:
            raise InvalidParameters("variable name count does not match num_vars")
        if len(set(names)) != len(names) or any(not name for name in names):
            raise InvalidParameters("variable names must be distinct and nonempty")
        object.__setattr__(self, "var_names", names)

    def monomial(self, exponents: Sequence[int]) -> "Monomial":
        return Monomial(self, tuple(exponents))

    def one(self) -> "Monomial":
        return Monomial(self, (0,) * self.num_vars)

    def variable(self, index: int, power: int = 1) -> "Monomial":
        if not 0 <= index < self.num_vars:
            raise InvalidParameters(f"variable index {index} out of range")
        exps = [0] * self.num_vars
        exps[index] = power
        return Monomial(self, tuple(exps))


@dataclass(frozen=True)
class Monomial:
    """A monomial stored as a dense exponent vector; the zero vector is 1."""

    context: RingContext
    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        exps = tuple(int(e) for e in self.exponents)
        if len(exps) != self.context.num_vars:
            raise ContextMismatch(
                f"exponent vector of length {len(exps)} in a ring with "
                f"{self.context.num_vars} variables"
            )
        if any(e < 0 for e in exps):
            raise InvalidParameters("exponents must be nonnegative")
        object.__setattr__(self, "exponents", exps)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.exponents) if e > 0)

    @property
    def is_one(self) -> bool:
        return all(e == 0 for e in self.exponents)

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def divides(self, other: "Monomial") -> bool:
        _require_same_context((self, other))
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __str__(self) -> str:
        parts = []
        for name, e in zip(self.context.var_names, self.exponents):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


def parse_monomial(context: RingContext, text: str) -> Monomial:
    """Parse 'x1*x2^4' style strings back into a monomial of the context."""
    text = text.strip()
    if text == "1":
        return context.one()
    index = {name: i for i, name in enumerate(context.var_names)}
    exps = [0] * context.num_vars
    for token in text.split("*"):
        token = token.strip()
        name, _, power = token.partition("^")
        if name not in index:
            raise InvalidParameters(f"unknown variable {name!r}")
        e = int(power) if power else 1
        if e < 1:
            raise InvalidParameters(f"bad exponent in token {token!r}")
        exps[index[name]] += e
    return context.monomial(exps)


def _require_same_context(monomials: Iterable[Monomial]) -> RingContext:
    it = iter(monomials)
    first = next(it)
    for m in it:
        if m.context != first.context:
            raise ContextMismatch("monomials come from different ring contexts")
    return first.context


def lcm_of(monomials: Iterable[Monomial]) -> Monomial:
    """Componentwise maximum of the exponent vectors."""
    ms = list(monomials)
    if not ms:
        raise EmptySet("lcm of an empty set of monomials")
    ctx = _require_same_context(ms)
    exps = ms[0].exponents
    for m in ms[1:]:
        exps = tuple(map(max, exps, m.exponents))
    return Monomial(ctx, exps)


def strongly_divides(m: Monomial, m2: Monomial) -> bool:
    """True iff m | m2 and every variable of m still divides m2/m."""
    _require_same_context((m, m2))
    if not m.divides(m2):
        return False
    return all(m2.exponents[v] - m.exponents[v] >= 1 for v in m.support)


def is_dominant_in(m: Monomial, monomials: Iterable[Monomial]) -> bool:
    """True iff removing m changes the lcm of the set."""
    ms = list(monomials)
    if m not in ms:
        raise NotAMember(f"{m} is not a member of the given set")
    others = [g for g in ms if g != m]
    if not others:
        return True
    return lcm_of(ms) != lcm_of(others)


def dominance_witness(
    m: Monomial, monomials: Iterable[Monomial]
) -> Optional[tuple[int, int]]:
    """Definitional dominance check: a pair (variable, k) such that m is the
    only monomial in the set divisible by that variable to the power k, or
    None when no such pair exists.  Used as an independent oracle for
    is_dominant_in."""
    ms = list(monomials)
    if m not in ms:
        raise NotAMember(f"{m} is not a member of the given set")
    others = [g.exponents for g in ms if g != m]
    for v in range(m.context.num_vars):
        k = 1 + max((e[v] for e in others), default=-1)
        if m.exponents[v] >= k:
            return (v, k)
    return None


def is_dominant_set(monomials: Iterable[Monomial]) -> bool:
    """True iff every monomial of the set is dominant in it."""
    ms = list(monomials)
    if not ms:
        raise EmptySet("dominance of an empty set of monomials")
    return all(is_dominant_in(m, ms) for m in ms)


@dataclass(frozen=True)
class MonomialIdeal:
    """A proper nonzero monomial ideal stored by its minimal generating set.

    The generators must already be an antichain under divisibility; use
    minimize_generators to normalize an arbitrary generating set.
    """

    context: RingContext
    mingens: tuple[Monomial, ...]

    def __post_init__(self) -> None:
        gens = tuple(sorted(set(self.mingens), key=lambda m: m.exponents))
        if not gens:
            raise EmptyGenerators("a monomial ideal needs at least one generator")
        _require_same_context(gens)
        if any(m.context != self.context for m in gens):
            raise ContextMismatch("generators do not live in the ideal's context")
        if any(m.is_one for m in gens):
            raise UnitGenerator("the unit ideal is not allowed")
        for a, b in itertools.permutations(gens, 2):
            if a.divides(b):
                raise InvalidParameters(
                    "generators are not an antichain; use minimize_generators"
                )
        object.__setattr__(self, "mingens", gens)

    @property
    def num_gens(self) -> int:
        return len(self.mingens)

    @property
    def top_lcm(self) -> Monomial:
        return lcm_of(self.mingens)

    @property
    def is_squarefree(self) -> bool:
        return all(m.is_squarefree for m in self.mingens)

    def contains(self, m: Monomial) -> bool:
        """Ideal membership: some generator divides m."""
        return any(g.divides(m) for g in self.mingens)

    def __str__(self) -> str:
        return "(" + ", ".join(str(m) for m in self.mingens) + ")"

    def to_json(self) -> dict:
        return {
            "vars": list(self.context.var_names),
            "gens": [list(m.exponents) for m in self.mingens],
        }

    @classmethod
    def from_json(cls, data: dict) -> "MonomialIdeal":
        try:
            names = tuple(str(s) for s in data["vars"])
            gens = data["gens"]
        except (KeyError, TypeError) as exc:
            raise InvalidParameters(f"malformed ideal JSON: {exc}") from exc
        ctx = RingContext(len(names), names)
        return minimize_generators(ctx.monomial(g) for g in gens)


def minimize_generators(gens: Iterable[Monomial]) -> MonomialIdeal:
    """Drop every generator divisible by another; the ideal is unchanged."""
    ms = list(gens)
    if not ms:
        raise EmptyGenerators("cannot build an ideal from no generators")
    ctx = _require_same_context(ms)
    if any(m.is_one for m in ms):
        raise UnitGenerator("the unit ideal is not allowed")
    unique = sorted(set(ms), key=lambda m: m.exponents)
    keep = [
        m
        for m in unique
        if not any(other != m and other.divides(m) for other in unique)
    ]
    return MonomialIdeal(ctx, tuple(keep))


def height(ideal: MonomialIdeal, method: str = "branch_and_bound") -> int:
    """Smallest number of variables whose span contains the ideal.

    This is an exact minimum hitting set over the generator supports; both
    methods are exact, the exhaustive one existing as a cross-check.
    """
    supports = [set(g.support) for g in ideal.mingens]
    n = ideal.context.num_vars
    if method == "exhaustive":
        return _height_exhaustive(supports, n)
    if method == "branch_and_bound":
        return _height_branch_and_bound(supports, n)
    raise InvalidParameters(f"unknown height method {method!r}")


def _height_exhaustive(supports: list[set[int]], n: int) -> int:
    for t in range(1, n + 1):
        for combo in itertools.combinations(range(n), t):
            chosen = set(combo)
            if all(s & chosen for s in supports):
                return t
    return n


def _height_branch_and_bound(supports: list[set[int]], n: int) -> int:
    best = n

    def search(remaining: list[set[int]], chosen: int) -> None:
        nonlocal best
        if not remaining:
            best = min(best, chosen)
            return
        if chosen + 1 >= best:
            return
        pivot = min(remaining, key=lambda s: (len(s), sorted(s)))
        for v in sorted(pivot):
            search([s for s in remaining if v not in s], chosen + 1)

    search(supports, 0)
    return best


def krull_dim(ideal: MonomialIdeal) -> int:
    """Dimension of the quotient ring: number of variables minus the height."""
    return ideal.context.num_vars - height(ideal)
