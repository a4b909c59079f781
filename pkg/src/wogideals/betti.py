"""Exact multigraded Betti numbers of monomial quotients.

The engine enumerates every subset of the minimal generators, groups subsets
by their lcm, and takes homology of each lcm strand of the subset complex:
after tensoring the generator-indexed free resolution down to the field only
unit coefficients survive, and those are exactly the subset pairs with equal
lcm.  betti_via_upper_koszul recomputes any single entry independently, from
reduced simplicial homology of the squarefree divisors that stay inside the
ideal.  All ranks are exact (see fields).
"""

from __future__ import annotations

from typing import Iterator, Optional

from .errors import (
    ContextMismatch,
    InvalidMultidegree,
    InvalidParameters,
    NotSquarefree,
    TaylorNotMinimal,
    TooManyGenerators,
)
from .fields import RATIONALS, FieldChoice, rank_gf2_bitrows, rank_int_matrix
from .monomials import (
    Monomial,
    MonomialIdeal,
    is_dominant_set,
    lcm_of,
    minimize_generators,
)

DEFAULT_GENERATOR_CAP = 20


class BettiTable:
    """Sparse table of multigraded Betti numbers of a quotient S/I.

    Entries map (homological index, exponent vector) to a positive integer.
    Row 0 always holds the single entry for the free module S itself.
    """

    def __init__(self, num_vars: int, entries: dict[tuple[int, tuple[int, ...]], int]):
        zero = (0,) * num_vars
        table = {}
        for (i, deg), beta in entries.items():
            if beta < 0:
                raise InvalidParameters("negative Betti number")
            if beta:
                table[(i, tuple(deg))] = int(beta)
        if table.get((0, zero)) != 1 or any(i == 0 and deg != zero for i, deg in table):
            raise InvalidParameters("row 0 of a quotient table must be exactly S")
        self.num_vars = num_vars
        self.entries = table

    def beta(self, i: int, deg) -> int:
        exps = deg.exponents if isinstance(deg, Monomial) else tuple(deg)
        return self.entries.get((i, exps), 0)

    @property
    def pdim(self) -> int:
        return max(i for i, _ in self.entries)

    @property
    def depth(self) -> int:
        return self.num_vars - self.pdim

    @property
    def reg(self) -> int:
        return max(sum(deg) - i for i, deg in self.entries)

    def total(self, i: int) -> int:
        return sum(beta for (j, _), beta in self.entries.items() if j == i)

    def reg_attaining(self) -> list[tuple[int, tuple[int, ...]]]:
        """The (i, multidegree) pairs where deg - i reaches the regularity."""
        r = self.reg
        return sorted((i, deg) for i, deg in self.entries if sum(deg) - i == r)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BettiTable)
            and self.num_vars == other.num_vars
            and self.entries == other.entries
        )

    def __repr__(self) -> str:
        return f"BettiTable(pdim={self.pdim}, reg={self.reg}, entries={len(self.entries)})"

    def to_json(self) -> dict:
        return {
            "entries": [
                {"i": i, "deg": list(deg), "beta": beta}
                for (i, deg), beta in sorted(self.entries.items())
            ],
            "pdim": self.pdim,
            "reg": self.reg,
            "depth": self.depth,
        }

    @classmethod
    def from_json(cls, data: dict, num_vars: Optional[int] = None) -> "BettiTable":
        entries = {
            (int(e["i"]), tuple(int(x) for x in e["deg"])): int(e["beta"])
            for e in data["entries"]
        }
        if num_vars is None:
            num_vars = len(next(iter(entries))[1])
        return cls(num_vars, entries)

    def to_grid(self) -> str:
        """Conventional text grid: columns are homological indices, rows are
        deg - i, entries are coarse (single-graded) Betti numbers."""
        cols = range(self.pdim + 1)
        rows = range(self.reg + 1)
        grid = {(r, c): 0 for r in rows for c in cols}
        for (i, deg), beta in self.entries.items():
            grid[(sum(deg) - i, i)] += beta
        totals = [sum(grid[(r, c)] for r in rows) for c in cols]
        width = max(2, *(len(str(t)) for t in totals))
        head = " " * 7 + " ".join(f"{c:>{width}}" for c in cols)
        total = "total: " + " ".join(f"{t:>{width}}" for t in totals)
        body = []
        for r in rows:
            cells = " ".join(
                f"{grid[(r, c)] if grid[(r, c)] else '.':>{width}}" for c in cols
            )
            body.append(f"{r:>5}: {cells}")
        return "\n".join([head, total, *body])


def _subset_lcms(gens: list[tuple[int, ...]], num_vars: int) -> list[tuple[int, ...]]:
    """lcm exponent vector for every subset bitmask of the generators."""
    lcms = [(0,) * num_vars] * (1 << len(gens))
    for mask in range(1, 1 << len(gens)):
        low = mask & -mask
        rest = mask ^ low
        g = gens[low.bit_length() - 1]
        lcms[mask] = g if rest == 0 else tuple(map(max, lcms[rest], g))
    return lcms


def _strand_rank(
    upper: list[int],
    lower: list[int],
    lcms: list[tuple[int, ...]],
    a: tuple[int, ...],
    field: FieldChoice,
) -> int:
    """Rank of the strand differential from the subsets in `upper` to `lower`.

    A term survives exactly when dropping the generator keeps the lcm equal
    to the strand multidegree `a`.
    """
    col = {mask: j for j, mask in enumerate(lower)}
    if field.characteristic == 2:
        rows = []
        for sigma in upper:
            row = 0
            s = sigma
            while s:
                low = s & -s
                s ^= low
                tau = sigma ^ low
                if lcms[tau] == a:
                    row |= 1 << col[tau]
            rows.append(row)
        return rank_gf2_bitrows(rows)
    width = len(lower)
    rows = []
    for sigma in upper:
        row = [0] * width
        s = sigma
        while s:
            low = s & -s
            s ^= low
            tau = sigma ^ low
            if lcms[tau] == a:
                sign = -1 if (sigma & (low - 1)).bit_count() & 1 else 1
                row[col[tau]] = sign
        rows.append(row)
    return rank_int_matrix(rows, field)


def betti_table(
    ideal: MonomialIdeal,
    field: FieldChoice = RATIONALS,
    max_generators: int = DEFAULT_GENERATOR_CAP,
) -> BettiTable:
    """All multigraded Betti numbers of S/I, computed strand by strand."""
    gens = [m.exponents for m in ideal.mingens]
    q = len(gens)
    if q > max_generators:
        raise TooManyGenerators(
            f"{q} generators exceed the subset-enumeration cap of {max_generators}"
        )
    n = ideal.context.num_vars
    lcms = _subset_lcms(gens, n)
    strata: dict[tuple[int, ...], dict[int, list[int]]] = {}
    for mask, a in enumerate(lcms):
        strata.setdefault(a, {}).setdefault(mask.bit_count(), []).append(mask)
    entries: dict[tuple[int, tuple[int, ...]], int] = {}
    for a, levels in strata.items():
        ranks: dict[int, int] = {}
        for i, masks in levels.items():
            if i == 0:
                continue
            below = levels.get(i - 1)
            if below:
                ranks[i] = _strand_rank(masks, below, lcms, a, field)
        for i, masks in levels.items():
            beta = len(masks) - ranks.get(i, 0) - ranks.get(i + 1, 0)
            if beta:
                entries[(i, a)] = beta
    return BettiTable(n, entries)


def pdim(ideal: MonomialIdeal, field: FieldChoice = RATIONALS) -> int:
    return betti_table(ideal, field).pdim


def depth(ideal: MonomialIdeal, field: FieldChoice = RATIONALS) -> int:
    return betti_table(ideal, field).depth


def reg(ideal: MonomialIdeal, field: FieldChoice = RATIONALS) -> int:
    return betti_table(ideal, field).reg


def _upper_koszul_faces(
    ideal: MonomialIdeal, aexp: tuple[int, ...], supp: list[int]
) -> dict[int, list[tuple[int, ...]]]:
    """Faces (by dimension) of the complex of squarefree W <= support(a) with
    x^a / x^W still inside the ideal; vertex i stands for supp[i]."""
    gens = [m.exponents for m in ideal.mingens]
    faces: dict[int, list[tuple[int, ...]]] = {}
    k = len(supp)
    for mask in range(1 << k):
        exp = list(aexp)
        bits = []
        mm = mask
        while mm:
            low = mm & -mm
            mm ^= low
            b = low.bit_length() - 1
            bits.append(b)
            exp[supp[b]] -= 1
        if any(all(ge <= xe for ge, xe in zip(g, exp)) for g in gens):
            faces.setdefault(len(bits) - 1, []).append(tuple(bits))
    return faces


def _boundary_rank(
    faces: dict[int, list[tuple[int, ...]]], d: int, field: FieldChoice
) -> int:
    if d <= -1:
        return 0
    upper = faces.get(d)
    lower = faces.get(d - 1)
    if not upper or not lower:
        return 0
    col = {f: j for j, f in enumerate(lower)}
    if field.characteristic == 2:
        rows = []
        for face in upper:
            row = 0
            for j in range(len(face)):
                row |= 1 << col[face[:j] + face[j + 1 :]]
            rows.append(row)
        return rank_gf2_bitrows(rows)
    rows = []
    for face in upper:
        row = [0] * len(lower)
        for j in range(len(face)):
            row[col[face[:j] + face[j + 1 :]]] = -1 if j & 1 else 1
        rows.append(row)
    return rank_int_matrix(rows, field)


def _reduced_homology_rank(
    faces: dict[int, list[tuple[int, ...]]], d: int, field: FieldChoice
) -> int:
    level = faces.get(d)
    if not level:
        return 0
    return len(level) - _boundary_rank(faces, d, field) - _boundary_rank(faces, d + 1, field)


def betti_via_upper_koszul(
    ideal: MonomialIdeal,
    multidegree: Monomial,
    index: int,
    field: FieldChoice = RATIONALS,
) -> int:
    """Independent oracle for a single Betti number of S/I.

    The entry at (index, a) equals the rank of reduced homology in dimension
    index - 2 of the simplicial complex whose faces are the squarefree
    divisors W of support(a) with x^a / x^W in the ideal.
    """
    if multidegree.context != ideal.context:
        raise ContextMismatch("multidegree lives in a different context")
    if index < 1:
        raise InvalidMultidegree("homological index must be at least 1")
    if not multidegree.divides(ideal.top_lcm):
        raise InvalidMultidegree(
            "multidegree must divide the lcm of the minimal generators"
        )
    aexp = multidegree.exponents
    supp = [v for v, e in enumerate(aexp) if e > 0]
    faces = _upper_koszul_faces(ideal, aexp, supp)
    return _reduced_homology_rank(faces, index - 2, field)


def upper_koszul_homology(
    ideal: MonomialIdeal, multidegree: Monomial, field: FieldChoice = RATIONALS
) -> dict[int, int]:
    """All nonzero oracle Betti numbers beta_{i, a}(S/I) for a fixed a."""
    if multidegree.context != ideal.context:
        raise ContextMismatch("multidegree lives in a different context")
    aexp = multidegree.exponents
    supp = [v for v, e in enumerate(aexp) if e > 0]
    faces = _upper_koszul_faces(ideal, aexp, supp)
    out = {}
    for d in range(-1, len(supp)):
        h = _reduced_homology_rank(faces, d, field)
        if h:
            out[d + 2] = h
    return out


def is_taylor_minimal(ideal: MonomialIdeal) -> bool:
    """The subset resolution is minimal iff the generators are a dominant set."""
    return is_dominant_set(ideal.mingens)


def is_taylor_minimal_definitional(ideal: MonomialIdeal) -> bool:
    """Direct minimality check: no subset keeps its lcm when a generator is
    dropped (no unit coefficient anywhere in the subset resolution).
    Exponential; kept as an oracle for is_taylor_minimal."""
    gens = [m.exponents for m in ideal.mingens]
    lcms = _subset_lcms(gens, ideal.context.num_vars)
    for mask in range(1, 1 << len(gens)):
        a = lcms[mask]
        s = mask
        while s:
            low = s & -s
            s ^= low
            if lcms[mask ^ low] == a:
                return False
    return True


def reg_if_taylor_minimal(ideal: MonomialIdeal) -> tuple[int, int]:
    """Closed (pdim, reg) formula, valid exactly when the subset resolution
    is minimal: pdim is the generator count and reg is deg(lcm) minus it."""
    if not is_taylor_minimal(ideal):
        raise TaylorNotMinimal("the generators are not a dominant set")
    q = ideal.num_gens
    return q, ideal.top_lcm.degree - q


def substitute_power(ideal: MonomialIdeal, var: int, r: int) -> MonomialIdeal:
    """Replace the variable by its (r+1)-st power in every generator."""
    n = ideal.context.num_vars
    if not 0 <= var < n:
        raise InvalidParameters(f"variable index {var} out of range")
    if r < 0:
        raise InvalidParameters("the shift r must be nonnegative")
    scale = r + 1
    new_gens = []
    for m in ideal.mingens:
        exps = list(m.exponents)
        exps[var] *= scale
        new_gens.append(ideal.context.monomial(exps))
    return minimize_generators(new_gens)


def find_reg_witness_variable(
    ideal: MonomialIdeal, field: FieldChoice = RATIONALS
) -> int:
    """A variable dividing some multidegree that attains the regularity.

    Substituting a power of this variable shifts the regularity by exactly
    the exponent gap while preserving the projective dimension.  Ties break
    to the smallest variable index.
    """
    if not ideal.is_squarefree:
        raise NotSquarefree("the witness construction needs a squarefree ideal")
    table = betti_table(ideal, field)
    candidates: set[int] = set()
    for i, deg in table.reg_attaining():
        candidates.update(v for v, e in enumerate(deg) if e > 0)
    return min(candidates)
