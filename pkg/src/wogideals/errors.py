"""Exception types raised across the package."""


class EmptyGenerators(ValueError):
    """A generating set was empty where a nonzero ideal is required."""


class UnitGenerator(ValueError):
    """The monomial 1 appeared among generators (unit ideal is rejected)."""


class ContextMismatch(ValueError):
    """Operands live in different ring contexts."""


class EmptySet(ValueError):
    """An operation that needs a nonempty set of monomials got an empty one."""


class NotAMember(ValueError):
    """The monomial is not a member of the given set."""


class ZeroIdeal(ValueError):
    """The zero ideal has no height or resolution data."""


class TooManyGenerators(ValueError):
    """Generator count exceeds the configured subset-enumeration cap."""


class InvalidMultidegree(ValueError):
    """Multidegree outside the admissible range for a Betti-number query."""


class TaylorNotMinimal(ValueError):
    """The closed pdim/reg formula only applies when the subset resolution is minimal."""


class TrivialSplit(ValueError):
    """A generator split left one side empty."""


class NotSquarefree(ValueError):
    """The operation requires a squarefree monomial ideal."""


class NoEdges(ValueError):
    """The graph has no edges, so it has no edge ideal."""


class NotAnEdge(ValueError):
    """The given oriented edge is not an edge of the graph."""


class NotDominantPseudoForest(ValueError):
    """The closed pseudo-forest formulas need a dominant naturally oriented pseudo-forest."""


class InvalidParameters(ValueError):
    """Arguments outside the documented domain of a constructor or operation."""


class NTooLarge(ValueError):
    """Vertex count exceeds the exhaustive-enumeration cap."""


class NOutOfScope(ValueError):
    """The closed forms for trees and bipartite graphs are stated for n >= 4 only."""


class UnknownTheorem(ValueError):
    """Unrecognized theorem name passed to the verifier."""
