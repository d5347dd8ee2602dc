"""Typed failure modes raised by the geometric pipeline."""


class ComputationError(Exception):
    """Base class for typed numerical or geometric failures."""


class DegeneratePoint(ComputationError):
    """A dual point lies on the Klein curve, so its peel-off coefficient blows up."""


class NotApolarPair(ComputationError):
    """The two dual points do not pair to zero within tolerance."""


class RankUnexpected(ComputationError):
    """A catalecticant has the wrong numerical rank for the current step."""


class NotDegenerate(ComputationError):
    """Attempted to split a conic of full rank into lines."""


class NonTransverse(ComputationError):
    """Two conics share a component; their intersection is not four points."""


class DegenerateIntersection(ComputationError):
    """Fewer than four distinct intersection points at the given tolerance."""


class ResidualTooLarge(ComputationError):
    """The least-squares fit of the power-sum coefficients did not close."""


class EntryCount(ComputationError):
    """A decomposition does not have exactly six entries."""


class IllConditioned(ComputationError):
    """Singular values show no clear rank gap; the answer would be a guess."""


class DegenerateFiber(ComputationError):
    """The fiber conic over this base point is singular (discriminant vanishes)."""


class RetriesExhausted(ComputationError):
    """Rejection sampling failed to find an admissible point."""


class DuplicatePoints(ComputationError):
    """A decomposition has coincident dual points where distinct ones are required."""
