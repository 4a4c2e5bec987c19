"""Shared exception types."""


class HemiconesError(Exception):
    """Base class for all package errors."""


class InvalidDimension(HemiconesError, ValueError):
    """n, k or m out of the range the operation supports."""


class InvalidTuple(HemiconesError, ValueError):
    """Not a strictly increasing tuple inside 1..n."""


class MismatchedArity(HemiconesError, ValueError):
    """Two objects that must share an arity do not."""


class WrongBlockCount(HemiconesError, ValueError):
    """Partition has the wrong number of blocks for the operation."""


class InvalidPartition(HemiconesError, ValueError):
    """Blocks are empty, overlap, or do not cover 1..n."""


class InvalidPermutation(HemiconesError, ValueError):
    """Sequence is not a bijection of 1..n."""


class ExactnessError(HemiconesError, TypeError):
    """A float or other inexact number reached exact-arithmetic code."""


class ZeroVector(HemiconesError, ValueError):
    """Operation needs a nonzero vector."""


class NotPointed(HemiconesError, ValueError):
    """Inequality normals do not span; the cone contains a line."""


class NotFullDimensional(HemiconesError, ValueError):
    """Rays do not span the ambient space."""


class InfeasiblePoint(HemiconesError, ValueError):
    """Vector violates the cone's inequalities.

    Carries (index, name, slack) triples for every violated inequality.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        parts = ", ".join(
            f"{name or i}: slack {s}" for i, name, s in self.violations[:5]
        )
        more = "" if len(self.violations) <= 5 else f" (+{len(self.violations) - 5} more)"
        super().__init__(f"point violates {len(self.violations)} inequalities: {parts}{more}")


class NotValidInequality(HemiconesError, ValueError):
    """Inequality is violated by some ray of the cone.

    Carries (ray_index, slack) pairs for every violating ray.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        parts = ", ".join(f"ray {i}: slack {s}" for i, s in self.violations[:5])
        more = "" if len(self.violations) <= 5 else f" (+{len(self.violations) - 5} more)"
        super().__init__(
            f"inequality cut by {len(self.violations)} rays: {parts}{more}")


class InconsistentPair(HemiconesError, ValueError):
    """H- and V-descriptions disagree (some ray violates some inequality)."""


class InconsistentRelation(HemiconesError, ValueError):
    """Orbit table fails the double counting identity."""


class ResourceLimitReached(HemiconesError, RuntimeError):
    """A ceiling (max rays / max seconds) stopped an enumeration.

    Carries the snapshot needed to resume.
    """

    def __init__(self, reason, snapshot):
        self.reason = reason
        self.snapshot = snapshot
        super().__init__(f"stopped: {reason}")


class SnapshotMismatch(HemiconesError, ValueError):
    """Snapshot does not belong to the problem being resumed."""


class ParseError(HemiconesError, ValueError):
    """Malformed .ine/.ext input."""

    def __init__(self, line_no, message):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


class GraphTooLarge(HemiconesError, ValueError):
    """Catalog identification is limited to small graphs."""
