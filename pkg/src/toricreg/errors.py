"""Exception types shared across the package.

Builtin exceptions are reused where they fit (ZeroDivisionError for
inversion of zero, OverflowError for the field table cap, IndexError
for out-of-range indices, ValueError for malformed arguments).  The
classes below cover the domain-specific failure modes.
"""


class NotPrimePowerError(ValueError):
    """The requested field cardinality is not a prime power."""


class InvalidSpecError(ValueError):
    """A graph constructor was given degenerate parameters."""


class EdgeExistsError(ValueError):
    """Vertex identification requested on an adjacent pair."""


class NotHomogeneousError(ValueError):
    """A binomial membership test needs equal total degrees."""


class NotSameParityEarError(ValueError):
    """The two edges are not in same-parity positions on a common ear."""


class NotApplicableError(ValueError):
    """A closed form was asked for outside its domain of validity."""


class InvalidWitnessError(ValueError):
    """A bound witness fails its structural precondition."""


class ParseError(ValueError):
    """A graph spec string does not match the grammar."""


class TooLargeError(RuntimeError):
    """The computation exceeds the configured work cap."""


class ConsistencyError(RuntimeError):
    """Two internal routes disagree; a bug or a counterexample surfaced."""


class CeilingExceededError(ConsistencyError):
    """A regularity search ran past its theoretical ceiling."""
