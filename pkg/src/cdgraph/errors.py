"""Exception types shared across the package.

Each maps to one diagnostic category at the CLI/service boundary, so callers
can distinguish bad input from bad reference data from blown resource caps.
"""


class CDGraphError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(CDGraphError, ValueError):
    """Invalid graph construction or graph operation argument."""


class GraphFormatError(GraphError):
    """Unparseable textual graph input (edge list or graph6)."""


class SizeCapError(CDGraphError):
    """A size cap (canonicalization or enumeration) was exceeded."""


class KBError(CDGraphError):
    """Knowledge-base file cannot be loaded or is internally inconsistent."""


class KBInconsistencyError(KBError):
    """A knowledge-base fact contradicts a rule-derived verdict."""


class FactorizationBudgetError(CDGraphError):
    """Integer factorization abandoned: composite cofactor beyond budget."""


class PreconditionError(CDGraphError, ValueError):
    """A documented arithmetic precondition does not hold for the inputs."""
