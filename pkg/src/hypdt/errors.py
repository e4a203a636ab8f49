"""Exception hierarchy for the hypdt package."""


class HypdtError(Exception):
    """Base class for all package-specific errors."""


class PrecisionExhausted(HypdtError):
    """A predicate sign could not be certified within the precision cap."""


class CocircularError(HypdtError):
    """Four lifted points are exactly cocircular; the triangulation is ambiguous."""


class WalkStuck(HypdtError):
    """A point location walk hit a degenerate on-edge configuration or a step cap."""


class InvalidityError(HypdtError):
    """A point set violates the circumdisk diameter condition needed for the
    triangulation data structure to be well defined."""


class RemovalBlocked(HypdtError):
    """Removing a vertex would create an inadmissible face; the operation was
    rolled back."""
