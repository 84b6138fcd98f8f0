class SizeError(ValueError):
    """Raised when an exhaustive computation would exceed its budget."""


class RankError(ValueError):
    """Raised when a set of field elements is unexpectedly F_q-dependent."""


class NotMRDError(ValueError):
    """Raised when twisted Gabidulin parameters violate the norm condition."""
