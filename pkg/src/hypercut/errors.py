"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or out-of-contract input (bad file, bad partition, bad range)."""


class CapacityError(RuntimeError):
    """Instance too large for an exhaustive routine's hard guard."""


class NumericError(ArithmeticError):
    """A numeric routine failed to reach its accuracy target."""
