"""Exception types shared across the package."""


class FFSphereError(Exception):
    """Base class for all package-specific errors."""


class BudgetError(FFSphereError):
    """Raised when an enumeration would exceed the configured iteration budget."""

    def __init__(self, required: int, budget: int):
        self.required = required
        self.budget = budget
        super().__init__(
            f"enumeration needs {required} iterations, budget is {budget}; "
            f"raise the budget to at least {required} to proceed"
        )


class PointCollisionError(FFSphereError):
    """Two distinct solution vectors normalized to the same sphere point."""

    def __init__(self, collisions):
        self.collisions = collisions
        pretty = "; ".join(f"{a} ~ {b}" for a, b in collisions[:5])
        more = "" if len(collisions) <= 5 else f" (+{len(collisions) - 5} more)"
        super().__init__(f"colliding integer vectors: {pretty}{more}")


class ZeroVectorError(FFSphereError):
    """A solution vector mapped to the all-zero integer vector (cannot be normalized)."""


class DegeneratePairError(FFSphereError):
    """Two points are numerically coincident; pair energies are meaningless."""
