class SmallNetsError(Exception):
    pass


class DimensionError(SmallNetsError, ValueError):
    pass


class DegenerateInputError(SmallNetsError, ValueError):
    """All points collinear, or a triangle was requested on collinear vertices."""


class CocircularError(DegenerateInputError):
    def __init__(self, quad):
        super().__init__(f"cocircular quadruple {tuple(quad)}")
        self.quad = tuple(quad)


class FamilyMismatchError(SmallNetsError, ValueError):
    pass


class BudgetExceededError(SmallNetsError):
    def __init__(self, needed, budget):
        super().__init__(
            f"needs ~{needed:.3g} predicate evaluations, budget is {budget:.3g}; "
            "use a smaller instance or raise the budget"
        )
        self.needed = needed
        self.budget = budget
