class CapacityError(ValueError):
    """Raised when a request would enumerate more than the configured cap allows."""

    def __init__(self, n, cap, what="enumeration"):
        self.n = n
        self.cap = cap
        super().__init__(f"{what} refused: n={n} exceeds cap {cap}")
