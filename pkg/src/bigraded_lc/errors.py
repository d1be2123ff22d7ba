"""Exception types shared across the library."""


class BigradedError(Exception):
    """Base class for all library errors."""


class ParseError(BigradedError):
    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ZeroPolynomial(BigradedError):
    pass


class NotBihomogeneous(BigradedError):
    pass


class ZeroModule(BigradedError):
    """Raised by operations that are undefined on the zero module."""


class NotMultigraded(BigradedError):
    """An entry mixes monomials, so fine multidegrees cannot be tracked."""


class CompositionNonzero(BigradedError):
    pass


class NotMonomial(BigradedError):
    pass


class NotFound(BigradedError):
    """An annihilation-exponent search exhausted its cap."""

    def __init__(self, cap):
        super().__init__(f"no annihilating power found up to cap {cap}")
        self.cap = cap


class NotStabilized(BigradedError):
    """A limit dimension did not settle within the allowed parameter range."""

    def __init__(self, i, j, t_max):
        super().__init__(
            f"dimension at bidegree ({i},{j}) not stabilized by t={t_max}"
        )
        self.i = i
        self.j = j
        self.t_max = t_max


class HypothesisViolated(BigradedError):
    """Input does not satisfy the hypotheses of the requested verification."""
