"""Exception hierarchy shared by all modules."""


class WeilDescentError(Exception):
    """Base class for all errors raised by this package."""


class InputError(WeilDescentError):
    """Malformed user input (expressions, problem files, documents)."""


class PolyParseError(InputError):
    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownVariable(InputError):
    def __init__(self, name, position=None):
        where = f" (at position {position})" if position is not None else ""
        super().__init__(f"unknown variable {name!r}{where}")
        self.name = name
        self.position = position


class SingularBasis(WeilDescentError):
    """The supplied elements are not a basis of L over Q."""


class ZeroDenominator(WeilDescentError):
    """A rational-map denominator vanished (as a polynomial, or on the variety)."""


class ResourceLimit(WeilDescentError):
    """A configured computation budget was exceeded; the input may be intractable."""


class VerificationError(WeilDescentError):
    """A named certificate check failed; carries the offending witness."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class CocycleViolation(VerificationError):
    def __init__(self, sigma1, sigma2, component, witness=None):
        super().__init__(
            f"cocycle identity fails for pair ({sigma1}, {sigma2}) "
            f"in component {component}",
            witness,
        )
        self.sigma1 = sigma1
        self.sigma2 = sigma2
        self.component = component


class NotIntoConjugate(VerificationError):
    def __init__(self, sigma, generator, witness=None):
        super().__init__(
            f"map for {sigma} does not send the variety into its conjugate "
            f"(generator {generator})",
            witness,
        )
        self.sigma = sigma
        self.generator = generator


class MorphismIncompatible(VerificationError):
    def __init__(self, sigma, witness=None):
        super().__init__(f"morphism compatibility fails for {sigma}", witness)
        self.sigma = sigma


class MissingInverse(WeilDescentError):
    """An explicit inverse map is required but was not recovered."""


class ConjugationNotClosed(VerificationError):
    def __init__(self, sigma, witness=None):
        super().__init__(
            f"transported automorphism set is not closed under {sigma}", witness
        )
        self.sigma = sigma


class NotKRational(VerificationError):
    """A map claimed to be defined over the fixed field is not."""
