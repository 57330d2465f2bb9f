"""Exception hierarchy shared by every layer of the package."""


class ArtinianCodesError(Exception):
    """Base class for all errors raised by this package."""


class RingConstructionError(ArtinianCodesError, ValueError):
    """A ring descriptor violates its invariants (non-prime p, reducible modulus, ...)."""


class NotFrobenius(ArtinianCodesError):
    """The operation needs a Frobenius ring (type 1)."""


class ChainBackendUnsupported(ArtinianCodesError):
    """The operation is only available for residue-field algebras."""


class ZeroCode(ArtinianCodesError):
    """The operation is undefined for the zero code."""


class BudgetExceeded(ArtinianCodesError):
    """An enumeration would exceed its configured budget."""


class EnumerationBudgetExceeded(BudgetExceeded):
    pass


class SubsetBudgetExceeded(BudgetExceeded):
    pass


class ResidualLaurentTerms(ArtinianCodesError):
    """The MacWilliams transform left negative powers of z behind."""


class InternalConsistencyError(ArtinianCodesError, ArithmeticError):
    """A computed quantity contradicts a structural guarantee."""


class ParseError(ArtinianCodesError, ValueError):
    def __init__(self, reason: str, line: int, column: int):
        self.reason = reason
        self.line = line
        self.column = column
        super().__init__(f"{line}:{column}: {reason}")
