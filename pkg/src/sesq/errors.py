"""Exception types shared across the package."""


class SesqError(Exception):
    """Base class for all package errors."""


# -- field construction / arithmetic ----------------------------------------

class NotPrime(SesqError):
    pass


class ReducibleModulus(SesqError):
    pass


class BadDescriptor(SesqError):
    pass


class NoEmbedding(SesqError):
    pass


class DivisionByZero(SesqError):
    pass


class ContextMismatch(SesqError):
    pass


# -- algebras ----------------------------------------------------------------

class NotAssociative(SesqError):
    pass


class BadUnit(SesqError):
    pass


class NotInvolution(SesqError):
    pass


class NotAGroup(SesqError):
    pass


class BadDimension(SesqError):
    pass


# -- modules -----------------------------------------------------------------

class NotAModule(SesqError):
    pass


class AlgebraMismatch(SesqError):
    pass


# -- forms -------------------------------------------------------------------

class NotSesquilinear(SesqError):
    pass


class NotInvariant(SesqError):
    pass


class NotAGroupRing(SesqError):
    pass


class NoUnimodularFound(SesqError):
    pass


class NotReflexive(SesqError):
    pass


# -- double arrows / hermitian pairs ----------------------------------------

class NotAMorphism(SesqError):
    pass


class NotHermitian(SesqError):
    pass


class NotAnIsometry(SesqError):
    pass


class NotInvertible(SesqError):
    pass


class NotUnimodular(SesqError):
    pass


class NotIsomorphicToQ0(SesqError):
    pass


class RadicalNotStable(SesqError):
    pass


# -- enumeration / deciders ---------------------------------------------------

class EnumTooLarge(SesqError):
    pass


class InfiniteField(SesqError):
    pass


class CharacteristicTwo(SesqError):
    """Raised by suites whose backing theorem assumes odd characteristic."""


# -- I/O ----------------------------------------------------------------------

class BadUsage(SesqError):
    pass


class ParseError(SesqError):
    pass


class ValidationFailed(SesqError):
    pass
