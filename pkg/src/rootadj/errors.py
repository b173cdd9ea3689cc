"""Exception hierarchy.

Every error carries its class name as a stable identifier; the command line
reports that name and exits with status 2.
"""


class RootAdjError(Exception):
    """Base class for all errors raised by this package."""

    @property
    def name(self) -> str:
        return type(self).__name__


# presentations
class DuplicateName(RootAdjError):
    pass


class OddDegreeNonExterior(RootAdjError):
    pass


class EvenDegreeExterior(RootAdjError):
    pass


class MissingCap(RootAdjError):
    pass


class BadRootRelation(RootAdjError):
    pass


class BadPresentation(RootAdjError):
    """Malformed presentation document (unknown kind, bad prime, ...)."""


class InfiniteSlice(RootAdjError):
    pass


class WindowMismatch(RootAdjError):
    pass


class DegreeMismatch(RootAdjError):
    pass


class UnknownGenerator(RootAdjError):
    pass


# regrading
class IncompatibleModulus(RootAdjError):
    pass


class NonZeroModulus(RootAdjError):
    pass


class ZeroDilation(RootAdjError):
    pass


class NotConcentrated(RootAdjError):
    pass


# root adjunction
class HypothesisFailed(RootAdjError):
    pass


class UnsupportedDivisor(RootAdjError):
    pass


class UnknownPreset(RootAdjError):
    pass


# hochschild
class UnsupportedPresentation(RootAdjError):
    pass


class WildPrime(RootAdjError):
    pass


# splitting / tables
class InputNotWeightZero(RootAdjError):
    pass


class SmallPrime(RootAdjError):
    pass


class BadWeight(RootAdjError):
    pass
