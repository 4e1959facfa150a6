"""Exception types shared across the package."""


class HaarcpError(Exception):
    """Base class for all package-specific errors."""


class ClosureExceedsCap(HaarcpError):
    """Generator closure (or a product construction) passed the order cap."""


class EmptyGeneratorList(HaarcpError):
    """A group was requested from an empty generator list."""


class IndexOutOfRange(HaarcpError):
    """An element index is not in 0..order-1."""


class NotASubgroup(HaarcpError):
    """A member set is not closed under multiplication and inverses."""


class NotNormal(HaarcpError):
    """A quotient was requested by a non-normal subgroup."""


class SearchCapExceeded(HaarcpError):
    """An isomorphism or isoclinism search target exceeds the search cap."""


class CenterMismatch(HaarcpError):
    """A commutation matrix was requested over a subgroup that is not the center."""


class CenterNotContained(HaarcpError):
    """A coset-reduction subgroup does not contain the center."""


class NotAHomomorphism(HaarcpError):
    """Generator matrices do not extend to a homomorphism on the acting group."""


class NotUnimodular(HaarcpError):
    """An action matrix is not invertible over the integers."""


class RankMismatch(HaarcpError):
    """An action matrix has the wrong dimensions for the torus rank."""


class ZeroSamples(HaarcpError):
    """A Monte Carlo estimate was requested with no samples."""


class DomainMismatch(HaarcpError):
    """An isoclinism witness has maps with the wrong domains or codomains."""


class WitnessInvalid(HaarcpError):
    """An isoclinism witness failed verification."""


class ParseError(HaarcpError):
    """A group or model spec file is malformed."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
