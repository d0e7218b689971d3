"""Exception types raised by conebarrel.

Law violations found while sampling are never raised; they are collected in
:class:`conebarrel.cone_axioms.LawReport`. Exceptions signal bad input or a
witness that failed its own verification.
"""


class ConeBarrelError(Exception):
    """Base class of every error raised by this package."""


class ParseError(ConeBarrelError, ValueError):
    """Text form of a scalar, element, functional or barrel is malformed."""


class DomainError(ConeBarrelError, ValueError):
    """An operation was called outside its precondition."""


class ConfigError(ConeBarrelError, ValueError):
    """Invalid sampling configuration or unknown suite name."""


class NotANonMemberError(DomainError):
    """A separation witness was requested for a pair that lies in the barrel."""


class UncoveredCaseError(DomainError):
    """A non-member pair falls outside every separation case handled."""


class WitnessError(ConeBarrelError):
    """A constructed witness did not pass its own verification."""
