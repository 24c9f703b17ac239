"""Exception types shared across the package."""

from __future__ import annotations


class KmcdsError(Exception):
    """Base class for package-specific failures."""


class InfeasibleError(KmcdsError):
    """The requested structure does not exist in the given graph."""


class InvariantViolationError(KmcdsError):
    """A guaranteed internal property failed; signals an upstream bug."""


class ParseError(KmcdsError):
    """An input file could not be parsed; message carries location info."""
