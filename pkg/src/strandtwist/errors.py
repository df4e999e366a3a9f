"""
Error Hierarchy
===============

Exceptions raised by the knot-diagram engine.

This module defines:
- KnotEngineError: base class for everything the engine raises
- Input errors: MalformedCode, Disconnected, OrientationInconsistent,
  Unrealizable, InvalidSite, ZeroTwist, CoherentBand, DegenerateSlope
- Resource and algebra errors: ResourceExceeded, DimensionMismatch,
  NotSymplectic
- Harness errors: FixtureMissing, NotUnknot
"""


class KnotEngineError(Exception):
    """Base class for all engine errors."""


class MalformedCode(KnotEngineError, ValueError):
    """A PD or DT code violates arity, label or duplication rules."""


class Disconnected(KnotEngineError, ValueError):
    """The diagram has more than one component."""


class OrientationInconsistent(KnotEngineError, ValueError):
    """Arc labels do not increase along a consistent orientation."""


class Unrealizable(KnotEngineError, ValueError):
    """A DT sequence admits no planar embedding."""


class InvalidSite(KnotEngineError, ValueError):
    """A twist site is not a pair of antiparallel arcs on a common face."""


class ZeroTwist(KnotEngineError, ValueError):
    """A twist of order zero was requested."""


class CoherentBand(KnotEngineError, ValueError):
    """Band surgery would produce a two-component link."""


class DegenerateSlope(KnotEngineError, ValueError):
    """A slope is zero, non-primitive, or degenerate for the requested use."""


class ResourceExceeded(KnotEngineError):
    """A computation would exceed a configured limit."""


class DimensionMismatch(KnotEngineError, ValueError):
    """Matrices or vectors of incompatible size."""


class NotSymplectic(KnotEngineError, ValueError):
    """A matrix does not preserve the standard symplectic form."""


class FixtureMissing(KnotEngineError):
    """A builtin fixture could not be constructed."""


class NotUnknot(KnotEngineError, ValueError):
    """A diagram that must be a certified unknot is not."""
