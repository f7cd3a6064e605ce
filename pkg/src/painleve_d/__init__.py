"""Coupled sixth-Painleve systems of type D: exact symmetry and Lax checks."""

__version__ = "0.1.0"

from .painleve import PhaseState, SystemParams  # noqa: F401
