"""Gauss-Laguerre approximation of the resolvent (I + h L^alpha)^{-1} b."""

from ._fraclag import *  # noqa: F401,F403
from ._fraclag import Params, Plan  # noqa: F401

__all__ = [name for name in dir() if not name.startswith("_")]
