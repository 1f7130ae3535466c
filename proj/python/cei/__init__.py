"""Complementary edge ideals of graphs."""

from ._cei import *  # noqa: F401,F403
from ._cei import Graph, MonomialIdeal, InvalidInput, ResourceGuard  # noqa: F401
