"""Column-store graph library: primitive-array adjacency storage and classical algorithms."""

from .core import *  # noqa: F401,F403
from .errors import *  # noqa: F401,F403
from . import algorithms, collections, generators, io, transforms, traversal  # noqa: F401

__version__ = "0.1.0"
