"""Quasimorphisms on free groups and graph products, autocommutator lengths."""

from ._autqm import *  # noqa: F401,F403
from ._autqm import Automorphism, Quasimorphism, Error, CutoffExceeded  # noqa: F401
