"""Executable solution-embedding reductions and the games lifted from them."""

__version__ = "0.1.0"
