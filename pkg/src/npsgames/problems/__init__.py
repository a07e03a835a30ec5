"""Problem catalog: payload codecs, verifiers and registered specs."""

from .registry import PROBLEMS, get_problem

__all__ = ["PROBLEMS", "get_problem"]
