"""Shared builders for the test modules."""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import pytest

from npsgames.core import InstanceBundle
from npsgames.io import instance_from_doc
from npsgames.problems.payloads import CnfFormula
from npsgames.problems.registry import get_problem


def make(problem: str, **payload) -> InstanceBundle:
    """Instance from JSON-style payload fields, through the public codec."""
    return instance_from_doc({"problem": problem, "payload": payload})


def cnf(problem: str, num_vars: int, *clauses: tuple[int, ...]) -> InstanceBundle:
    return InstanceBundle.of(get_problem(problem), CnfFormula(num_vars, tuple(tuple(c) for c in clauses)))


def graph(n: int, edges, directed: bool = False) -> dict:
    return {"n": n, "directed": directed, "edges": [list(e) for e in edges]}


K3 = [(0, 1), (0, 2), (1, 2)]
K4 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


@pytest.fixture
def one_clause():
    """The single-clause formula (~l1 | ~l2 | l3) over the literal universe."""
    return cnf("3sat-l", 3, (-1, -2, 3))
