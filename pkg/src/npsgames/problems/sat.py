"""Satisfiability in the variable-based and literal-based models."""

from __future__ import annotations

from typing import Any, Iterator, Mapping

import numpy as np

from .. import bits
from ..core import ProblemSpec
from ..errors import CapExceeded, DecodeError
from .payloads import CnfFormula, decode_cnf, encode_cnf


def verify_sat_v(phi: CnfFormula, mask: int) -> bool:
    """``mask`` holds the variables set to true."""
    return all(mask & pos or neg & ~mask for pos, neg in phi.var_masks)


def verify_sat_v_batch(phi: CnfFormula, masks: np.ndarray) -> np.ndarray:
    ok = np.ones(masks.shape, dtype=bool)
    inv = ~masks
    for pos, neg in phi.var_masks:
        ok &= ((masks & np.uint64(pos)) != 0) | ((inv & np.uint64(neg)) != 0)
    return ok


def verify_sat_l(phi: CnfFormula, mask: int) -> bool:
    """One literal of each pair, and every clause meets the chosen literals."""
    n = phi.num_vars
    full = (1 << n) - 1
    if (mask & full) ^ (mask >> n & full) != full:
        return False
    return all(mask & m for m in phi.literal_masks)


def verify_sat_l_batch(phi: CnfFormula, masks: np.ndarray) -> np.ndarray:
    n = phi.num_vars
    full = np.uint64((1 << n) - 1)
    ok = ((masks & full) ^ ((masks >> np.uint64(n)) & full)) == full
    for m in phi.literal_masks:
        ok &= (masks & np.uint64(m)) != 0
    return ok


def assignment_to_literals(assignment: int, num_vars: int) -> int:
    full = (1 << num_vars) - 1
    return assignment | (~assignment & full) << num_vars


def satisfying_assignments(phi: CnfFormula, cap: int) -> Iterator[int]:
    if phi.num_vars > cap:
        raise CapExceeded(f"{phi.num_vars} variables exceed cap {cap}")
    for chunk in bits.power_set_chunks(phi.num_vars):
        yield from (int(a) for a in chunk[verify_sat_v_batch(phi, chunk)])


def _literal_solutions(phi: CnfFormula, cap: int) -> Iterator[int]:
    for a in satisfying_assignments(phi, cap):
        yield assignment_to_literals(a, phi.num_vars)


def variable_labels(phi: CnfFormula) -> list[str]:
    return [f"x{i}" for i in range(1, phi.num_vars + 1)]


def literal_labels(phi: CnfFormula) -> list[str]:
    n = phi.num_vars
    return [f"l{i}" for i in range(1, n + 1)] + [f"~l{i}" for i in range(1, n + 1)]


def _decode_3cnf(doc: Mapping[str, Any]) -> CnfFormula:
    phi = decode_cnf(doc)
    if phi.max_clause_len() > 3:
        raise DecodeError("3-SAT clauses have at most three literals")
    return phi


SAT_V = ProblemSpec(
    "sat-v", variable_labels, verify_sat_v, decode_cnf, encode_cnf,
    verify_batch=verify_sat_v_batch,
    summary="CNF satisfiability; universe = variables, solution = true variables",
)
SAT_L = ProblemSpec(
    "sat-l", literal_labels, verify_sat_l, decode_cnf, encode_cnf,
    literal_based=True, verify_batch=verify_sat_l_batch, enumerate=_literal_solutions,
    summary="CNF satisfiability; universe = literals, solution = true literals",
)
THREE_SAT_V = ProblemSpec(
    "3sat-v", variable_labels, verify_sat_v, _decode_3cnf, encode_cnf,
    verify_batch=verify_sat_v_batch,
    summary="3-CNF satisfiability over variables",
)
THREE_SAT_L = ProblemSpec(
    "3sat-l", literal_labels, verify_sat_l, _decode_3cnf, encode_cnf,
    literal_based=True, verify_batch=verify_sat_l_batch, enumerate=_literal_solutions,
    summary="3-CNF satisfiability over literals",
)

# Verifier aliases under the catalog's naming.
verify_3sat_v = verify_sat_v
verify_3sat_l = verify_sat_l
