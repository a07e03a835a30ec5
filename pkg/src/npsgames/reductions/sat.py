"""Reductions between the satisfiability variants."""

from __future__ import annotations

from ..core import SEReduction
from ..problems.payloads import CnfFormula
from ..problems.sat import SAT_L, SAT_V, THREE_SAT_L


def _sat_l_to_sat_v(phi: CnfFormula) -> tuple[CnfFormula, list[int]]:
    """Variables x^t_1..x^t_n then x^f_1..x^f_n; a literal becomes its positive twin."""
    n = phi.num_vars
    clauses = [tuple(lit if lit > 0 else n - lit for lit in c) for c in phi.clauses]
    for i in range(1, n + 1):
        clauses.append((i, n + i))
        clauses.append((-i, -(n + i)))
    return CnfFormula(2 * n, tuple(clauses)), list(range(2 * n))


def _sat_v_to_sat_l(phi: CnfFormula) -> tuple[CnfFormula, list[int]]:
    return phi, list(range(phi.num_vars))


def split_clauses(phi: CnfFormula) -> CnfFormula:
    """Chain long clauses through fresh variables; repeat literals in short ones."""
    fresh = phi.num_vars
    out: list[tuple[int, ...]] = []
    for clause in phi.clauses:
        lits = list(clause)
        if len(lits) <= 3:
            out.append(tuple((lits * 3)[:3]))
            continue
        fresh += 1
        out.append((lits[0], lits[1], fresh))
        for lit in lits[2:-2]:
            out.append((-fresh, lit, fresh + 1))
            fresh += 1
        out.append((-fresh, lits[-2], lits[-1]))
    return CnfFormula(fresh, tuple(out))


def _sat_l_to_3sat_l(phi: CnfFormula) -> tuple[CnfFormula, list[int]]:
    psi = split_clauses(phi)
    n, wide = phi.num_vars, psi.num_vars
    return psi, list(range(n)) + [wide + i for i in range(n)]


SAT_L_TO_SAT_V = SEReduction("sat-l>sat-v", SAT_L, SAT_V, _sat_l_to_sat_v)
SAT_V_TO_SAT_L = SEReduction("sat-v>sat-l", SAT_V, SAT_L, _sat_v_to_sat_l)
SAT_L_TO_3SAT_L = SEReduction("sat-l>3sat-l", SAT_L, THREE_SAT_L, _sat_l_to_3sat_l)
