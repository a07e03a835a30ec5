"""DIMACS CNF reading and writing."""

from __future__ import annotations

from ..errors import DecodeError
from .payloads import CnfFormula


def parse_dimacs(text: str) -> CnfFormula:
    """Parse ``p cnf`` text.  Clauses may span lines; each ends at a 0."""
    header = None
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise DecodeError(f"bad problem line: {line!r}")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise DecodeError(f"bad problem line: {line!r}") from None
            continue
        if header is None:
            raise DecodeError("clause before the problem line")
        try:
            nums = [int(tok) for tok in line.split()]
        except ValueError:
            raise DecodeError(f"bad clause line: {line!r}") from None
        for lit in nums:
            if lit == 0:
                if not current:
                    raise DecodeError("empty clause")
                clauses.append(tuple(current))
                current = []
            else:
                current.append(lit)
    if header is None:
        raise DecodeError("missing 'p cnf' header")
    if current:
        raise DecodeError("last clause is not terminated by 0")
    num_vars, num_clauses = header
    if num_clauses != len(clauses):
        raise DecodeError(f"header announces {num_clauses} clauses, found {len(clauses)}")
    return CnfFormula(num_vars, tuple(clauses))


def write_dimacs(phi: CnfFormula) -> str:
    lines = [f"p cnf {phi.num_vars} {len(phi.clauses)}"]
    lines += [" ".join(str(lit) for lit in clause) + " 0" for clause in phi.clauses]
    return "\n".join(lines) + "\n"
