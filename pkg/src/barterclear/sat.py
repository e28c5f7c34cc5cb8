"""CNF instances and a brute-force SAT / MaxSAT oracle.

The oracle is deliberately the dumbest possible implementation: plain
exhaustive enumeration over all 2^n assignments, no pruning, no clause
learning.  It exists as independent ground truth for the graph reductions,
so it must be simple enough to trust by inspection.
"""

from __future__ import annotations

from dataclasses import dataclass

MAX_ORACLE_VARS = 24


class EmptyClause(ValueError):
    """A clause with no literals (unsatisfiable by definition, rejected here)."""


class LiteralOutOfRange(ValueError):
    """A literal references a variable outside 1..num_vars (or is zero)."""


class TooManyVariables(ValueError):
    """Instance too large for exhaustive enumeration."""


@dataclass(frozen=True)
class CnfInstance:
    """A CNF formula over variables 1..num_vars.

    Literals are DIMACS-style signed ints: +i for x_i, -i for its negation.
    Duplicate literals within a clause are collapsed (first occurrence kept);
    empty clauses are rejected.
    """

    num_vars: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.num_vars < 0:
            raise ValueError("num_vars must be non-negative")
        normalized = []
        for idx, clause in enumerate(self.clauses):
            if len(clause) == 0:
                raise EmptyClause(f"clause {idx + 1} is empty")
            seen: list[int] = []
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise LiteralOutOfRange(
                        f"literal {lit} in clause {idx + 1} (variables: 1..{self.num_vars})"
                    )
                if lit not in seen:
                    seen.append(lit)
            normalized.append(tuple(seen))
        object.__setattr__(self, "clauses", tuple(normalized))

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)


def clause_satisfied(clause: tuple[int, ...], assignment: dict[int, bool]) -> bool:
    return any(assignment[abs(lit)] == (lit > 0) for lit in clause)


def satisfied_count(cnf: CnfInstance, assignment: dict[int, bool]) -> int:
    """Number of clauses the (total) assignment satisfies."""
    return sum(1 for clause in cnf.clauses if clause_satisfied(clause, assignment))


def _assignments(num_vars: int):
    # Ascending bitmask order == lexicographic order of (v1, .., vn) tuples
    # with False < True, when bit (n - i) encodes variable i.
    for mask in range(1 << num_vars):
        yield {
            i: bool(mask >> (num_vars - i) & 1) for i in range(1, num_vars + 1)
        }


def max_satisfiable(cnf: CnfInstance) -> tuple[int, dict[int, bool]]:
    """Maximum number of simultaneously satisfiable clauses, with a witness.

    Exhaustive over all 2^num_vars assignments; ties are broken by the
    lexicographically smallest assignment (False < True, ascending variable
    index).  Raises TooManyVariables beyond 24 variables.
    """
    if cnf.num_vars > MAX_ORACLE_VARS:
        raise TooManyVariables(f"{cnf.num_vars} variables (limit {MAX_ORACLE_VARS})")
    best = -1
    witness: dict[int, bool] = {}
    for assignment in _assignments(cnf.num_vars):
        count = satisfied_count(cnf, assignment)
        if count > best:
            best = count
            witness = assignment
            if best == cnf.num_clauses:
                break  # cannot improve, and later assignments are lexicographically larger
    return best, witness


def is_satisfiable(cnf: CnfInstance) -> bool:
    """Exhaustive satisfiability check (limit: 24 variables)."""
    count, _ = max_satisfiable(cnf)
    return count == cnf.num_clauses
