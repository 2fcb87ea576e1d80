#!/usr/bin/env python3
"""Solve a DIMACS CNF file with PySAT and print competition-format output.

Usage: pysat_solve.py FILE.cnf [--solver NAME]

Suitable as a `--solver-cmd` template: "python3 tools/pysat_solve.py {cnf}".
"""

import argparse
import sys

from pysat.formula import CNF
from pysat.solvers import Solver


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("cnf")
    parser.add_argument("--solver", default="cadical153")
    args = parser.parse_args()

    formula = CNF(from_file=args.cnf)
    with Solver(name=args.solver, bootstrap_with=formula.clauses) as solver:
        sat = solver.solve()
        if not sat:
            print("s UNSATISFIABLE")
            return 20
        model = solver.get_model() or []
        # Variables the solver never saw are reported false.
        values = {abs(lit): lit for lit in model}
        lits = [values.get(v, -v) for v in range(1, formula.nv + 1)]
        print("s SATISFIABLE")
        for start in range(0, len(lits), 20):
            print("v " + " ".join(str(x) for x in lits[start:start + 20]))
        print("v 0")
        return 10


if __name__ == "__main__":
    sys.exit(main())
