#!/usr/bin/env python3
"""Stand-in external counter: reads a DIMACS file, counts models by brute
force, prints the count.  Used to exercise the external-method plumbing
without a real solver installed; independent of the package by design."""

import sys


def main() -> int:
    if len(sys.argv) != 2:
        print("usage: external_stub.py FILE.cnf", file=sys.stderr)
        return 2
    num_vars = None
    clauses = []
    with open(sys.argv[1]) as handle:
        for line in handle:
            tokens = line.split()
            if not tokens or tokens[0] == "c":
                continue
            if tokens[0] == "p":
                num_vars = int(tokens[2])
                continue
            lits = [int(t) for t in tokens]
            if lits[-1] != 0:
                print("clause line not 0-terminated", file=sys.stderr)
                return 1
            clauses.append(lits[:-1])
    if num_vars is None:
        print("missing p cnf header", file=sys.stderr)
        return 1
    if num_vars > 22:
        print(f"too many variables for brute force: {num_vars}", file=sys.stderr)
        return 1
    count = 0
    for word in range(1 << num_vars):
        if all(any((lit > 0) == bool((word >> (abs(lit) - 1)) & 1) for lit in clause)
               for clause in clauses):
            count += 1
    print(count)
    return 0


if __name__ == "__main__":
    sys.exit(main())
