"""Bump each designated law constant by one and show that the check then fails."""

import sys

from mocktheta.verify.suites import mutation_selftest


def main():
    outcomes = mutation_selftest()
    for o in outcomes:
        verdict = "killed" if o.killed else "SURVIVED"
        print(f"{o.mutant.id:10s} {o.mutant.const:10s} baseline {o.baseline.max_residual:.1e}  "
              f"mutant {o.mutated.max_residual:.1e}  {verdict}")
    survivors = sum(not o.killed for o in outcomes)
    print(f"{len(outcomes) - survivors}/{len(outcomes)} mutants killed")
    sys.exit(1 if survivors else 0)


if __name__ == "__main__":
    main()
