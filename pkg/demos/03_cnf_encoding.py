"""From family counting to #SAT.

One Boolean predicate per vector of {0,1}^n: an assignment of the
predicates picks a family, and the clauses force it to be meet-closed
(plus the variant's required endpoints).  Counting the models of this
CNF counts the theories.  The instance stays small: fewer than 4^n
ternary clauses.
"""

from hornenum import Variant, count_models, emit_dimacs, encode


def main():
    n = 2
    for variant in Variant:
        instance = encode(n, variant)
        print(f"variant {variant.value}: {instance.predicate_count} predicates, "
              f"{len(instance.unit_clauses)} unit + "
              f"{len(instance.ternary_clauses)} ternary clauses, "
              f"{count_models(instance)} models")

    print()
    print(f"DIMACS for (n={n}, h1); predicate k+1 stands for the vector")
    print("with binary value k, so 4 is the all-ones vector 11:")
    print(emit_dimacs(encode(n, Variant.H1)), end="")

    print()
    print("clause growth stays under 4^n:")
    for n in range(7):
        instance = encode(n, Variant.H01)
        print(f"  n={n}: {len(instance.ternary_clauses):5d} ternary "
              f"clauses vs 4^n = {4 ** n}")


if __name__ == "__main__":
    main()
