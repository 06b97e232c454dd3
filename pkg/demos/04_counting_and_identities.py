"""The four counting problems and the identities relating them.

h counts meet-closed families containing both lattice endpoints, h0 and
h1 require one endpoint each, h01 requires neither.  The columns are
tied together by doubling and by binomial sums, which gives every value
a second, independent derivation.
"""

from hornenum import (Variant, asymptotic_report, binomial, count_variant)

N_MAX = 5


def main():
    counts = {}
    print("counts by plain dpll:")
    print("  n" + "".join(f"{v.value:>12}" for v in Variant))
    for n in range(N_MAX + 1):
        row = []
        for variant in Variant:
            report = count_variant(n, variant, "dpll")
            counts[(n, variant)] = report.count
            row.append(report.count)
        print(f"{n:3d}" + "".join(f"{c:12d}" for c in row))

    print()
    print("identities, each side computed separately:")
    for n in range(1, N_MAX + 1):
        assert counts[(n, Variant.H0)] == 2 * counts[(n, Variant.H)]
    print(f"  h0(n) = 2 h(n) for 1 <= n <= {N_MAX}")
    for n in range(N_MAX + 1):
        assert counts[(n, Variant.H01)] == 2 * counts[(n, Variant.H1)]
    print(f"  h01(n) = 2 h1(n) for 0 <= n <= {N_MAX}")
    for n in range(N_MAX + 1):
        total = sum(binomial(n, k) * counts[(k, Variant.H)]
                    for k in range(n + 1))
        assert counts[(n, Variant.H1)] == total
    print(f"  h1(n) = sum C(n,k) h(k) for 0 <= n <= {N_MAX}")

    print()
    print("growth against the central binomial coefficient:")
    rows = asymptotic_report({n: counts[(n, Variant.H)]
                              for n in range(N_MAX + 1)})
    for row in rows:
        print(f"  n={row['n']}: log2 h = {row['log2_count']:8.3f}, "
              f"C(n, n//2) = {row['central_binomial']:3d}, "
              f"ratio = {row['ratio']:.4f}")


if __name__ == "__main__":
    main()
