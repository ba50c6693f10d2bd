"""Exact Schur-style numbers, classical and divisibility-restricted.

W(l) is the largest n whose integers can be l-colored with no
monochromatic x + y = z; the restricted variant additionally demands
x | y, which deletes most constraints and pushes the numbers up.  The
search is exhaustive, so "exact" means both a witness coloring for W and
a refutation at W + 1.
"""

import time

from schurdiv import forbidden_triples, schur_number, validate_coloring


def main():
    print("Classical (every x + y = z forbidden monochromatically):")
    for l in (1, 2, 3):
        start = time.perf_counter()
        result = schur_number(l)
        elapsed = time.perf_counter() - start
        print(f"  l={l}: W={result.W} S={result.S} [{result.status}] "
              f"{result.stats.nodes} nodes, {elapsed:.3f}s")

    print("\nRestricted (only triples with x | y forbidden):")
    for l in (1, 2):
        result = schur_number(l, restricted=True)
        print(f"  l={l}: W={result.W} S={result.S} [{result.status}] "
              f"witness {result.witness_coloring}")
        hits = validate_coloring(result.witness_coloring, restricted=True)
        print(f"       witness revalidates: {not hits}")

    print("\nWhy restricted numbers are larger: constraints up to n=12")
    unres = forbidden_triples(12, restricted=False)
    res = forbidden_triples(12, restricted=True)
    print(f"  unrestricted triples: {len(unres)}")
    print(f"  restricted triples:   {len(res)}")
    print(f"  e.g. restricted ending at 12: "
          f"{[(t.x, t.y, t.z) for t in res if t.z == 12]}")

    print("\nThree colors restricted, under a small budget (stays a lower bound):")
    result = schur_number(3, restricted=True, max_seconds=2.0)
    print(f"  l=3: W>={result.W} [{result.status}] {result.stats.nodes} nodes")


if __name__ == "__main__":
    main()
