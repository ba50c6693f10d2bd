"""Functions into roots of unity take the value 1 at consecutive points.

A completely multiplicative function whose values are k-th roots of unity
colors the integers with at most k colors.  Inside the restricted Schur
range for k colors there is a monochromatic x + y = z with x | y, and
dividing by x lands the function on 1 at both a = y/x and a + 1.  So the
first such a is bounded independently of the function.
"""

import random

from schurdiv import (
    UnityFunction,
    evaluate,
    min_consecutive_ones,
    schur_number,
    verify_consecutive_ones_bound,
)


def main():
    liouville = UnityFunction(2, {}, default_exponent=1)
    signs = "".join("+" if evaluate(liouville, n) == 0 else "-" for n in range(1, 21))
    print(f"Liouville-like signs at 1..20:  {signs}")
    print(f"First ++ at a = {min_consecutive_ones(liouville, 100)}")

    bound = schur_number(2, restricted=True).S
    print(f"\nRestricted Schur number for 2 colors: {bound}")
    record = verify_consecutive_ones_bound(liouville, bound)
    print(f"Pipeline witness: triple ({record.x}, {record.y}, {record.z}) "
          f"-> a = {record.a} <= {record.bound}")

    print("\nEvery sign pattern on the primes obeys the same bound:")
    rng = random.Random(2024)
    worst = 0
    for trial in range(200):
        f = UnityFunction(
            2,
            {p: rng.randrange(2) for p in (2, 3, 5, 7, 11, 13)},
            rng.randrange(2),
        )
        a = min_consecutive_ones(f, bound)
        worst = max(worst, a)
    print(f"  200 random functions: first ++ always found, latest at a = {worst}")

    print("\nHigher-order roots need wider bounds (more colors), e.g. k = 3:")
    f3 = UnityFunction(3, {2: 1, 3: 2}, default_exponent=0)
    print(f"  exponents at 1..12: {[evaluate(f3, n) for n in range(1, 13)]}")
    print(f"  first a with f(a) = f(a+1) = 1: {min_consecutive_ones(f3, 1000)}")


if __name__ == "__main__":
    main()
