"""Exhaustive census over F2 at n = 2: counts by two independent scan paths,
refinements, and the conjugation orbit decomposition."""

from collections import Counter

from deq.classify import (endo_from_digits, enumerate_solutions,
                          operator_count, orbit_reduce)
from deq.fields import PrimeField


def main():
    report = enumerate_solutions(2, 2)
    print("candidates: %d" % report.total)
    print("solutions by the coordinate equations: %d" % report.count)
    print("solutions by operator composition:     %d" % operator_count(2, 2))
    print("bijective: %d, symmetric: %d, qybe: %d"
          % (report.bijective, report.symmetric, report.qybe))

    orbits = orbit_reduce(report.solutions, 2, 2)
    sizes = Counter(size for _, size in orbits)
    print()
    print("conjugation orbits under GL_2(F_2): %d" % len(orbits))
    for size in sorted(sizes):
        print("  %d orbit(s) of size %d" % (sizes[size], size))
    print("  total %d" % sum(size for _, size in orbits))

    print()
    print("representatives of the three largest orbits:")
    shown = 0
    k = PrimeField(2)
    for rep, size in sorted(orbits, key=lambda item: -item[1]):
        R = endo_from_digits(2, 2, rep)
        print("orbit size %d:" % size)
        for row in R.matrix().rows:
            print("  " + " ".join(k.show(v) for v in row))
        shown += 1
        if shown == 3:
            break


if __name__ == "__main__":
    main()
