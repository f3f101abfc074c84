"""Enumerated counts next to their closed forms, including the mismatching printed variants.

Run with ``python demos/counts_report.py``.
"""

from signedalg.ortho_factory import count_di_exhaustive, p0_counts
from signedalg.replacement_engine import (ac_block_count, ac_block_count_printed, km_count,
                                          km_count_printed)
from signedalg.signed_group import ac_count, negative_counts, pure_ac_generator


def main() -> None:
    print("n  negatives(+)  negatives(-)")
    for n in range(1, 9):
        plus = negative_counts(pure_ac_generator(n, 1)).enumerated
        minus = negative_counts(pure_ac_generator(n, -1)).enumerated
        print(f"{n:<2} {plus:<13} {minus}")

    print("\nodd AC blocks: enumerated / corrected / printed")
    for n in (3, 5, 7):
        print(n, ac_count(pure_ac_generator(n)), ac_block_count(n), ac_block_count_printed(n))

    print("\nK-and-M counts (n, j): corrected / printed")
    for n, j in [(2, 1), (3, 1), (4, 1), (4, 2)]:
        print((n, j), km_count(n, j), km_count_printed(n, j))

    print("\ninvertible 0-1 matrices mod 2")
    for n in (2, 3, 4):
        rep = count_di_exhaustive(n)
        print(n, rep.exact, "printed:", rep.formula)

    print("\np0:", [p0_counts(n).exact for n in range(11)])


if __name__ == "__main__":
    main()
