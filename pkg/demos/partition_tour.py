"""Split a random basic generator into commuting blocks and classify an AC generator.

Run with ``python demos/partition_tour.py [n] [seed]``.
"""

import sys

import numpy as np

from signedalg.replacement_engine import (canonical_km, classify_generator, parity_toggle,
                                          partition_generator, signature_classes)
from signedalg.signed_group import ac_count, random_basic_generator, same_group


def main(n: int = 6, seed: int = 1) -> None:
    E = random_basic_generator(n, np.random.default_rng(seed))
    print("generator:")
    print(E.to_text())
    print("AC-count:", ac_count(E))

    deco = partition_generator(E)
    print("block sizes (F0 first):", [len(b) for b in deco.blocks])
    print("same group:", same_group(E, deco.replaced), "problems:", deco.problems())

    km = canonical_km(E)
    print(f"K-and-M form: |K| = {km.K.size}, |M| = {km.M.size}")
    if km.M.size:
        flipped = parity_toggle(km)
        print(f"after the parity toggle: |K| = {flipped.K.size}, |M| = {flipped.M.size}")
    if km.K.size >= 2:
        print("signature type of K:", classify_generator(km.K).label)
    print(f"signature classes of n_plus for n = {n}:",
          [sorted(c) for c in signature_classes(n)])


if __name__ == "__main__":
    main(*(int(a) for a in sys.argv[1:3]))
