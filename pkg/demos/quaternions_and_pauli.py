"""Quaternion and Pauli elements as signed permutation matrices.

Run with ``python demos/quaternions_and_pauli.py``.
"""

import numpy as np

from signedalg.matrix_rep import format_matrix, pauli_triple, quaternion_units, represent
from signedalg.signed_group import mul, signature


def main() -> None:
    q = quaternion_units()
    for name, e in q.items():
        print(f"{name} = {e.to_text()}   square sign {signature(e):+d}")
        print(format_matrix(represent(e)))
    ijk = mul(mul(q["i"], q["j"]), q["k"])
    print("ijk =", ijk.to_text())

    p = pauli_triple()
    iota = p["iota"]
    for name in ("sigma1", "sigma2", "sigma3"):
        s = p[name]
        commutes = np.array_equal(represent(iota) @ represent(s), represent(s) @ represent(iota))
        print(f"{name}: square {signature(s):+d}, commutes with iota: {commutes}")


if __name__ == "__main__":
    main()
