"""
The chain state a|000> + b|+1+>
===============================

Qubit B sits in the middle.  Cutting it frees A and C; cutting an end ring
leaves the other two linked with concurrence |ab|.
"""

import math

import numpy as np

from qlink import chain, concurrence, parse_state, reduced_from_pure, spin_flip

np.set_printoptions(precision=4, suppress=True)

a, b = 0.6, 0.8
s = parse_state("0.6|000> + 0.8|+1+>")
assert np.allclose(s.amplitudes, chain(a, b).amplitudes)

# cut B: a^2 |00><00| + b^2 |++><++|, a separable mixture
rho_ac = reduced_from_pure(s, "AC")
print("rho_AC =")
print(rho_ac.matrix.real)
print("C(rho_AC) =", concurrence(rho_ac).concurrence)

# cut C: the A,B pair stays entangled
rho_ab = reduced_from_pure(s, "AB")
print("\nrho_AB =")
print(rho_ab.matrix.real)
print("rho_tilde rho =")
print((spin_flip(rho_ab) @ rho_ab.matrix).real)
rep = concurrence(rho_ab)
print("lambdas", np.round(rep.lambdas, 12))
print("closed form", (math.sqrt(2) + 1) / 2 * a * b, (math.sqrt(2) - 1) / 2 * a * b)
print("C(rho_AB) =", rep.concurrence, "  |ab| =", a * b)

# across the whole family the linked pairs follow |ab|
print("\n   a      C_AB     C_BC     C_AC")
for a in np.linspace(0.1, 0.9, 9):
    s = chain(a, math.sqrt(1 - a * a))
    cs = [concurrence(reduced_from_pure(s, p)).concurrence for p in ("AB", "BC", "AC")]
    print(f"  {a:.1f}  " + "  ".join(f"{c:.5f}" for c in cs))
