"""
GHZ versus W: cut one ring, look at the other two
=================================================

Tracing out a qubit plays the role of cutting a ring.  GHZ leaves the
remaining pair separable, W leaves it entangled.
"""

import numpy as np

from qlink import concurrence, ghz, ppt_separable, reduced_from_pure, spin_flip, w3

np.set_printoptions(precision=4, suppress=True)

# GHZ: (|000> + |111>)/sqrt(2), cut ring A
rho = reduced_from_pure(ghz(3), "BC")
print("GHZ, rho_BC =")
print(rho.matrix.real)

# a classical mixture of |00> and |11>: no entanglement left
rep = concurrence(rho)
print("lambdas", np.round(rep.lambdas, 12), "-> C =", rep.concurrence)
print("PPT min eigenvalue", ppt_separable(rho).min_eigenvalue)

# W: (|001> + |010> + |100>)/sqrt(3), same cut
rho = reduced_from_pure(w3(), "BC")
print("\nW, rho_BC =")
print(rho.matrix.real)

# the spin-flipped product has a single nonzero eigenvalue 4/9
print("rho_tilde rho =")
print((spin_flip(rho) @ rho.matrix).real)
rep = concurrence(rho)
print("lambdas", np.round(rep.lambdas, 12), "-> C =", rep.concurrence)  # 2/3
print("PPT min eigenvalue", ppt_separable(rho).min_eigenvalue)  # (1 - sqrt 5)/6

# by symmetry every cut of either state looks the same
for pair in ("AB", "AC", "BC"):
    c_ghz = concurrence(reduced_from_pure(ghz(3), pair)).concurrence
    c_w = concurrence(reduced_from_pure(w3(), pair)).concurrence
    print(f"C_{pair}:  GHZ {c_ghz:.3g}   W {c_w:.3g}")
