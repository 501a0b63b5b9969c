"""
Measuring one ring of GHZ in two bases
======================================

The same GHZ state gives opposite pictures depending on the basis used to
measure qubit A.  In Z the survivors are a product state; in X they are a
Bell pair.  Reduced density operators do not depend on any basis choice,
which is why the classifier works with them instead.
"""

import numpy as np

from qlink import (
    basis_dependence_demo,
    concurrence,
    format_state,
    ghz,
    measure,
    reduced_from_pure,
    single_qubit_projectors,
)

report = basis_dependence_demo(ghz(3), "A")
for basis, branches in report.items():
    print(f"basis {basis}")
    for br in branches:
        print(f"  outcome {br.label}: p = {br.probability:.3f}")
        print(f"    post-state  {format_state(br.post_state, cutoff=1e-15)}")
        print(f"    B,C separable: {br.remaining_separable}   C(B,C) = {br.remaining_concurrence:.3f}")

# any other direction on the Bloch sphere interpolates between the two
for angle in np.linspace(0, np.pi / 2, 5):
    u = np.array([np.cos(angle / 2), np.sin(angle / 2)])
    out = measure(ghz(3), single_qubit_projectors(3, "A", u))
    c = concurrence(reduced_from_pure(out[0].post_state, "BC")).concurrence
    print(f"tilt {angle:.3f} rad: p = {out[0].probability:.3f}, C(B,C) after outcome u = {c:.3f}")
