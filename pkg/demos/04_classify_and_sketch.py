"""
Classifying states as links of three rings
==========================================

``classify`` combines two tests: which single qubits factor out of the
state, and which pairs stay entangled after the third is traced out.
"""

import math

from qlink import bell, chain, classify, generalized_ghz_check, ghz, link_sketch, parse_state, tensor, w3
from qlink.qstate import basis_state, ket0, permute_qubits

states = {
    "GHZ": ghz(3),
    "W": w3(),
    "chain a=0.6": chain(0.6, 0.8),
    "|000>": basis_state("000"),
    "Bell(AB) x |0>": tensor(bell(), ket0()),
    "Bell(AC) x |0>": permute_qubits(tensor(bell(), ket0()), [0, 2, 1]),
}
for name, s in states.items():
    report = classify(s)
    pairs = ", ".join(f"{p} {c:.3f}" for p, c in report.pairwise_concurrence.items())
    print(f"{name:<16} {str(report.link):<20} pairs: {pairs}")

# the full report, with its sketch
report = classify(parse_state("(|001> + |010> + |100>)/sqrt(3)"))
print()
print(report.to_json())
print(link_sketch(report.link))

# a chain with a tiny ab sits near the threshold and says so
a = 1e-10
report = classify(chain(a, math.sqrt(1 - a * a)))
print(report.link)
for w in report.warnings:
    print("warning:", w)

# generalized GHZ: no ring factors out, yet every pair is unentangled
print({n: generalized_ghz_check(n) for n in (3, 4, 5, 8)})
