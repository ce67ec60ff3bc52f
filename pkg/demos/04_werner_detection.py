"""Entanglement detection in the Werner family with a positive-but-not-CP map.

At gamma1 = gamma2 = 1/2 the family map negates the Bloch vector. Extending
it over the second qubit of a Werner state gives minimum eigenvalue
(1 - 3p)/4, negative exactly for p > 1/3 - the entire entangled range of the
family, found here by bisection rather than assumed.
"""

import numpy as np

import nmwit

point = nmwit.MapFamilyPoint(0.5, 0.5)
print("map point gamma1 = gamma2 = 1/2 (Bloch-vector negation)")
print("positive:", nmwit.is_positive(point), " completely positive:", nmwit.is_cp(point))

print(f"\n{'p':>5} {'lambda_min':>12} {'(1-3p)/4':>12}  detected")
for p in (0.0, 0.2, 1 / 3, 0.4, 0.6, 0.8, 1.0):
    detected, lam = nmwit.detect_entanglement(nmwit.werner(p).matrix, point)
    print(f"{p:5.3f} {lam:12.6f} {(1 - 3 * p) / 4:12.6f}  {detected}")

thr = nmwit.werner_threshold(point)
print("\nbisection threshold:", thr, " (separability boundary is exactly 1/3)")

# soundness: the certificate never fires on separable inputs
rng = np.random.default_rng(8)
worst = 1.0
for _ in range(200):
    rho_a = nmwit.projector(rng.normal(size=2) + 1j * rng.normal(size=2))
    rho_b = nmwit.projector(rng.normal(size=2) + 1j * rng.normal(size=2))
    prod = np.kron(rho_a / np.trace(rho_a), rho_b / np.trace(rho_b))
    _, lam = nmwit.detect_entanglement(prod, point)
    worst = min(worst, lam)
print("smallest eigenvalue seen over 200 random product states:", f"{worst:.2e}")
