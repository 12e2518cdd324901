"""Walkthrough: squeezing transformations for the two-mode EPR cluster.

The EPR graph (one unit edge) has a self-inverse adjacency matrix, so the
structure factor is simply -A and every quantity can be checked by hand.
"""

import numpy as np

from clustersqueeze import (
    covariance_closed_form,
    covariance_oracle,
    gauge_faithful,
    gauge_identity,
    interaction_from_cluster,
    squeezer_spectrum,
)

np.set_printoptions(precision=6, suppress=True)

A = np.array([[0.0, 1.0], [1.0, 0.0]])
theta = np.zeros(2)
z = 1.0

print("EPR cluster, z =", z)
print("adjacency:\n", A)

# --- trivial gauge: two equal squeezers -----------------------------------
zm = interaction_from_cluster(A, theta, gauge_identity(2))
print("\ninteraction matrix (trivial gauge):\n", zm.Z.real)

report = covariance_closed_form(A, theta, gauge_identity(2), z)
print("nullifier covariance:\n", report.C)
print("expected 2 e^{-2z} on the diagonal:", 2 * np.exp(-2 * z))

for mode in squeezer_spectrum(zm, z):
    print(
        f"squeezer: strength {mode.strength:.3f} -> {mode.decibels:.3f} dB"
    )

# --- faithful gauge: covariance proportional to the identity ---------------
P = gauge_faithful(A, theta, z)
zm_faithful = interaction_from_cluster(A, theta, P)
report_faithful = covariance_closed_form(A, theta, P, z)
print("\nfaithful-gauge covariance:\n", report_faithful.C)
print("expected e^{-2z} identity:", np.exp(-2 * z))

# --- cross-check against the brute-force path ------------------------------
brute = covariance_oracle(A, theta, zm_faithful, z)
gap = np.max(np.abs(brute.C - report_faithful.C))
print(f"\nclosed form vs matrix-exponential oracle: max gap {gap:.2e}")
