#!/usr/bin/env python3
"""Combinatorial types of eigenvectors, and where the cones fail to fit together.

A generic matrix has a single critical cycle, and every other vertex reaches it
along a unique heaviest path.  Recording "next vertex on that path" gives a
connected function phi of [n] to itself.  All matrices of one type phi form an
open polyhedral cone, and on that cone the eigenpair is linear in A.
"""

from tropeig import (
    ConnectedFunction,
    classify,
    cone_inequalities,
    count_connected,
    fan_failure_witness,
    realize,
    sigma_fvector,
)
from tropeig.cones import lambda_phi, x_phi


def show(x):
    """Print-friendly form of a vector or matrix of Fractions."""
    if isinstance(x, (list, tuple)):
        return "(" + ", ".join(show(v) for v in x) + ")"
    return str(x)


# How many types are there?  For n = 3 there are 17.
for n in range(1, 7):
    print(f"n={n}: {count_connected(n)} connected functions")

# Type {12, 23, 31}, the 3-cycle.  Its cone is cut out by six inequalities,
# one per pair (i, j) that is not an edge of phi.
phi = ConnectedFunction.from_one_based([2, 3, 1])
print("\ncone of", phi)
for q in cone_inequalities(phi):
    i, j = q.non_edge
    rhs = " + ".join(f"({c})*a{a + 1}{b + 1}" for (a, b), c in sorted(q.rhs().items()))
    print(f"  a{i + 1}{j + 1} <= {rhs}")

# Build a matrix of that type and check that classification finds it again.
A = realize(phi)
res = classify(A)
print("\nrealized matrix:", show(A.to_lists()))
print("classified as  :", res.phi, res.outcome)
print("lambda_phi(A)  :", lambda_phi(A, phi), " x_phi(A):", show(x_phi(A, phi)))

# The closures of the cones form the simplicial complex Sigma_n.  Its f-vector:
print("\nf-vector for n=3:", sigma_fvector(3))

# The cones cover matrix space but do not form a fan.  The matrix below lies in
# the closure of several cones.  Two of them touch it in faces that are
# incomparable, and the eigenvector jumps to either end of a segment depending
# on which way the matrix is perturbed.
w = fan_failure_witness()
print("\nwitness matrix:", w.matrix)
print("cones containing it:", len(w.cones))
print("eigenpolytope vertices:", show(w.vertices))
for p in w.perturbations:
    e = p.entry
    print(f"  a{e[0] + 1}{e[1] + 1} <- {p.eps}: type {p.phi}, eigenvector {show(p.eigenvector)}")
print("verified:", w.verified)
