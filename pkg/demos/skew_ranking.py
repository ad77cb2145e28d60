# Ranking from pairwise comparisons
#
# Entry a_ij says how strongly item i beats item j, with a_ji = -a_ij.  Sorting
# the tropical eigenvector ranks the items.  For skew matrices only types whose
# cycle has length at least three ("kites") show up generically.

from tropeig import SkewMatrix, count_kites, enumerate_kites, rank, realize_kite
from tropeig.skewrank import classify_skew, skew_cone_structure, skew_eigenvalue_sign


def show(x):
    """Print-friendly form of a vector or matrix of Fractions."""
    if isinstance(x, (list, tuple)):
        return "(" + ", ".join(show(v) for v in x) + ")"
    return str(x)


# Three teams.  1 beats 2 by 6, 3 beats 1 by 3, 2 beats 3 by 3.
A = SkewMatrix.from_upper(3, {(0, 1): 6, (0, 2): -3, (1, 2): 3})
print(A)

lam, trivial = skew_eigenvalue_sign(A)
print("eigenvalue", lam, "(zero only for consistent comparisons:", trivial, ")")

r = rank(A)
print("eigenvector", show(r.eigenvector))
print("ranking    ", [i + 1 for i in r.order])

# Perfectly consistent data, a_ij = u_i - u_j, has eigenvalue 0.
u = [3, 1, 2]
C = SkewMatrix([[u[i] - u[j] for j in range(3)] for i in range(3)])
print("\nconsistent data: eigenvalue", show(skew_eigenvalue_sign(C)))

# Kites by size
print("\nkites:", [count_kites(n) for n in range(3, 9)])

# Each kite type is realised by a skew matrix, built one vertex at a time.
for phi in enumerate_kites(4)[:3]:
    K = realize_kite(phi)
    print(phi, "->", classify_skew(K).phi, show(K.to_lists()))

# Modulo lineality, a kite cone is a cone over a cube.  Facets come in
# opposite pairs, n(n-3) facets in all.
for n in (4, 5):
    s = skew_cone_structure(enumerate_kites(n)[0])
    print(f"n={n}: {len(s.facet_directions)} facets, {s.pair_count} pairs, rank {s.independent_rank}")
