# Tropical eigenpairs by hand and by machine
#
# In max-plus arithmetic a matrix acts on a vector by (A x)_i = max_j (a_ij + x_j).
# An eigenpair solves A x = lam + x.  The eigenvalue is the largest mean weight
# of a directed cycle in the graph of A.  Everything below is exact.

from fractions import Fraction

from tropeig import TropMatrix, critical_data, eigenspace, eigenvalue, eigenvector
from tropeig.core import kleene_star, trop_apply
from tropeig.spectral import eigenvalue_oracle, normalize


def show(x):
    """Print-friendly form of a vector or matrix of Fractions."""
    if isinstance(x, (list, tuple)):
        return "(" + ", ".join(show(v) for v in x) + ")"
    return str(x)


# A 3x3 matrix where the cycle 1 -> 2 -> 3 -> 1 dominates everything else.

A = TropMatrix([[-10, 6, -10], [-10, -10, 3], [0, -10, -10]])
print("A =", A)

# Karp's algorithm gives the max cycle mean.  For small n we can also list every
# simple cycle and take the best mean directly.

lam = eigenvalue(A)
print("eigenvalue (Karp)        :", lam)
print("eigenvalue (all cycles)  :", eigenvalue_oracle(A))

# Subtract lam from every entry.  Then no cycle is positive, and the Kleene star
# B* records the heaviest path between each pair of vertices.

B = normalize(A)
print("B* =", kleene_star(B))

# The critical graph is made of the zero-weight cycles of B.

cd = critical_data(A)
print("critical cycles:", cd.critical_cycles, "connected:", cd.is_connected)

# With a connected critical graph the eigenvector is unique up to adding a
# constant.  We report it with the last coordinate set to zero.

ep = eigenvector(A)
print("eigenvector:", show(ep.x))
print("A x        :", show(trop_apply(A, ep.x)))
print("lam + x    :", show([lam + v for v in ep.x]))

# When the critical graph falls apart, the eigenvectors form a tropical
# polytope instead.  This matrix has two critical components: the 2-cycle on
# {1, 2} and the loop at 3.

D = TropMatrix([[0, 0, -1], [0, 0, -1], [-1, -1, 0]])
P = eigenspace(D)
print("eigenpolytope vertices:", show(P.vertices))
half = Fraction(1, 2)
print("contains (1/2, 1/2, 0)?", P.contains((half, half, 0)))
print("contains (0, 1, 0)?    ", P.contains((0, 1, 0)))
