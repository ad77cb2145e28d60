"""Eigenpair cones: classification, facet inequalities, realizers.

For a connected function ``phi`` the cone of matrices whose eigenpair is
given by the linear maps ``(lambda_phi, x_phi)`` is cut out by one
homogeneous inequality per non-edge of ``phi``.  Every form vanishes on the
lineality space spanned by the all-ones matrix and the row-minus-column
indicators.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .combinat import ConnectedFunction, cycle_of, enumerate_connected
from .core import TropMatrix, TropVector, normalize_last, rational_rank, to_rational, tp_equal
from .spectral import _critical, critical_data, eigenspace, eigenvector


@dataclass(frozen=True)
class LinearForm:
    """Homogeneous form ``sum coeffs[i][j] * a_ij``; an inequality means form(A) <= 0."""

    n: int
    coeffs: tuple
    constant: Fraction = Fraction(0)

    @classmethod
    def from_terms(cls, n: int, terms: dict) -> "LinearForm":
        rows = tuple(
            tuple(Fraction(terms.get((i, j), 0)) for j in range(n)) for i in range(n)
        )
        return cls(n, rows)

    def __call__(self, A: TropMatrix) -> Fraction:
        return sum(
            (c * a for cr, ar in zip(self.coeffs, A.rows) for c, a in zip(cr, ar) if c),
            Fraction(0),
        )

    def terms(self) -> dict:
        return {
            (i, j): c
            for i, row in enumerate(self.coeffs)
            for j, c in enumerate(row)
            if c
        }

    def flat(self) -> tuple:
        return tuple(c for row in self.coeffs for c in row)


@dataclass(frozen=True)
class Inequality:
    """``a_ij <= rhs(A)`` for the non-edge ``(i, j)``; ``form = a_ij - rhs``."""

    non_edge: tuple
    form: LinearForm

    def rhs(self) -> dict:
        terms = {k: -v for k, v in self.form.terms().items()}
        terms[self.non_edge] = terms.get(self.non_edge, 0) + 1
        return {k: v for k, v in terms.items() if v}


@dataclass(frozen=True)
class ConeDescription:
    phi: ConnectedFunction
    inequalities: tuple

    def __iter__(self):
        return iter(self.inequalities)

    def __len__(self):
        return len(self.inequalities)


@dataclass(frozen=True)
class ClassifyResult:
    """Outcome of :func:`classify`.

    Generic matrices carry ``phi`` and the ``anchor`` map sending every
    vertex off the cycle to the cycle vertex its tree hangs from.
    Degenerate ones report tied rows of C and/or disconnected critical
    cycles instead.
    """

    lam: Fraction
    phi: Optional[ConnectedFunction] = None
    anchor: dict = field(default_factory=dict)
    eigenvector: Optional[TropVector] = None
    tied_rows: dict = field(default_factory=dict)
    disconnected: bool = False

    @property
    def is_generic(self) -> bool:
        return self.phi is not None

    @property
    def outcome(self) -> str:
        return "generic" if self.is_generic else "degenerate"


def _roots(phi: ConnectedFunction) -> list:
    """``root[i]``: first vertex of the cycle reached from ``i`` along phi."""
    on_cycle = set(cycle_of(phi))
    roots = []
    for i in range(phi.n):
        v = i
        while v not in on_cycle:
            v = phi.phi[v]
        roots.append(v)
    return roots


def _path(phi: ConnectedFunction, start: int, end: int) -> list:
    """Edges of the phi-path from ``start`` to ``end`` (empty if equal)."""
    edges = []
    v = start
    while v != end:
        edges.append((v, phi.phi[v]))
        v = phi.phi[v]
        if len(edges) > phi.n:
            raise ValueError(f"{end} is not reachable from {start}")
    return edges


def _lambda_terms(phi: ConnectedFunction) -> dict:
    cyc = cycle_of(phi)
    w = Fraction(1, len(cyc))
    return {(v, phi.phi[v]): w for v in cyc}


def _b_path_terms(phi: ConnectedFunction, edges, sign, acc: dict) -> None:
    # B(path) = sum (e_p - lambda) over the path
    lam = _lambda_terms(phi)
    for e in edges:
        acc[e] = acc.get(e, 0) + sign
    for e, w in lam.items():
        acc[e] = acc.get(e, 0) - sign * len(edges) * w


def lambda_phi(A: TropMatrix, phi: ConnectedFunction) -> Fraction:
    """Mean weight of the cycle of ``phi`` in ``A``."""
    cyc = cycle_of(phi)
    return sum((A[v, phi.phi[v]] for v in cyc), Fraction(0)) / len(cyc)


def x_phi(A: TropMatrix, phi: ConnectedFunction) -> TropVector:
    """The linear eigenvector map of the cone of ``phi``, applied to ``A``."""
    lam = lambda_phi(A, phi)
    ell = cycle_of(phi)[0]
    x = [sum((A[e] - lam for e in _path(phi, i, ell)), Fraction(0)) for i in range(phi.n)]
    return normalize_last(x)


def c_matrix(A: TropMatrix, phi: ConnectedFunction) -> TropMatrix:
    """``C = (a_ij - x_i + x_j - lambda)`` with ``(x, lambda)`` from phi's linear maps."""
    lam, x = lambda_phi(A, phi), x_phi(A, phi)
    n = A.n
    return TropMatrix([[A[i, j] - x[i] + x[j] - lam for j in range(n)] for i in range(n)])


def c_matrix_interior(A: TropMatrix, phi: ConnectedFunction) -> bool:
    """Interior test via C: zero on the edges of phi, negative elsewhere."""
    C = c_matrix(A, phi)
    for i in range(A.n):
        for j in range(A.n):
            if j == phi.phi[i]:
                if C[i, j] != 0:
                    return False
            elif C[i, j] >= 0:
                return False
    return True


def cone_inequalities(phi: ConnectedFunction) -> ConeDescription:
    """One inequality per non-edge (i, j):

        b_ij <= B(path i -> root(j)) - B(path j -> root(j)),   B = A - lambda_phi(A).
    """
    n = phi.n
    roots = _roots(phi)
    lam = _lambda_terms(phi)
    ineqs = []
    for i, j in phi.non_edges():
        acc = {(i, j): Fraction(1)}
        for e, w in lam.items():
            acc[e] = acc.get(e, 0) - w
        _b_path_terms(phi, _path(phi, i, roots[j]), -1, acc)
        _b_path_terms(phi, _path(phi, j, roots[j]), +1, acc)
        ineqs.append(Inequality((i, j), LinearForm.from_terms(n, acc)))
    return ConeDescription(phi, tuple(ineqs))


def _check_dims(A: TropMatrix, phi: ConnectedFunction) -> None:
    if A.n != phi.n:
        raise ValueError(f"matrix is {A.n}x{A.n} but phi acts on {phi.n} points")


def member_interior(A: TropMatrix, phi: ConnectedFunction, cone=None) -> bool:
    _check_dims(A, phi)
    if cone is None:
        cone = cone_inequalities(phi)
    return all(q.form(A) < 0 for q in cone)


def member_closure(A: TropMatrix, phi: ConnectedFunction, cone=None) -> bool:
    _check_dims(A, phi)
    if cone is None:
        cone = cone_inequalities(phi)
    return all(q.form(A) <= 0 for q in cone)


def face_support(A: TropMatrix, phi: ConnectedFunction, cone=None) -> frozenset:
    """Non-edges whose inequality is strict at ``A``.

    For ``A`` in the closed cone these index the smallest face (a simplex
    of the complex of connected-function complements) containing ``A``.
    """
    if cone is None:
        cone = cone_inequalities(phi)
    return frozenset(q.non_edge for q in cone if q.form(A) < 0)


def classify(A: TropMatrix) -> ClassifyResult:
    """Combinatorial type of ``A``: its critical graph if ``A`` is generic."""
    cd = critical_data(A)
    lam, _, Bs = _critical(A)
    n = A.n
    ell = min(cd.critical_vertices)
    x = [Bs[i, ell] for i in range(n)]
    x[ell] = Fraction(0)
    x = normalize_last(x)
    ties, best = {}, []
    for i in range(n):
        c = [A[i, j] - x[i] + x[j] - lam for j in range(n)]
        top = max(c)
        arg = tuple(j for j in range(n) if c[j] == top)
        if len(arg) > 1:
            ties[i] = arg
        best.append(arg[0])
    vec = x if cd.is_connected else None
    if ties or not cd.is_connected:
        return ClassifyResult(lam, eigenvector=vec, tied_rows=ties, disconnected=not cd.is_connected)
    phi = ConnectedFunction(tuple(best))
    on_cycle = set(cycle_of(phi))
    roots = _roots(phi)
    anchor = {i: roots[i] for i in range(n) if i not in on_cycle}
    return ClassifyResult(lam, phi, anchor, vec)


def lineality_basis(n: int) -> tuple:
    """All-ones matrix followed by ``R_i`` = row-i indicator minus column-i indicator."""
    basis = [TropMatrix.constant(n, 1)]
    for k in range(n):
        basis.append(
            TropMatrix([[(i == k) - (j == k) for j in range(n)] for i in range(n)])
        )
    return tuple(basis)


def in_lineality(A: TropMatrix) -> bool:
    basis = [M.flat() for M in lineality_basis(A.n)]
    return rational_rank(basis + [A.flat()]) == rational_rank(basis)


def _depths(phi: ConnectedFunction) -> list:
    on_cycle = set(cycle_of(phi))
    depth = []
    for i in range(phi.n):
        d, v = 0, i
        while v not in on_cycle:
            d, v = d + 1, phi.phi[v]
        depth.append(d)
    return depth


def realize(phi: ConnectedFunction) -> TropMatrix:
    """A matrix in the interior of the cone of ``phi``.

    Edges of phi get weight 0.  The cycle is built first with every other
    entry -1; tree vertices are then attached layer by layer (by distance
    to the cycle), and every new entry off phi in layer d gets
    ``-(3**d) * (1 + n * max|entries so far|)``.
    """
    n = phi.n
    depth = _depths(phi)
    a = {}
    present = list(cycle_of(phi))
    for u in present:
        for v in present:
            a[u, v] = 0 if phi.phi[u] == v else -1
    for d in range(1, max(depth) + 1):
        big = 3**d * (1 + n * max(abs(v) for v in a.values()))
        for v in (i for i in range(n) if depth[i] == d):
            present.append(v)
            for u in present:
                a[v, u] = -big
                a[u, v] = -big
            a[v, phi.phi[v]] = 0
    return TropMatrix.from_entries(n, a)


@dataclass(frozen=True)
class Perturbation:
    entry: tuple
    eps: Fraction
    phi: Optional[ConnectedFunction]
    eigenvector: Optional[TropVector]
    expected: TropVector
    limit: Optional[TropVector]


@dataclass(frozen=True)
class FanWitness:
    matrix: TropMatrix
    cones: tuple
    supports: dict
    incomparable: tuple
    vertices: tuple
    perturbations: tuple

    @property
    def verified(self) -> bool:
        if len(self.vertices) != 2 or not self.incomparable:
            return False
        reached = set()
        for p in self.perturbations:
            if p.phi is None or p.eigenvector is None:
                return False
            if not tp_equal(p.eigenvector, p.expected):
                return False
            reached.add(normalize_last(p.limit))
        return reached == set(self.vertices)


WITNESS_MATRIX = ((0, 0, -1), (0, 0, -1), (-1, -1, 0))

# perturbed entry -> exact eigenvector of the perturbed matrix as a function of eps
_WITNESS_FORMULAS = {
    (0, 1): lambda e: (e / 2, Fraction(0), Fraction(-1)),
    (2, 2): lambda e: (-1 - e, -1 - e, Fraction(0)),
}


def fan_failure_witness(epsilons=(1, Fraction(1, 2), Fraction(1, 4))) -> FanWitness:
    """A 3x3 matrix where two eigenpair cones meet outside a common face.

    It sits in the relative interior of two different simplices of the
    complex, its eigenspace is a tropical segment, and each endpoint is the
    limit of the unique eigenvectors along a perturbation into a cone.
    """
    A = TropMatrix(WITNESS_MATRIX)
    cones, supports = [], {}
    for phi in enumerate_connected(3):
        cone = cone_inequalities(phi)
        if member_closure(A, phi, cone):
            cones.append(phi)
            supports[phi] = face_support(A, phi, cone)
    incomparable = next(
        (
            (p, q)
            for k, p in enumerate(cones)
            for q in cones[k + 1 :]
            if not supports[p] <= supports[q] and not supports[q] <= supports[p]
        ),
        (),
    )
    rows = []
    for entry, formula in _WITNESS_FORMULAS.items():
        for eps in epsilons:
            eps = to_rational(eps)
            Ae = A.replace(*entry, eps)
            res = classify(Ae)
            vec = eigenvector(Ae).x if res.is_generic else None
            # x_phi is linear, so its value at A is the eps -> 0 limit
            limit = x_phi(A, res.phi) if res.is_generic else None
            rows.append(Perturbation(entry, eps, res.phi, vec, formula(eps), limit))
    return FanWitness(A, tuple(cones), supports, incomparable, eigenspace(A).vertices, tuple(rows))

