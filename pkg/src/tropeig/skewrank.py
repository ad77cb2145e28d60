"""Skew-symmetric matrices: kite cones and tropical ranking."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .combinat import ConnectedFunction, cycle_of, is_kite
from .cones import ClassifyResult, _lambda_terms, classify, cone_inequalities, in_lineality
from .core import TropMatrix, TropVector, rational_rank
from .errors import DimensionTooSmall, NonUniqueEigenvector, NotAKite, NotSkew
from .spectral import eigenvalue


class SkewMatrix(TropMatrix):
    """A matrix with ``a_ij + a_ji = 0`` for all i, j."""

    __slots__ = ()

    def __init__(self, rows):
        super().__init__(rows)
        for i in range(self.n):
            for j in range(i, self.n):
                if self[i, j] + self[j, i] != 0:
                    raise NotSkew(i, j)

    @classmethod
    def from_upper(cls, n: int, upper: dict) -> "SkewMatrix":
        """Build from ``{(i, j): a_ij}`` with ``i < j``; missing pairs are 0."""
        rows = [[Fraction(0)] * n for _ in range(n)]
        for (i, j), v in upper.items():
            rows[i][j] = Fraction(v)
            rows[j][i] = -Fraction(v)
        return cls(rows)


def validate_skew(A: TropMatrix) -> SkewMatrix:
    if isinstance(A, SkewMatrix):
        return A
    return SkewMatrix(A.rows)


def skew_eigenvalue_sign(A: SkewMatrix) -> tuple:
    """``(lambda(A), A in lineality)``; lambda is zero exactly on the lineality space."""
    lam = eigenvalue(A)
    lin = in_lineality(A)
    if lam < 0 or (lam == 0) != lin:
        raise AssertionError(f"sign law violated: lambda={lam}, in_lineality={lin}")
    return lam, lin


def classify_skew(A: SkewMatrix) -> ClassifyResult:
    res = classify(validate_skew(A))
    if res.is_generic and not is_kite(res.phi):
        raise AssertionError(f"generic skew matrix with non-kite type {res.phi}")
    return res


@dataclass(frozen=True)
class RankingResult:
    eigenvector: TropVector
    order: tuple
    ties: tuple


def rank(A: SkewMatrix) -> RankingResult:
    """Rank items by sorting the tropical eigenvector, largest entry first.

    Only generic inputs are ranked.  Exact ties are listed, and tied items
    appear in ascending index order.
    """
    res = classify_skew(A)
    if not res.is_generic:
        raise NonUniqueEigenvector("matrix is not generic; inspect eigenspace() instead")
    x = res.eigenvector
    order = tuple(sorted(range(len(x)), key=lambda i: (-x[i], i)))
    groups = {}
    for i in order:
        groups.setdefault(x[i], []).append(i)
    ties = tuple(tuple(g) for g in groups.values() if len(g) > 1)
    return RankingResult(x, order, ties)


def _require_kite(phi: ConnectedFunction) -> None:
    if not is_kite(phi):
        raise NotAKite(f"{phi} has a cycle of length {len(cycle_of(phi))}")


def realize_kite(phi: ConnectedFunction) -> SkewMatrix:
    """A skew matrix in the interior of the cone of the kite ``phi``.

    Start from the cycle with +1 along it and -1 against it, then attach
    tree vertices by distance to the cycle.  A new leaf v with parent p
    needs, for every other present vertex j,

        x_p - x_j - 2*lam < a_vj - a_vp < x_p - x_j,

    where (x, lam) is the eigenpair so far.  Each difference is set to the
    midpoint of its interval and the row of v is made to sum to zero.
    """
    _require_kite(phi)
    n = phi.n
    cyc = cycle_of(phi)
    a = {}
    present = list(cyc)
    for u in present:
        for v in present:
            a[u, v] = Fraction(0)
    for v in cyc:
        a[v, phi.phi[v]] = Fraction(1)
        a[phi.phi[v], v] = Fraction(-1)
    lam = Fraction(1)

    on_cycle = set(cyc)
    depth = {}
    for i in range(n):
        d, w = 0, i
        while w not in on_cycle:
            d, w = d + 1, phi.phi[w]
        depth[i] = d

    # unnormalized x anchored at the first cycle vertex: x_i = B(path i -> cyc[0])
    x = {}
    for k, v in enumerate(cyc):
        x[v] = sum((a[cyc[t], cyc[(t + 1) % len(cyc)]] - lam for t in range(k, len(cyc))), Fraction(0))
    for v in sorted(range(n), key=lambda i: (depth[i], i)):
        if depth[v] == 0:
            continue
        p = phi.phi[v]
        others = [j for j in present if j != p]
        t = {j: x[p] - x[j] - lam for j in others}
        s = -sum(t.values(), Fraction(0)) / len(present)
        a[v, p], a[p, v] = s, -s
        for j in others:
            a[v, j], a[j, v] = s + t[j], -(s + t[j])
        a[v, v] = Fraction(0)
        x[v] = s + x[p] - lam
        present.append(v)
    return SkewMatrix([[a[i, j] for j in range(n)] for i in range(n)])


@dataclass(frozen=True)
class SkewConeStructure:
    """Facet data of a kite cone inside the skew-symmetric matrices.

    Forms live on the coordinates ``a_ij`` with ``i < j`` (see
    :func:`skew_coordinates`).  ``facet_forms`` are the distinct facet
    normals; ``facet_directions`` are the same forms with the eigenvalue
    form ``lambda_phi`` added, which pair up antipodally.
    """

    phi: ConnectedFunction
    eigenvalue_form: tuple
    facet_forms: tuple
    facet_directions: tuple
    pairs: tuple
    independent_rank: int
    quotient_dim: int
    lineality_dim: int

    @property
    def pair_count(self) -> int:
        return len(self.pairs)


def skew_coordinates(n: int) -> list:
    return list(combinations(range(n), 2))


def _restrict(coeffs, coords) -> tuple:
    return tuple(Fraction(coeffs[i][j] - coeffs[j][i]) for i, j in coords)


def _direction(v: tuple) -> tuple:
    """Canonical positive rescaling: first nonzero entry has absolute value 1."""
    lead = next((abs(c) for c in v if c), None)
    return v if lead is None else tuple(c / lead for c in v)


def skew_cone_structure(phi: ConnectedFunction) -> SkewConeStructure:
    _require_kite(phi)
    n = phi.n
    if n < 4:
        raise DimensionTooSmall("kite cones have no facets below n = 4")
    coords = skew_coordinates(n)

    lam_terms = _lambda_terms(phi)
    lam_form = _restrict(
        [[lam_terms.get((i, j), 0) for j in range(n)] for i in range(n)], coords
    )
    neg_lam = _direction(tuple(-c for c in lam_form))

    lin = [_restrict([[(i == k) - (j == k) for j in range(n)] for i in range(n)], coords) for k in range(n)]
    lin_dim = rational_rank(lin)

    facets = {}
    for q in cone_inequalities(phi):
        f = _restrict(q.form.coeffs, coords)
        if any(sum(c * r for c, r in zip(f, R)) for R in lin):
            raise AssertionError(f"form for {q.non_edge} does not vanish on the lineality space")
        d = _direction(f)
        # multiples of -lambda_phi only say lambda > 0, which the facets already imply
        if d == neg_lam:
            continue
        facets.setdefault(d, f)

    forms = tuple(facets.values())
    shifted = tuple(tuple(c + l for c, l in zip(f, lam_form)) for f in forms)
    # f_ij + f_ji = -2 lambda_phi on skew matrices, so the shifted forms are exact negatives
    index = {g: k for k, g in enumerate(shifted)}
    pairs = []
    for k, g in enumerate(shifted):
        m = index.get(tuple(-c for c in g))
        if m is not None and k < m:
            pairs.append((k, m))
    reps = [shifted[k] for k, _ in pairs]
    return SkewConeStructure(
        phi=phi,
        eigenvalue_form=lam_form,
        facet_forms=forms,
        facet_directions=shifted,
        pairs=tuple(pairs),
        independent_rank=rational_rank(reps),
        quotient_dim=len(coords) - lin_dim,
        lineality_dim=lin_dim,
    )
