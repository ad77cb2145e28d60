"""Tropical eigenvalue, eigenvectors and the eigenpolytope of a matrix."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from .core import TropMatrix, TropVector, kleene_star, normalize_last, vector
from .errors import DimensionTooLarge, NonUniqueEigenvector, PositiveCycle

ORACLE_MAX_N = 8


@dataclass(frozen=True)
class Eigenpair:
    lam: Fraction
    x: TropVector


@dataclass(frozen=True)
class CriticalData:
    lam: Fraction
    critical_vertices: frozenset
    critical_edges: frozenset
    critical_cycles: tuple
    is_connected: bool


@dataclass(frozen=True)
class PathWitness:
    source: int
    target: int
    vertices: tuple
    weight: Fraction
    unique: bool


@dataclass(frozen=True)
class TropPolytope:
    """Tropical polytope given by generators, in last-coordinate-zero form."""

    ambient_n: int
    generators: tuple
    vertices: tuple = field(default=())

    def contains(self, x: Sequence) -> bool:
        return in_tropical_span(normalize_last(x), self.generators)


def simple_cycles(n: int, succ) -> Iterator[tuple]:
    """Yield each simple directed cycle once, starting at its smallest vertex.

    ``succ(v)`` returns the out-neighbours of ``v``.
    """
    for s in range(n):
        stack = [(s, iter(sorted(succ(s))))]
        path = [s]
        on_path = {s}
        while stack:
            v, it = stack[-1]
            for w in it:
                if w == s:
                    yield tuple(path)
                elif w > s and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    stack.append((w, iter(sorted(succ(w)))))
                    break
            else:
                stack.pop()
                on_path.discard(path.pop())


def cycle_weight(A: TropMatrix, cycle: Sequence[int]) -> Fraction:
    k = len(cycle)
    return sum((A[cycle[t], cycle[(t + 1) % k]] for t in range(k)), Fraction(0))


def eigenvalue(A: TropMatrix) -> Fraction:
    """Maximum cycle mean by Karp's dynamic program, source vertex 0."""
    n = A.n
    # D[k][v]: heaviest k-edge walk from vertex 0 to v; None stands for -inf
    D = [[None] * n for _ in range(n + 1)]
    D[0][0] = Fraction(0)
    for k in range(1, n + 1):
        prev, cur = D[k - 1], D[k]
        for v in range(n):
            best = None
            for u in range(n):
                if prev[u] is not None:
                    w = prev[u] + A[u, v]
                    if best is None or w > best:
                        best = w
            cur[v] = best
    lam = None
    for v in range(n):
        worst = None
        for k in range(n):
            if D[k][v] is None:
                continue
            r = (D[n][v] - D[k][v]) / (n - k)
            if worst is None or r < worst:
                worst = r
        if lam is None or worst > lam:
            lam = worst
    return lam


def eigenvalue_oracle(A: TropMatrix) -> Fraction:
    """Maximum cycle mean by enumerating every simple cycle."""
    if A.n > ORACLE_MAX_N:
        raise DimensionTooLarge(f"cycle enumeration is limited to n <= {ORACLE_MAX_N}")
    everything = range(A.n)
    return max(
        cycle_weight(A, c) / len(c) for c in simple_cycles(A.n, lambda v: everything)
    )


def normalize(A: TropMatrix) -> TropMatrix:
    """``B = A ⊙ (-λ(A))``; all cycles of B are non-positive."""
    return A.shift(-eigenvalue(A))


def _undirected_connected(vertices, edges) -> bool:
    vertices = set(vertices)
    if not vertices:
        return False
    adj = {v: set() for v in vertices}
    for i, j in edges:
        adj[i].add(j)
        adj[j].add(i)
    start = min(vertices)
    seen, todo = {start}, [start]
    while todo:
        v = todo.pop()
        for w in adj[v] - seen:
            seen.add(w)
            todo.append(w)
    return seen == vertices


def _critical(A: TropMatrix):
    lam = eigenvalue(A)
    B = A.shift(-lam)
    Bs = kleene_star(B)
    return lam, B, Bs


def critical_data(A: TropMatrix) -> CriticalData:
    lam, B, Bs = _critical(A)
    n = A.n
    verts = frozenset(i for i in range(n) if Bs[i, i] == 0)
    edges = frozenset(
        (i, j) for i in range(n) for j in range(n) if B[i, j] + Bs[j, i] == 0
    )
    out = {v: [] for v in range(n)}
    for i, j in edges:
        out[i].append(j)
    # every cycle made of critical edges has weight zero in B
    cycles = tuple(simple_cycles(n, lambda v: out[v]))
    return CriticalData(lam, verts, edges, cycles, _undirected_connected(verts, edges))


def eigenvector(A: TropMatrix, anchor: Optional[int] = None) -> Eigenpair:
    """Unique eigenpair; the vector is normalized so its last entry is 0.

    ``anchor`` picks the critical vertex the paths run to (smallest by
    default).  The result does not depend on it.
    """
    cd = critical_data(A)
    if not cd.is_connected:
        raise NonUniqueEigenvector("critical cycles are disconnected; use eigenspace()")
    Bs = kleene_star(A.shift(-cd.lam))
    if anchor is None:
        anchor = min(cd.critical_vertices)
    elif anchor not in cd.critical_vertices:
        raise ValueError(f"vertex {anchor} is not critical")
    x = [Bs[i, anchor] for i in range(A.n)]
    x[anchor] = Fraction(0)
    return Eigenpair(cd.lam, normalize_last(x))


def in_tropical_span(x: Sequence, generators: Sequence[Sequence]) -> bool:
    """Whether ``x`` is a max-plus combination of ``generators``.

    Each generator is pushed down as far as it stays below ``x``; ``x`` lies
    in the span iff the maximum of those residuated copies reaches it.
    """
    if not generators:
        return False
    x = vector(x)
    best = [None] * len(x)
    for g in generators:
        c = min(xi - gi for xi, gi in zip(x, g))
        for i, gi in enumerate(g):
            v = gi + c
            if best[i] is None or v > best[i]:
                best[i] = v
    return tuple(best) == x


def tropical_vertices(generators: Sequence[Sequence]) -> tuple:
    gens = [normalize_last(g) for g in generators]
    gens = list(dict.fromkeys(gens))
    return tuple(
        g for k, g in enumerate(gens) if not in_tropical_span(g, gens[:k] + gens[k + 1 :])
    )


def eigenspace(A: TropMatrix) -> TropPolytope:
    """``Eig(A)``: the tropical column span of the critical columns of B*."""
    _, _, Bs = _critical(A)
    cols = [normalize_last(Bs.column(i)) for i in range(A.n) if Bs[i, i] == 0]
    gens = tuple(dict.fromkeys(cols))
    return TropPolytope(A.n, gens, tropical_vertices(gens))


def maximal_path(B: TropMatrix, i: int, l: int) -> PathWitness:
    """A heaviest path from ``i`` to ``l`` in the graph of ``B``.

    For ``i == l`` the path is a simple cycle through ``i``.  ``unique``
    tells whether no other simple path reaches the same weight.
    """
    Bs = kleene_star(B)
    target = Bs[i, l]
    found = []

    def extend(path, weight, used):
        v = path[-1]
        for w in range(B.n):
            nw = weight + B[v, w]
            if w == l:
                if nw == target:
                    found.append(tuple(path) + (w,))
                    if len(found) > 1:
                        return True
                continue
            if w in used or nw + Bs[w, l] < target:
                continue
            used.add(w)
            path.append(w)
            if extend(path, nw, used):
                return True
            path.pop()
            used.discard(w)
        return False

    extend([i], Fraction(0), {i})
    if not found:  # pragma: no cover - Bs guarantees a maximizer
        raise PositiveCycle("no maximal path found")
    return PathWitness(i, l, found[0], target, len(found) == 1)
