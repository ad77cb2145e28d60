"""Connected functions, kites and the simplicial complex of their complements."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import factorial
from typing import Sequence

from .errors import DimensionTooLarge, InvalidDimension, NotConnected

ENUMERATE_MAX_N = 7
FVECTOR_MAX_N = 4


def is_connected_function(n: int, f: Sequence[int]) -> bool:
    """True iff the undirected graph on edges {i, f(i)} is connected."""
    if len(f) != n or any(not 0 <= v < n for v in f):
        raise ValueError("f must map range(n) into range(n)")
    parent = list(range(n))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    components = n
    for i, j in enumerate(f):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            components -= 1
    return components == 1


@dataclass(frozen=True, order=True)
class ConnectedFunction:
    """A self-map of ``range(n)`` whose functional graph is connected.

    ``phi[i]`` is the image of ``i`` (0-based).
    """

    phi: tuple

    def __post_init__(self):
        phi = tuple(int(v) for v in self.phi)
        object.__setattr__(self, "phi", phi)
        if not is_connected_function(len(phi), phi):
            raise NotConnected(f"{phi} is not a connected function")

    @classmethod
    def from_one_based(cls, images: Sequence[int]) -> "ConnectedFunction":
        return cls(tuple(v - 1 for v in images))

    def one_based(self) -> list:
        return [v + 1 for v in self.phi]

    @property
    def n(self) -> int:
        return len(self.phi)

    def __call__(self, i: int) -> int:
        return self.phi[i]

    def edges(self) -> frozenset:
        return frozenset(enumerate(self.phi))

    def cycle(self) -> tuple:
        return cycle_of(self)

    def non_edges(self) -> list:
        """All (i, j) with j != phi(i), in row-major order."""
        return [(i, j) for i in range(self.n) for j in range(self.n) if j != self.phi[i]]

    def __str__(self):
        return "{" + ",".join(f"{i + 1}{j + 1}" for i, j in enumerate(self.phi)) + "}"


def cycle_of(phi: ConnectedFunction) -> tuple:
    """The unique cycle of ``phi``, rotated to start at its smallest vertex."""
    seen = {}
    v = 0
    while v not in seen:
        seen[v] = len(seen)
        v = phi.phi[v]
    cyc = [v]
    w = phi.phi[v]
    while w != v:
        cyc.append(w)
        w = phi.phi[w]
    k = cyc.index(min(cyc))
    return tuple(cyc[k:] + cyc[:k])


def is_kite(phi: ConnectedFunction) -> bool:
    return len(cycle_of(phi)) >= 3


def enumerate_connected(n: int) -> list:
    """All connected functions on range(n), lexicographic in (phi(0), ..., phi(n-1))."""
    if n < 1:
        raise InvalidDimension("n must be positive")
    if n > ENUMERATE_MAX_N:
        raise DimensionTooLarge(f"enumeration is limited to n <= {ENUMERATE_MAX_N}")
    return [
        ConnectedFunction(f) for f in product(range(n), repeat=n) if is_connected_function(n, f)
    ]


def enumerate_kites(n: int) -> list:
    return [phi for phi in enumerate_connected(n) if is_kite(phi)]


def _falling_sum(n: int, k_min: int) -> int:
    # n!/(n-k)! * n^(n-k-1); the k = n term is n!/n = (n-1)!
    total = 0
    for k in range(k_min, n + 1):
        if k == n:
            total += factorial(n - 1)
        else:
            total += factorial(n) // factorial(n - k) * n ** (n - k - 1)
    return total


def count_connected(n: int) -> int:
    if n < 1:
        raise InvalidDimension("n must be positive")
    return _falling_sum(n, 1)


def count_kites(n: int) -> int:
    if n < 3:
        raise InvalidDimension("kites need n >= 3")
    return _falling_sum(n, 3)


def facet_mask(phi: ConnectedFunction) -> int:
    """Bitmask over cells (i, j) -> bit i*n + j of the complement of phi."""
    n = phi.n
    full = (1 << (n * n)) - 1
    return full & ~sum(1 << (i * n + j) for i, j in enumerate(phi.phi))


def _submasks(mask: int):
    sub = mask
    while sub:
        yield sub
        sub = (sub - 1) & mask


def sigma_fvector(n: int) -> tuple:
    """f-vector of the complex whose facets are the complements of connected functions.

    Entry d counts the d-dimensional faces (d + 1 cells).
    """
    if n < 1:
        raise InvalidDimension("n must be positive")
    if n > FVECTOR_MAX_N:
        raise DimensionTooLarge(f"f-vector enumeration is limited to n <= {FVECTOR_MAX_N}")
    faces = set()
    for phi in enumerate_connected(n):
        faces.update(_submasks(facet_mask(phi)))
    counts = [0] * (n * n - n)
    for f in faces:
        counts[bin(f).count("1") - 1] += 1
    return tuple(counts)
