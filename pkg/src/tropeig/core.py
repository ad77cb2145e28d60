"""Exact max-plus arithmetic over the rationals.

All scalars are :class:`fractions.Fraction`.  Matrices are immutable and
contain finite entries only, so the weighted digraph of every matrix is
complete.  Indices are 0-based throughout the library.
"""

from __future__ import annotations

import numbers
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch, PositiveCycle

TropVector = tuple  # tuple[Fraction, ...]


def to_rational(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are rejected: the toolkit promises exact arithmetic and a float
    has usually already been rounded by the time it gets here.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, numbers.Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        text = value.strip().replace("−", "-")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational: {value!r}") from exc
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def vector(values: Iterable) -> TropVector:
    return tuple(to_rational(v) for v in values)


class TropMatrix:
    """Square matrix of finite rationals."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable]):
        parsed = tuple(tuple(to_rational(v) for v in row) for row in rows)
        n = len(parsed)
        if n == 0:
            raise ValueError("matrix must be at least 1x1")
        if any(len(r) != n for r in parsed):
            raise DimensionMismatch("matrix must be square")
        self._rows = parsed

    @classmethod
    def constant(cls, n: int, c=0) -> "TropMatrix":
        c = to_rational(c)
        return cls([[c] * n for _ in range(n)])

    @classmethod
    def zeros(cls, n: int) -> "TropMatrix":
        return cls.constant(n, 0)

    @classmethod
    def from_entries(cls, n: int, entries: dict, default=0) -> "TropMatrix":
        """Build from a sparse ``{(i, j): value}`` map."""
        rows = [[entries.get((i, j), default) for j in range(n)] for i in range(n)]
        return cls(rows)

    @property
    def n(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple:
        return self._rows

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self._rows[i][j]

    def row(self, i: int) -> TropVector:
        return self._rows[i]

    def column(self, j: int) -> TropVector:
        return tuple(r[j] for r in self._rows)

    def transpose(self) -> "TropMatrix":
        return TropMatrix(zip(*self._rows))

    def diagonal(self) -> TropVector:
        return tuple(self._rows[i][i] for i in range(self.n))

    def shift(self, c) -> "TropMatrix":
        """Tropical scaling ``c ⊙ A``: add ``c`` to every entry."""
        c = to_rational(c)
        return TropMatrix([[v + c for v in r] for r in self._rows])

    def add(self, other: "TropMatrix") -> "TropMatrix":
        """Classical entrywise sum (used for moves inside matrix space)."""
        _check_same(self, other)
        return TropMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self._rows, other._rows)]
        )

    def scaled(self, t) -> "TropMatrix":
        """Classical scalar multiple ``t * A``."""
        t = to_rational(t)
        return TropMatrix([[t * v for v in r] for r in self._rows])

    def replace(self, i: int, j: int, value) -> "TropMatrix":
        rows = [list(r) for r in self._rows]
        rows[i][j] = value
        return TropMatrix(rows)

    def flat(self) -> TropVector:
        return tuple(v for r in self._rows for v in r)

    def to_lists(self) -> list:
        return [list(r) for r in self._rows]

    def __eq__(self, other):
        if not isinstance(other, TropMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(v) for v in r) + "]" for r in self._rows)
        return f"{type(self).__name__}([{body}])"


def _check_same(A: TropMatrix, B: TropMatrix) -> None:
    if A.n != B.n:
        raise DimensionMismatch(f"dimensions differ: {A.n} vs {B.n}")


def trop_add(A: TropMatrix, B: TropMatrix) -> TropMatrix:
    """Entrywise tropical sum ``A ⊕ B``."""
    _check_same(A, B)
    return TropMatrix([[max(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(A.rows, B.rows)])


def trop_mat_mul(A: TropMatrix, B: TropMatrix) -> TropMatrix:
    """Tropical product: ``(A ⊙ B)_ij = max_k a_ik + b_kj``."""
    _check_same(A, B)
    cols = [B.column(j) for j in range(B.n)]
    return TropMatrix([[max(a + b for a, b in zip(r, c)) for c in cols] for r in A.rows])


def trop_apply(A: TropMatrix, x: Sequence) -> TropVector:
    """Tropical matrix-vector product ``A ⊙ x``."""
    x = vector(x)
    if len(x) != A.n:
        raise DimensionMismatch(f"matrix is {A.n}x{A.n}, vector has length {len(x)}")
    return tuple(max(a + xj for a, xj in zip(r, x)) for r in A.rows)


def trop_power(A: TropMatrix, k: int) -> TropMatrix:
    if k < 1:
        raise ValueError("only positive powers exist without a tropical zero")
    P = A
    for _ in range(k - 1):
        P = trop_mat_mul(P, A)
    return P


def kleene_star(B: TropMatrix) -> TropMatrix:
    """``B* = B ⊕ B^2 ⊕ ... ⊕ B^n``: heaviest nonempty path weights.

    Computed by Floyd-Warshall relaxation, which returns the best walk
    weight; without positive cycles the best walk is a path (or a simple
    cycle on the diagonal), so it has at most n edges.
    """
    n = B.n
    D = [list(r) for r in B.rows]
    for k in range(n):
        Dk = D[k]
        for i in range(n):
            dik = D[i][k]
            Di = D[i]
            for j in range(n):
                w = dik + Dk[j]
                if w > Di[j]:
                    Di[j] = w
    for i in range(n):
        if D[i][i] > 0:
            raise PositiveCycle(f"a cycle through vertex {i} has positive weight")
    return TropMatrix(D)


def normalize_last(x: Sequence) -> TropVector:
    """Representative of ``x`` in TP^{n-1} with last coordinate 0."""
    x = vector(x)
    return tuple(v - x[-1] for v in x)


def tp_equal(x: Sequence, y: Sequence) -> bool:
    """Equality in the tropical projective torus (modulo adding constants)."""
    return len(x) == len(y) and normalize_last(x) == normalize_last(y)


def rational_rank(rows: Iterable[Sequence]) -> int:
    """Rank of a list of rational vectors by exact Gaussian elimination."""
    M = [[to_rational(v) for v in r] for r in rows]
    if not M:
        return 0
    ncols = len(M[0])
    rank = 0
    for c in range(ncols):
        pivot = next((r for r in range(rank, len(M)) if M[r][c] != 0), None)
        if pivot is None:
            continue
        M[rank], M[pivot] = M[pivot], M[rank]
        p = M[rank]
        for r in range(rank + 1, len(M)):
            f = M[r][c]
            if f:
                f /= p[c]
                M[r] = [a - f * b for a, b in zip(M[r], p)]
        rank += 1
        if rank == len(M):
            break
    return rank
