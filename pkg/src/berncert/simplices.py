"""Simplices over Q^n and their barycentric coordinate systems.

A ``Simplex`` is n+1 affinely independent vertices in Q^n; construction
rejects degenerate vertex sets.  ``barycentric_system`` returns the n+1
affine polynomials lambda_0 .. lambda_n with lambda_i(v_j) = delta_ij and
sum(lambda_i) = 1; a point lies in the (closed) simplex iff all its
barycentric coordinates are >= 0.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .linalg import determinant, invert
from .polynomials import Polynomial, as_rational

__all__ = [
    "DegenerateSimplexError",
    "Simplex",
    "BarycentricSystem",
    "standard_simplex",
    "barycentric_system",
    "contains_point",
]


class DegenerateSimplexError(ValueError):
    """Vertices are affinely dependent; carries the offending determinant."""

    def __init__(self, det: Fraction):
        super().__init__(f"degenerate simplex: edge-matrix determinant = {det}")
        self.determinant = det


class Simplex:
    """n+1 affinely independent vertices in Q^n, in a fixed slot order."""

    __slots__ = ("vertices", "determinant")

    def __init__(self, vertices: Iterable[Sequence]):
        vs = tuple(tuple(as_rational(c) for c in v) for v in vertices)
        if len(vs) < 2:
            raise ValueError("a simplex needs at least 2 vertices")
        n = len(vs) - 1
        for v in vs:
            if len(v) != n:
                raise ValueError(
                    f"{len(vs)} vertices require dimension {n}, got a vertex of length {len(v)}"
                )
        det = determinant(
            [[vs[i + 1][k] - vs[0][k] for k in range(n)] for i in range(n)]
        )
        if det == 0:
            raise DegenerateSimplexError(det)
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "determinant", det)

    def __setattr__(self, name, value):
        raise AttributeError("Simplex is immutable")

    @property
    def dimension(self) -> int:
        return len(self.vertices) - 1

    def replace_vertex(self, slot: int, point: Sequence) -> "Simplex":
        if not 0 <= slot <= self.dimension:
            raise ValueError(f"vertex slot {slot} out of range")
        vs = list(self.vertices)
        vs[slot] = tuple(as_rational(c) for c in point)
        return Simplex(vs)

    def __eq__(self, other):
        if not isinstance(other, Simplex):
            return NotImplemented
        return self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        pts = ", ".join("(" + ", ".join(str(c) for c in v) + ")" for v in self.vertices)
        return f"Simplex[{pts}]"


def standard_simplex(n: int) -> Simplex:
    """Vertices 0, e_1, .., e_n."""
    if n < 1:
        raise ValueError("dimension must be >= 1")
    zero = (Fraction(0),) * n
    verts = [zero]
    for k in range(n):
        verts.append(tuple(Fraction(1) if i == k else Fraction(0) for i in range(n)))
    return Simplex(verts)


class BarycentricSystem:
    """The simplex together with its coordinate polynomials lambda_0 .. lambda_n."""

    __slots__ = ("simplex", "coords")

    def __init__(self, simplex: Simplex, coords: tuple[Polynomial, ...]):
        object.__setattr__(self, "simplex", simplex)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("BarycentricSystem is immutable")

    def at(self, point: Sequence) -> tuple[Fraction, ...]:
        """Barycentric coordinates of a point (exact)."""
        return tuple(c.evaluate(point) for c in self.coords)

    def __eq__(self, other):
        if not isinstance(other, BarycentricSystem):
            return NotImplemented
        return self.simplex == other.simplex

    def __repr__(self):
        return f"BarycentricSystem({self.simplex!r})"


def barycentric_system(simplex: Simplex) -> BarycentricSystem:
    """Solve for the affine coordinate polynomials of a simplex.

    lambda_i has coefficient vector a with lambda_i(x) = a_0 + sum a_k x_k
    and lambda_i(v_j) = delta_ij, i.e. M a = e_i for the affine vertex
    matrix M; the simplex being nondegenerate makes M invertible.
    """
    n = simplex.dimension
    m = [[Fraction(1), *simplex.vertices[j]] for j in range(n + 1)]
    inv = invert(m)
    coords = []
    for i in range(n + 1):
        col = [inv[r][i] for r in range(n + 1)]
        terms = {(0,) * n: col[0]}
        for k in range(n):
            exps = tuple(1 if t == k else 0 for t in range(n))
            terms[exps] = col[k + 1]
        coords.append(Polynomial(n, terms))
    return BarycentricSystem(simplex, tuple(coords))


def contains_point(simplex: Simplex, point: Sequence) -> bool:
    """Closed-simplex membership: all barycentric coordinates >= 0."""
    return all(c >= 0 for c in barycentric_system(simplex).at(point))
