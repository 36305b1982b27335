"""Coefficient transfer between Bernstein bases under vertex replacement.

For a triangle (v0, v1, v2) these are the exact closed-form transfers:

* ``transfer_edge_v2``: replace v2 by a point on the v0-v2 edge,
  w2 = rho*v0 + (1-rho)*v2 with rho in [0, 1).
* ``transfer_vertex_v1``: replace v1 by any admissible interior/edge point
  w1 = beta0*v0 + beta1*v1 + beta2*v2 (beta0, beta2 >= 0, beta1 > 0).
* ``transfer_combined``: both replacements at once, as a single double
  sum (not as a composition of the two; tests check the composition
  equality separately).

``restrict_general`` is the dimension-generic oracle: expand the form
back to the monomial basis and re-expand it on the target simplex; it
must agree with every closed-form transfer.  ``split_edge`` produces the
two children of an edge subdivision, and ``edge_split_forms`` computes
their coefficients exactly via slot permutation plus the edge transfer.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Sequence

from .bernstein import BernsteinForm, from_bernstein, to_bernstein
from .polynomials import as_rational, multinomial, vectors_with_sum
from .simplices import Simplex, barycentric_system

__all__ = [
    "transfer_edge_v2",
    "transfer_vertex_v1",
    "transfer_combined",
    "restrict_general",
    "split_edge",
    "permute_slots",
    "edge_split_forms",
]


def _check_edge_ratio(rho: Fraction) -> None:
    if not (0 <= rho < 1):
        raise ValueError(f"edge ratio must satisfy 0 <= rho < 1, got {rho}")


def _check_vertex_weights(beta: tuple[Fraction, ...]) -> None:
    if len(beta) != 3:
        raise ValueError(f"vertex weights need 3 entries, got {len(beta)}")
    if sum(beta) != 1:
        raise ValueError(f"vertex weights must sum to 1, got {beta}")
    if beta[0] < 0 or beta[2] < 0 or beta[1] <= 0:
        raise ValueError(
            f"vertex weights need beta0 >= 0, beta2 >= 0, beta1 > 0, got {beta}"
        )


def _check_triangle(form: BernsteinForm) -> None:
    if form.simplex.dimension != 2:
        raise ValueError(
            f"closed-form transfers are defined for 2-simplices, got dimension "
            f"{form.simplex.dimension}"
        )


def _combine(points: Sequence[tuple[Fraction, ...]], weights: Sequence[Fraction]):
    dim = len(points[0])
    return tuple(
        sum((w * p[k] for w, p in zip(weights, points)), Fraction(0))
        for k in range(dim)
    )


def transfer_edge_v2(form: BernsteinForm, rho) -> BernsteinForm:
    """Move v2 to w2 = rho*v0 + (1-rho)*v2, rho in [0, 1).

    New coefficients:
    b~_g = sum_{k=0}^{g2} C(g2, g2-k) rho^(g2-k) (1-rho)^k b_(g0+g2-k, g1, k)
    """
    _check_triangle(form)
    rho = as_rational(rho)
    _check_edge_ratio(rho)
    v0, v1, v2 = form.simplex.vertices
    new_simplex = Simplex((v0, v1, _combine((v0, v2), (rho, 1 - rho))))
    d = form.degree
    coeffs = form.coeffs
    out: dict[tuple[int, ...], Fraction] = {}
    for gamma in vectors_with_sum(3, d):
        g0, g1, g2 = gamma
        total = Fraction(0)
        for k in range(g2 + 1):
            b = coeffs.get((g0 + g2 - k, g1, k))
            if b:
                total += comb(g2, g2 - k) * rho ** (g2 - k) * (1 - rho) ** k * b
        if total:
            out[gamma] = total
    return BernsteinForm(barycentric_system(new_simplex), d, out)


def transfer_vertex_v1(form: BernsteinForm, beta) -> BernsteinForm:
    """Move v1 to w1 = beta0*v0 + beta1*v1 + beta2*v2.

    Requires beta0, beta2 >= 0 and beta1 > 0 (so the triangle stays
    nondegenerate).  New coefficients:
    b~_g = sum over |a| = d with a0 >= g0, a2 >= g2 of
           g1! / ((a0-g0)! a1! (a2-g2)!) beta0^(a0-g0) beta1^a1 beta2^(a2-g2) b_a
    """
    _check_triangle(form)
    beta = tuple(as_rational(b) for b in beta)
    _check_vertex_weights(beta)
    v0, v1, v2 = form.simplex.vertices
    new_simplex = Simplex((v0, _combine((v0, v1, v2), beta), v2))
    d = form.degree
    b0, b1, b2 = beta
    out: dict[tuple[int, ...], Fraction] = {}
    for gamma in vectors_with_sum(3, d):
        g0, g1, g2 = gamma
        total = Fraction(0)
        for (a0, a1, a2), b in form.coeffs.items():
            if a0 < g0 or a2 < g2:
                continue
            weight = multinomial(g1, (a0 - g0, a1, a2 - g2))
            total += weight * b0 ** (a0 - g0) * b1**a1 * b2 ** (a2 - g2) * b
        if total:
            out[gamma] = total
    return BernsteinForm(barycentric_system(new_simplex), d, out)


def transfer_combined(form: BernsteinForm, beta, rho) -> BernsteinForm:
    """Move v1 to w1 = beta0*v0 + beta1*v1 + beta2*v2 and v2 to
    w2 = rho*v0 + (1-rho)*v2 in one step.

    Implemented directly as the double sum

    b~_g = sum_{k=0}^{g2} C(g2, g2-k) rho^(g2-k) (1-rho)^k *
           sum over |a| = d with a0 >= g0+g2-k, a2 >= k of
               g1! / ((a0-(g0+g2-k))! a1! (a2-k)!) *
               beta0^(a0-(g0+g2-k)) beta1^a1 beta2^(a2-k) b_a

    (its equality with the composition of the two single transfers is a
    test, not the implementation).
    """
    _check_triangle(form)
    beta = tuple(as_rational(b) for b in beta)
    rho = as_rational(rho)
    _check_vertex_weights(beta)
    _check_edge_ratio(rho)
    v0, v1, v2 = form.simplex.vertices
    new_simplex = Simplex(
        (v0, _combine((v0, v1, v2), beta), _combine((v0, v2), (rho, 1 - rho)))
    )
    d = form.degree
    b0, b1, b2 = beta
    out: dict[tuple[int, ...], Fraction] = {}
    for gamma in vectors_with_sum(3, d):
        g0, g1, g2 = gamma
        total = Fraction(0)
        for k in range(g2 + 1):
            shift = g0 + g2 - k
            inner = Fraction(0)
            for (a0, a1, a2), b in form.coeffs.items():
                if a0 < shift or a2 < k:
                    continue
                weight = multinomial(g1, (a0 - shift, a1, a2 - k))
                inner += weight * b0 ** (a0 - shift) * b1**a1 * b2 ** (a2 - k) * b
            if inner:
                total += comb(g2, g2 - k) * rho ** (g2 - k) * (1 - rho) ** k * inner
        if total:
            out[gamma] = total
    return BernsteinForm(barycentric_system(new_simplex), d, out)


def restrict_general(form: BernsteinForm, sub: Simplex) -> BernsteinForm:
    """Re-expand the form on another simplex of the same dimension.

    Works in any dimension and for any nondegenerate target simplex, at
    the cost of a full change of basis; the closed-form transfers above
    must agree with it wherever they apply.
    """
    if sub.dimension != form.simplex.dimension:
        raise ValueError(
            f"dimension mismatch: {sub.dimension} != {form.simplex.dimension}"
        )
    return to_bernstein(from_bernstein(form), barycentric_system(sub), form.degree)


def split_edge(simplex: Simplex, i: int, j: int, theta) -> tuple[Simplex, Simplex]:
    """Split the (v_i, v_j) edge at w = (1-theta)*v_i + theta*v_j, theta in (0, 1).

    Returns the two children: first with v_j replaced by w, second with
    v_i replaced by w; the new vertex always takes the replaced vertex's
    slot.  Their union is the original simplex and their interiors are
    disjoint.
    """
    n = simplex.dimension
    if not (0 <= i <= n and 0 <= j <= n):
        raise ValueError(f"edge ({i}, {j}) out of range for dimension {n}")
    if i == j:
        raise ValueError("edge endpoints must differ")
    theta = as_rational(theta)
    if not (0 < theta < 1):
        raise ValueError(f"theta must satisfy 0 < theta < 1, got {theta}")
    vi, vj = simplex.vertices[i], simplex.vertices[j]
    w = tuple((1 - theta) * a + theta * b for a, b in zip(vi, vj))
    return simplex.replace_vertex(j, w), simplex.replace_vertex(i, w)


def permute_slots(form: BernsteinForm, order: Sequence[int]) -> BernsteinForm:
    """The same polynomial on the relabeled simplex whose slot t is old slot order[t]."""
    slots = form.simplex.dimension + 1
    order = tuple(order)
    if sorted(order) != list(range(slots)):
        raise ValueError(f"order must be a permutation of 0..{slots - 1}, got {order}")
    new_simplex = Simplex(tuple(form.simplex.vertices[o] for o in order))
    out = {
        tuple(alpha[o] for o in order): b for alpha, b in form.coeffs.items()
    }
    return BernsteinForm(barycentric_system(new_simplex), form.degree, out)


def edge_split_forms(
    form: BernsteinForm, i: int, j: int, theta
) -> tuple[BernsteinForm, BernsteinForm]:
    """Exact Bernstein forms of the two ``split_edge`` children (triangles only).

    Replacing an endpoint of the split edge with a point of that edge is
    the v2 edge move after relabeling slots, so each child needs only one
    closed-form transfer instead of a full change of basis.
    """
    _check_triangle(form)
    theta = as_rational(theta)
    if not (0 < theta < 1):
        raise ValueError(f"theta must satisfy 0 < theta < 1, got {theta}")
    if i == j or not (0 <= i <= 2 and 0 <= j <= 2):
        raise ValueError(f"bad edge ({i}, {j})")
    k = 3 - i - j  # the untouched slot

    def child(anchor: int, replaced: int, rho: Fraction) -> BernsteinForm:
        order = (anchor, k, replaced)
        inverse = tuple(order.index(t) for t in range(3))
        moved = transfer_edge_v2(permute_slots(form, order), rho)
        return permute_slots(moved, inverse)

    # w = (1-theta)*v_i + theta*v_j; as a point of the v_i-v_j edge seen
    # from anchor v_i it sits at rho = 1-theta, seen from v_j at rho = theta
    return child(i, j, 1 - theta), child(j, i, theta)
