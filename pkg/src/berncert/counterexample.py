"""The bundled impossibility study.

A nonnegative quartic is packaged here together with every concrete
computation that backs its story: a split-certification warm-up on a
simple quadratic, the quartic's sum-of-squares (Gram) verification, its
Bernstein coefficients on the standard simplex, and the two-parameter
family of corner-preserving simplices on which one coefficient stays
negative no matter what — so no subdivision or elevation budget can ever
produce a sign certificate for it.

``reproduce_report`` re-derives all of those values with this engine and
flags each row MATCH/MISMATCH against the reference values recorded from
the original write-up.  One reference formula in the warm-up example is
arithmetically wrong (see README), so a fresh build intentionally shows
MISMATCH rows for it, with both values printed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bernstein import cert_status, to_bernstein
from .certify import (
    CertifyConfig,
    EdgeSplit,
    Strategy,
    Target,
    certify,
    is_certified,
)
from .linalg import ldl_pivots
from .polynomials import Polynomial, as_rational, parse_polynomial
from .simplices import Simplex, barycentric_system, standard_simplex
from .subdivision import restrict_general, transfer_combined

__all__ = [
    "COUNTEREXAMPLE_TEXT",
    "SPLIT_DEMO_TEXT",
    "GRAM_MATRIX",
    "GramDecomposition",
    "counterexample_polynomial",
    "split_demo_polynomial",
    "gram_monomials",
    "counterexample_gram",
    "gram_polynomial",
    "verify_gram",
    "is_positive_definite",
    "persistence_value",
    "vertex_weights_for",
    "family_simplex",
    "reproduce_report",
    "render_report",
]

COUNTEREXAMPLE_TEXT = (
    "21*x1^4 + 24*x1^3*x2 - 36*x1^3 + 18*x1^2*x2^2 - 24*x1^2*x2 + 18*x1^2"
    " + 12*x1*x2^3 - 12*x1*x2^2 + 30*x2^4"
)

SPLIT_DEMO_TEXT = "x1^2 + x2^2 - x1*x2"

GRAM_MATRIX: tuple[tuple[Fraction, ...], ...] = tuple(
    tuple(Fraction(entry) for entry in row)
    for row in (
        (18, -18, -12, -6),
        (-18, 21, 12, 0),
        (-12, 12, 18, 6),
        (-6, 0, 6, 30),
    )
)


def counterexample_polynomial() -> Polynomial:
    """The nonnegative quartic with no coefficient-sign certificate."""
    return parse_polynomial(COUNTEREXAMPLE_TEXT, num_vars=2)


def split_demo_polynomial() -> Polynomial:
    """The warm-up quadratic certified by a single edge split."""
    return parse_polynomial(SPLIT_DEMO_TEXT, num_vars=2)


def gram_monomials() -> tuple[Polynomial, ...]:
    """The monomial vector z = (x1, x1^2, x1*x2, x2^2)."""
    x1 = Polynomial.variable(2, 0)
    x2 = Polynomial.variable(2, 1)
    return (x1, x1 * x1, x1 * x2, x2 * x2)


@dataclass(frozen=True)
class GramDecomposition:
    """A symmetric matrix M and monomial vector z asserting p = z^T M z."""

    monomial_vector: tuple[Polynomial, ...]
    matrix: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.monomial_vector)
        matrix = tuple(
            tuple(as_rational(entry) for entry in row) for row in self.matrix
        )
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise ValueError("matrix shape does not fit the monomial vector")
        for i in range(n):
            for j in range(i + 1, n):
                if matrix[i][j] != matrix[j][i]:
                    raise ValueError("matrix must be symmetric")
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "monomial_vector", tuple(self.monomial_vector))


def counterexample_gram() -> GramDecomposition:
    return GramDecomposition(gram_monomials(), GRAM_MATRIX)


def gram_polynomial(g: GramDecomposition) -> Polynomial:
    """Expand z^T M z to a canonical polynomial."""
    z = g.monomial_vector
    total = Polynomial.zero(z[0].num_vars)
    for i, zi in enumerate(z):
        for j, zj in enumerate(z):
            entry = g.matrix[i][j]
            if entry:
                total = total + entry * (zi * zj)
    return total


def verify_gram(p: Polynomial, g: GramDecomposition) -> bool:
    """True iff z^T M z equals p exactly."""
    if not g.monomial_vector:
        raise ValueError("empty monomial vector")
    if any(z.num_vars != p.num_vars for z in g.monomial_vector):
        raise ValueError(
            "variable count mismatch between the polynomial and the monomial vector"
        )
    return (gram_polynomial(g) - p).is_zero


def is_positive_definite(matrix) -> bool:
    """Exact PD test: LDL^T pivots all exist and are strictly positive."""
    pivots = ldl_pivots(matrix)
    return len(pivots) == len(matrix) and all(p > 0 for p in pivots)


def persistence_value(beta1, rho) -> Fraction:
    """Closed form for the transferred (1,1,2) coefficient: -beta1*(1-rho)^2.

    beta1 is the weight the moved middle vertex keeps on the original v1;
    rho slides the third vertex toward v0 along the v0-v2 edge.  The value
    is strictly negative for every admissible pair, which is the whole
    impossibility argument in one line.
    """
    beta1 = as_rational(beta1)
    rho = as_rational(rho)
    if beta1 <= 0:
        raise ValueError("beta1 must be > 0")
    if not 0 <= rho < 1:
        raise ValueError("rho must lie in [0, 1)")
    return -beta1 * (1 - rho) ** 2


def vertex_weights_for(beta1) -> tuple[Fraction, Fraction, Fraction]:
    """A canonical admissible weight triple with the given beta1.

    The leftover mass 1 - beta1 is split evenly between the two fixed
    vertices; any admissible split gives the same (1,1,2) coefficient.
    """
    beta1 = as_rational(beta1)
    if not 0 < beta1 <= 1:
        raise ValueError("beta1 must lie in (0, 1]")
    side = (1 - beta1) / 2
    return (side, beta1, side)


def family_simplex(beta, rho) -> Simplex:
    """The corner-preserving simplex (v0, beta-combination, (0, 1-rho))."""
    b0, b1, b2 = (as_rational(w) for w in beta)
    rho = as_rational(rho)
    if b0 + b1 + b2 != 1:
        raise ValueError("vertex weights must sum to 1")
    if b0 < 0 or b2 < 0 or b1 <= 0:
        raise ValueError("vertex weights must have beta0, beta2 >= 0 and beta1 > 0")
    if not 0 <= rho < 1:
        raise ValueError("rho must lie in [0, 1)")
    zero = Fraction(0)
    return Simplex(((zero, zero), (b1, b2), (zero, 1 - rho)))


_THETAS = (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4))
_BETA1_GRID = (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1))
_RHO_GRID = (Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4))


def _row(item: str, reference: str, computed: str) -> dict:
    return {
        "item": item,
        "reference": reference,
        "computed": computed,
        "match": reference == computed,
    }


def _fmt(value: Fraction) -> str:
    return str(value)


def _example1_rows() -> list[dict]:
    demo = split_demo_polynomial()
    std2 = standard_simplex(2)
    form = to_bernstein(demo, barycentric_system(std2), 2)
    rows = []
    initial_refs = {
        (2, 0, 0): Fraction(0),
        (1, 1, 0): Fraction(0),
        (1, 0, 1): Fraction(0),
        (0, 2, 0): Fraction(1),
        (0, 1, 1): Fraction(-1, 2),
        (0, 0, 2): Fraction(1),
    }
    for index, ref in initial_refs.items():
        rows.append(
            _row(
                f"initial b{index}",
                _fmt(ref),
                _fmt(form.coefficient(index)),
            )
        )

    v0 = (Fraction(0), Fraction(0))
    v1 = (Fraction(1), Fraction(0))
    v2 = (Fraction(0), Fraction(1))
    for theta in _THETAS:
        w = (1 - theta, theta)
        pieces = (
            ("[v0,v1,w]", Simplex((v0, v1, w)), 1 - Fraction(3, 2) * theta),
            ("[v0,v2,w]", Simplex((v0, v2, w)), Fraction(3, 2) * theta - Fraction(1, 2)),
        )
        ref_002 = Fraction(1, 8) * (1 - theta) * theta + Fraction(1, 4)
        for label, piece, ref_011 in pieces:
            restricted = restrict_general(form, piece)
            rows.append(
                _row(
                    f"theta={theta} {label} b(0,2,0)",
                    "1",
                    _fmt(restricted.coefficient((0, 2, 0))),
                )
            )
            rows.append(
                _row(
                    f"theta={theta} {label} b(0,1,1)",
                    _fmt(ref_011),
                    _fmt(restricted.coefficient((0, 1, 1))),
                )
            )
            rows.append(
                _row(
                    f"theta={theta} {label} b(0,0,2)",
                    _fmt(ref_002),
                    _fmt(restricted.coefficient((0, 0, 2))),
                )
            )

    config = CertifyConfig(
        max_depth=1,
        strategy=Strategy.WITNESS_GUIDED_SPLIT,
        target=Target.NONNEGATIVE,
    )
    tree = certify(demo, std2, config)
    depth_one = (
        isinstance(tree.split, EdgeSplit)
        and tree.split.theta == Fraction(1, 2)
        and all(not child.children for child in tree.children)
    )
    certified = depth_one and is_certified(tree, Target.NONNEGATIVE)
    rows.append(
        _row(
            "theta=1/2 split certifies nonnegativity at depth 1",
            "certified",
            "certified" if certified else "not certified",
        )
    )
    return rows


def _counterexample_rows() -> list[dict]:
    p = counterexample_polynomial()
    form = to_bernstein(p, barycentric_system(standard_simplex(2)), 4)
    rows = [
        _row("nonzero coefficient count", "5", str(len(form.coeffs))),
        _row("P(0,0)", "0", _fmt(p.evaluate((Fraction(0), Fraction(0))))),
    ]
    refs = {
        (2, 2, 0): Fraction(3),
        (1, 2, 1): Fraction(1),
        (1, 1, 2): Fraction(-1),
        (0, 4, 0): Fraction(3),
        (0, 0, 4): Fraction(30),
    }
    for index, ref in refs.items():
        rows.append(_row(f"b{index}", _fmt(ref), _fmt(form.coefficient(index))))
    negatives = cert_status(form).negative_indices
    rows.append(
        _row(
            "negative indices",
            "(1, 1, 2)",
            "; ".join(str(idx) for idx in negatives),
        )
    )
    return rows


def _gram_rows() -> list[dict]:
    p = counterexample_polynomial()
    g = counterexample_gram()
    diff = gram_polynomial(g) - p
    pivots = ldl_pivots(g.matrix)
    return [
        _row("z^T M z - P", "0", str(diff)),
        _row(
            "ldl pivots",
            "18; 3; 10; 78/5",
            "; ".join(_fmt(p) for p in pivots),
        ),
        _row(
            "positive definite",
            "true",
            "true" if is_positive_definite(g.matrix) else "false",
        ),
    ]


def _persistence_rows() -> list[dict]:
    p = counterexample_polynomial()
    form = to_bernstein(p, barycentric_system(standard_simplex(2)), 4)
    rows = []
    all_negative = True
    for beta1 in _BETA1_GRID:
        weights = vertex_weights_for(beta1)
        for rho in _RHO_GRID:
            closed = persistence_value(beta1, rho)
            via_transfer = transfer_combined(form, weights, rho).coefficient((1, 1, 2))
            via_restrict = restrict_general(
                form, family_simplex(weights, rho)
            ).coefficient((1, 1, 2))
            if via_transfer == via_restrict:
                computed = _fmt(via_transfer)
            else:
                computed = (
                    f"transfer {_fmt(via_transfer)} != restrict {_fmt(via_restrict)}"
                )
            all_negative = all_negative and via_transfer < 0 and via_restrict < 0
            rows.append(
                _row(
                    f"beta1={beta1} rho={rho} b(1,1,2)",
                    _fmt(closed),
                    computed,
                )
            )
    rows.append(
        _row(
            "all 16 grid values strictly negative",
            "true",
            "true" if all_negative else "false",
        )
    )
    return rows


def reproduce_report() -> dict:
    """Re-derive every recorded value and flag each row MATCH/MISMATCH.

    Returns {"example1": {...}, "counterexample": {...}, "gram": {...},
    "persistence": {...}, "all_match": bool} where each section holds a
    list of rows {item, reference, computed, match}.
    """
    sections = {
        "example1": _example1_rows(),
        "counterexample": _counterexample_rows(),
        "gram": _gram_rows(),
        "persistence": _persistence_rows(),
    }
    report: dict = {name: {"rows": rows} for name, rows in sections.items()}
    report["all_match"] = all(
        row["match"] for rows in sections.values() for row in rows
    )
    return report


def render_report(report: dict) -> str:
    """Aligned text table for the report dictionary."""
    lines = []
    for name in ("example1", "counterexample", "gram", "persistence"):
        rows = report[name]["rows"]
        lines.append(f"== {name} ==")
        item_w = max(len(row["item"]) for row in rows)
        ref_w = max(max(len(row["reference"]) for row in rows), len("reference"))
        comp_w = max(max(len(row["computed"]) for row in rows), len("computed"))
        lines.append(
            f"{'item'.ljust(item_w)}  {'reference'.ljust(ref_w)}  "
            f"{'computed'.ljust(comp_w)}  flag"
        )
        for row in rows:
            flag = "MATCH" if row["match"] else "MISMATCH"
            lines.append(
                f"{row['item'].ljust(item_w)}  {row['reference'].ljust(ref_w)}  "
                f"{row['computed'].ljust(comp_w)}  {flag}"
            )
        lines.append("")
    mismatches = sum(
        1
        for name in ("example1", "counterexample", "gram", "persistence")
        for row in report[name]["rows"]
        if not row["match"]
    )
    if report["all_match"]:
        lines.append("all rows match")
    else:
        lines.append(f"{mismatches} row(s) MISMATCH; see README for the analysis")
    return "\n".join(lines)
