"""Graded Hankel systems assembled from the square-root coefficients.

Writing D_j for the w^{-j} coefficient of sqrt(1 - z/w), the column vector
G_j stacks D_j .. D_{j+k-1}.  Every entry of the matrix (G_s .. G_{s+k-1})
is a z-monomial whose exponent is fixed by its position, so determinants
and linear solves factor through exact rational arithmetic on the numeric
parts; z-exponents are reattached afterwards from the grading.  This is
what turns the series linear algebra into plain rational linear algebra
with no truncation bookkeeping inside the solver.

The end product is :func:`branch_identity_holds`, which decides whether the
degree-2 branch-point divisor identity is satisfiable modulo z^n by the
unique graded candidate: it is exactly when n <= 2k+1, with the obstruction
carried by the constant-in-w coefficient z * B_k^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import InternalInconsistencyError
from .series import TruncatedSeries, WLaurent, ZMonomial, sqrt_coeff, wlaurent_nonneg_check


def _bareiss_det(rows: list[list[Fraction]]) -> Fraction:
    """Determinant by fraction-free Bareiss elimination, exact throughout."""
    m = [list(r) for r in rows]
    n = len(m)
    sign = 1
    prev = Fraction(1)
    for i in range(n - 1):
        if m[i][i] == 0:
            for r in range(i + 1, n):
                if m[r][i] != 0:
                    m[i], m[r] = m[r], m[i]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]) / prev
            m[r][i] = Fraction(0)
        prev = m[i][i]
    return sign * m[-1][-1]


@dataclass(frozen=True)
class GradedHankel:
    """The k x k matrix (G_shift .. G_{shift+k-1}); entry (i, j) is the
    monomial D_{shift+i+j}, carrying z-exponent shift+i+j."""

    k: int
    shift: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("Hankel size must be >= 1")
        if self.shift not in (1, 2):
            raise ValueError("column shift must be 1 or 2")

    def entry(self, i: int, j: int) -> ZMonomial:
        return sqrt_coeff(self.shift + i + j)

    def numeric(self) -> list[list[Fraction]]:
        return [
            [self.entry(i, j).coeff for j in range(self.k)] for i in range(self.k)
        ]

    def det(self) -> ZMonomial:
        # every permutation product carries the same z-exponent
        exp = self.k * self.shift + self.k * (self.k - 1)
        return ZMonomial(_bareiss_det(self.numeric()), exp)


def hankel_det(k: int, shift: int) -> ZMonomial:
    """Exact determinant of (G_shift .. G_{shift+k-1}) as a z-monomial."""
    return GradedHankel(k, shift).det()


@dataclass(frozen=True)
class BranchCoefficients:
    """Graded solution of (G_1 .. G_k) B = -G_{k+1}.

    ``coeffs`` lists the monomials B_k, B_{k-1}, ..., B_1 in that order
    (the unknown vector of the matrix equation); B_j has z-exponent j and
    B_k always equals (-4)^{-k} z^k.
    """

    k: int
    coeffs: tuple[ZMonomial, ...]

    def b(self, j: int) -> ZMonomial:
        if not 1 <= j <= self.k:
            raise ValueError("index out of range")
        return self.coeffs[self.k - j]


def solve_branch_system(k: int) -> BranchCoefficients:
    """Solve (G_1 .. G_k) B = -G_{k+1} by Cramer's rule on the numeric
    parts, then re-grade."""
    if k < 1:
        raise ValueError("solve_branch_system requires k >= 1")
    d = [sqrt_coeff(j).coeff for j in range(2 * k + 2)]
    mat = [[d[1 + i + j] for j in range(k)] for i in range(k)]
    rhs = [-d[k + 1 + i] for i in range(k)]
    det0 = _bareiss_det(mat)
    if det0 == 0:
        raise InternalInconsistencyError("graded Hankel matrix is singular")
    betas = []
    for col in range(k):
        replaced = [row[:] for row in mat]
        for i in range(k):
            replaced[i][col] = rhs[i]
        betas.append(_bareiss_det(replaced) / det0)
    coeffs = tuple(ZMonomial(betas[i], k - i) for i in range(k))
    if coeffs[0].coeff != Fraction(-1, 4) ** k:
        raise InternalInconsistencyError(
            f"leading branch coefficient {coeffs[0]} != (-4)^-{k} z^{k}"
        )
    return BranchCoefficients(k, coeffs)


def branch_identity_holds(k: int, n: int) -> bool:
    """Decide solvability modulo z^n of the branch-point divisor identity
    at flag level k.

    The candidate is assembled from the graded solve: g collects the B_j,
    h is the adequately truncated sqrt(1 - z/w) times g, and f keeps the
    w-degree <= k part of h (its coefficients are the defining relations
    A_j = C_j).  Returns True iff the residual w^{2k+1} (f^2 - h^2) has no
    negative-w-exponent term surviving modulo z^n AND its constant-in-w
    coefficient, which equals z * B_k^2, vanishes modulo z^n.

    k = 0 is allowed (empty system, g = 1); the flag-level sweep that reads
    off torsion exponents needs it.
    """
    if k < 0:
        raise ValueError("flag level must be >= 0")
    if n < 1:
        raise ValueError("congruence order must be >= 1")
    order = max(n, 2 * k + 2)
    one = TruncatedSeries.one(order)

    g_terms = {0: one}
    if k >= 1:
        sol = solve_branch_system(k)
        for mono in sol.coeffs:
            g_terms[-mono.exp] = mono.as_series(order)
        bk = sol.b(k)
    else:
        bk = ZMonomial(Fraction(1), 0)
    g = WLaurent(g_terms)

    depth = 2 * k + 1
    root = WLaurent({-j: sqrt_coeff(j).as_series(order) for j in range(depth + 1)})
    h = root * g
    f_terms = {}
    for j in range(k + 1):
        c = h.coefficient(-j)
        if c is not None:
            f_terms[-j] = c
    f = WLaurent(f_terms)

    residual = (f * f - h * h) * WLaurent({depth: one})

    # the graded solve kills every positive-w-exponent term identically
    for e in residual.exponents():
        if e > 0:
            raise InternalInconsistencyError(
                f"residual has unexpected w^{e} term: {residual.coefficient(e)!r}"
            )
    const = residual.coefficient(0)
    obstruction = ZMonomial(bk.coeff**2, 2 * bk.exp + 1)  # z * B_k^2
    if const != obstruction.as_series(order):
        raise InternalInconsistencyError(
            f"constant-w residual {const!r} != z*B_k^2 = {obstruction}"
        )
    return wlaurent_nonneg_check(residual, n) and const.is_zero_mod(n)


def max_solvable_order(k: int) -> int:
    """Largest n for which :func:`branch_identity_holds` is true; this is
    the torsion exponent attached to flag level k."""
    n = 1
    if not branch_identity_holds(k, n):
        raise InternalInconsistencyError("identity must hold modulo z")
    while branch_identity_holds(k, n + 1):
        n += 1
    return n
