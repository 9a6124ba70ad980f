"""Collocation solvers for the linear second-kind Volterra-Fredholm equation

    u(t) - int_a^t k1(t,s) u(s) ds - int_a^b k2(t,s) u(s) ds = g(t).

Four flavours.  The boundary-corrected methods (se-new, de-new) collocate
a sinc interpolant whose coefficients are the solution values at the
nodes, so their matrix is simply I - V - K.  The two original variants
(se-shamloo, de-johnogbonna) keep the boundary hats as separate basis
columns, which puts transformed entries in the first and last columns
(and, for de-johnogbonna, moves the extreme collocation rows onto the
interval endpoints, where its kernels and right-hand side must therefore
be evaluable).
"""

import math
import warnings
from dataclasses import dataclass
from typing import Callable

import numpy as np
import scipy.linalg

from .approx import (
    SincGrid,
    approximate,
    build_grid,
    evaluate_many,
    _boundary_pair,
    _cardinal_rows,
    _checked_points,
    _exact_node_indices,
    _invert_many,
)
from .special import sine_integral
from .transforms import Interval, Method, TransformKind, strip_limit

__all__ = [
    "Problem",
    "DiscreteSolution",
    "AssemblyError",
    "SingularMatrixError",
    "ConditioningWarning",
    "grid_for",
    "assemble_new",
    "assemble_shamloo",
    "assemble_johnogbonna",
    "solve_linear",
    "solve",
    "evaluate_solution",
    "evaluate_solution_many",
]

# rcond below this is treated as numerically singular (warning channel).
RCOND_FLOOR = 100.0 * np.finfo(float).eps


class AssemblyError(ValueError):
    """A kernel or right-hand side returned a non-finite value during assembly."""


class SingularMatrixError(RuntimeError):
    """The collocation matrix factorized with an exactly zero pivot."""


class ConditioningWarning(RuntimeWarning):
    """The collocation matrix is numerically singular or nearly so."""


@dataclass(frozen=True)
class Problem:
    """Equation data: running kernel k1, full-interval kernel k2, right-hand
    side g, endpoint regularity exponent alpha, and the strip half-widths
    used by the mesh rules of the tanh (d_se) and tanh-sinh (d_de) maps."""

    iv: Interval
    k1: Callable[[float, float], float]
    k2: Callable[[float, float], float]
    g: Callable[[float], float]
    alpha: float
    d_se: float
    d_de: float

    def __post_init__(self):
        if not 0.0 < self.alpha <= 1.0:
            raise ValueError(f"alpha must lie in (0, 1], got {self.alpha}")
        if not 0.0 < self.d_se < strip_limit(TransformKind.SE):
            raise ValueError(f"d_se must lie in (0, pi), got {self.d_se}")
        if not 0.0 < self.d_de < strip_limit(TransformKind.DE):
            raise ValueError(f"d_de must lie in (0, pi/2), got {self.d_de}")


@dataclass(frozen=True, eq=False)
class DiscreteSolution:
    """Solved collocation system: coefficients c_{-N}..c_N over `grid`.

    For se-new/de-new the coefficients are the solution values at the grid
    points; the original variants lack that property.  `condition_hint` is
    the LAPACK reciprocal condition estimate of the collocation matrix in
    the infinity norm.
    """

    method: Method
    grid: SincGrid
    coeffs: np.ndarray
    condition_hint: float

    def __post_init__(self):
        self.coeffs.setflags(write=False)


def grid_for(problem: Problem, method: Method, N: int,
             parametric_baseline: bool = False) -> SincGrid:
    """The grid `solve` uses for this method: the method's transform with
    the matching strip half-width from the problem."""
    kind = method.transform
    d = problem.d_se if kind is TransformKind.SE else problem.d_de
    return build_grid(kind, problem.iv, method, problem.alpha, d, N, parametric_baseline)


def assemble_new(problem: Problem, method: Method, N: int):
    """Collocation system (A, rhs) of a boundary-corrected method:
    A = I - V - K with V_ij = k1(t_i,t_j) w_j J_{i-j} and
    K_ij = k2(t_i,t_j) w_j h, rhs_i = g(t_i)."""
    if method.is_original:
        raise ValueError(f"assemble_new handles se-new/de-new, got {method.value}")
    grid = grid_for(problem, method, N)
    pts, w, h, n = grid.points, grid.weights, grid.h, grid.n
    k1 = _sample_bivariate(problem.k1, "k1", pts, pts)
    k2 = _sample_bivariate(problem.k2, "k2", pts, pts)
    jmat = _offset_matrix(grid.mesh.N, h)
    A = np.eye(n) - k1 * w[None, :] * jmat - k2 * w[None, :] * h
    rhs = _sample_univariate(problem.g, "g", pts)
    return A, rhs


def assemble_shamloo(problem: Problem, N: int):
    """Collocation system of the original tanh-map variant.

    Interior columns look like the boundary-corrected system; the first
    and last columns carry the discrete operators applied to the boundary
    hats, because the hats are kept as explicit basis functions.
    """
    grid = grid_for(problem, Method.SHAMLOO_SE, N)
    pts, w, h, n = grid.points, grid.weights, grid.h, grid.n
    jmat = _offset_matrix(grid.mesh.N, h)
    k1 = _sample_bivariate(problem.k1, "k1", pts, pts)
    k2 = _sample_bivariate(problem.k2, "k2", pts, pts)
    wa, wb = _boundary_pair(grid.iv, pts)

    E = np.zeros((n, n))
    E[:, 0] = wa
    E[:, -1] = wb
    inner = np.arange(1, n - 1)
    E[inner, inner] += 1.0

    A = E - _hat_columns(k1, w, jmat, wa, wb) - _hat_columns(k2, w, None, wa, wb, h=h)
    rhs = _sample_univariate(problem.g, "g", pts)
    return A, rhs


def assemble_johnogbonna(problem: Problem, N: int, parametric_baseline: bool = False):
    """Collocation system of the original half-argument tanh-sinh variant.

    Its extreme collocation points sit on t = a and t = b themselves (the
    interior ones are the transform nodes), so k1, k2 and g must be
    evaluable at the endpoints; the running-integral factors degenerate
    there to 0 (first row) and h (last row).
    """
    grid = grid_for(problem, Method.JOHN_OGBONNA_DE, N, parametric_baseline)
    pts, w, h, n = grid.points, grid.weights, grid.h, grid.n
    coll = pts.copy()
    coll[0] = grid.iv.a
    coll[-1] = grid.iv.b
    jmat = _offset_matrix(grid.mesh.N, h).copy()
    jmat[0, :] = 0.0
    jmat[-1, :] = h
    k1 = _sample_bivariate(problem.k1, "k1", coll, pts)
    k2 = _sample_bivariate(problem.k2, "k2", coll, pts)
    wa, wb = _boundary_pair(grid.iv, pts)
    wa_c, wb_c = _boundary_pair(grid.iv, coll)

    E = np.zeros((n, n))
    inner = np.arange(1, n - 1)
    E[inner, 0] = wa_c[inner]
    E[inner, -1] = wb_c[inner]
    E[inner, inner] += 1.0
    E[0, 0] = 1.0
    E[-1, -1] = 1.0

    A = E - _hat_columns(k1, w, jmat, wa, wb) - _hat_columns(k2, w, None, wa, wb, h=h)
    rhs = _sample_univariate(problem.g, "g", coll)
    return A, rhs


def _hat_columns(kernel, w, jmat, wa, wb, h=None):
    """Discrete operator matrix in the hat-augmented basis.

    Interior columns hold the plain per-node terms; the first and last
    columns hold the operator applied to the boundary hats, i.e. the
    row-wise sums with the hat sampled at the quadrature nodes.  `jmat`
    carries the running-integral factors; `h` the plain quadrature weight.
    """
    factor = jmat if jmat is not None else h
    terms = kernel * w[None, :] * factor
    out = np.zeros_like(terms)
    out[:, 1:-1] = terms[:, 1:-1]
    if jmat is not None:
        out[:, 0] = (kernel * wa[None, :] * w[None, :] * jmat).sum(axis=1)
        out[:, -1] = (kernel * wb[None, :] * w[None, :] * jmat).sum(axis=1)
    else:
        out[:, 0] = (kernel * wa[None, :] * w[None, :]).sum(axis=1) * h
        out[:, -1] = (kernel * wb[None, :] * w[None, :]).sum(axis=1) * h
    return out


def _offset_table(N, h):
    """J(j,h)(ih) depends on i - j only: tabulate h(1/2 + Si(pi m)/pi) for
    m = -2N..2N, one sine-integral call per diagonal offset."""
    return np.array([h * (0.5 + sine_integral(math.pi * m) / math.pi)
                     for m in range(-2 * N, 2 * N + 1)])


def _offset_matrix(N, h):
    table = _offset_table(N, h)
    idx = np.arange(2 * N + 1)
    return table[idx[:, None] - idx[None, :] + 2 * N]


def _sample_bivariate(func, name, trow, scol):
    vals = np.empty((len(trow), len(scol)))
    for i, t in enumerate(trow):
        for j, s in enumerate(scol):
            vals[i, j] = func(t, s)
    if not np.all(np.isfinite(vals)):
        i, j = np.argwhere(~np.isfinite(vals))[0]
        raise AssemblyError(
            f"{name}({trow[i]!r}, {scol[j]!r}) returned {vals[i, j]} during assembly"
        )
    return vals


def _sample_univariate(func, name, ts):
    vals = np.array([func(t) for t in ts], dtype=float)
    if not np.all(np.isfinite(vals)):
        i = int(np.argwhere(~np.isfinite(vals))[0][0])
        raise AssemblyError(f"{name}({ts[i]!r}) returned {vals[i]} during assembly")
    return vals


def solve_linear(A, rhs):
    """Solve A c = rhs by LU with partial pivoting.

    Returns (c, rcond) where rcond is the LAPACK reciprocal condition
    estimate taken from the factorization.  An exactly zero pivot raises
    SingularMatrixError.
    """
    A = np.asarray(A, dtype=float)
    rhs = np.asarray(rhs, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"matrix must be square, got shape {A.shape}")
    if rhs.shape != (A.shape[0],):
        raise ValueError(f"rhs shape {rhs.shape} does not match order {A.shape[0]}")
    anorm = np.linalg.norm(A, np.inf)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
        lu, piv = scipy.linalg.lu_factor(A)
    if np.any(np.diag(lu) == 0.0):
        raise SingularMatrixError(
            f"exactly singular pivot in order-{A.shape[0]} collocation matrix"
        )
    rcond, info = scipy.linalg.lapack.dgecon(lu, anorm, norm="I")
    if info != 0:
        raise RuntimeError(f"dgecon failed with info={info}")
    c = scipy.linalg.lu_solve((lu, piv), rhs)
    return c, float(rcond)


def solve(problem: Problem, method: Method, N: int,
          parametric_baseline: bool = False) -> DiscreteSolution:
    """Assemble and solve the collocation system of `method` at index N.

    A numerically singular system (rcond below 100 eps) is reported
    through ConditioningWarning rather than raised: invertibility is only
    guaranteed for N large enough, and sweeps should report, not crash.
    """
    if method is Method.SHAMLOO_SE:
        A, rhs = assemble_shamloo(problem, N)
    elif method is Method.JOHN_OGBONNA_DE:
        A, rhs = assemble_johnogbonna(problem, N, parametric_baseline)
    else:
        A, rhs = assemble_new(problem, method, N)
    coeffs, rcond = solve_linear(A, rhs)
    if rcond < RCOND_FLOOR:
        warnings.warn(
            f"collocation matrix of {method.value} at N={N} is numerically "
            f"singular (rcond={rcond:.3e}); solution may be unreliable",
            ConditioningWarning,
            stacklevel=2,
        )
    grid = grid_for(problem, method, N, parametric_baseline)
    return DiscreteSolution(method=method, grid=grid, coeffs=coeffs, condition_hint=rcond)


def evaluate_solution(sol: DiscreteSolution, t: float) -> float:
    """Approximate solution value at one point of [a, b]."""
    return float(evaluate_solution_many(sol, np.array([float(t)]))[0])


def evaluate_solution_many(sol: DiscreteSolution, ts) -> np.ndarray:
    """Approximate solution values on an array of points in [a, b].

    se-new/de-new evaluate the boundary-corrected interpolant through the
    coefficients (so nodal values reproduce c_i exactly); the original
    variants use their hat-plus-interior-cardinal expansion, for which the
    nodal values are a genuine sum, not c_i.
    """
    grid = sol.grid
    c = sol.coeffs
    if not sol.method.is_original:
        return evaluate_many(approximate(grid, c), ts)
    ts = _checked_points(grid.iv, ts)
    wa, wb = _boundary_pair(grid.iv, ts)
    xs = _invert_many(grid.kind, grid.iv, ts)
    rows = _cardinal_rows(grid.mesh.N, grid.h, xs)
    out = c[0] * wa + c[-1] * wb + rows[:, 1:-1] @ c[1:-1]
    node = _exact_node_indices(grid.points, ts, grid.iv)
    hit = node >= 0
    if np.any(hit):
        ni = node[hit]
        interior = np.where((ni >= 1) & (ni <= grid.n - 2),
                            c[np.clip(ni, 1, grid.n - 2)], 0.0)
        out[hit] = c[0] * wa[hit] + c[-1] * wb[hit] + interior
    return out
