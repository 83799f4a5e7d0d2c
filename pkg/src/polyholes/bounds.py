"""Closed-form perimeter quantities and bounds on the maximum-hole function f(n).

Everything involving ``ceil(2*sqrt(x))`` is done with :func:`math.isqrt`;
floating point only enters the real-valued comparisons of
:func:`theorem2_check`, with :data:`REAL_SLACK` of tolerance.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import constructions as con
from .errors import BelowDomain, ConsistencyFailure, DomainError, PreconditionViolation

REAL_SLACK = 1e-9
C1_MIN = math.sqrt(5 / 2)
C2_MAX = math.sqrt(3 / 2)

nk = con.nk
hk = con.hk


def ceil_sqrt(m: int) -> int:
    """Exact ceil(sqrt(m)) for integer m >= 0."""
    if m < 0:
        raise ValueError("m must be >= 0")
    if m == 0:
        return 0
    return math.isqrt(m - 1) + 1


def ceil_2sqrt(x: int) -> int:
    """ceil(2*sqrt(x)) = ceil(sqrt(4x))."""
    return ceil_sqrt(4 * x)


def _need_n(n: int) -> None:
    if n < 1:
        raise DomainError("n must be >= 1")


def p_min(n: int) -> int:
    """Minimum perimeter of an n-omino, 2*ceil(2*sqrt(n))."""
    _need_n(n)
    return 2 * ceil_2sqrt(n)


def b_min(n: int) -> int:
    _need_n(n)
    return n - 1


def p_max_upper(n: int) -> int:
    """4n - 2*b_min(n); attained exactly by tree-like polyominoes."""
    _need_n(n)
    return 4 * n - 2 * b_min(n)


def ub_from_lb(n: int, lb: int) -> int:
    """Upper bound on f(n) given any lower bound ``lb <= f(n)``.

    floor(n/2 - ceil(2*sqrt(n + lb))/2 + 1/2), in integers.
    """
    _need_n(n)
    if lb < 0:
        raise DomainError("lb must be >= 0")
    return (n - ceil_2sqrt(n + lb) + 1) // 2


def _fixed_point_ok(n: int, h: int) -> bool:
    # 4h <= 4n - 2*b_min(n) - p_min(n + h)
    return 4 * h <= 4 * n - 2 * (n - 1) - 2 * ceil_2sqrt(n + h)


def ub_fixed_point(n: int) -> int:
    """Largest h in [0, n] with 4h <= 2n + 2 - 2*ceil(2*sqrt(n + h)).

    The right side does not increase with h, so the feasible set is an
    initial segment and binary search finds its end.
    """
    _need_n(n)
    lo, hi = 0, n
    if not _fixed_point_ok(n, 0):
        raise ConsistencyFailure(f"no feasible h for n={n}")
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if _fixed_point_ok(n, mid):
            lo = mid
        else:
            hi = mid - 1
    return lo


def g_of_hk(k: int) -> int:
    return nk(k) - 1


def exact_formula(n: int) -> float:
    """n/2 - sqrt(3n/2 + 1/4) + 1/2, as a float."""
    _need_n(n)
    return n / 2 - math.sqrt(1.5 * n + 0.25) + 0.5


def exact_formula_rational(n: int) -> Fraction | None:
    """Exact value of :func:`exact_formula` when ``6n + 1`` is a perfect square.

    sqrt(3n/2 + 1/4) = sqrt(6n + 1) / 2, so the expression is rational exactly
    then; otherwise None.
    """
    _need_n(n)
    r = math.isqrt(6 * n + 1)
    if r * r != 6 * n + 1:
        return None
    return Fraction(n + 1 - r, 2)


def theorem1_values(k: int) -> tuple[int, int, int]:
    """(f(n_k), f(n_k - 1), f(n_k - 2)) = (h_k, h_k, h_k - 1), recomputed.

    Each value is rederived from the S_k and A_k constructions and the
    lower-to-upper bound conversion; any mismatch raises ConsistencyFailure.
    """
    n, h = nk(k), hk(k)
    s = con.build_S(k)
    a = con.build_A(k)

    # f(n_k): construction gives lb, the bound closes the gap to below h + 1
    lb = s.measured_holes
    if s.tiles != n or ub_from_lb(n, lb) != lb:
        raise ConsistencyFailure(f"k={k}: S_k does not pin f(n_k)")
    f_nk = lb

    # f(n_k - 1): A_k attains h_k and f is nondecreasing
    if a.tiles != n - 1 or a.measured_holes != f_nk:
        raise ConsistencyFailure(f"k={k}: A_k does not attain h_k with n_k - 1 tiles")
    f_nk1 = a.measured_holes

    # f(n_k - 2): assuming f = h_k there contradicts the bound, and f steps by <= 1
    if not ub_from_lb(n - 2, f_nk1) < f_nk1:
        raise ConsistencyFailure(f"k={k}: bound does not exclude f(n_k - 2) = h_k")
    f_nk2 = f_nk1 - 1

    values = (f_nk, f_nk1, f_nk2)
    if values != (h, h, h - 1):
        raise ConsistencyFailure(f"k={k}: recomputed {values} != closed form {(h, h, h - 1)}")
    return values


def best_construction_lb(n: int) -> int:
    """Holes of the best known construction with at most n tiles.

    Extra tiles can always be attached without losing holes, so this is a
    lower bound on f(n).  Uses the verified closed-form counts of A_k, R_{k,l}
    and R'_n rather than building the shapes.
    """
    _need_n(n)
    best = 0
    k = 1
    while nk(k) - 1 <= n:
        best = hk(k)
        k += 1
    k = 1
    while con.m_k(k) <= n:
        l = min(n - con.m_k(k), con.extension_capacity(k))
        best = max(best, con.t_k(k) + l // 2)
        k += 1
    return best


@dataclass(frozen=True)
class BoundsReport:
    n: int
    p_min: int
    ub_from_lb: int | None
    ub_fixed_point: int
    lb_construction: int | None
    exact_formula_value: float

    def __post_init__(self):
        if self.lb_construction is not None and self.lb_construction > self.ub_fixed_point:
            raise ConsistencyFailure(
                f"n={self.n}: construction lb {self.lb_construction} exceeds bound {self.ub_fixed_point}"
            )

    CSV_HEADER = ("n", "p_min", "ub_fixed_point", "lb_construction", "ub_from_lb")

    def csv_row(self) -> tuple:
        def fmt(v):
            return "" if v is None else v

        return (self.n, self.p_min, self.ub_fixed_point, fmt(self.lb_construction), fmt(self.ub_from_lb))


def bounds_report(n: int, lb: int | None = None) -> BoundsReport:
    """Bounds at n.  ``lb`` defaults to the best construction lower bound."""
    lb_con = best_construction_lb(n)
    use = lb_con if lb is None else lb
    return BoundsReport(
        n=n,
        p_min=p_min(n),
        ub_from_lb=ub_from_lb(n, use),
        ub_fixed_point=ub_fixed_point(n),
        lb_construction=lb_con,
        exact_formula_value=exact_formula(n),
    )


# Asymptotic sandwich ---------------------------------------------------------------


@dataclass(frozen=True)
class Theorem2Result:
    n: int
    lower: float
    upper: float
    lb_construction: int
    ub: int
    holds: bool


def check_constants(c1: float, c2: float) -> None:
    if not c1 > C1_MIN:
        raise PreconditionViolation(f"C1={c1!r} must exceed sqrt(5/2)={C1_MIN!r}")
    if not c2 < C2_MAX:
        raise PreconditionViolation(f"C2={c2!r} must be below sqrt(3/2)={C2_MAX!r}")


def theorem2_check(n: int, c1: float, c2: float, *, build: bool = True) -> Theorem2Result:
    """Evaluate n/2 - C1*sqrt(n) <= holes(R'_n) and ub_from_lb(n, holes) <= n/2 - C2*sqrt(n).

    With ``build=True`` the hole count is measured on the constructed R'_n.
    """
    if n < con.R_PRIME_MIN_N:
        raise BelowDomain(f"n={n} is below the construction domain n >= {con.R_PRIME_MIN_N}")
    check_constants(c1, c2)
    if build:
        lb = con.build_R_prime(n).measured_holes
    else:
        lb = con.r_prime_holes(n)
    ub = ub_from_lb(n, lb)
    root = math.sqrt(n)
    lower = n / 2 - c1 * root
    upper = n / 2 - c2 * root
    holds = lower <= lb + REAL_SLACK and ub <= upper + REAL_SLACK
    return Theorem2Result(n, lower, upper, lb, ub, holds)


def empirical_n0(results) -> int | None:
    """Smallest n in the scanned range after which every check holds.

    ``results`` must be sorted by n.  Returns None if the last one fails.
    """
    n0 = None
    for r in results:
        if not r.holds:
            n0 = None
        elif n0 is None:
            n0 = r.n
    return n0


# Inequality chain for the lower bound ------------------------------------------


def chain_40k2(k: int, l, c1: float):
    """C1*sqrt(40k^2 + 20k + l) >= 10k + 1.  ``l`` may be an integer array."""
    return c1 * np.sqrt(40 * k * k + 20 * k + l) >= 10 * k + 1 - REAL_SLACK


def chain_20k2(k: int, l, c1: float):
    """20k^2 + floor(l/2) >= (40k^2 + 20k + l)/2 - C1*sqrt(40k^2 + 20k + l)."""
    m = 40 * k * k + 20 * k + l
    return 20 * k * k + l // 2 >= m / 2 - c1 * np.sqrt(m) - REAL_SLACK
