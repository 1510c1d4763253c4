"""Bracketing + Newton root finding for Gegenbauer combinations.

The rule formulas guarantee how many simple roots R has inside [-1, 1],
so the solver takes the expected count as input and treats any other
outcome as an error (:class:`CountMismatch`).  Isolation uses a
Chebyshev-distributed scan grid, which clusters points near the interval
ends where several families crowd their roots; a uniform grid starts
missing brackets there at high degree.

A companion-matrix eigenvalue path was deliberately not used: the combos
are cheap to evaluate through the recurrence and the root counts are
known a priori, so bracketing plus safeguarded Newton is simpler and
equally accurate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath
import numpy as np

from .gegenbauer import GegenbauerCombo, eval_combo


class CountMismatch(Exception):
    """Found a different number of root brackets than the formula predicts.

    Signals a formula bug or an invalid family parameter (e.g. the
    negative-delta diagnostic mode, whose roots leave [-1, 1])."""


class NoSignChange(Exception):
    """The supplied bracket does not straddle a sign change."""


@dataclass(frozen=True)
class RootSet:
    roots: tuple
    residuals: tuple
    interval: tuple


def _chebyshev_grid(lo, hi, m: int, extended: bool):
    """m points on [lo, hi] clustered at the ends, sorted ascending."""
    mid = (lo + hi) / 2
    half = (hi - lo) / 2
    if extended:
        pi = mpmath.pi
        return [mid - half * mpmath.cos(pi * k / (m - 1)) for k in range(m)]
    k = np.arange(m)
    return list(mid - half * np.cos(np.pi * k / (m - 1)))


def _scan(p: GegenbauerCombo, grid):
    """Split the grid into exact zeros and sign-change brackets."""
    if isinstance(grid[0], float):
        values = eval_combo(p, np.asarray(grid))[0]
        values = list(np.atleast_1d(values))
    else:
        values = [eval_combo(p, x)[0] for x in grid]
    zeros = []
    brackets = []
    for i in range(len(grid) - 1):
        f0, f1 = values[i], values[i + 1]
        if f0 == 0:
            zeros.append(grid[i])
            continue
        if f1 == 0:
            continue  # picked up as f0 of the next pair
        if (f0 > 0) != (f1 > 0):
            brackets.append((grid[i], grid[i + 1]))
    if values[-1] == 0:
        zeros.append(grid[-1])
    return zeros, brackets


def _default_tol(extended: bool):
    if extended:
        return mpmath.mpf(10) ** (5 - mpmath.mp.dps)
    return 1e-15


def refine_root(p: GegenbauerCombo, bracket, tol=None, extended: bool = False):
    """Refine a single root inside a sign-change bracket.

    Newton iteration with the derivative from :func:`eval_combo`, falling
    back to bisection whenever the Newton step leaves the bracket.
    Deterministic: identical inputs give bit-identical output.
    """
    if tol is None:
        tol = _default_tol(extended)
    lo, hi = bracket
    flo, _ = eval_combo(p, lo)
    fhi, _ = eval_combo(p, hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise NoSignChange(f"no sign change on [{lo}, {hi}]")
    x = (lo + hi) / 2
    for _ in range(60):
        f, df = eval_combo(p, x)
        if f == 0:
            break
        if (f > 0) == (flo > 0):
            lo = x
        else:
            hi = x
        if df != 0:
            step = f / df
            xn = x - step
            # converged: accept the Newton point even if it grazes a
            # bracket end (an endpoint within an ulp of the root would
            # otherwise force futile bisection)
            if abs(step) <= tol:
                return xn if lo <= xn <= hi else x
            if not (lo < xn < hi):
                xn = (lo + hi) / 2
        else:
            xn = (lo + hi) / 2
        if abs(xn - x) <= tol:
            x = xn
            break
        x = xn
    return x


def isolate_and_refine(p: GegenbauerCombo, lo, hi, expected_count: int,
                       tol=None, extended: bool = False) -> RootSet:
    """Find exactly expected_count simple roots of p in [lo, hi].

    Scans a Chebyshev grid of max(64, 8 * expected_count) points, retries
    once at 4x density, and raises :class:`CountMismatch` if the bracket
    count still disagrees with the expectation.
    """
    if p.is_empty:
        raise ValueError("combo is identically zero")
    if expected_count < 0:
        raise ValueError("expected_count must be >= 0")
    m = max(64, 8 * expected_count)
    zeros, brackets = [], []
    for density in (m, 4 * m):
        grid = _chebyshev_grid(lo, hi, density, extended)
        zeros, brackets = _scan(p, grid)
        if len(zeros) + len(brackets) == expected_count:
            break
    else:
        raise CountMismatch(
            f"expected {expected_count} roots in [{lo}, {hi}], "
            f"isolated {len(zeros) + len(brackets)}"
        )
    roots = list(zeros) + [refine_root(p, b, tol=tol, extended=extended)
                           for b in brackets]
    roots.sort()
    residuals = tuple(abs(eval_combo(p, r)[0]) for r in roots)
    return RootSet(roots=tuple(roots), residuals=residuals, interval=(lo, hi))
