"""Minimization of the asymptotic normalized ISL over rotation fractions.

The objective is permutation invariant and piecewise quadratic with
seams along the absolute-value arguments, so the search is derivative
free: an exhaustive lattice scan over sorted tuples followed by
coordinate descent with a shrinking step.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace

import numpy as np

from .asymptotic import isl_limit, isl_limit_batch
from .correlation import isl_report
from .sequences import bind_rotations

DEFAULT_GRID_BUDGET = 10**8


@dataclass(frozen=True)
class ExactCheck:
    """Exact ISL of the rotation set realized at a concrete prime length."""

    n: int
    offsets: tuple[int, ...]
    realized_fractions: tuple[float, ...]
    total: float
    normalized: float


@dataclass(frozen=True)
class OptResult:
    """Optimizer output: canonical (sorted) fractions and their value."""

    fractions: tuple[float, ...]
    asym_value: float
    grid_resolution: int
    refinement_steps: int
    exact_check: ExactCheck | None = None


def grid_search(m: int, resolution: int, budget: int = DEFAULT_GRID_BUDGET) -> OptResult:
    """Exhaustive scan of the lattice {0, 1/R, ..., (R-1)/R}^m.

    Only sorted tuples are visited (the objective is permutation
    invariant); ties go to the lexicographically smallest tuple.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if resolution < 8:
        raise ValueError("resolution must be >= 8")
    if resolution**m > budget:
        raise ValueError(
            f"lattice of {resolution}^{m} points exceeds the budget of {budget}"
        )
    combos = np.array(
        list(itertools.combinations_with_replacement(range(resolution), m)),
        dtype=np.float64,
    )
    best_val = np.inf
    best_row = None
    chunk = 1_000_000
    for i0 in range(0, len(combos), chunk):
        block = combos[i0:i0 + chunk] / resolution
        vals = isl_limit_batch(block)
        j = int(np.argmin(vals))
        if vals[j] < best_val:
            best_val = float(vals[j])
            best_row = block[j]
    return OptResult(
        fractions=tuple(best_row),
        asym_value=best_val,
        grid_resolution=resolution,
        refinement_steps=0,
    )


def refine_local(fractions, tol: float, initial_step: float = 1.0 / 64) -> tuple[float, ...]:
    """Coordinate descent on the asymptotic ISL with step halving.

    Probes each coordinate at +-step (clamped to [0, 1]), sweeps until no
    move improves, halves the step, and stops once the step drops below
    tol.  The returned value never exceeds the starting value.
    """
    f, _ = _descend(fractions, tol, initial_step)
    return tuple(f)


def _descend(fractions, tol, initial_step):
    f = np.clip(np.asarray(fractions, dtype=np.float64), 0.0, 1.0)
    best = isl_limit(f).total
    moves = 0
    for _ in range(100):  # full schedule passes; normally 2 suffice
        moved_in_pass = False
        step = initial_step
        while step >= tol:
            improved = True
            while improved:
                improved = False
                for i in range(len(f)):
                    for cand in (f[i] + step, f[i] - step):
                        if not 0.0 <= cand <= 1.0:
                            continue
                        old = f[i]
                        f[i] = cand
                        val = isl_limit(f).total
                        if val < best - 1e-15:
                            best = val
                            improved = True
                            moved_in_pass = True
                            moves += 1
                        else:
                            f[i] = old
            step /= 2.0
        if not moved_in_pass:
            break
    return f, moves


def optimize_rotations(m: int, resolution: int | None = None, tol: float = 1e-6,
                       budget: int = DEFAULT_GRID_BUDGET) -> OptResult:
    """Grid search then local refinement, canonicalized and deterministic.

    resolution defaults to the largest power of two <= 512 whose full
    lattice stays inside the point budget for this m.
    """
    if resolution is None:
        resolution = default_resolution(m, budget)
    coarse = grid_search(m, resolution, budget=budget)
    refined, moves = _descend(coarse.fractions, tol, 1.0 / resolution)
    final = tuple(sorted(float(x) for x in refined))
    return OptResult(
        fractions=final,
        asym_value=isl_limit(final).total,
        grid_resolution=resolution,
        refinement_steps=moves,
    )


def default_resolution(m: int, budget: int = DEFAULT_GRID_BUDGET) -> int:
    """Largest power-of-two resolution <= 512 whose full lattice fits the
    budget."""
    r = 512
    while r > 8 and r**m > budget:
        r //= 2
    return r


def exact_validate(result: OptResult, n: int) -> OptResult:
    """Realize the rotations at prime length n and attach the exact ISL."""
    rset = bind_rotations([f % 1.0 for f in result.fractions], n)
    report = isl_report(rset.sequences())
    check = ExactCheck(
        n=n,
        offsets=rset.offsets,
        realized_fractions=rset.fractions,
        total=report.total,
        normalized=report.normalized,
    )
    return replace(result, exact_check=check)
