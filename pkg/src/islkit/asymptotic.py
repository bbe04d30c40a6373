"""Large-n limits of normalized correlation energies for rotated
Legendre sequence sets, as closed forms in the rotation fractions."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def mod1(x: float) -> float:
    """Fractional part in [0, 1)."""
    # x - floor(x) rounds to exactly 1.0 for x just below an integer
    f = float(x - np.floor(x))
    return 0.0 if f >= 1.0 else f


def re_dilog_on_circle(theta: float) -> float:
    """Real part of the dilogarithm series sum_k z^k / k^2 at z = e^(i*theta).

    Piecewise-quadratic closed form pi^2/6 - |t|(2*pi - |t|)/4 with t the
    angle reduced to [0, 2*pi); periodic in theta.
    """
    t = float(np.mod(theta, 2 * np.pi))
    return np.pi**2 / 6.0 - 0.25 * t * (2 * np.pi - t)


def _check_fraction(f: float) -> float:
    f = float(f)
    if not 0.0 <= f <= 1.0:
        raise ValueError(f"rotation fraction must lie in [0, 1], got {f}")
    return f


def auto_energy_limit(f: float) -> float:
    """Limit of (auto sidelobe energy) / n^2 for rotation fraction f.

    2/3 - 4|f - 1/2| + 8 (f - 1/2)^2; minimum 1/6 at f = 1/4 or 3/4.
    """
    f = _check_fraction(f)
    d = abs(f - 0.5)
    return 2.0 / 3.0 - 4.0 * d + 8.0 * d * d


def cross_energy_limit(fa: float, fb: float) -> float:
    """Limit of (cross-correlation energy) / n^2 for a rotation pair.

    2/3 + 2 (|fa + fb - 1| - 1/2)^2 + 2 (|fa - fb| - 1/2)^2, symmetric in
    (fa, fb); minimum 2/3.
    """
    fa = _check_fraction(fa)
    fb = _check_fraction(fb)
    sum_dev = abs(fa + fb - 1.0) - 0.5
    diff_dev = abs(fa - fb) - 0.5
    return 2.0 / 3.0 + 2.0 * sum_dev**2 + 2.0 * diff_dev**2


@dataclass(frozen=True)
class AsymptoticIsl:
    """Normalized (ISL / n^2) asymptotic value of a rotation set, split
    into auto and cross parts."""

    fractions: tuple[float, ...]
    auto_part: float
    cross_part: float

    @property
    def total(self) -> float:
        return self.auto_part + self.cross_part


def isl_limit(fractions) -> AsymptoticIsl:
    """Asymptotic normalized ISL of a rotation set.

    Cross terms run over ordered pairs (p, q), p != q, so each unordered
    pair contributes twice, mirroring the term structure of the exact
    report.
    """
    fr = tuple(_check_fraction(f) for f in fractions)
    if not fr:
        raise ValueError("rotation set is empty")
    auto = sum(auto_energy_limit(f) for f in fr)
    cross = 0.0
    for p in range(len(fr)):
        for q in range(len(fr)):
            if p != q:
                cross += cross_energy_limit(fr[p], fr[q])
    return AsymptoticIsl(fractions=fr, auto_part=auto, cross_part=cross)


def isl_limit_batch(fracs: np.ndarray) -> np.ndarray:
    """isl_limit totals for a batch of rotation tuples, shape (B, M)."""
    f = np.asarray(fracs, dtype=np.float64)
    d = np.abs(f - 0.5)
    total = np.sum(2.0 / 3.0 - 4.0 * d + 8.0 * d * d, axis=1)
    m = f.shape[1]
    for p in range(m):
        for q in range(p + 1, m):
            sum_dev = np.abs(f[:, p] + f[:, q] - 1.0) - 0.5
            diff_dev = np.abs(f[:, p] - f[:, q]) - 0.5
            total += 2.0 * (2.0 / 3.0 + 2.0 * sum_dev**2 + 2.0 * diff_dev**2)
    return total
