"""Direct correlation sums: the reference path every other module is checked against.

Aperiodic correlations are computed by plain sliding products (numpy's
direct correlate, no FFT), so values stay integer-exact for antipodal
inputs and the module can serve as the oracle for the spectral and
asymptotic paths.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .sequences import check_antipodal


@dataclass(frozen=True)
class CorrelationProfile:
    """Aperiodic correlation values over lags -n+1 .. n-1 (2n-1 entries)."""

    values: np.ndarray

    @property
    def n(self) -> int:
        return (len(self.values) + 1) // 2

    def at(self, k: int) -> float:
        """Value at lag k; 0 outside the defined lag range."""
        i = k + self.n - 1
        if i < 0 or i >= len(self.values):
            return 0.0
        return float(self.values[i])

    @property
    def lags(self) -> np.ndarray:
        return np.arange(-self.n + 1, self.n)


@dataclass(frozen=True)
class IslReport:
    """Integrated sidelobe level of a sequence set, term by term.

    auto_terms[p] is the sidelobe energy of sequence p (lag 0 excluded),
    cross_terms[p][q] the full cross-correlation energy of the pair
    (all lags, diagonal empty).  total sums auto terms plus both ordered
    cross terms per pair; normalized is total / n^2.
    """

    auto_terms: np.ndarray
    cross_terms: np.ndarray
    total: float
    normalized: float
    n: int
    m: int


def aperiodic_correlation(a, b) -> CorrelationProfile:
    """Aperiodic cross-correlation X(k) = sum_j a_j * b_{j+k}, k = -n+1 .. n-1."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    values = np.correlate(b, a, mode="full")
    if np.array_equal(a, np.round(a)) and np.array_equal(b, np.round(b)):
        if not np.array_equal(values, np.round(values)):
            raise AssertionError("correlation of integer sequences must be integral")
    return CorrelationProfile(values=values)


def auto_sidelobe_energy(a) -> float:
    """Sum of squared autocorrelations over all nonzero lags."""
    a = check_antipodal(a)
    prof = aperiodic_correlation(a, a)
    v = prof.values
    center = prof.n - 1
    return float(v @ v - v[center] ** 2)


def cross_energy(a, b) -> float:
    """Sum of squared cross-correlations over all lags, lag 0 included."""
    prof = aperiodic_correlation(a, b)
    return float(prof.values @ prof.values)


def isl_report(seqs) -> IslReport:
    """Integrated sidelobe level of a set, assembled term by term.

    Pairs are visited in fixed (p, q) lexicographic order so the
    accumulation is deterministic.
    """
    seqs = [check_antipodal(s) for s in seqs]
    if not seqs:
        raise ValueError("sequence set is empty")
    n = len(seqs[0])
    if any(len(s) != n for s in seqs):
        raise ValueError("all sequences must have equal length")
    m = len(seqs)
    auto = np.array([auto_sidelobe_energy(s) for s in seqs])
    cross = np.zeros((m, m))
    for p in range(m):
        for q in range(p + 1, m):
            e = cross_energy(seqs[p], seqs[q])
            cross[p, q] = e
            cross[q, p] = e
    total = float(auto.sum() + cross.sum())
    return IslReport(
        auto_terms=auto,
        cross_terms=cross,
        total=total,
        normalized=total / n**2,
        n=n,
        m=m,
    )


def periodic_autocorrelation(a) -> np.ndarray:
    """Cyclic autocorrelation at lags 1 .. n-1, from the aperiodic profile.

    out[k-1] = X(k) + X(k-n), which equals sum_j a_j * a_{(j+k) mod n}.
    """
    a = np.asarray(a, dtype=np.float64)
    prof = aperiodic_correlation(a, a).values
    n = len(a)
    # lag k sits at index k + n - 1
    return prof[n:] + prof[:n - 1]
