"""Antipodal sequence construction: primality, Legendre symbols, rotations."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Witnesses sufficient for a deterministic Miller-Rabin test of any n < 3.3e24,
# which comfortably covers the 64-bit range.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test for 64-bit integers."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n: int) -> int:
    """Smallest prime >= n."""
    k = max(n, 2)
    while not is_prime(k):
        k += 1
    return k


def primes_in_range(lo: int, hi: int) -> list[int]:
    """All primes p with lo <= p <= hi, ascending."""
    out = []
    p = next_prime(lo)
    while p <= hi:
        out.append(p)
        p = next_prime(p + 1)
    return out


def _require_odd_prime(n: int) -> None:
    if n == 2 or not is_prime(n):
        raise ValueError(f"n must be an odd prime, got {n}")


def legendre_symbol(j: int, n: int) -> int:
    """Quadratic character of j mod n (n an odd prime): +1, -1 or 0.

    Euler's criterion: j^((n-1)/2) mod n is 1 for nonzero squares and
    n-1 for nonsquares.
    """
    _require_odd_prime(n)
    j %= n
    if j == 0:
        return 0
    s = pow(j, (n - 1) // 2, n)
    return -1 if s == n - 1 else 1


def legendre_sequence(n: int) -> np.ndarray:
    """Length-n antipodal sequence of quadratic residuosity, n an odd prime.

    Element 0 is fixed to +1; element j (j >= 1) is +1 iff j is a square
    mod n.  Built from the set of nonzero squares, which is O(n) instead
    of n modular exponentiations.
    """
    _require_odd_prime(n)
    values = np.full(n, -1, dtype=np.int64)
    squares = (np.arange(1, (n + 1) // 2, dtype=np.int64) ** 2) % n
    values[squares] = 1
    values[0] = 1
    return values


def rotate_left(seq: np.ndarray, t: int) -> np.ndarray:
    """Cyclic left rotation: out[j] = seq[(j + t) mod n]. Negative t allowed."""
    seq = np.asarray(seq)
    return np.roll(seq, -(t % len(seq)))


def check_antipodal(seq) -> np.ndarray:
    """Validate a +-1 sequence and return it as an int64 array."""
    arr = np.asarray(seq)
    values = arr.astype(np.int64)
    if len(values) == 0:
        raise ValueError("sequence must be nonempty")
    if np.any(values != arr) or not np.all(np.abs(values) == 1):
        raise ValueError("sequence entries must be exactly -1 or +1")
    return values


def round_half_up(x: float) -> int:
    # round() uses banker's rounding; offsets need the half-up convention
    return int(np.floor(x + 0.5))


@dataclass(frozen=True)
class RotationSet:
    """M rotation fractions in [0,1) with integer offsets for a bound length.

    fractions are re-derived as t/n once bound so the exact and asymptotic
    paths see identical rotation values.
    """

    fractions: tuple[float, ...]
    offsets: tuple[int, ...] | None = None
    n: int | None = None

    @property
    def m(self) -> int:
        return len(self.fractions)

    def sequences(self) -> list[np.ndarray]:
        """The rotated Legendre sequences this set denotes (bound sets only)."""
        if self.n is None or self.offsets is None:
            raise ValueError("rotation set is not bound to a length")
        base = legendre_sequence(self.n)
        return [rotate_left(base, t) for t in self.offsets]


def bind_rotations(fractions, n: int) -> RotationSet:
    """Resolve rotation fractions to integer offsets for a given odd prime n."""
    _require_odd_prime(n)
    fr = [float(f) for f in fractions]
    if any(f < 0.0 or f >= 1.0 for f in fr):
        raise ValueError("rotation fractions must lie in [0, 1)")
    offsets = tuple(round_half_up(f * n) % n for f in fr)
    return RotationSet(
        fractions=tuple(t / n for t in offsets),
        offsets=offsets,
        n=n,
    )
