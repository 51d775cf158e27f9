"""Rescaled second-kind Chebyshev polynomials and rigorous interval maxima.

V_m(x) = U_m(x/2) satisfies V_0 = 1, V_1 = x and V_{m+1} = x V_m - V_{m-1};
on x = 2 cos(t) it equals sin((m+1)t) / sin(t).  Certificate functions in
this package are finite combinations sum_j c_j V_j (ChebCombo).  MonoPoly is
the monomial-basis backend used for root isolation and as an independent
evaluation path; the V-polynomials have integer monomial coefficients, so the
basis change itself introduces no rounding beyond the input coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

_EPS = 2.0 ** -53


def v_eval(m: int, x: float) -> float:
    """Evaluate V_m(x) by the three-term recurrence."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m == 0:
        return 1.0
    prev, cur = 1.0, float(x)
    for _ in range(m - 1):
        prev, cur = cur, x * cur - prev
    return cur


def v_table(m_max: int, xs) -> np.ndarray:
    """Array of shape (m_max + 1, len(xs)) with row m holding V_m(xs)."""
    xs = np.asarray(xs, dtype=float)
    out = np.empty((m_max + 1, xs.size))
    out[0] = 1.0
    if m_max >= 1:
        out[1] = xs
    for m in range(2, m_max + 1):
        out[m] = xs * out[m - 1] - out[m - 2]
    return out


def alpha(m: int) -> float:
    """Largest root of V_m, namely 2 cos(pi / (m + 1))."""
    if m < 1:
        raise ValueError("m must be positive")
    return 2.0 * math.cos(math.pi / (m + 1))


def _trimmed(coeffs) -> tuple[float, ...]:
    vals = [float(c) for c in coeffs]
    while len(vals) > 1 and vals[-1] == 0.0:
        vals.pop()
    if not vals:
        vals = [0.0]
    return tuple(vals)


@dataclass(frozen=True)
class ChebCombo:
    """Finite combination sum_j coeffs[j] * V_j, trailing zeros trimmed."""

    coeffs: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trimmed(self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def c0(self) -> float:
        return self.coeffs[0]

    def __call__(self, x: float) -> float:
        vprev, vcur = 1.0, float(x)  # V_0, V_1
        acc = self.coeffs[0] * vprev
        for c in self.coeffs[1:]:
            acc += c * vcur
            vprev, vcur = vcur, x * vcur - vprev
        return acc


@dataclass(frozen=True)
class MonoPoly:
    """Polynomial in the monomial basis; coeffs[i] multiplies x**i."""

    coeffs: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trimmed(self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_with_error(self, x: float) -> tuple[float, float]:
        """Horner value plus a conservative bound on its rounding error."""
        acc = 0.0
        mag = 0.0
        ax = abs(x)
        for c in reversed(self.coeffs):
            acc = acc * x + c
            mag = mag * ax + abs(c)
        g = 2.0 * max(len(self.coeffs), 2) * _EPS
        return acc, g * mag / (1.0 - g)

    def derivative(self) -> "MonoPoly":
        if len(self.coeffs) == 1:
            return MonoPoly((0.0,))
        return MonoPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i >= 1))

    def __mul__(self, other: "MonoPoly") -> "MonoPoly":
        prod = np.convolve(self.coeffs, other.coeffs)
        return MonoPoly(tuple(float(v) for v in prod))


@lru_cache(maxsize=None)
def _v_mono(m: int) -> tuple[int, ...]:
    # exact integer monomial coefficients of V_m
    if m == 0:
        return (1,)
    if m == 1:
        return (0, 1)
    lower, upper = _v_mono(m - 2), _v_mono(m - 1)
    out = [0] * (m + 1)
    for i, c in enumerate(upper):
        out[i + 1] += c
    for i, c in enumerate(lower):
        out[i] -= c
    return tuple(out)


def to_mono(combo: ChebCombo) -> MonoPoly:
    """Rewrite a V-basis combination in the monomial basis."""
    out = [0.0] * (combo.degree + 1)
    for j, cj in enumerate(combo.coeffs):
        if cj == 0.0:
            continue
        for i, vi in enumerate(_v_mono(j)):
            if vi:
                out[i] += cj * vi
    return MonoPoly(tuple(out))


def from_mono(poly: MonoPoly) -> ChebCombo:
    """Rewrite a monomial polynomial in the V basis."""
    work = list(poly.coeffs)
    out = [0.0] * len(work)
    for d in range(len(work) - 1, -1, -1):
        c = work[d]
        out[d] = c
        if c != 0.0:
            for i, vi in enumerate(_v_mono(d)):
                if vi:
                    work[i] -= c * vi
        work[d] = 0.0  # V_d is monic, so position d is consumed exactly
    return ChebCombo(tuple(out))


def sup_on_interval(p: MonoPoly, a: float, b: float) -> tuple[float, float]:
    """Maximum of p on [a, b] together with its location.

    Candidates are the endpoints and the interior roots of p', isolated by
    sign bisection to interval width 1e-12 after a uniform 256-interval scan;
    scan points where |p'| sits below 1e-12 without a sign change (root
    plateaus) are kept as candidates too.  Every evaluation is widened upward
    by its rounding-error bound, so the returned value never undershoots the
    true supremum.
    """
    if a > b:
        raise ValueError(f"empty interval: a={a} > b={b}")
    candidates = [a, b]
    dp = p.derivative()
    if dp.degree >= 1 and b > a:
        xs = np.linspace(a, b, 257)
        vals = dp(xs)
        for i in range(256):
            lo, hi = vals[i], vals[i + 1]
            if lo == 0.0:
                candidates.append(float(xs[i]))
            elif lo * hi < 0.0:
                candidates.append(_bisect_root(dp, float(xs[i]), float(xs[i + 1])))
        for i in np.nonzero(np.abs(vals) < 1e-12)[0]:
            candidates.append(float(xs[i]))
    best_x, best = a, -math.inf
    for x in candidates:
        v, err = p.eval_with_error(x)
        v += err + 1e-12 * (1.0 + abs(v))
        if v > best:
            best_x, best = x, v
    return best_x, best


def _bisect_root(dp: MonoPoly, lo: float, hi: float) -> float:
    flo = dp(lo)
    while hi - lo > 1e-12:
        mid = 0.5 * (lo + hi)
        fmid = dp(mid)
        if fmid == 0.0:
            return mid
        if (flo < 0.0) != (fmid < 0.0):
            hi = mid
        else:
            lo, flo = mid, fmid
    return 0.5 * (lo + hi)
