"""Vertex-count certificates for regular graphs with a bounded second eigenvalue.

The rescaled adjacency spectrum of a connected k-regular graph carries a
probability measure whose V_m moments are all nonnegative.  Any combination
f = sum c_j V_j with c_j >= 0 whose downshift f - c_0 is strictly negative on
I1 = [-L, z/sqrt(k-1)], with L = k/sqrt(k-1), forces measure onto
I2 = [z/sqrt(k-1), L]; writing M_j = sup_{I_j} f this yields the vertex bound

    v(k, z) <= (M2 - M1) / (c_0 - M1).

The module builds the certificate families F_m = sum_{j<=m} V_{2j} (equal to
V_m^2), their quotients fhat_m = F_m / (x - alpha_m), and shifted variants,
and turns any admissible combination into a BoundCertificate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .chebyshev import (
    ChebCombo,
    _v_mono,
    alpha,
    sup_on_interval,
    to_mono,
    v_eval,
)
from .errors import InfeasibleCertificate

_REL_WIDEN = 1e-9
_GOLDEN_MARGIN = 1e-6
_GOLDEN_ITERS = 60


@dataclass(frozen=True)
class IntervalSplit:
    """The two halves of [-L, L] induced by the rescaled threshold."""

    L: float
    z_scaled: float

    def __post_init__(self):
        if not -self.L <= self.z_scaled < self.L:
            raise ValueError(
                f"threshold {self.z_scaled} outside [-L, L) with L={self.L}"
            )

    @classmethod
    def for_graph(cls, k: int, z: float) -> "IntervalSplit":
        if k < 3:
            raise ValueError("degree k must be at least 3")
        rt = math.sqrt(k - 1.0)
        if not z < 2.0 * rt:
            raise ValueError(f"need z < 2*sqrt(k-1) = {2.0 * rt}, got z = {z}")
        return cls(L=k / rt, z_scaled=z / rt)

    @property
    def i1(self) -> tuple[float, float]:
        return (-self.L, self.z_scaled)

    @property
    def i2(self) -> tuple[float, float]:
        return (self.z_scaled, self.L)


@dataclass(frozen=True)
class BoundCertificate:
    """Reproducible record of one vertex-bound computation."""

    k: int
    z: float
    method: str  # linear | two_term | nterm | machine | downshift
    f: ChebCombo
    s: float | None
    m: int | None
    M1: float
    M2: float
    c0: float
    vertex_bound: float
    vertex_bound_int: int

    @property
    def constant(self) -> float:
        """Measure lower bound (c0 - M1)/(M2 - M1), i.e. 1/vertex_bound."""
        return 1.0 / self.vertex_bound


def _widen_up(v: float) -> float:
    return v + _REL_WIDEN * max(1.0, abs(v))


def _int_floor(bound: float) -> int:
    # vertex counts are integers; values within 1e-9 of an integer snap to it
    nearest = round(bound)
    if abs(bound - nearest) <= 1e-9:
        return int(nearest)
    return math.floor(bound)


def f_big(m: int) -> ChebCombo:
    """F_m = sum_{j=0}^m V_{2j}, a degree-2m combination equal to V_m^2."""
    if m < 1:
        raise ValueError("m must be positive")
    coeffs = [0.0] * (2 * m + 1)
    for j in range(m + 1):
        coeffs[2 * j] = 1.0
    return ChebCombo(tuple(coeffs))


def _clamp_tiny(vals: list[float]) -> list[float]:
    return [0.0 if -1e-12 < v < 0.0 else v for v in vals]


def f_hat(m: int) -> ChebCombo:
    """F_m / (x - alpha_m) via its closed-form V-basis coefficients.

    c_{2t}   = sum_{i=0}^{m-1-t} V_{2i+1}(alpha_m)
    c_{2t+1} = sum_{i=0}^{m-1-t} V_{2i}(alpha_m)

    All coefficients are nonnegative and c_0 = 0.
    """
    if m < 1:
        raise ValueError("m must be positive")
    a = alpha(m)
    vals = [v_eval(j, a) for j in range(2 * m)]
    coeffs = [0.0] * (2 * m)
    for t in range(m):
        coeffs[2 * t] = sum(vals[2 * i + 1] for i in range(m - t))
        coeffs[2 * t + 1] = sum(vals[2 * i] for i in range(m - t))
    return ChebCombo(tuple(_clamp_tiny(coeffs)))


def y_poly(m: int) -> ChebCombo:
    """V_m^2 / (x - alpha_m) by synthetic division; cross-check for f_hat.

    The squared coefficients are exact integers; the division and the basis
    change run in extended precision so the result stays well inside the
    1e-9 agreement demanded of the two constructions up to m = 12.
    """
    if m < 1:
        raise ValueError("m must be positive")
    vm = np.array(_v_mono(m), dtype=np.longdouble)
    square = np.convolve(vm, vm)
    pi_ld = np.longdouble("3.141592653589793238462643383279502884")
    root = 2.0 * np.cos(pi_ld / (m + 1))
    deg = len(square) - 1
    quotient = np.zeros(deg, dtype=np.longdouble)
    carry = square[deg]
    for i in range(deg - 1, -1, -1):
        quotient[i] = carry
        carry = square[i] + root * carry
    if abs(float(carry)) > 1e-8:
        raise ArithmeticError(
            f"remainder {float(carry)} dividing V_{m}^2 by (x - alpha_{m})"
        )
    work = quotient.copy()
    coeffs = [0.0] * deg
    for d in range(deg - 1, -1, -1):
        c = work[d]
        coeffs[d] = float(c)
        if c != 0:
            for i, vi in enumerate(_v_mono(d)):
                if vi:
                    work[i] -= c * vi
        work[d] = 0
    return ChebCombo(tuple(_clamp_tiny(coeffs)))


def shift_expand(combo: ChebCombo, s: float) -> ChebCombo:
    """Coefficients of x -> combo(x + s) in the V basis.

    For nonnegative input coefficients and s > 0 the output coefficients are
    again nonnegative, and the constant term is strictly positive whenever the
    input is nonzero.
    """
    if not s > 0.0:
        raise ValueError("shift s must be positive")
    if any(c < -1e-12 for c in combo.coeffs):
        raise ValueError("shift_expand requires nonnegative coefficients")
    n = combo.degree
    # rows[j][i] = coefficient of V_i in V_j(x + s)
    rows: list[list[float]] = [[1.0]]
    if n >= 1:
        rows.append([s, 1.0])
    for j in range(2, n + 1):
        prev, prev2 = rows[j - 1], rows[j - 2]
        out = [0.0] * (j + 1)
        for i, e in enumerate(prev):  # x * V_i = V_{i+1} + V_{i-1}, V_{-1} = 0
            out[i + 1] += e
            if i >= 1:
                out[i - 1] += e
            out[i] += s * e
        for i, e in enumerate(prev2):
            out[i] -= e
        rows.append(out)
    acc = [0.0] * (n + 1)
    for j, cj in enumerate(combo.coeffs):
        if cj == 0.0:
            continue
        for i, e in enumerate(rows[j]):
            acc[i] += cj * e
    return ChebCombo(tuple(_clamp_tiny(acc)))


def bound_from_function(
    f: ChebCombo, k: int, z: float, *, method: str = "downshift"
) -> BoundCertificate:
    """Turn an admissible nonnegative combination into a vertex bound.

    Requires every coefficient of f nonnegative and f - c_0 strictly negative
    on I1 (checked via the rigorous interval supremum).  M1, M2 are widened
    upward and c_0 downward before the final division, so the claimed bound
    stays valid under rounding.
    """
    split = IntervalSplit.for_graph(k, z)
    if any(c < -1e-12 for c in f.coeffs):
        raise ValueError("certificate coefficients must be nonnegative")
    p = to_mono(f)
    _, m1 = sup_on_interval(p, *split.i1)
    _, m2 = sup_on_interval(p, *split.i2)
    c0 = max(f.coeffs[0], 0.0)
    m1w = _widen_up(m1)
    m2w = _widen_up(m2)
    c0w = c0 * (1.0 - _REL_WIDEN)
    if m1w >= c0w:
        raise InfeasibleCertificate(
            f"sup over I1 of (f - c0) is {m1w - c0w:.3g} >= 0 at k={k}, z={z}"
        )
    bound = (m2w - m1w) / (c0w - m1w) * (1.0 + 1e-12)
    return BoundCertificate(
        k=k,
        z=z,
        method=method,
        f=f,
        s=None,
        m=None,
        M1=m1w,
        M2=m2w,
        c0=c0w,
        vertex_bound=bound,
        vertex_bound_int=_int_floor(bound),
    )


def m_min(k: int, z: float) -> int:
    """Least m with z/sqrt(k-1) strictly below alpha(m).

    Computed as ceil(pi / arccos(z / (2 sqrt(k-1)))) - 1, bumped by one when
    the expression inside the ceiling is an integer (so the strict gap
    survives), then verified directly against alpha(m).
    """
    split = IntervalSplit.for_graph(k, z)
    ratio = z / (2.0 * math.sqrt(k - 1.0))
    val = math.pi / math.acos(ratio)
    if abs(val - round(val)) < 1e-9:
        m = int(round(val))
    else:
        m = math.ceil(val) - 1
    m = max(m, 1)
    while not alpha(m) > split.z_scaled:
        m += 1
    return m


def _golden_min(fn, lo: float, hi: float, iters: int = _GOLDEN_ITERS) -> float:
    """Golden-section search returning the best *sampled* point.

    The objective is treated as a black box; no convexity is assumed, so the
    result may be suboptimal, which is safe here (any admissible point yields
    a valid upper bound).
    """
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    best_x, best_v = lo, fn(lo)
    for x in (hi,):
        v = fn(x)
        if v < best_v:
            best_x, best_v = x, v
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = fn(c), fn(d)
    for x, v in ((c, fc), (d, fd)):
        if v < best_v:
            best_x, best_v = x, v
    for _ in range(iters):
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = fn(c)
            if fc < best_v:
                best_x, best_v = c, fc
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = fn(d)
            if fd < best_v:
                best_x, best_v = d, fd
    return best_x


def machine_bound(
    k: int, z: float, m: int | None = None, s: float | None = None
) -> BoundCertificate:
    """Vertex bound fhat_m(L + s) / c_0(s) from the shifted quotient family.

    m defaults to m_min(k, z); s must lie strictly inside
    (0, alpha_m - z/sqrt(k-1)) and defaults to a golden-section minimizer of
    the bound over that interval (endpoints excluded by a 1e-6 margin).
    """
    split = IntervalSplit.for_graph(k, z)
    if m is None:
        m = m_min(k, z)
    elif not alpha(m) > split.z_scaled:
        raise ValueError(
            f"alpha({m}) = {alpha(m):.6f} does not exceed z/sqrt(k-1) = "
            f"{split.z_scaled:.6f}"
        )
    s_max = alpha(m) - split.z_scaled
    fh = f_hat(m)

    def objective(sv: float) -> float:
        return fh(split.L + sv) / shift_expand(fh, sv).coeffs[0]

    if s is None:
        s = _golden_min(objective, _GOLDEN_MARGIN, s_max - _GOLDEN_MARGIN)
    elif not 0.0 < s < s_max:
        raise ValueError(f"shift s = {s} outside the open interval (0, {s_max})")
    shifted = shift_expand(fh, s)
    c0 = shifted.coeffs[0] * (1.0 - _REL_WIDEN)
    p = to_mono(shifted)
    _, m1 = sup_on_interval(p, *split.i1)
    _, m2 = sup_on_interval(p, *split.i2)
    m2w = max(_widen_up(m2), fh(split.L + s))
    bound = m2w / c0 * (1.0 + 1e-12)
    return BoundCertificate(
        k=k,
        z=z,
        method="machine",
        f=shifted,
        s=s,
        m=m,
        M1=_widen_up(m1),
        M2=m2w,
        c0=c0,
        vertex_bound=bound,
        vertex_bound_int=_int_floor(bound),
    )


def linear_bound(k: int, z: float) -> BoundCertificate:
    """Closed-form bound (z - k)/z from the certificate f = V_1, for z < 0."""
    if not z < 0.0:
        raise ValueError("linear bound requires z < 0")
    split = IntervalSplit.for_graph(k, z)
    bound = (z - k) / z
    return BoundCertificate(
        k=k,
        z=z,
        method="linear",
        f=ChebCombo((0.0, 1.0)),
        s=None,
        m=None,
        M1=split.z_scaled,
        M2=split.L,
        c0=0.0,
        vertex_bound=bound,
        vertex_bound_int=_int_floor(bound),
    )


def two_term_sigma_interval(k: int, z: float) -> tuple[float, float]:
    """Open interval of slopes sigma for which V_1 + sigma V_2 is admissible."""
    rt = math.sqrt(k - 1.0)
    hi = k * rt / (k * k - k + 1.0)
    denom = k - 1.0 - z * z
    if denom <= 0.0:
        # threshold below the reach of the parabola family; no lower limit
        return (-math.inf, hi)
    return (z * rt / denom, hi)


def two_term_bound(
    k: int, z: float, sigma: float | None = None
) -> BoundCertificate:
    """Bound from f = V_1 + sigma V_2; requires z < (k-1)/k.

    The default sigma = sqrt(k-1)/(k - z) is admissible exactly when
    z < (k-1)/k.  At z = 0 the resulting bound is 2 k^2 / (k - 1).
    """
    if not z < (k - 1.0) / k:
        raise ValueError(f"two-term bound requires z < (k-1)/k = {(k - 1.0) / k}")
    lo, hi = two_term_sigma_interval(k, z)
    if sigma is None:
        sigma = math.sqrt(k - 1.0) / (k - z)
    if not lo < sigma < hi:
        raise ValueError(
            f"sigma = {sigma} outside the admissible interval ({lo}, {hi})"
        )
    return bound_from_function(
        ChebCombo((0.0, 1.0, sigma)), k, z, method="two_term"
    )
