"""Search for the best N-term nonnegative certificate at a given (k, z).

The search runs Nelder-Mead on the positive orthant through the
log-parameterization alpha_j = exp(t_j), renormalized to unit Euclidean norm
at every evaluation.  Infeasible points (sup of f over I1 not below the
feasibility margin) are penalized by that supremum.  Coarse restarts score
candidates on fixed evaluation grids; the leaders are then polished against
the rigorous interval suprema, and every returned bound passes through
bound_from_function, so validity never depends on optimizer quality.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from .bounds import (
    BoundCertificate,
    IntervalSplit,
    bound_from_function,
    linear_bound,
    machine_bound,
    two_term_bound,
)
from .chebyshev import ChebCombo, sup_on_interval, to_mono, v_table
from .errors import InfeasibleCertificate, NoFeasiblePoint

log = logging.getLogger(__name__)

_PENALTY = 1e3
_POLISH_CANDIDATES = 8
_POLISH_ITERS = 400


@dataclass(frozen=True)
class OptimizerConfig:
    terms: int = 6
    restarts: int = 64
    seed: int = 20260614
    max_iters: int = 2000
    feasibility_margin: float = 1e-9

    def __post_init__(self):
        if self.terms < 1:
            raise ValueError("terms must be at least 1")
        if self.restarts < 1:
            raise ValueError("restarts must be at least 1")


def _cheb_nodes(lo: float, hi: float, count: int) -> np.ndarray:
    mid, half = 0.5 * (lo + hi), 0.5 * (hi - lo)
    return mid + half * np.cos(np.linspace(np.pi, 0.0, count))


def _normalized(t: np.ndarray) -> np.ndarray:
    w = np.exp(np.clip(t, -40.0, 40.0))
    return w / np.linalg.norm(w)


def optimize_nterm(k: int, z: float, cfg: OptimizerConfig) -> BoundCertificate:
    """Best found certificate sum_{j=1}^{N} alpha_j V_j with alpha_j >= 0.

    Deterministic for a fixed cfg.seed.  Raises NoFeasiblePoint when no
    restart produces a function strictly negative on I1.
    """
    split = IntervalSplit.for_graph(k, z)
    n_terms = cfg.terms
    # fixed grids for the coarse stage; rows j = 1..N of the V table
    x1 = _cheb_nodes(*split.i1, 193)
    x2 = _cheb_nodes(*split.i2, 97)
    g1 = v_table(n_terms, x1)[1:].T
    g2 = v_table(n_terms, x2)[1:].T
    margin = cfg.feasibility_margin

    def coarse(t: np.ndarray) -> float:
        a = _normalized(t)
        m1 = float(np.max(g1 @ a))
        if m1 >= -margin:
            return _PENALTY + m1
        m2 = float(np.max(g2 @ a))
        return m1 / (m2 - m1)  # equals -C

    def rigorous(t: np.ndarray) -> float:
        a = _normalized(t)
        p = to_mono(ChebCombo((0.0, *a)))
        _, m1 = sup_on_interval(p, *split.i1)
        if m1 >= -margin:
            return _PENALTY + m1
        _, m2 = sup_on_interval(p, *split.i2)
        return m1 / (m2 - m1)

    def nelder_mead_rounds(fn, t, maxiter, rounds):
        # restarting the simplex from the converged point escapes the
        # stagnation Nelder-Mead is prone to in more than a few dimensions
        value = fn(t)
        for _ in range(rounds):
            res = minimize(
                fn,
                t,
                method="Nelder-Mead",
                options={
                    "maxiter": maxiter,
                    "maxfev": 2 * maxiter,
                    "xatol": 1e-10,
                    "fatol": 1e-13,
                },
            )
            if res.fun >= value - 1e-12:
                break
            value, t = float(res.fun), np.asarray(res.x, dtype=float)
        return value, t

    rng = np.random.default_rng(cfg.seed)
    stage1: list[tuple[float, int, np.ndarray]] = []
    for idx in range(cfg.restarts):
        t0 = rng.uniform(-4.0, 2.0, n_terms)
        value, t = nelder_mead_rounds(coarse, t0, cfg.max_iters, rounds=4)
        stage1.append((value, idx, t))

    stage1.sort(key=lambda item: (item[0], item[1]))
    best: BoundCertificate | None = None
    best_key: tuple[float, int] | None = None
    for fun, idx, t in stage1[:_POLISH_CANDIDATES]:
        if fun >= _PENALTY:
            continue
        _, polished = nelder_mead_rounds(rigorous, t, _POLISH_ITERS, rounds=2)
        for candidate in (polished, t):
            a = _normalized(np.asarray(candidate, dtype=float))
            try:
                cert = bound_from_function(
                    ChebCombo((0.0, *a)), k, z, method="nterm"
                )
            except InfeasibleCertificate:
                continue
            key = (cert.vertex_bound, idx)
            if best_key is None or key < best_key:
                best, best_key = cert, key
    if best is None:
        raise NoFeasiblePoint(
            f"no feasible {n_terms}-term certificate found at k={k}, z={z} "
            f"after {cfg.restarts} restarts"
        )
    return best


def table_bounds(
    k: int, z_list: list[float], cfg: OptimizerConfig
) -> list[BoundCertificate]:
    """Best available certificate per threshold, minimum over all methods.

    Per-entry method failures are logged and skipped rather than raised; the
    machine bound applies for every z < 2 sqrt(k-1), so each valid entry
    yields a certificate.
    """
    out: list[BoundCertificate] = []
    for z in z_list:
        candidates: list[BoundCertificate] = []
        attempts = [
            ("linear", lambda: linear_bound(k, z)),
            ("two_term", lambda: two_term_bound(k, z)),
            ("machine", lambda: machine_bound(k, z)),
            ("nterm", lambda: optimize_nterm(k, z, cfg)),
        ]
        for name, attempt in attempts:
            try:
                candidates.append(attempt())
            except Exception as exc:  # noqa: BLE001 - collected, not fatal
                log.debug("method %s failed at k=%s z=%s: %s", name, k, z, exc)
        if not candidates:
            log.warning("no method produced a bound at k=%s z=%s", k, z)
            continue
        out.append(min(candidates, key=lambda c: c.vertex_bound))
    return out
