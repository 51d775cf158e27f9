#!/usr/bin/env python3
"""Searching for the best N-term certificate at a given (k, z).

The optimizer looks for f = sum_{j=1}^{N} alpha_j V_j with alpha_j >= 0 and
unit norm, strictly negative on I1, maximizing the measure constant
C = -M1/(M2 - M1).  The returned bound is valid no matter how well the
search did; optimality only affects quality.

Classic data points at k = 3, z = 1 (mu1 <= 1 for cubic graphs):
  3 terms prove C > 1/24, 5 terms prove C > 1/21, hence v(3,1) <= 20.
"""

import time

from specgap import OptimizerConfig, machine_bound, optimize_nterm, table_bounds

for terms, label in ((3, "1/24"), (5, "1/21")):
    cfg = OptimizerConfig(terms=terms, restarts=24, max_iters=1200)
    t0 = time.time()
    cert = optimize_nterm(3, 1.0, cfg)
    print(
        f"N = {terms}: C = {cert.constant:.6f} (classic target {label}), "
        f"vertex bound {cert.vertex_bound:.4f} -> {cert.vertex_bound_int} "
        f"[{time.time() - t0:.1f}s]"
    )
    print("   coefficients:", [round(c, 5) for c in cert.f.coeffs[1:]])

print()
print("threshold z = 2 at k = 3 needs the longer certificates:")
cfg7 = OptimizerConfig(terms=7, restarts=24, max_iters=1200)
cert7 = optimize_nterm(3, 2.0, cfg7)
print(f"  7-term search: {cert7.vertex_bound:.3f} -> {cert7.vertex_bound_int}")
cert_m = machine_bound(3, 2.0)
print(f"  machine bound: {cert_m.vertex_bound:.3f} -> {cert_m.vertex_bound_int}")

print()
print("best-of-all-methods per threshold (k = 4):")
cfg = OptimizerConfig(terms=5, restarts=16, max_iters=800)
for cert in table_bounds(4, [-1.0, 0.0, 1.0], cfg):
    print(
        f"  z = {cert.z:+.1f}: {cert.vertex_bound_int:3d} via {cert.method}"
    )
