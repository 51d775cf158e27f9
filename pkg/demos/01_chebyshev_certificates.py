#!/usr/bin/env python3
"""Tour of the certificate algebra.

The whole bounding machinery runs over rescaled second-kind Chebyshev
polynomials V_m(x) = U_m(x/2).  This script shows the three-term recurrence,
the squared family F_m = sum_{j<=m} V_{2j} = V_m^2, its quotient
fhat_m = F_m / (x - alpha_m) with nonnegative V-coefficients, and how a
right-shift keeps coefficients nonnegative while making the constant term
strictly positive.
"""

import numpy as np

from specgap import alpha, f_big, f_hat, shift_expand, to_mono, v_eval, v_table

print("V_m on a few points (recurrence vs closed form 2cos -> sin ratio)")
theta = 0.4
x = 2 * np.cos(theta)
for m in range(6):
    closed = np.sin((m + 1) * theta) / np.sin(theta)
    print(f"  V_{m}({x:.4f}) = {v_eval(m, x):+.10f}   closed form {closed:+.10f}")

print("\nlargest roots alpha_m = 2 cos(pi/(m+1)):")
print(" ", ", ".join(f"alpha_{m} = {alpha(m):.6f}" for m in range(1, 7)))

print("\nF_m = sum V_2j equals V_m^2 (monomial coefficients):")
for m in (1, 2, 3):
    print(f"  F_{m}:", np.round(to_mono(f_big(m)).coeffs, 10))

print("\nquotient family fhat_m = F_m/(x - alpha_m), V-basis coefficients:")
for m in (1, 2, 3, 4):
    print(f"  fhat_{m}:", np.round(f_hat(m).coeffs, 6))

print("\nfhat_m is nonpositive left of alpha_m and positive right of it:")
fh = f_hat(3)
for x in (-2.0, 0.0, 1.0, alpha(3) + 0.05, 2.0):
    print(f"  fhat_3({x:+.3f}) = {fh(x):+.6f}")

print("\nshifting fhat_3 by s > 0 keeps coefficients nonnegative, c0 > 0:")
for s in (0.1, 0.3):
    shifted = shift_expand(fh, s)
    print(f"  s = {s}: {np.round(shifted.coeffs, 6)}")

print("\nsampled values of V_0..V_4 on [-2, 2] (rows of v_table):")
xs = np.linspace(-2, 2, 5)
print(np.round(v_table(4, xs), 4))
