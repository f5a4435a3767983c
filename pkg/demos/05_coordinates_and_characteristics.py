"""Diagonalizing coordinates and the decoupled lower layer.

Two structural facts make the exact solver possible, and this script
shows both at work:

1. The change of variables W = (b/f, fb, q/g, (fb+gq)/(gq)^(1/4)) turns
   the system into four decoupled advection equations, each coordinate
   riding its own wave speed. We verify the speeds recovered through the
   coordinate change match the closed-form spectrum, and that the map
   round-trips.

2. The lower-layer pair (f, b) never feels the upper layer. Shrinking
   the upper layer to nothing reduces the four-wave solution to the
   two-component system's contact + shock/rarefaction picture, computed
   here by an independent mini-solver.
"""

import math

import numpy as np

import filmwaves as fw

rng = np.random.default_rng(8)

print("coordinate change: advection speeds vs closed-form spectrum")
worst_speed = worst_round = 0.0
for _ in range(500):
    f, b = rng.uniform(0.3, 2.0, 2)
    g = rng.uniform(0.3, 2.0)
    st = fw.State(f, b, g, (f * b / g) * rng.uniform(1.1, 3.0))
    w = fw.to_invariants(st)
    v = w.v  # upper product recovered from (u, eta) alone
    speeds = np.array([0.5 * w.u, 1.5 * w.u, w.u + 0.5 * v, w.u + 1.5 * v])
    worst_speed = max(worst_speed, float(np.max(np.abs(speeds - fw.eigenvalues(st)))))
    back = fw.from_invariants(w)
    worst_round = max(worst_round, max(abs(x - y) / y for x, y in zip(back, st)))
print(f"  worst speed mismatch {worst_speed:.3e}, worst roundtrip {worst_round:.3e}")

print("\nthin upper layer: four-wave solution vs standalone two-component solver")
eps = 1e-6
left = fw.State(1.24, 0.90, eps, eps)
right = fw.State(1.5, 1.56, eps, eps)
fan = fw.solve(left, right)


def lower_pair_exact(xi):
    # independent mini-solver for h_t + (h^2 c/2)_x = 0, c_t + (h c^2/2)_x = 0
    u_l, u_r = 1.24 * 0.90, 1.5 * 1.56
    h_star = math.sqrt(u_l * 1.5 / 1.56)
    if xi < 0.5 * u_l:
        return 1.24, 0.90
    if xi < 1.5 * u_l:
        return h_star, u_l / h_star
    if xi <= 1.5 * u_r:
        u = 2.0 * xi / 3.0
        h = math.sqrt(u * 1.5 / 1.56)
        return h, u / h
    return 1.5, 1.56


worst = 0.0
for xi in np.linspace(0.0, 5.0, 201):
    st = fw.sample(fan, xi)
    h, c = lower_pair_exact(xi)
    worst = max(worst, abs(st.f - h), abs(st.b - c))
print(f"  max lower-pair deviation over 201 sample points: {worst:.3e}")
print("  (the g, q components are o(1e-5) throughout and carry their own tiny waves)")
