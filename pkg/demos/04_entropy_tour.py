"""Tour of the entropy machinery.

The system carries a whole family of entropy / entropy-flux pairs built
from three scalar generator functions. This script:

  * checks the compatibility relation grad(E)^T DF = grad(Q)^T by finite
    differences for several members, including the strictly convex one;
  * sweeps the four Hessian quadratic forms of the convex member over
    random admissible states (all positive = strict convexity there);
  * evaluates entropy production across the shock and the contacts of the
    reference Riemann solution: contacts conserve, the shock dissipates,
    and a reversed shock would produce (hence is rejected).
"""

import numpy as np

import filmwaves as fw

rng = np.random.default_rng(1)


def random_state():
    f, b = rng.uniform(0.4, 2.0, 2)
    g = rng.uniform(0.4, 2.0)
    return fw.State(f, b, g, (f * b / g) * rng.uniform(1.1, 2.5))


members = [
    ("convex", fw.convex_generators()),
    ("zero", fw.zero_generators()),
    ("poly", fw.polynomial_generators([0.2, -0.5, 0.1], [1.0, 0.3], [0.0, 0.7])),
]
print("compatibility residuals (finite-difference scale, 50 random states):")
for name, gen in members:
    worst = max(fw.compatibility_residual(random_state(), gen) for _ in range(50))
    print(f"  {name:8} worst {worst:.3e}")

print("\nconvex-entropy quadratic forms at 2000 random admissible states:")
mins = np.full(4, np.inf)
for _ in range(2000):
    mins = np.minimum(mins, fw.hessian_quadratic_forms(random_state()))
print("  componentwise minima:", " ".join(f"{v:.4f}" for v in mins),
      "(all positive: strictly convex)")

left = fw.State(1.24, 0.90, 2.2, 2.50)
right = fw.State(1.5, 1.56, 1.7, 0.90)
fan = fw.solve(left, right)
print("\nentropy production across the reference fan's discontinuities:")
for wave in fan.waves:
    if not wave.is_discontinuity:
        continue
    prod = fw.shock_entropy_production(wave.left, wave.right, wave.speed)
    print(f"  {wave.family.value}: sigma [E] - [Q] = {prod:+.3e}")
w4 = fan.waves[3]
flipped = fw.shock_entropy_production(w4.right, w4.left, w4.speed)
print(f"  {w4.family.value} reversed: {flipped:+.3e}  (negative: inadmissible)")
