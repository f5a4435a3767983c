"""Exact Riemann solution: wave structure of a two-state problem.

Solves the reference data used throughout the test suite. The left state
is strictly admissible, the right one is positive only (its lower-layer
product exceeds the upper one), which the solver flags but handles. The
resulting fan is a contact, a spreading wave, a second contact, and a
shock. The script prints the structure and saves profile plots plus a CSV
of the sampled solution at t = 1.
"""

import pathlib

import numpy as np

import filmwaves as fw

OUT = pathlib.Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

left = fw.State(1.24, 0.90, 2.2, 2.50)
right = fw.State(1.5, 1.56, 1.7, 0.90)

fan = fw.solve(left, right)

print("wave pattern:", fan.pattern.sequence)
for warning in fan.warnings:
    print("note:", warning)
print()

w1, w2, w3, w4 = fan.waves
print(f"contact 1        speed {w1.speed:.6f}")
if w2.is_discontinuity:
    print(f"field-2 shock    speed {w2.speed:.6f}")
else:
    print(f"field-2 fan      speeds [{w2.fan[0]:.6f}, {w2.fan[1]:.6f}]")
print(f"contact 3        speed {w3.speed:.6f}")
if w4.is_discontinuity:
    print(f"field-4 shock    speed {w4.speed:.6f}")
else:
    print(f"field-4 fan      speeds [{w4.fan[0]:.6f}, {w4.fan[1]:.6f}]")

print()
for name, st in [
    ("U_L  ", fan.left),
    ("U_L* ", fan.left_star),
    ("U_M* ", fan.mid_star),
    ("U_R* ", fan.right_star),
    ("U_R  ", fan.right),
]:
    print(f"{name} f={st.f:.6f} b={st.b:.6f} g={st.g:.6f} q={st.q:.6f} "
          f"(fb={st.fb:.4f}, gq={st.gq:.4f})")

# sample the self-similar solution at t = 1 on a fine grid
xs = np.linspace(-2.0, 12.0, 1401)
profile = fw.sample_profile(fan, xs, t=1.0)

from filmwaves.cli import emit_csv

emit_csv(str(OUT / "wave_structure.csv"), xs, profile)
print(f"\nwrote {OUT / 'wave_structure.csv'}")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print("matplotlib not available; skipping plots")
else:
    fig, axes = plt.subplots(2, 2, figsize=(10, 6), sharex=True)
    labels = ["film height f", "gradient b", "film height g", "gradient q"]
    for k, ax in enumerate(axes.flat):
        ax.plot(xs, profile[:, k], lw=1.2)
        ax.set_title(labels[k])
        ax.grid(alpha=0.3)
    speeds = [w1.speed, w3.speed]
    speeds += [w2.speed] if w2.is_discontinuity else list(w2.fan)
    speeds += [w4.speed] if w4.is_discontinuity else list(w4.fan)
    for speed in speeds:
        for ax in axes.flat:
            ax.axvline(speed, color="gray", lw=0.5, ls=":")
    fig.suptitle("Exact Riemann solution at t = 1")
    fig.tight_layout()
    fig.savefig(OUT / "wave_structure.png", dpi=130)
    print(f"wrote {OUT / 'wave_structure.png'}")
