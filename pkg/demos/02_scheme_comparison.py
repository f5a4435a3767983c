"""Godunov vs Lax-Friedrichs against the exact solution.

Runs both first-order schemes on the two-state reference problem at two
resolutions and compares with the exact self-similar solution at t = 1.
The Godunov scheme rides the exact solver's upwind identity, so its only
error is cell averaging; Lax-Friedrichs adds mesh diffusion and smears
the contacts visibly.
"""

import pathlib

import numpy as np

import filmwaves as fw

OUT = pathlib.Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

left = fw.State(1.24, 0.90, 2.2, 2.50)
right = fw.State(1.5, 1.56, 1.7, 0.90)
fan = fw.solve(left, right)


def exact(x):
    return fw.sample(fan, x)  # t = 1: xi = x


results = {}
print(f"{'scheme':14} {'cells':>6} {'err_f':>10} {'err_b':>10} {'err_g':>10} {'err_q':>10}")
for scheme in (fw.Scheme.GODUNOV, fw.Scheme.LAX_FRIEDRICHS):
    for n in (160, 640):
        grid = fw.Grid1D(-2.0, 12.0, n)
        cfg = fw.SchemeConfig(scheme=scheme, t_end=1.0)
        final, diag = fw.run(grid, fw.riemann_ic(left, right), cfg)
        errs = fw.l1_error(final, exact)
        results[(scheme, n)] = (grid.midpoints(), final.cells)
        print(f"{scheme.value:14} {n:6d} " + " ".join(f"{e:10.5f}" for e in errs))

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print("matplotlib not available; skipping plots")
else:
    xs_fine = np.linspace(-2.0, 12.0, 1401)
    ex_fine = fw.sample_profile(fan, xs_fine, t=1.0)
    fig, axes = plt.subplots(2, 2, figsize=(11, 6.5), sharex=True)
    labels = ["f", "b", "g", "q"]
    for k, ax in enumerate(axes.flat):
        ax.plot(xs_fine, ex_fine[:, k], "k-", lw=1.0, label="exact")
        for scheme, marker in ((fw.Scheme.GODUNOV, "C0."), (fw.Scheme.LAX_FRIEDRICHS, "C3.")):
            xs, cells = results[(scheme, 160)]
            ax.plot(xs, cells[:, k], marker, ms=3, label=scheme.value if k == 0 else None)
        ax.set_title(labels[k])
        ax.grid(alpha=0.3)
    fig.legend(loc="lower center", ncols=3)
    fig.suptitle("First-order schemes vs exact solution, 160 cells, t = 1")
    fig.tight_layout(rect=(0, 0.05, 1, 1))
    fig.savefig(OUT / "scheme_comparison.png", dpi=130)
    print(f"wrote {OUT / 'scheme_comparison.png'}")
