"""Command-line driver: scenario files, runs, CSV output, convergence tables.

Scenario files are flat ``key = value`` text; ``#`` starts a comment.
Recognized keys::

    scenario   riemann | gaussian | custom          (default riemann)
    f_left b_left g_left q_left                      (riemann states)
    f_right b_right g_right q_right
    base_f base_b base_g base_q                      (custom baseline, default 1)
    amp_f amp_b amp_g amp_q                          (custom bump sizes, default 0)
    bump_center bump_width                           (custom/gaussian bump, 5 / 1)
    cells      int, default 320
    cfl        (0, 1], default 0.45
    scheme     godunov | lxf, default godunov
    t_end      default 1.0
    domain     "x_min,x_max", default "-2,12"
    out        output CSV path (default: stdout)

Exit codes: 0 success, 2 configuration error, 3 admissibility abort,
4 solver or check failure.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass, replace

import numpy as np

from . import entropy as ent
from . import riemann, system
from .errors import AdmissibilityError, CellPositivityError, ConfigError, FilmwavesError
from .fvm import (
    Grid1D,
    Scheme,
    SchemeConfig,
    bump_ic,
    gaussian_pulse_ic,
    godunov_flux,
    l1_error,
    riemann_ic,
    run,
)
from .state import AdmissibilityLevel, State, is_admissible
from .wavecurves import rh_residual

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_ADMISSIBILITY = 3
EXIT_SOLVER = 4

_STATE_KEYS = tuple(
    f"{c}_{side}" for side in ("left", "right") for c in ("f", "b", "g", "q")
)
_FLOAT_KEYS = _STATE_KEYS + (
    "cfl",
    "t_end",
    "base_f",
    "base_b",
    "base_g",
    "base_q",
    "amp_f",
    "amp_b",
    "amp_g",
    "amp_q",
    "bump_center",
    "bump_width",
)
_KNOWN_KEYS = set(_FLOAT_KEYS) | {"scenario", "cells", "scheme", "domain", "out"}

CSV_HEADER = "x,f,b,g,q"
CONVERGENCE_HEADER = "scheme,cells,dx,err_f,err_b,err_g,err_q,order_f,order_b,order_g,order_q"


@dataclass(frozen=True)
class Scenario:
    kind: str = "riemann"
    left: State | None = None
    right: State | None = None
    base: tuple = (1.0, 1.0, 1.0, 1.0)
    amp: tuple = (0.0, 0.0, 0.0, 0.0)
    bump_center: float = 5.0
    bump_width: float = 1.0
    cells: int = 320
    cfl: float = 0.45
    scheme: Scheme = Scheme.GODUNOV
    t_end: float = 1.0
    x_min: float = -2.0
    x_max: float = 12.0
    out: str | None = None
    warnings: tuple = ()


def parse_config(text: str) -> Scenario:
    """Parse a scenario document, validating keys, values and states."""
    values: dict[str, str] = {}
    lines: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"expected 'key = value', got {raw.strip()!r}", lineno)
        key, val = (part.strip() for part in line.split("=", 1))
        if key not in _KNOWN_KEYS:
            raise ConfigError(f"unknown key {key!r}", lineno)
        if key in values:
            raise ConfigError(f"duplicate key {key!r} (first set on line {lines[key]})", lineno)
        if not val:
            raise ConfigError(f"empty value for {key!r}", lineno)
        values[key] = val
        lines[key] = lineno

    def as_float(key, default=None):
        if key not in values:
            return default
        try:
            out = float(values[key])
        except ValueError:
            raise ConfigError(f"non-numeric value for {key!r}: {values[key]!r}", lines[key])
        if not math.isfinite(out):
            raise ConfigError(f"non-finite value for {key!r}", lines[key])
        return out

    kind = values.get("scenario", "riemann")
    if kind not in ("riemann", "gaussian", "custom"):
        raise ConfigError(f"scenario must be riemann, gaussian or custom, got {kind!r}",
                          lines.get("scenario"))

    cells = 320
    if "cells" in values:
        try:
            cells = int(values["cells"])
        except ValueError:
            raise ConfigError(f"cells must be an integer, got {values['cells']!r}", lines["cells"])
        if cells < 2:
            raise ConfigError(f"cells must be >= 2, got {cells}", lines["cells"])

    scheme_name = values.get("scheme", "godunov")
    try:
        scheme = Scheme(scheme_name)
    except ValueError:
        raise ConfigError(f"scheme must be godunov or lxf, got {scheme_name!r}",
                          lines.get("scheme"))

    x_min, x_max = -2.0, 12.0
    if "domain" in values:
        parts = values["domain"].split(",")
        if len(parts) != 2:
            raise ConfigError("domain must be 'x_min,x_max'", lines["domain"])
        try:
            x_min, x_max = float(parts[0]), float(parts[1])
        except ValueError:
            raise ConfigError(f"non-numeric domain {values['domain']!r}", lines["domain"])
        if not x_max > x_min:
            raise ConfigError(f"empty domain [{x_min}, {x_max}]", lines["domain"])

    cfl = as_float("cfl", 0.45)
    if not 0.0 < cfl <= 1.0:
        raise ConfigError(f"cfl must be in (0, 1], got {cfl}", lines.get("cfl"))
    t_end = as_float("t_end", 1.0)
    if t_end < 0.0:
        raise ConfigError(f"t_end must be nonnegative, got {t_end}", lines.get("t_end"))

    warnings: list[str] = []
    left = right = None
    if kind == "riemann":
        missing = [k for k in _STATE_KEYS if k not in values]
        if missing:
            raise ConfigError(
                "riemann scenario needs both states; missing keys: " + ", ".join(missing)
            )
        for side in ("left", "right"):
            for c in ("f", "b", "g", "q"):
                key = f"{c}_{side}"
                if not as_float(key) > 0.0:
                    raise ConfigError(f"{key} must be positive", lines[key])
        left = State(*(as_float(f"{c}_left") for c in ("f", "b", "g", "q")))
        right = State(*(as_float(f"{c}_right") for c in ("f", "b", "g", "q")))
        for name, st in (("left", left), ("right", right)):
            if not is_admissible(st, AdmissibilityLevel.STRICT):
                warnings.append(
                    f"{name} state is not strictly admissible "
                    f"(fb={st.fb:.17g} >= gq={st.gq:.17g})"
                )

    base = tuple(as_float(f"base_{c}", 1.0) for c in ("f", "b", "g", "q"))
    amp = tuple(as_float(f"amp_{c}", 0.0) for c in ("f", "b", "g", "q"))
    bump_width = as_float("bump_width", 1.0)
    if not bump_width > 0.0:
        raise ConfigError(f"bump_width must be positive, got {bump_width}",
                          lines.get("bump_width"))

    return Scenario(
        kind=kind,
        left=left,
        right=right,
        base=base,
        amp=amp,
        bump_center=as_float("bump_center", 5.0),
        bump_width=bump_width,
        cells=cells,
        cfl=cfl,
        scheme=scheme,
        t_end=t_end,
        x_min=x_min,
        x_max=x_max,
        out=values.get("out"),
        warnings=tuple(warnings),
    )


def scenario_ic(scn: Scenario):
    if scn.kind == "riemann":
        return riemann_ic(scn.left, scn.right)
    if scn.kind == "gaussian":
        return gaussian_pulse_ic(scn.bump_center, scn.bump_width)
    return bump_ic(scn.base, scn.amp, scn.bump_center, scn.bump_width)


def emit_csv(target, xs, rows) -> None:
    """Write ``x,f,b,g,q`` rows in full double precision (17 digits, LF)."""
    rows = np.asarray(rows, dtype=float)
    lines = [CSV_HEADER]
    for x, row in zip(xs, rows):
        lines.append(",".join(f"{val:.17g}" for val in (x, *row)))
    payload = "\n".join(lines) + "\n"
    if target is None:
        sys.stdout.write(payload)
    else:
        with open(target, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(payload)


def convergence_rows(scn: Scenario, cell_counts, schemes=(Scheme.GODUNOV, Scheme.LAX_FRIEDRICHS)):
    """L1 errors against the exact fan plus observed orders, per scheme and grid."""
    if scn.kind != "riemann":
        raise ConfigError("convergence study needs a riemann scenario (exact solution)")
    fan = riemann.solve(scn.left, scn.right)
    t = scn.t_end
    if t <= 0.0:
        raise ConfigError("convergence study needs t_end > 0")

    def exact(x):
        return riemann.sample(fan, x / t)

    table = []
    for scheme in schemes:
        prev = None
        for n in cell_counts:
            grid = Grid1D(scn.x_min, scn.x_max, n)
            cfg = SchemeConfig(scheme=scheme, cfl=scn.cfl, t_end=t)
            final, _ = run(grid, scenario_ic(scn), cfg)
            errs = l1_error(final, exact)
            if prev is None:
                orders = (None,) * 4
            else:
                p_n, p_errs = prev
                factor = math.log(n / p_n)  # dx ratio inverted
                orders = tuple(math.log(p / e) / factor for p, e in zip(p_errs, errs))
            table.append((scheme, n, grid.dx, tuple(errs), orders))
            prev = (n, errs)
    return table, fan


def format_convergence_csv(table) -> str:
    lines = [CONVERGENCE_HEADER]
    for scheme, n, dx, errs, orders in table:
        cols = [scheme.value, str(n), f"{dx:.17g}"]
        cols += [f"{e:.17g}" for e in errs]
        cols += ["" if o is None else f"{o:.17g}" for o in orders]
        lines.append(",".join(cols))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# subcommands

def _load_scenario(args, cells_list_ok=False) -> Scenario:
    with open(args.config, encoding="utf-8") as fh:
        scn = parse_config(fh.read())
    if getattr(args, "scheme", None):
        scn = replace(scn, scheme=Scheme(args.scheme))
    cells_arg = getattr(args, "cells", None)
    if cells_arg and "," in str(cells_arg) and not cells_list_ok:
        raise ConfigError(f"--cells takes a single count here, got {cells_arg!r}")
    if cells_arg and "," not in str(cells_arg):
        try:
            scn = replace(scn, cells=int(cells_arg))
        except ValueError:
            raise ConfigError(f"--cells must be an integer, got {cells_arg!r}")
    if getattr(args, "t_end", None) is not None:
        scn = replace(scn, t_end=args.t_end)
    if getattr(args, "cfl", None) is not None:
        if not 0.0 < args.cfl <= 1.0:
            raise ConfigError(f"cfl must be in (0, 1], got {args.cfl}")
        scn = replace(scn, cfl=args.cfl)
    if getattr(args, "out", None):
        scn = replace(scn, out=args.out)
    return scn


def _report(lines):
    for line in lines:
        print(line, file=sys.stderr)


def cmd_run(args) -> int:
    scn = _load_scenario(args)
    _report(f"warning: {w}" for w in scn.warnings)
    grid = Grid1D(scn.x_min, scn.x_max, scn.cells)
    cfg = SchemeConfig(scheme=scn.scheme, cfl=scn.cfl, t_end=scn.t_end)
    final, diag = run(grid, scenario_ic(scn), cfg)
    emit_csv(scn.out, grid.midpoints(), final.cells)
    _report(
        [
            f"run: scheme={scn.scheme.value} cells={scn.cells} t_end={scn.t_end}",
            f"steps={diag.steps} wall_time={diag.wall_time:.3f}s",
            f"final mass: f={diag.mass_f[-1]:.17g} g={diag.mass_g[-1]:.17g}",
        ]
    )
    return EXIT_OK


def cmd_exact(args) -> int:
    scn = _load_scenario(args)
    if scn.kind != "riemann":
        raise ConfigError("exact solutions are available for the riemann scenario only")
    _report(f"warning: {w}" for w in scn.warnings)
    fan = riemann.solve(scn.left, scn.right)
    _report(f"warning: {w}" for w in fan.warnings)
    grid = Grid1D(scn.x_min, scn.x_max, scn.cells)
    rows = riemann.sample_profile(fan, grid.midpoints(), scn.t_end)
    emit_csv(scn.out, grid.midpoints(), rows)
    _report([f"exact: pattern={fan.pattern.sequence} speeds={fan.speeds}"])
    return EXIT_OK


def cmd_convergence(args) -> int:
    scn = _load_scenario(args, cells_list_ok=True)
    _report(f"warning: {w}" for w in scn.warnings)
    if args.cells:
        try:
            counts = [int(c) for c in str(args.cells).split(",")]
        except ValueError:
            raise ConfigError(f"--cells must be a comma list of integers, got {args.cells!r}")
        if any(c < 2 for c in counts):
            raise ConfigError(f"cell counts must be >= 2, got {counts}")
    else:
        counts = [160, 320, 640, 1280]
    table, fan = convergence_rows(scn, counts)
    _report(f"warning: {w}" for w in fan.warnings)
    payload = format_convergence_csv(table)
    if scn.out is None:
        sys.stdout.write(payload)
    else:
        with open(scn.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(payload)
    return EXIT_OK


def cmd_check(args) -> int:
    rng = np.random.default_rng(args.seed)
    n = args.samples
    failures = 0

    def report(name, ok, detail=""):
        nonlocal failures
        failures += 0 if ok else 1
        print(f"{'ok  ' if ok else 'FAIL'} {name}{': ' + detail if detail else ''}")

    def random_strict():
        f, b = rng.uniform(0.2, 2.5, 2)
        g = rng.uniform(0.2, 2.5)
        q = (f * b / g) * rng.uniform(1.05, 4.0)
        return State(f, b, g, q)

    def random_pair():
        # stay inside the range a field-2 fan can reach from the left state
        left = random_strict()
        u_l, v_l = left.fb, left.gq
        if rng.random() < 0.5:
            u_r = u_l * rng.uniform(0.3, 1.0)
        else:
            u_max = ((u_l + v_l) / (2.0 * v_l**0.25)) ** (4.0 / 3.0)
            u_r = u_l + (u_max - u_l) * rng.uniform(0.0, 0.9)
        f_r = math.sqrt(u_r * rng.uniform(0.5, 2.0))
        v_r = u_r * rng.uniform(1.1, 3.0)
        g_r = math.sqrt(v_r * rng.uniform(0.5, 2.0))
        return left, State(f_r, u_r / f_r, g_r, v_r / g_r)

    worst = 0.0
    for _ in range(n):
        st = random_strict()
        jac = system.jacobian(st)
        lam, rights = system.eigen(st)
        scale = np.max(np.sum(np.abs(jac), axis=1))
        for k in range(4):
            res = np.max(np.abs(jac @ rights[k] - lam[k] * rights[k]))
            worst = max(worst, res / scale)
    report("eigen residual", worst <= 1e-12, f"worst scale-relative {worst:.3e}")

    worst = 0.0
    for _ in range(n):
        st = random_strict()
        back = system.from_invariants(system.to_invariants(st))
        worst = max(worst, float(np.max(np.abs(back.as_array() - st.as_array())
                                        / st.as_array())))
    report("invariant-coordinate roundtrip", worst <= 1e-12, f"worst relative {worst:.3e}")

    worst = 0.0
    for _ in range(max(10, n // 10)):
        worst = max(worst, ent.compatibility_residual(random_strict(), ent.convex_generators()))
    report("convex-pair compatibility", worst <= 1e-5, f"worst residual {worst:.3e}")

    ok = True
    for _ in range(n):
        forms = ent.hessian_quadratic_forms(random_strict())
        ok = ok and bool(np.all(forms > 0.0))
    report("convex-entropy quadratic forms positive", ok)

    worst = 0.0
    for _ in range(max(10, n // 10)):
        left, right = random_pair()
        fan = riemann.solve(left, right)
        for w in fan.waves:
            if w.is_discontinuity:
                res = np.max(np.abs(rh_residual(w.left, w.right, w.speed)))
                worst = max(worst, res)
        gd = godunov_flux(left, right)
        worst = max(worst, float(np.max(np.abs(gd - system.flux(left)))))
    report("jump conditions / upwind flux", worst <= 1e-9, f"worst residual {worst:.3e}")

    return EXIT_OK if failures == 0 else EXIT_SOLVER


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="filmwaves",
        description=(
            "Exact Riemann solutions and finite-volume runs for the two-layer "
            "thin-film / solute-gradient system."
        ),
        epilog=(
            "exit codes: 0 success, 2 configuration error, "
            "3 admissibility abort, 4 solver or check failure"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, needs_config=True):
        if needs_config:
            p.add_argument("--config", required=True, help="scenario file (key = value)")
        p.add_argument("--out", help="output CSV path (default: config 'out' or stdout)")
        p.add_argument("--scheme", choices=[s.value for s in Scheme], help="override scheme")
        p.add_argument("--cells", help="override cell count (comma list for convergence)")
        p.add_argument("--t-end", dest="t_end", type=float, help="override end time")
        p.add_argument("--cfl", type=float, help="override CFL number")

    p_run = sub.add_parser("run", help="advance a scenario and emit the final field")
    add_common(p_run)
    p_run.set_defaults(func=cmd_run)

    p_exact = sub.add_parser("exact", help="emit the sampled exact Riemann solution")
    add_common(p_exact)
    p_exact.set_defaults(func=cmd_exact)

    p_conv = sub.add_parser("convergence", help="L1 error table for both schemes")
    add_common(p_conv)
    p_conv.set_defaults(func=cmd_convergence)

    p_check = sub.add_parser("check", help="run the invariant suite on random states")
    p_check.add_argument("--seed", type=int, default=0)
    p_check.add_argument("--samples", type=int, default=200)
    p_check.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (AdmissibilityError, CellPositivityError) as exc:
        print(f"admissibility abort: {exc}", file=sys.stderr)
        return EXIT_ADMISSIBILITY
    except FilmwavesError as exc:
        print(f"solver failure: {exc}", file=sys.stderr)
        return EXIT_SOLVER


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
