"""Command-line interface: figure-data CSVs, verification reports, spectra.

Exit codes: 0 success, 1 verification failure, 2 usage or configuration
error. All CSV output is deterministic (fixed ordering, floats at 17
significant digits, so values round-trip exactly).
"""

import argparse
import csv
import os
import sys

GRID_POINTS = 201
CURVE_DIMS = (2, 3, 5, 8, 100)
FIGURE_DEFAULT_DIM = {1: 5, 2: 8, 4: 51, 5: 5, 6: 8}

FIGURE_HELP = (
    "1/2: coefficient magnitudes |a_k(t)| of the gauss family (D=5/8); "
    "3/7: entropy of entanglement vs t for D in {2,3,5,8,100} (gauss/graph); "
    "4: real/imaginary parts of a_1(t) for D=51; "
    "5/6: square roots of the graph-family Schmidt coefficients (D=5/8); "
    "8: G-concurrence vs t for D in {2,3,5,8,100}"
)

# keeps the threadpoolctl limiter alive for the life of the process
_THREAD_LIMITER = None


def _fmt(x) -> str:
    return format(float(x), ".17g")


def _configure_threads() -> None:
    global _THREAD_LIMITER
    raw = os.environ.get("EQUIBASIS_THREADS", "").strip()
    if not raw:
        return
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"EQUIBASIS_THREADS must be an integer, got {raw!r}")
    if cap < 0:
        raise ValueError(f"EQUIBASIS_THREADS must be >= 0, got {cap}")
    if cap == 0:  # 0 = automatic
        return
    import threadpoolctl

    _THREAD_LIMITER = threadpoolctl.threadpool_limits(limits=cap)


def _write_csv(path, header, rows) -> None:
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(header)
        writer.writerows(rows)


def _t_grid():
    import numpy as np

    return np.linspace(0.0, 1.0, GRID_POINTS)


def _figure_rows(figure_id: int, dim_override):
    import numpy as np

    from . import entanglement, gauss_basis

    grid = _t_grid()

    if figure_id in (1, 2):
        D = dim_override if dim_override is not None else FIGURE_DEFAULT_DIM[figure_id]
        theta = gauss_basis.quadratic_phases(D)
        header = ["t"] + [f"abs_a{k}" for k in range(D)]
        rows = [
            [_fmt(t)] + [_fmt(v) for v in np.abs(gauss_basis.amplitudes(theta, float(t)))]
            for t in grid
        ]
        return header, rows

    if figure_id in (3, 7):
        construction = "gauss" if figure_id == 3 else "graph"
        dims = [dim_override] if dim_override is not None else list(CURVE_DIMS)
        curves = [
            entanglement.curve(construction, D, "entropy", grid).values for D in dims
        ]
        header = ["t"] + [f"entropy_D{D}" for D in dims]
        rows = [
            [_fmt(t)] + [_fmt(c[i]) for c in curves] for i, t in enumerate(grid)
        ]
        return header, rows

    if figure_id == 4:
        D = dim_override if dim_override is not None else FIGURE_DEFAULT_DIM[4]
        if D < 2:
            raise ValueError("figure 4 tracks a_1(t) and needs D >= 2")
        theta = gauss_basis.quadratic_phases(D)
        header = ["t", "re_a1", "im_a1"]
        rows = []
        for t in grid:
            a1 = gauss_basis.amplitudes(theta, float(t))[1]
            rows.append([_fmt(t), _fmt(a1.real), _fmt(a1.imag)])
        return header, rows

    if figure_id in (5, 6):
        from . import graph_basis

        D = dim_override if dim_override is not None else FIGURE_DEFAULT_DIM[figure_id]
        header = ["t"] + [f"sqrt_lambda_{k}" for k in range(D)]
        rows = []
        for t in grid:
            omega = graph_basis.graph_family_state(D, float(t), 0, 0).omega
            lam = entanglement.schmidt_spectrum(omega)
            rows.append([_fmt(t)] + [_fmt(v) for v in np.sqrt(lam)])
        return header, rows

    if figure_id == 8:
        dims = [dim_override] if dim_override is not None else list(CURVE_DIMS)
        curves = [
            entanglement.curve("graph", D, "g_concurrence", grid).values for D in dims
        ]
        header = ["t"] + [f"cg_D{D}" for D in dims]
        rows = [
            [_fmt(t)] + [_fmt(c[i]) for c in curves] for i, t in enumerate(grid)
        ]
        return header, rows

    raise ValueError(f"unknown figure id {figure_id}")


def cmd_figure(args) -> int:
    header, rows = _figure_rows(args.id, args.D)
    _write_csv(args.out, header, rows)
    return 0


def cmd_verify(args) -> int:
    from . import verify

    results = verify.run(args.scope, args.dmax, args.tol)
    for result in results:
        print(result.line())
    ok = verify.all_passed(results)
    print("verification " + ("PASSED" if ok else "FAILED"))
    return 0 if ok else 1


def cmd_spectrum(args) -> int:
    import numpy as np

    from . import entanglement

    omega = entanglement.representative_state(args.construction, args.D, args.t)
    lam = entanglement.schmidt_spectrum(omega)
    entropy = entanglement.entropy_of_entanglement(lam)
    if args.construction == "graph":
        cg = entanglement.g_concurrence_closed_form(args.D, args.t)
    else:
        cg = entanglement.g_concurrence_numeric(omega)
    rows = [[str(k), _fmt(lam[k]), _fmt(np.sqrt(lam[k]))] for k in range(len(lam))]
    rows.append(["entropy", _fmt(entropy), ""])
    rows.append(["g_concurrence", _fmt(cg), ""])
    _write_csv(args.out, ["index", "lambda", "sqrt_lambda"], rows)
    return 0


def cmd_ghz(args) -> int:
    from . import entanglement, graph_basis

    psi = graph_basis.ghz_graph_state(args.sites, args.D, args.t)
    rows = []
    for site in range(args.sites):
        spectrum = entanglement.bipartition_spectrum(psi, (site,))
        entropy = entanglement.entropy_of_entanglement(spectrum)
        rows.append([f"site{site}|rest", _fmt(entropy)])
    _write_csv(args.out, ["cut", "entropy"], rows)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="equibasis",
        description=(
            "Equally entangled bipartite qudit bases: figure data, spectra and "
            "numerical certification. Set EQUIBASIS_THREADS to cap internal "
            "parallelism (0 = automatic)."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fig = sub.add_parser("figure", help="write the data behind one built-in figure as CSV")
    fig.add_argument("--id", type=int, required=True, choices=range(1, 9), help=FIGURE_HELP)
    fig.add_argument("--D", type=int, default=None, help="override the figure's default dimension(s)")
    fig.add_argument("--out", required=True, help="output CSV path")

    ver = sub.add_parser("verify", help="run the numerical certification suites")
    ver.add_argument(
        "--scope",
        choices=("all", "gauss", "graph", "reciprocity", "multipartite"),
        default="all",
    )
    ver.add_argument("--dmax", type=int, default=20, help="largest dimension swept (>= 2, default 20)")
    ver.add_argument("--tol", type=float, default=None, help="override every check's native tolerance")

    spect = sub.add_parser("spectrum", help="Schmidt spectrum of one family member as CSV")
    spect.add_argument("--construction", choices=("gauss", "graph"), required=True)
    spect.add_argument("--D", type=int, required=True)
    spect.add_argument("--t", type=float, required=True)
    spect.add_argument("--out", required=True)

    ghz = sub.add_parser("ghz", help="single-site bipartition entropies of the complete-graph state")
    ghz.add_argument("--sites", type=int, required=True)
    ghz.add_argument("--D", type=int, required=True)
    ghz.add_argument("--t", type=float, required=True)
    ghz.add_argument("--out", required=True)

    return parser


_DISPATCH = {
    "figure": cmd_figure,
    "verify": cmd_verify,
    "spectrum": cmd_spectrum,
    "ghz": cmd_ghz,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _configure_threads()
        return _DISPATCH[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"equibasis: error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
