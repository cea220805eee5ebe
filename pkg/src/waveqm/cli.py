"""Command-line front end: table dumps, matrix export, spectra, sweeps.

All data output is CSV with a single deterministic ``#`` metadata line,
so identical flags give byte-identical files; figures are self-contained
SVG.  Exit codes: 0 success, 1 validation failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import enum
import json
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .basis import build_basis
from .cascade import refine_scaling, refine_wavelet
from .eig import Spectrum, solve_symmetric
from .filters import make_filter_bank
from .hamiltonian import assemble
from .integrals import compute_tables
from .svgplot import heatmap, line_chart, write_svg


def _g17(x: float) -> str:
    return f"{x:.17g}"


class SweepMode(enum.Enum):
    TRANSLATION = "Ns"
    SCALE = "M"


@dataclass
class SweepConfig:
    """One convergence sweep: what is fixed, what varies, what is tracked.

    A translation sweep holds M fixed and varies Ns = Nw symmetrically; a
    scale sweep holds Ns = Nw fixed and varies M.
    """

    mode: SweepMode
    K: int = 3
    k0: int = 0
    M: int = 1
    Ns: int = 5
    Nw: int = 5
    sweep_values: tuple[int, ...] = ()
    track: tuple[int, ...] = tuple(range(9))
    out_path: str | None = None
    svg_path: str | None = None


def _solve_point(K: int, k0: int, Ns: int, Nw: int, M: int) -> Spectrum:
    bank = make_filter_bank(K)
    tables = compute_tables(bank)
    basis = build_basis(k0, Ns, Nw, M)
    return solve_symmetric(assemble(basis, bank, tables))


def run_translation_sweep(cfg: SweepConfig) -> list[tuple[int, int, float, float]]:
    """Rows (Ns, n, E_n, ln|E_n - (n+1/2)|) for each swept half-range.

    Writes the optional log-error SVG (one polyline per tracked level).
    """
    if cfg.mode is not SweepMode.TRANSLATION:
        raise ValueError("translation sweep requires mode=Ns")
    rows = []
    for N in cfg.sweep_values:
        size = (2 * N + 1) + (cfg.M + 1) * (2 * N + 1)
        if max(cfg.track) >= size:
            raise ValueError(f"tracked level {max(cfg.track)} out of range for Ns={N} (size {size})")
        spectrum = _solve_point(cfg.K, cfg.k0, N, N, cfg.M)
        for n in cfg.track:
            e = float(spectrum.eigenvalues[n])
            err = abs(e - (n + 0.5))
            rows.append((N, n, e, math.log(err) if err > 0 else -math.inf))
    if cfg.svg_path:
        xs = np.array(sorted(set(r[0] for r in rows)), dtype=float)
        series = []
        for n in cfg.track:
            ys = np.array([r[3] for r in rows if r[1] == n])
            series.append((f"n={n}", xs, ys))
        write_svg(
            cfg.svg_path,
            line_chart(series, title=f"log error vs translation range (M={cfg.M})", xlabel="Ns = Nw", ylabel="ln |E - exact|"),
        )
    return rows


def run_scale_sweep(cfg: SweepConfig) -> list[tuple[int, int, float, float]]:
    """Rows (M, n, E_n, |E_n - (n+1/2)|) for each swept wavelet depth."""
    if cfg.mode is not SweepMode.SCALE:
        raise ValueError("scale sweep requires mode=M")
    rows = []
    for M in cfg.sweep_values:
        size = (2 * cfg.Ns + 1) + (M + 1) * (2 * cfg.Nw + 1)
        if max(cfg.track) >= size:
            raise ValueError(f"tracked level {max(cfg.track)} out of range for M={M} (size {size})")
        spectrum = _solve_point(cfg.K, cfg.k0, cfg.Ns, cfg.Nw, M)
        for n in cfg.track:
            e = float(spectrum.eigenvalues[n])
            rows.append((M, n, e, abs(e - (n + 0.5))))
    return rows


def render_scale_table(rows: list[tuple[int, int, float, float]]) -> str:
    """Pivot the scale-sweep rows into an expected-vs-M text table."""
    Ms = sorted(set(r[0] for r in rows))
    ns = sorted(set(r[1] for r in rows))
    values = {(m, n): e for m, n, e, _ in rows}
    header = f"{'n':>3s} {'exact':>10s}" + "".join(f"{f'M={m}':>12s}" for m in Ms)
    lines = [header]
    for n in ns:
        cells = "".join(f"{values[(m, n)]:>12.6g}" for m in Ms)
        lines.append(f"{n:>3d} {n + 0.5:>10.6g}" + cells)
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# subcommands


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        Path(out_path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_filters(args: argparse.Namespace) -> int:
    bank = make_filter_bank(args.K)
    lines = [f"# waveqm filters K={args.K}", "index,h,g"]
    lines += [f"{i},{_g17(h)},{_g17(g)}" for i, (h, g) in enumerate(zip(bank.h, bank.g))]
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def cmd_cascade(args: argparse.Namespace) -> int:
    bank = make_filter_bank(args.K)
    kind = "wavelet" if args.wavelet else "scaling"
    fn = refine_wavelet(bank, args.depth) if args.wavelet else refine_scaling(bank, args.depth)
    lines = [f"# waveqm cascade K={args.K} depth={args.depth} kind={kind}", "x,value"]
    lines += [f"{_g17(x)},{_g17(v)}" for x, v in zip(fn.x, fn.values)]
    sys.stdout.write("\n".join(lines) + "\n")
    if args.svg:
        label = "w(x)" if args.wavelet else "s(x)"
        write_svg(args.svg, line_chart([(label, fn.x, fn.values)], title=f"{label}, K={args.K}", xlabel="x"))
    return 0


def cmd_tables(args: argparse.Namespace) -> int:
    bank = make_filter_bank(args.K)
    tables = compute_tables(bank)
    R = tables.max_shift
    lines = [f"# waveqm tables K={args.K}", "table,index,value"]
    lines += [f"moment,{m},{_g17(v)}" for m, v in enumerate(tables.moments.values)]
    for m in range(3):
        lines += [f"x{m},{n},{_g17(tables.two_point.value(m, n))}" for n in range(-R, R + 1)]
    lines += [f"gamma,{n},{_g17(tables.connection.value(n))}" for n in range(-R, R + 1)]
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def cmd_hamiltonian(args: argparse.Namespace) -> int:
    bank = make_filter_bank(args.K)
    basis = build_basis(args.k0, args.Ns, args.Nw, args.M)
    H = assemble(basis, bank, compute_tables(bank))
    meta = f"K={args.K} k0={args.k0} Ns={args.Ns} Nw={args.Nw} M={args.M}"
    ns = basis.n_scaling
    if args.out == "json":
        payload = {
            "K": args.K,
            "k0": args.k0,
            "Ns": args.Ns,
            "Nw": args.Nw,
            "M": args.M,
            "size": H.size,
            "blocks": {k: [[s.start, s.stop], [c.start, c.stop]] for k, (s, c) in H.blocks.items()},
            "entries": H.entries.tolist(),
        }
        sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        lines = [f"# waveqm hamiltonian {meta}", f"# size={H.size} scaling_rows={ns}"]
        lines += [",".join(_g17(v) for v in row) for row in H.entries]
        sys.stdout.write("\n".join(lines) + "\n")
    if args.svg:
        seps = tuple(ns + t * (2 * args.Nw + 1) for t in range(args.M + 1))
        write_svg(args.svg, heatmap(H.entries, title=f"Hamiltonian ({meta})", separators=seps))
    return 0


def cmd_solve(args: argparse.Namespace) -> int:
    spectrum = _solve_point(args.K, args.k0, args.Ns, args.Nw, args.M)
    lines = [f"# waveqm solve K={args.K} k0={args.k0} Ns={args.Ns} Nw={args.Nw} M={args.M}", "n,energy,exact,abs_error"]
    for n, e in enumerate(spectrum.eigenvalues):
        exact = n + 0.5
        lines.append(f"{n},{_g17(float(e))},{_g17(exact)},{_g17(abs(float(e) - exact))}")
    sys.stdout.write("\n".join(lines) + "\n")
    return 0 if spectrum.certified() else 1


def cmd_sweep(args: argparse.Namespace) -> int:
    track = tuple(int(t) for t in args.track.split(","))
    if not track or any(t < 0 for t in track):
        raise ValueError("--track needs a comma list of eigenvalue indices >= 0")
    mode = SweepMode(args.mode)
    if mode is SweepMode.TRANSLATION:
        lo = 1 if args.min is None else args.min
        hi = 8 if args.max is None else args.max
    else:
        lo = 0 if args.min is None else args.min
        hi = 2 if args.max is None else args.max
    if lo > hi or lo < 0:
        raise ValueError(f"bad sweep range [{lo}, {hi}]")
    cfg = SweepConfig(
        mode=mode,
        K=args.K,
        k0=args.k0,
        M=args.M,
        Ns=args.Ns,
        Nw=args.Ns if args.Nw is None else args.Nw,
        sweep_values=tuple(range(lo, hi + 1)),
        track=track,
        out_path=args.out,
        svg_path=args.svg,
    )
    if mode is SweepMode.TRANSLATION:
        rows = run_translation_sweep(cfg)
        lines = [f"# waveqm sweep mode=Ns K={cfg.K} k0={cfg.k0} M={cfg.M} range={lo}..{hi} track={args.track}"]
        lines.append("Ns,n,energy,ln_abs_error")
        lines += [f"{N},{n},{_g17(e)},{_g17(l)}" for N, n, e, l in rows]
        _emit("\n".join(lines) + "\n", cfg.out_path)
    else:
        rows = run_scale_sweep(cfg)
        lines = [f"# waveqm sweep mode=M K={cfg.K} k0={cfg.k0} Ns={cfg.Ns} Nw={cfg.Nw} range={lo}..{hi} track={args.track}"]
        lines.append("M,n,energy,abs_error")
        lines += [f"{M},{n},{_g17(e)},{_g17(d)}" for M, n, e, d in rows]
        table = render_scale_table(rows)
        if cfg.out_path:
            _emit("\n".join(lines) + "\n", cfg.out_path)
            sys.stdout.write(table + "\n")
        else:
            commented = "\n".join("# " + line for line in table.splitlines())
            sys.stdout.write("\n".join(lines) + "\n" + commented + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="waveqm", description="Multiresolution oscillator spectra in a Daubechies basis")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("filters", help="dump filter coefficients as CSV")
    p.add_argument("--K", type=int, choices=(1, 2, 3), required=True)
    p.set_defaults(func=cmd_filters)

    p = sub.add_parser("cascade", help="dyadic samples of the scaling or wavelet function")
    p.add_argument("--K", type=int, choices=(2, 3), required=True)
    p.add_argument("--depth", type=int, default=8)
    p.add_argument("--wavelet", action="store_true")
    p.add_argument("--svg", type=str, default=None)
    p.set_defaults(func=cmd_cascade)

    p = sub.add_parser("tables", help="dump the exact integral tables")
    p.add_argument("--K", type=int, choices=(3,), default=3)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("hamiltonian", help="assemble and export the Hamiltonian matrix")
    p.add_argument("--K", type=int, choices=(3,), default=3)
    p.add_argument("--k0", type=int, default=0)
    p.add_argument("--Ns", type=int, default=5)
    p.add_argument("--Nw", type=int, default=5)
    p.add_argument("--M", type=int, choices=(0, 1, 2), required=True)
    p.add_argument("--out", choices=("csv", "json"), default="csv")
    p.add_argument("--svg", type=str, default=None)
    p.set_defaults(func=cmd_hamiltonian)

    p = sub.add_parser("solve", help="diagonalize and report the spectrum")
    p.add_argument("--K", type=int, choices=(3,), default=3)
    p.add_argument("--k0", type=int, default=0)
    p.add_argument("--Ns", type=int, default=5)
    p.add_argument("--Nw", type=int, default=5)
    p.add_argument("--M", type=int, required=True)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("sweep", help="convergence sweeps over truncation parameters")
    p.add_argument("--mode", choices=("Ns", "M"), required=True)
    p.add_argument("--K", type=int, choices=(3,), default=3)
    p.add_argument("--k0", type=int, default=0)
    p.add_argument("--M", type=int, default=1, help="fixed wavelet depth for mode=Ns")
    p.add_argument("--Ns", type=int, default=5, help="fixed half-range for mode=M")
    p.add_argument("--Nw", type=int, default=None)
    p.add_argument("--min", type=int, default=None)
    p.add_argument("--max", type=int, default=None)
    p.add_argument("--track", type=str, default="0,1,2,3,4,5,6,7,8")
    p.add_argument("--out", type=str, default=None)
    p.add_argument("--svg", type=str, default=None)
    p.set_defaults(func=cmd_sweep)

    return parser


def parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    """Validated CLI arguments; exits with code 2 on usage errors."""
    return build_parser().parse_args(argv)


def main(argv: list[str] | None = None) -> int:
    args = parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"waveqm: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
