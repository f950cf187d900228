"""Command line front end: CSV tables in, one figure out."""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .plots import PlotSpec, SchemaError, plot_delta_curves, plot_reflectivity


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plotviz",
        description="Plot nlcasimir CSV output (force curves or "
        "reflectivity scans) as a PNG or SVG figure.",
    )
    parser.add_argument("inputs", nargs="+", metavar="CSV",
                        help="input tables, one curve each")
    parser.add_argument("--out", required=True, metavar="IMAGE",
                        help="output image; .png or .svg selects the format")
    parser.add_argument("--label", action="append", default=None,
                        metavar="TEXT",
                        help="legend label, once per input "
                        "(default: the file stem)")
    parser.add_argument("--kind", choices=("delta", "reflectivity"),
                        default="delta",
                        help="which table schema to plot (default: delta)")
    parser.add_argument("--linear", action="store_true",
                        help="linear axes instead of log-log")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    labels = args.label
    if labels is None:
        labels = [Path(p).stem for p in args.inputs]
    try:
        spec = PlotSpec(
            inputs=tuple(Path(p) for p in args.inputs),
            labels=tuple(labels),
            out=Path(args.out),
            log_log=not args.linear,
        )
        if args.kind == "delta":
            written = plot_delta_curves(spec)
        else:
            written = plot_reflectivity(spec)
    except SchemaError as exc:
        print(f"plotviz: error: {exc}", file=sys.stderr)
        return 1
    print(written)
    return 0


if __name__ == "__main__":
    sys.exit(main())
