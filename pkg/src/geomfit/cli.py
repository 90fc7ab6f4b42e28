"""Command-line front end.

Subcommands:

* ``fit``      -- fit a dataset and print a text or JSON report
* ``plot``     -- emit an SVG scatter plot with the fitted line
* ``verify``   -- cross-check the analytic fit against the brute-force search
* ``examples`` -- write the two bundled demo datasets to disk

Exit codes: 0 success, 2 usage error, 3 data error (parse failure or a
degenerate cloud), 4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import dataio
from .cloud import PointCloud
from .correlate import correlate
from .diagnostics import orthogonality_report
from .errors import DataError, DegenerateX, DegenerateY, GeomfitError, TooFewPoints
from .oracle import default_box, grid_search_fit
from .regress import FitResult, fit
from .svgplot import render_svg

__all__ = ["Report", "build_report", "render_report", "run", "main"]

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DATA = 3
EXIT_VERIFY = 4

VERIFY_SLOPE_TOLERANCE = 1e-5


@dataclass(frozen=True)
class Report:
    n: int
    centroid_x: float
    centroid_y: float
    a: float
    b: float
    theta_deg: float
    r: float
    correlation_class: str
    sse: float
    residual_dot_i_normalized: float
    ones_dot_i_normalized: float
    ones_dot_u_normalized: float

    @property
    def equation(self) -> str:
        """Presentation-only 4-decimal form of the fitted line."""
        sign = "+" if self.b >= 0 else "-"
        return f"y = {self.a:.4f}x {sign} {abs(self.b):.4f}"


def build_report(cloud: PointCloud) -> Report:
    f = fit(cloud)
    corr = correlate(f.centered)
    diag = orthogonality_report(f)
    return Report(
        n=len(cloud),
        centroid_x=f.centered.centroid_x,
        centroid_y=f.centered.centroid_y,
        a=f.slope,
        b=f.intercept,
        theta_deg=corr.theta_deg,
        r=corr.r,
        correlation_class=corr.cls.value,
        sse=diag.sse,
        residual_dot_i_normalized=diag.residual_dot_i_normalized,
        ones_dot_i_normalized=diag.ones_dot_i_normalized,
        ones_dot_u_normalized=diag.ones_dot_u_normalized,
    )


def render_report(report: Report, fmt: str = "text") -> str:
    """Serialize a report deterministically.

    JSON keeps full-precision values in a fixed key order; the text form is
    rounded for reading (slope/intercept at 4 decimals, angle at 2).
    """
    if fmt == "json":
        payload = {
            "n": report.n,
            "centroid_x": report.centroid_x,
            "centroid_y": report.centroid_y,
            "a": report.a,
            "b": report.b,
            "equation": report.equation,
            "theta_deg": report.theta_deg,
            "r": report.r,
            "class": report.correlation_class,
            "sse": report.sse,
            "residual_dot_i_normalized": report.residual_dot_i_normalized,
            "ones_dot_i_normalized": report.ones_dot_i_normalized,
            "ones_dot_u_normalized": report.ones_dot_u_normalized,
        }
        return json.dumps(payload, indent=2) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    lines = [
        f"n:          {report.n}",
        f"centroid:   ({report.centroid_x:.4f}, {report.centroid_y:.4f})",
        f"a = {report.a:.4f}",
        f"b = {report.b:.4f}",
        f"equation:   {report.equation}",
        f"theta_deg:  {report.theta_deg:.2f}",
        f"r:          {report.r:.6g}",
        f"class:      {report.correlation_class}",
        f"sse:        {report.sse:.6g}",
        f"residual_dot_i (normalized): {report.residual_dot_i_normalized:.3e}",
        f"ones_dot_i (normalized):     {report.ones_dot_i_normalized:.3e}",
        f"ones_dot_u (normalized):     {report.ones_dot_u_normalized:.3e}",
    ]
    return "\n".join(lines) + "\n"


def _column(value: str) -> int | str:
    try:
        return int(value)
    except ValueError:
        return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="geomfit",
        description="Least-squares line fitting via centroid translation and vector projection.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io_options(p: argparse.ArgumentParser) -> None:
        p.add_argument("--input", required=True, help="path to a delimited dataset")
        p.add_argument("--x-col", type=_column, default=0, help="x column index or header name")
        p.add_argument("--y-col", type=_column, default=1, help="y column index or header name")
        p.add_argument("--delimiter", default=",", help="field delimiter (single character)")

    p_fit = sub.add_parser("fit", help="fit a dataset and print a report")
    add_io_options(p_fit)
    p_fit.add_argument("--format", choices=("text", "json"), default="text")
    p_fit.add_argument("--output", help="write the report here instead of stdout")
    p_fit.add_argument(
        "--verify",
        action="store_true",
        help="also cross-check the slope against the brute-force search",
    )

    p_plot = sub.add_parser("plot", help="emit an SVG scatter plot with the fitted line")
    add_io_options(p_plot)
    p_plot.add_argument("--output", help="write the SVG here instead of stdout")
    p_plot.add_argument("--width", type=int, default=640)
    p_plot.add_argument("--height", type=int, default=480)

    p_verify = sub.add_parser("verify", help="cross-check the analytic fit against the search oracle")
    add_io_options(p_verify)

    p_examples = sub.add_parser("examples", help="write the bundled demo datasets to disk")
    p_examples.add_argument("--output", default=".", help="directory to write the CSV files into")

    return parser


def _load_cloud(args: argparse.Namespace) -> PointCloud:
    content = Path(args.input).read_text(encoding="utf-8")
    spec = dataio.DatasetSpec(delimiter=args.delimiter, x_col=args.x_col, y_col=args.y_col)
    return dataio.parse(spec, content)


def _verify_fit(cloud: PointCloud, fit_result: FitResult) -> tuple[bool, float, float]:
    box = default_box(fit_result.slope, fit_result.intercept)
    oracle_a, oracle_b = grid_search_fit(cloud, box)
    return (
        abs(fit_result.slope - oracle_a) <= VERIFY_SLOPE_TOLERANCE,
        oracle_a,
        oracle_b,
    )


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def run(argv: list[str]) -> int:
    """Execute one CLI invocation and return its exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    try:
        if args.command == "fit":
            cloud = _load_cloud(args)
            report = build_report(cloud)
            _emit(render_report(report, args.format), args.output)
            if args.verify:
                ok, oracle_a, _ = _verify_fit(cloud, fit(cloud))
                if not ok:
                    print(
                        f"verification failed: slope {report.a} vs oracle {oracle_a}",
                        file=sys.stderr,
                    )
                    return EXIT_VERIFY
            return EXIT_OK

        if args.command == "plot":
            cloud = _load_cloud(args)
            fit_result = fit(cloud)
            _emit(render_svg(cloud, fit_result, args.width, args.height), args.output)
            return EXIT_OK

        if args.command == "verify":
            cloud = _load_cloud(args)
            fit_result = fit(cloud)
            ok, oracle_a, oracle_b = _verify_fit(cloud, fit_result)
            print(f"analytic: a = {fit_result.slope!r}, b = {fit_result.intercept!r}")
            print(f"search:   a = {oracle_a!r}, b = {oracle_b!r}")
            if not ok:
                print("verification failed", file=sys.stderr)
                return EXIT_VERIFY
            print("verification passed")
            return EXIT_OK

        if args.command == "examples":
            out_dir = Path(args.output)
            out_dir.mkdir(parents=True, exist_ok=True)
            for name in dataio.EXAMPLE_DATASETS:
                (out_dir / name).write_text(dataio.example_csv_text(name), encoding="utf-8")
                print(f"wrote {out_dir / name}")
            return EXIT_OK

        raise AssertionError(f"unhandled command {args.command!r}")
    except (DataError, DegenerateX, DegenerateY, TooFewPoints) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (OSError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except GeomfitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
