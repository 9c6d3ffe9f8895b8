"""Command-line interface.

Subcommands::

    regions A.mtx B.mtx [--variant plain|tilde|simplified] [--json OUT]
                        [--svg OUT] [--grid N] [--with-oracle]
    check   A.mtx B.mtx --point RE,IM [--inf] [--tol EPS]
    count   A.mtx B.mtx [--variant ...] [--with-oracle] [--json OUT]
    eigs    A.mtx B.mtx [--method charpoly|qr|auto] [--json OUT]
    fwderr  Ahat.mtx Bhat.mtx [--index I] [--json OUT]
    demo    testmat --n N --a A --b B [regions options]

Exit codes: 0 success, 1 usage error, 2 data error, 3 numerical failure.
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from .core import INFTY, DataError, NumericalError, Pencil
from .counting import CountMismatch, cluster_components, verify_counts
from .document import (
    SCHEMA,
    build_region_document,
    document_to_json,
    file_sha256,
    spectrum_to_dict,
)
from .forward_error import error_bound_report, residual_data
from .mtx import read_matrix_market
from .oracle import (
    CHARPOLY_MAX_N,
    eigenvalues_charpoly,
    eigenvalues_qr,
    testmat_pencil,
)
from .reference import in_chordal_set, in_kostic_set
from .regions import VARIANTS, family_union_membership, inclusion_family
from .svg import RenderOptions, render_svg

__all__ = ["run_cli", "main"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_NUMERICAL = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on usage problems; route them to code 1.
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _build_parser() -> _Parser:
    parser = _Parser(prog="gersh", description="Eigenvalue inclusion regions for matrix pencils")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_pencil_args(p):
        p.add_argument("a_path", metavar="A.mtx", help="Matrix Market file for A")
        p.add_argument("b_path", metavar="B.mtx", help="Matrix Market file for B")

    def add_regions_output(p):
        p.add_argument("--variant", choices=VARIANTS, default="plain")
        p.add_argument("--json", dest="json_out", metavar="OUT", help="write the JSON document here")
        p.add_argument("--svg", dest="svg_out", metavar="OUT", help="write an SVG figure here")
        p.add_argument("--grid", type=int, default=400,
                       help="raster resolution for the chordal/Kostic layers (default 400)")
        p.add_argument("--with-oracle", action="store_true",
                       help="embed the oracle spectrum (enables eigenvalue markers)")

    p_regions = sub.add_parser("regions", help="compute region families and emit JSON/SVG")
    add_pencil_args(p_regions)
    add_regions_output(p_regions)

    p_check = sub.add_parser("check", help="membership of one point in every set")
    add_pencil_args(p_check)
    p_check.add_argument("--point", metavar="RE,IM", help="finite query point")
    p_check.add_argument("--inf", action="store_true", help="query the point at infinity")
    p_check.add_argument("--tol", type=float, default=0.0,
                         help="membership tolerance, applied as TOL*(1+|z|)")

    p_count = sub.add_parser("count", help="cluster report with certified counts")
    add_pencil_args(p_count)
    p_count.add_argument("--variant", choices=VARIANTS, default="plain")
    p_count.add_argument("--with-oracle", action="store_true",
                         help="verify counts against the eigenvalue oracle")
    p_count.add_argument("--json", dest="json_out", metavar="OUT")

    p_eigs = sub.add_parser("eigs", help="oracle spectrum")
    add_pencil_args(p_eigs)
    p_eigs.add_argument("--method", choices=("charpoly", "qr", "auto"), default="auto")
    p_eigs.add_argument("--json", dest="json_out", metavar="OUT")

    p_fwd = sub.add_parser("fwderr", help="forward error bounds from transformed matrices")
    p_fwd.add_argument("ahat_path", metavar="Ahat.mtx")
    p_fwd.add_argument("bhat_path", metavar="Bhat.mtx")
    p_fwd.add_argument("--index", type=int, default=None,
                       help="0-based eigenvalue index (default: all)")
    p_fwd.add_argument("--json", dest="json_out", metavar="OUT")

    p_demo = sub.add_parser("demo", help="run `regions` on a generated test pencil")
    p_demo.add_argument("fixture", choices=("testmat",),
                        help="generator name; testmat is tridiagonal Toeplitz")
    p_demo.add_argument("--n", type=int, required=True)
    p_demo.add_argument("--a", type=float, required=True)
    p_demo.add_argument("--b", type=float, required=True)
    add_regions_output(p_demo)

    return parser


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _load_pencil(a_path: str, b_path: str) -> Pencil:
    return Pencil(read_matrix_market(a_path), read_matrix_market(b_path))


def _auto_spectrum(pencil: Pencil, method: str = "auto"):
    if method == "charpoly":
        return eigenvalues_charpoly(pencil), "charpoly"
    if method == "qr":
        return eigenvalues_qr(pencil), "qr"
    if pencil.n <= CHARPOLY_MAX_N:
        return eigenvalues_charpoly(pencil), "charpoly"
    return eigenvalues_qr(pencil), "qr"


def _run_regions(args, pencil: Pencil, source_a, source_b, sha_a, sha_b) -> int:
    spectrum = _auto_spectrum(pencil)[0] if args.with_oracle else None
    doc = build_region_document(
        pencil,
        variant=args.variant,
        source_a=source_a,
        source_b=source_b,
        sha_a=sha_a,
        sha_b=sha_b,
        spectrum=spectrum,
    )
    wrote = False
    if args.svg_out:
        options = RenderOptions(grid=args.grid)
        _emit(render_svg(doc, pencil=pencil, options=options), args.svg_out)
        wrote = True
    if args.json_out or not wrote:
        _emit(document_to_json(doc), args.json_out)
    return EXIT_OK


def _cmd_regions(args) -> int:
    pencil = _load_pencil(args.a_path, args.b_path)
    return _run_regions(
        args, pencil, args.a_path, args.b_path,
        file_sha256(args.a_path), file_sha256(args.b_path),
    )


def _cmd_demo(args) -> int:
    pencil = testmat_pencil(args.n, args.a, args.b)
    source = f"testmat(n={args.n}, a={args.a}, b={args.b})"
    return _run_regions(args, pencil, source, source, None, None)


def _cmd_check(args) -> int:
    pencil = _load_pencil(args.a_path, args.b_path)
    if args.inf:
        z = INFTY
        point_json: dict = {"kind": "infinity"}
        tol = args.tol
    else:
        if not args.point:
            raise _UsageError("check: either --point RE,IM or --inf is required")
        try:
            re_s, im_s = args.point.split(",")
            z = complex(float(re_s), float(im_s))
        except ValueError:
            raise _UsageError(f"check: cannot parse point {args.point!r}") from None
        point_json = {"re": z.real, "im": z.imag}
        tol = args.tol * (1.0 + abs(z))

    plain = inclusion_family(pencil, "plain")
    tilde = inclusion_family(pencil, "tilde")
    simplified = inclusion_family(pencil, "simplified")
    result = {
        "schema": SCHEMA,
        "point": point_json,
        "tolerance": tol,
        "membership": {
            "gamma": family_union_membership(plain, z, tol),
            "gammaTilde": family_union_membership(tilde, z, tol),
            "gammaS": family_union_membership(simplified, z, tol),
            "G": in_chordal_set(pencil, z, tol),
            "K": in_kostic_set(pencil, z, tol),
        },
    }
    _emit(json.dumps(result, indent=2, sort_keys=True) + "\n", None)
    return EXIT_OK


def _cmd_count(args) -> int:
    pencil = _load_pencil(args.a_path, args.b_path)
    family = inclusion_family(pencil, args.variant)
    report = cluster_components(family)
    spectrum = None
    verified = None
    if args.with_oracle:
        spectrum = _auto_spectrum(pencil)[0]
        verify_counts(pencil, report, spectrum.points(), eps_mem=1e-9)
        verified = {
            pos: True for pos, cluster in enumerate(report.clusters) if cluster.certified
        }
    doc = build_region_document(
        pencil,
        variant=args.variant,
        source_a=args.a_path,
        source_b=args.b_path,
        sha_a=file_sha256(args.a_path),
        sha_b=file_sha256(args.b_path),
        cluster_report=report,
        spectrum=spectrum,
        verified=verified,
    )
    _emit(document_to_json(doc), args.json_out)
    return EXIT_OK


def _cmd_eigs(args) -> int:
    pencil = _load_pencil(args.a_path, args.b_path)
    spectrum, method = _auto_spectrum(pencil, args.method)
    result = {
        "schema": SCHEMA,
        "method": method,
        "spectrum": spectrum_to_dict(spectrum),
    }
    _emit(json.dumps(result, indent=2, sort_keys=True) + "\n", args.json_out)
    return EXIT_OK


def _report_to_json(report) -> dict:
    data = dataclasses.asdict(report)
    data["computed"] = {"re": report.computed.real, "im": report.computed.imag}
    if report.cluster_indices is not None:
        data["cluster_indices"] = list(report.cluster_indices)
    if report.delta == float("inf"):
        data["delta"] = None
    return data


def _cmd_fwderr(args) -> int:
    ahat = read_matrix_market(args.ahat_path)
    bhat = read_matrix_market(args.bhat_path)
    data = residual_data(ahat, bhat)
    indices = [args.index] if args.index is not None else list(range(data.n))
    for i in indices:
        if not 0 <= i < data.n:
            raise DataError(f"--index {i} out of range for n={data.n}")
    result = {
        "schema": SCHEMA,
        "reports": [_report_to_json(error_bound_report(data, i)) for i in indices],
    }
    _emit(json.dumps(result, indent=2, sort_keys=True) + "\n", args.json_out)
    return EXIT_OK


_COMMANDS = {
    "regions": _cmd_regions,
    "check": _cmd_check,
    "count": _cmd_count,
    "eigs": _cmd_eigs,
    "fwderr": _cmd_fwderr,
    "demo": _cmd_demo,
}


def _preprocess(argv: list[str]) -> list[str]:
    # Join `--point -1,0` into `--point=-1,0` so the value is not mistaken
    # for an option.
    out = []
    skip = False
    for pos, token in enumerate(argv):
        if skip:
            skip = False
            continue
        if token == "--point" and pos + 1 < len(argv):
            out.append(f"--point={argv[pos + 1]}")
            skip = True
        else:
            out.append(token)
    return out


def run_cli(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    try:
        args = parser.parse_args(_preprocess(argv))
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        code = exc.code
        return int(code) if code is not None else EXIT_OK
    except (CountMismatch, NumericalError) as exc:
        print(f"gersh: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (DataError, OSError) as exc:
        print(f"gersh: data error: {exc}", file=sys.stderr)
        return EXIT_DATA


def main() -> None:
    sys.exit(run_cli())
