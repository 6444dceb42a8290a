"""Batch command line mirroring the pipeline: translate, mutate, test, render, serve."""

from __future__ import annotations

import argparse
import json
import sys

from .errors import FormtError
from .form import print_form
from .layout import GROUPING_MODES, build_scene, render_svg
from .pipeline import analyze_spec, evaluate_tests
from .testbase import load_tests, mutant_to_dict, report_from_dict, report_to_dict


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="formt")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("translate", help="translate a logic spec to form calculus")
    p.add_argument("spec")
    p.add_argument("--no-simplify", action="store_true")
    p.add_argument("--single-letter-atoms", action="store_true",
                   help="print paper-style compact forms (single-letter atoms only)")

    p = sub.add_parser("mutate", help="list classified mutants of a spec")
    p.add_argument("spec")
    p.add_argument("--raw", action="store_true", help="mutate the unsimplified translation")
    p.add_argument("--var-cap", type=int, default=None)

    p = sub.add_parser("test", help="run kill analysis against a test base")
    p.add_argument("spec")
    p.add_argument("tests")
    p.add_argument("-o", "--output", default=None, help="write KillReport JSON here")
    p.add_argument("--raw", action="store_true")
    p.add_argument("--var-cap", type=int, default=None)
    p.add_argument("--figures", default=None, help="write kill chart and CSV to this directory")

    p = sub.add_parser("render", help="render a KillReport to an SVG map")
    p.add_argument("report")
    p.add_argument("--grouping", choices=GROUPING_MODES, default="document")
    p.add_argument("-o", "--output", default="map.svg")
    p.add_argument("--config", default=None, help="JSON config for palette/padding")
    p.add_argument("--scene-json", default=None, help="also write the scene graph JSON here")

    p = sub.add_parser("serve", help="start the local HTTP service")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--project", default=None, help="project bundle JSON to preload")

    return parser


def cmd_translate(args) -> int:
    analysis = analyze_spec(_read(args.spec))
    compact = args.single_letter_atoms
    print(print_form(analysis.translated, compact=compact))
    if not args.no_simplify:
        print(print_form(analysis.simplified, compact=compact))
    return 0


def cmd_mutate(args) -> int:
    analysis = analyze_spec(_read(args.spec), raw=args.raw, var_cap=args.var_cap)
    print("id\toperator\tpath\tform\tstatus")
    for m in analysis.mutants:
        d = mutant_to_dict(m)
        print(f"{d['id']}\t{d['operator']}\t{d['path']}\t{d['form']}\t{d['status']}")
    return 0


def cmd_test(args) -> int:
    analysis = analyze_spec(_read(args.spec), raw=args.raw, var_cap=args.var_cap)
    tests = load_tests(args.tests)
    report = evaluate_tests(analysis, tests, var_cap=args.var_cap)
    print(f"origin: {print_form(report.origin)}")
    print(
        f"mutants: {len(report.mutants)} (true: {report.true_count}, "
        f"equivalent: {report.equivalent_count}, unknown: {report.unknown_count})"
    )
    print(f"killed: {report.killed_true_count}/{report.true_count} true mutants")
    print(f"mutation score: {report.mutation_score:.3f}")
    failures = ", ".join(report.origin_failures) if report.origin_failures else "none"
    print(f"origin validation failures: {failures}")
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            json.dump(report_to_dict(report), fh, indent=2)
            fh.write("\n")
        print(f"wrote {args.output}", file=sys.stderr)
    if args.figures:
        from .figures import write_report_figures

        for path in write_report_figures(report, args.figures):
            print(f"wrote {path}", file=sys.stderr)
    return 0


def cmd_render(args) -> int:
    with open(args.report, encoding="utf-8") as fh:
        report = report_from_dict(json.load(fh))
    config = json.loads(_read(args.config)) if args.config else None
    scene = build_scene(report.origin, report, args.grouping, config)
    svg = render_svg(scene, config)
    with open(args.output, "wb") as fh:
        fh.write(svg)
    print(f"wrote {args.output}", file=sys.stderr)
    if args.scene_json:
        from .layout import scene_to_dict

        with open(args.scene_json, "w", encoding="utf-8") as fh:
            json.dump(scene_to_dict(scene), fh, indent=2)
            fh.write("\n")
        print(f"wrote {args.scene_json}", file=sys.stderr)
    return 0


def cmd_serve(args) -> int:
    from .service import serve

    serve(port=args.port, project_file=args.project, host=args.host)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    handler = {
        "translate": cmd_translate,
        "mutate": cmd_mutate,
        "test": cmd_test,
        "render": cmd_render,
        "serve": cmd_serve,
    }[args.command]
    try:
        return handler(args)
    except (FormtError, OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"formt: error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # internal invariant violation
        print(f"formt: internal error: {exc!r}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
