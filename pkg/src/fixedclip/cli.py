"""Command line front end.

    fixedclip --clipper A.json --subject B.json --op intersection [--out R.json]
              [--svg plot.svg] [--verify N] [--seed K] [--simplify] [--rule nonzero|evenodd]
    fixedclip corpus DIR [--op OP|all] [--verify N] [--jobs J]
    fixedclip generate DIR [--count N] [--seed K]

Exit codes: 0 ok, 1 invalid input, 2 scope violation, 3 oracle disagreement,
4 internal consistency failure.
"""
import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .clip import run_boolean
from .errors import InternalInconsistency, InvalidInput, ScopeViolation
from .io import load_polygon, polygon_document, result_document
from .marking import BooleanOp
from .model import Role, Rule
from .oracle import SamplePlan, check_boolean
from .svg import render
from .tracing import simplify

EXIT_OK, EXIT_INPUT, EXIT_SCOPE, EXIT_ORACLE, EXIT_INTERNAL = 0, 1, 2, 3, 4


class OracleDisagreement(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # usage errors are invalid input; exit 2 is reserved for scope violations
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _pick_rule(flag, *declared):
    if flag:
        return Rule(flag)
    found = {r for r in declared if r is not None}
    if len(found) > 1:
        raise InvalidInput("clipper and subject declare different membership rules")
    return found.pop() if found else Rule.NONZERO


def solve(clipper_path, subject_path, op: BooleanOp, rule=None, verify=0, seed=0,
          simplified=False):
    """Load, clip and optionally verify; returns (run, result region)."""
    try:
        clipper, c_rule = load_polygon(clipper_path, Role.CLIPPER)
        subject, s_rule = load_polygon(subject_path, Role.SUBJECT)
    except OSError as exc:
        raise InvalidInput(str(exc)) from None
    rule = _pick_rule(rule, c_rule, s_rule)
    clipper.rule = subject.rule = rule
    run = run_boolean(clipper, subject, op, rule)
    result = simplify(run.result) if simplified else run.result
    if verify:
        report = check_boolean(clipper, subject, op, result, SamplePlan(seed=seed, count=verify))
        if not report.ok:
            p, want, got = report.witnesses[0]
            raise OracleDisagreement(
                f"{len(report.witnesses)} of {report.samples} samples disagree, e.g. at "
                f"{p!r}: expected {'in' if want else 'out'}, got {'in' if got else 'out'}"
            )
    return run, result


def _exit_code(exc) -> int:
    if isinstance(exc, ScopeViolation):
        return EXIT_SCOPE
    if isinstance(exc, OracleDisagreement):
        return EXIT_ORACLE
    if isinstance(exc, InternalInconsistency):
        return EXIT_INTERNAL
    return EXIT_INPUT


def run(argv=None) -> int:
    parser = _Parser(prog="fixedclip", description="Polygon boolean operations.")
    parser.add_argument("--clipper", required=True, help="clipper polygon JSON (drawn red)")
    parser.add_argument("--subject", required=True, help="subject polygon JSON (drawn black)")
    parser.add_argument("--op", required=True, choices=[o.value for o in BooleanOp],
                        help="difference is subject minus clipper")
    parser.add_argument("--out", help="result JSON (default: stdout)")
    parser.add_argument("--svg", help="write an SVG plot here")
    parser.add_argument("--verify", type=int, default=0, metavar="N",
                        help="check the result against N sampled points")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--simplify", action="store_true",
                        help="merge collinear same-origin edges in the output")
    parser.add_argument("--rule", choices=[r.value for r in Rule])
    args = parser.parse_args(argv)
    op = BooleanOp(args.op)
    try:
        clip_run, result = solve(args.clipper, args.subject, op, args.rule, args.verify,
                                 args.seed, args.simplify)
    except (InvalidInput, ScopeViolation, InternalInconsistency, OracleDisagreement) as exc:
        print(f"fixedclip: {exc}", file=sys.stderr)
        return _exit_code(exc)
    text = result_document(result, op)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    if args.svg:
        clip_run.result = result
        Path(args.svg).write_text(render(clip_run))
    return EXIT_OK


def _corpus_case(job):
    name, clipper, subject, op, verify = job
    try:
        solve(clipper, subject, BooleanOp(op), verify=verify)
    except (InvalidInput, ScopeViolation, InternalInconsistency, OracleDisagreement) as exc:
        return name, op, _exit_code(exc), str(exc)
    return name, op, EXIT_OK, ""


def run_corpus(directory, ops, verify=0, jobs=1, out=None) -> int:
    """Run every ``NAME.clipper.json`` / ``NAME.subject.json`` pair; nonzero if any fails."""
    out = out or sys.stdout
    directory = Path(directory)
    jobs_list = []
    for clipper in sorted(directory.glob("*.clipper.json")):
        name = clipper.name[: -len(".clipper.json")]
        subject = directory / f"{name}.subject.json"
        for op in ops:
            jobs_list.append((name, str(clipper), str(subject), op, verify))
    if jobs > 1 and len(jobs_list) > 1:
        with ProcessPoolExecutor(jobs) as pool:
            results = list(pool.map(_corpus_case, jobs_list))
    else:
        results = [_corpus_case(j) for j in jobs_list]
    failed = 0
    for name, op, code, message in results:
        status = "ok" if code == EXIT_OK else f"FAIL({code})"
        failed += code != EXIT_OK
        line = f"{name:<28} {op:<13} {status}"
        if message:
            line += f"  {message}"
        print(line, file=out)
    print(f"{len(results) - failed}/{len(results)} passed", file=out)
    return EXIT_OK if failed == 0 else 1


def corpus_main(argv) -> int:
    parser = _Parser(prog="fixedclip corpus")
    parser.add_argument("directory")
    parser.add_argument("--op", default="all", choices=[o.value for o in BooleanOp] + ["all"])
    parser.add_argument("--verify", type=int, default=0, metavar="N")
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args(argv)
    ops = [o.value for o in BooleanOp] if args.op == "all" else [args.op]
    return run_corpus(args.directory, ops, args.verify, args.jobs)


def generate_main(argv) -> int:
    from .corpus import generate_pairs

    parser = _Parser(prog="fixedclip generate")
    parser.add_argument("directory")
    parser.add_argument("--count", type=int, default=200)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args(argv)
    target = Path(args.directory)
    target.mkdir(parents=True, exist_ok=True)
    for case in generate_pairs(args.count, args.seed):
        (target / f"{case.name}.clipper.json").write_text(polygon_document(case.clipper))
        (target / f"{case.name}.subject.json").write_text(polygon_document(case.subject))
    return EXIT_OK


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    if argv and argv[0] == "corpus":
        return corpus_main(argv[1:])
    if argv and argv[0] == "generate":
        return generate_main(argv[1:])
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
