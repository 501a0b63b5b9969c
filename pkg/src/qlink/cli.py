"""``qlink`` command line: parse, reduce, measure, classify, demo.

Exit codes: 0 success, 1 demo mismatch, 2 usage or parse error,
3 state could not be classified.
"""

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from qlink import fixtures
from qlink.classify import UNCLASSIFIED, classify, link_sketch
from qlink.density import from_pure, partial_trace, purity, reduced_from_pure
from qlink.errors import QlinkError
from qlink.ketparse import format_state, parse_state
from qlink.measurement import measure, single_qubit_projectors
from qlink.measures import concurrence, ppt_separable, pure_bipartite_separable
from qlink.qstate import qubit_index, qubit_indices, qubit_label
from qlink.reproduce import rows

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_UNCLASSIFIED = 3


@dataclass(frozen=True)
class CliConfig:
    tolerance: float = 1e-9
    output_format: str = "human"
    normalize_input: bool = False
    fixture_dir: Path = None

    def __post_init__(self):
        if not self.tolerance > 0:
            raise QlinkError(f"--tol must be positive, got {self.tolerance}")
        if self.fixture_dir is not None and not Path(self.fixture_dir).is_dir():
            raise QlinkError(f"fixture directory {self.fixture_dir} does not exist")


class UsageError(Exception):
    pass


def g6(x):
    return f"{x:.6g}"


def resolve_state(text, cfg):
    """Fixture reference, or a ket expression (forced with an ``expr:`` prefix)."""
    if text.startswith("expr:"):
        return parse_state(text[5:], normalize=cfg.normalize_input)
    if fixtures.is_fixture_ref(text):
        return fixtures.resolve(text, cfg.fixture_dir)
    return parse_state(text, normalize=cfg.normalize_input)


def _complex_str(z):
    if abs(z.imag) == 0:
        return g6(z.real)
    return f"{g6(z.real)}{'+' if z.imag >= 0 else '-'}{g6(abs(z.imag))}i"


def _amplitude_table(s):
    n = s.num_qubits
    lines = [f"{'index':>5}  {'basis':<{n + 2}}  {'re':>12}  {'im':>12}"]
    for i, z in enumerate(s.amplitudes):
        if z == 0:
            continue
        lines.append(f"{i:>5}  |{format(i, f'0{n}b')}>  {g6(z.real):>12}  {g6(z.imag):>12}")
    return "\n".join(lines)


def _matrix_lines(m):
    cells = [[_complex_str(z) for z in row] for row in m]
    width = max(len(c) for row in cells for c in row)
    return "\n".join("  [ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells)


def cmd_parse(args, cfg):
    s = resolve_state(args.state, cfg)
    if cfg.output_format == "json":
        return s.to_dict(), EXIT_OK
    return f"{s.num_qubits}-qubit state\n{_amplitude_table(s)}", EXIT_OK


def _two_qubit_summary(rho, tol):
    rep = concurrence(rho, tol=tol)
    ppt = ppt_separable(rho, tol=tol)
    return {
        "concurrence": rep.concurrence,
        "lambdas": list(rep.lambdas),
        "concurrence_separable": rep.separable,
        "ppt_min_eigenvalue": ppt.min_eigenvalue,
        "ppt_separable": ppt.separable,
    }


def cmd_reduce(args, cfg):
    s = resolve_state(args.state, cfg)
    try:
        gone = qubit_indices(args.trace_out, s.num_qubits)
    except QlinkError as exc:
        raise UsageError(str(exc)) from None
    if not gone or len(gone) >= s.num_qubits:
        raise UsageError("--trace-out must name a proper nonempty subset of the qubits")
    rho = partial_trace(from_pure(s), gone)
    kept = "".join(qubit_label(q) for q in range(s.num_qubits) if q not in gone)
    traced = "".join(qubit_label(q) for q in gone)
    result = {"kept": kept, "traced_out": traced, "reduced": rho.to_dict(), "purity": purity(rho)}
    if rho.num_qubits == 2:
        result.update(_two_qubit_summary(rho, cfg.tolerance))
    if cfg.output_format == "json":
        return result, EXIT_OK
    lines = [f"rho_{kept} = tr_{traced} |psi><psi|", _matrix_lines(rho.matrix), f"purity: {g6(result['purity'])}"]
    if rho.num_qubits == 2:
        lams = ", ".join(g6(x) for x in result["lambdas"])
        lines.append(f"lambdas: {lams}")
        verdict = "separable" if result["concurrence_separable"] else "entangled"
        lines.append(f"concurrence: {g6(result['concurrence'])} ({verdict})")
        verdict = "separable" if result["ppt_separable"] else "entangled"
        lines.append(f"PPT min eigenvalue: {g6(result['ppt_min_eigenvalue'])} ({verdict})")
    return "\n".join(lines), EXIT_OK


def _parse_basis(text):
    if text.upper() in ("Z", "X"):
        return text.upper()
    if text.startswith("custom:"):
        try:
            parts = [complex(p.replace("i", "j")) for p in text[7:].split(",")]
        except ValueError:
            raise UsageError(f"bad custom basis {text!r}") from None
        if len(parts) != 2:
            raise UsageError("custom basis needs two components: custom:u0,u1")
        return np.array(parts)
    raise UsageError(f"basis must be Z, X or custom:u0,u1, got {text!r}")


def cmd_measure(args, cfg):
    s = resolve_state(args.state, cfg)
    basis = _parse_basis(args.basis)
    try:
        target = qubit_index(args.target, s.num_qubits)
        ps = single_qubit_projectors(s.num_qubits, target, basis, tol=cfg.tolerance)
    except QlinkError as exc:
        raise UsageError(str(exc)) from None
    others = [q for q in range(s.num_qubits) if q != target]
    pair = "".join(qubit_label(q) for q in others)
    outcomes = []
    for o in measure(s, ps):
        entry = {"label": o.label, "probability": o.probability, "post_state": None}
        if o.post_state is not None:
            entry["post_state"] = o.post_state.to_dict()
            entry["post_state_text"] = format_state(o.post_state, cutoff=1e-15)
            if len(others) == 2:
                entry["remaining_pair"] = pair
                entry["remaining_separable"] = pure_bipartite_separable(o.post_state, others[0], tol=cfg.tolerance)
                entry["remaining_concurrence"] = concurrence(reduced_from_pure(o.post_state, others), tol=cfg.tolerance).concurrence
        outcomes.append(entry)
    result = {"target": qubit_label(target), "basis": args.basis, "outcomes": outcomes}
    if cfg.output_format == "json":
        return result, EXIT_OK
    lines = [f"measure qubit {qubit_label(target)} in basis {args.basis}"]
    for e in outcomes:
        line = f"  outcome {e['label']}: p = {g6(e['probability'])}"
        if e["post_state"] is None:
            lines.append(line + "  (no post-measurement state)")
            continue
        lines.append(line)
        lines.append(f"    post-state: {e['post_state_text']}")
        if "remaining_pair" in e:
            verdict = "separable" if e["remaining_separable"] else "entangled"
            lines.append(f"    qubits {pair}: {verdict}, concurrence {g6(e['remaining_concurrence'])}")
    return "\n".join(lines), EXIT_OK


def cmd_classify(args, cfg):
    s = resolve_state(args.state, cfg)
    if s.num_qubits != 3:
        raise UsageError(f"classify needs a 3-qubit state, got {s.num_qubits} qubits")
    report = classify(s, tol=cfg.tolerance)
    code = EXIT_UNCLASSIFIED if report.link.kind == UNCLASSIFIED else EXIT_OK
    if cfg.output_format == "json":
        return report.to_dict(), code
    lines = [f"link: {report.link}", "separable cuts (qubit | rest):"]
    lines += [f"  {q}: {'yes' if v else 'no'}" for q, v in report.separable_cuts.items()]
    lines.append("pairwise concurrence (third qubit traced out):")
    lines += [f"  C_{p} = {g6(c)}" for p, c in report.pairwise_concurrence.items()]
    lines += [f"warning: {w}" for w in report.warnings]
    lines.append("")
    lines.append(link_sketch(report.link).rstrip("\n"))
    return "\n".join(lines), code


def cmd_demo(args, cfg):
    results = rows(tol=args.tol)
    ok = all(r.passed for r in results)
    code = EXIT_OK if ok else EXIT_MISMATCH
    if cfg.output_format == "json":
        return {"all_pass": ok, "rows": [r.to_dict() for r in results]}, code
    width = max(len(r.name) for r in results)
    lines = []
    for r in results:
        exp = g6(r.expected) if isinstance(r.expected, float) else str(r.expected)
        got = g6(r.computed) if isinstance(r.computed, float) else str(r.computed)
        mark = "PASS" if r.passed else "FAIL"
        lines.append(f"{mark}  {r.name:<{width}}  expected {exp:<18} computed {got}")
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} rows pass")
    return "\n".join(lines), code


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=None, help="numerical tolerance (default 1e-9)")
    common.add_argument("--format", choices=("human", "json"), default="human", dest="output_format")
    common.add_argument("--normalize", action="store_true", help="rescale input expressions to unit norm")
    common.add_argument("--fixtures", default=None, metavar="DIR", help="fixture directory (overrides $QLINK_FIXTURES)")

    parser = argparse.ArgumentParser(prog="qlink", description="3-qubit states as linked rings.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", parents=[common], help="show the amplitudes of a state")
    p.add_argument("state")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("reduce", parents=[common], help="partial trace, purity and 2-qubit separability")
    p.add_argument("state")
    p.add_argument("--trace-out", "-t", required=True, help="qubits to trace out, e.g. A or BC")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("measure", parents=[common], help="projective measurement of one qubit")
    p.add_argument("state")
    p.add_argument("--target", default="A")
    p.add_argument("--basis", default="Z", help="Z, X or custom:u0,u1")
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("classify", parents=[common], help="link class of a 3-qubit pure state")
    p.add_argument("state", help="fixture (ghz, w, chain:0.6,0.8, ...) or ket expression")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("demo", parents=[common], help="recompute the worked examples, expected vs computed")
    p.set_defaults(func=cmd_demo)
    return parser


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        cfg = CliConfig(
            tolerance=args.tol if args.tol is not None else 1e-9,
            output_format=args.output_format,
            normalize_input=args.normalize,
            fixture_dir=args.fixtures,
        )
        output, code = args.func(args, cfg)
    except (UsageError, QlinkError) as exc:
        print(f"qlink {args.command}: error: {exc}", file=stderr)
        return EXIT_USAGE
    if isinstance(output, dict):
        stdout.write(json.dumps(output, indent=2, sort_keys=True) + "\n")
    else:
        stdout.write(output + "\n")
    return code


if __name__ == "__main__":
    raise SystemExit(main())
