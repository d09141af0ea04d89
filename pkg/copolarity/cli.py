"""
Command Line Interface - verify, mult, fixdim and axioms subcommands

Exit codes:
    0  every case passed (or a query succeeded)
    1  usage or internal error
    2  PAPER_BOUND mismatch against the baseline or the expected survivors
    3  EXACT-mode discrepancies present (configurable through
       verify.exact_discrepancy_exit_code, 0 turns them into a notice)

Flags override environment variables, which override the configuration file.

Author: Copolarity-Verify
"""

import argparse
import dataclasses
import sys
from typing import List, Mapping, Optional, Sequence, Tuple

from .axioms import axiom_ledger
from .cases import CASE_IDS, ScanBounds, normalize_case_id, parse_mode, theorem_main
from .config import Config
from .errors import ComputationError, CopolarityError, InputError
from .fixed_space import (
    BoundMode,
    InvolutionKind,
    InvolutionType,
    TorusElement,
    annihilator_fixed_dim,
    eigenspace_dims,
    element_fixed_dim,
    element_fixed_dim_oracle,
    involution_fixed_dim,
    max_circle_fixed_dim,
    signed_permutation_fixed_dim,
)
from .irreps import IrrepDescriptor, freudenthal_diagram, su3_shells
from .logging_config import get_logger, setup_logging
from .report import (
    canonical_json,
    compare_to_baseline,
    load_baseline,
    render_axioms,
    render_diagram,
    render_verify,
    write_baseline,
)
from .weights import GroupType, RationalDirection, SimpleFactor, Weight

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_MISMATCH = 2
EXIT_DISCREPANCY = 3


class UsageError(CopolarityError):
    """Bad command line syntax."""


class _ParserExit(Exception):
    def __init__(self, status: int) -> None:
        super().__init__(status)
        self.status = status


class RaisingArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting and collects help text."""

    def __init__(self, *args, **kwargs) -> None:
        super().__init__(*args, **kwargs)
        self.output: List[str] = []

    def error(self, message: str) -> None:
        raise UsageError(f"{self.prog}: {message}")

    def exit(self, status: int = 0, message: Optional[str] = None) -> None:
        if message:
            self.output.append(message)
        raise _ParserExit(status)

    def _print_message(self, message: str, file=None) -> None:
        if message:
            self.output.append(message)


def build_parser() -> RaisingArgumentParser:
    parser = RaisingArgumentParser(
        prog="copolarity",
        description="Copolarity-Verify - Case analysis for abstract copolarity 7, 8 and 9",
    )
    parser.add_argument("--config", help="Configuration file (defaults to config/default_config.json)")
    sub = parser.add_subparsers(dest="command", parser_class=RaisingArgumentParser)

    verify = sub.add_parser("verify", help="Run the case searches and compare against the baseline")
    verify.add_argument("--case", help=f"One case id ({', '.join(CASE_IDS)}); all cases by default")
    verify.add_argument("--mode", choices=["paper", "exact"], help="PAPER_BOUND or EXACT fixed-space bounds")
    verify.add_argument("--format", choices=["json", "md"], help="Output format")
    verify.add_argument("--baseline", help="Baseline file to compare survivors against")
    verify.add_argument("--no-baseline", action="store_true", help="Skip the baseline comparison")
    verify.add_argument("--write-baseline", metavar="PATH", help="Write the survivor sets to PATH")
    verify.add_argument("--scan-bound", type=int, help="Bound for highest weights and tensor factor dimensions")
    verify.add_argument("--workers", type=int, help="Threads used to dispatch cases")

    mult = sub.add_parser("mult", help="Print a weight diagram")
    _add_rep_arguments(mult)
    mult.add_argument("--shells", action="store_true", help="Include the shell decomposition (A2 only)")
    mult.add_argument("--format", choices=["json", "md"], default="json", help="Output format")

    fixdim = sub.add_parser("fixdim", help="Fixed-space dimension queries")
    queries = fixdim.add_subparsers(dest="query", parser_class=RaisingArgumentParser)

    element = queries.add_parser("element", help="Fixed dimension of a finite-order torus element")
    _add_rep_arguments(element)
    element.add_argument("--direction", type=int, nargs="+", required=True, help="Exponent vector")
    element.add_argument("--order", type=int, required=True, help="Order N of the element")
    element.add_argument("--oracle", action="store_true", help="Also compute the character average")

    circle = queries.add_parser("circle", help="Largest dimension fixed by a circle")
    _add_rep_arguments(circle)
    circle.add_argument("--mode", choices=["paper", "exact"], default="exact", help="Bound mode")

    annihilator = queries.add_parser("annihilator", help="Dimension fixed by the circle of one direction")
    _add_rep_arguments(annihilator)
    annihilator.add_argument("--direction", type=int, nargs="+", required=True, help="Torus direction")

    involution = queries.add_parser("involution", help="Fixed dimension of a tensor involution")
    involution.add_argument("kind", choices=["swap", "swap_conj", "conj"], help="Involution type")
    involution.add_argument("n", type=int, help="Dimension of the (second) factor")
    involution.add_argument("--sign", type=int, choices=[1, -1], default=1, help="Sign of the involution")
    involution.add_argument("--m", type=int, help="Dimension of the first factor (conj only)")
    involution.add_argument("--brute-force", action="store_true", help="Also count with the explicit matrix")

    axioms = sub.add_parser("axioms", help="Print the axiom ledger")
    axioms.add_argument("--format", choices=["json", "md"], default="json", help="Output format")
    return parser


def _add_rep_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("group", help="Group label: A2, U1xA2, A1, A1xA1 or U1xA1xA1")
    parser.add_argument("params", type=int, nargs="+", help="Highest weight in fundamental-weight coordinates")
    parser.add_argument("--charge", type=int, default=1, help="Central charge when the group has a circle")


def build_rep(group_label: str, params: Sequence[int], charge: int = 1) -> IrrepDescriptor:
    """
    IrrepDescriptor from a group label and highest weight coordinates.

    Raises:
        InputError: If the label is unknown or the parameter count is wrong
    """
    group = GroupType.parse(group_label)
    if len(params) != group.semisimple_rank:
        raise InputError(f"Group {group.label} needs {group.semisimple_rank} parameters, got {len(params)}")
    if group.simple_factors == (SimpleFactor.A2,) and not group.has_central_circle:
        return IrrepDescriptor.su3(*params)
    return IrrepDescriptor(group, Weight(tuple(params), charge if group.has_central_circle else 0))


def _cmd_verify(args: argparse.Namespace, config: Config) -> Tuple[int, str]:
    bounds = ScanBounds.from_config(config)
    if args.scan_bound is not None:
        bounds = dataclasses.replace(bounds, max_highest_weight=args.scan_bound, max_tensor_dim=args.scan_bound)
    verify = config.get_verify_config()
    mode = parse_mode(args.mode or verify.get("mode", "paper"))
    fmt = args.format or verify.get("format", "json")
    workers = args.workers if args.workers is not None else verify.get("workers", 1)
    if workers < 1:
        raise InputError(f"--workers must be positive, got {workers}")
    case_ids = [normalize_case_id(args.case)] if args.case else list(CASE_IDS)

    theorem = theorem_main(mode, bounds, workers, case_ids)

    mismatches: List[str] = []
    if args.write_baseline:
        write_baseline(theorem.reports, config.resolve_path(args.write_baseline))
    elif not args.no_baseline:
        baseline_path = config.resolve_path(args.baseline or verify.get("baseline_file"))
        mismatches = compare_to_baseline(theorem.reports, load_baseline(baseline_path))

    output = render_verify(theorem, fmt, mismatches)
    if mismatches or any(r.status != "PASS" for r in theorem.reports) or theorem.status != "PASS":
        return EXIT_MISMATCH, output
    if mode is BoundMode.EXACT and theorem.discrepancy_count:
        code = verify.get("exact_discrepancy_exit_code", EXIT_DISCREPANCY)
        logger.info(f"{theorem.discrepancy_count} EXACT-mode discrepancies, exit code {code}")
        return code, output
    return EXIT_OK, output


def _cmd_mult(args: argparse.Namespace) -> Tuple[int, str]:
    rep = build_rep(args.group, args.params, args.charge)
    diagram = freudenthal_diagram(rep)
    shells = None
    if args.shells:
        if rep.group.simple_factors != (SimpleFactor.A2,):
            raise InputError("--shells needs an A2 group")
        shells = su3_shells(*rep.highest_weight.coords)
    return EXIT_OK, render_diagram(diagram, args.format, shells)


def _cmd_fixdim(args: argparse.Namespace) -> Tuple[int, str]:
    if args.query is None:
        raise UsageError("fixdim needs a query: element, circle, annihilator or involution")
    if args.query == "involution":
        kind = InvolutionKind(InvolutionType(args.kind.upper()), args.sign)
        data = {"kind": kind.label, "n": args.n, "real_dim": involution_fixed_dim(args.n, kind, args.m)}
        if args.m is not None:
            data["m"] = args.m
        if args.brute_force:
            data["brute_force"] = signed_permutation_fixed_dim(args.n, kind, args.m)
        return EXIT_OK, canonical_json(data)

    rep = build_rep(args.group, args.params, args.charge)
    diagram = freudenthal_diagram(rep)
    data = {"representation": rep.to_dict()}
    if args.query == "element":
        h = TorusElement(tuple(args.direction), args.order)
        result = element_fixed_dim(diagram, h)
        data.update(result.to_dict())
        data["element"] = h.to_dict()
        data["eigenspace_dims"] = eigenspace_dims(diagram, h)
        if args.oracle:
            data["oracle_complex_dim"] = element_fixed_dim_oracle(rep, h)
    elif args.query == "circle":
        data.update(max_circle_fixed_dim(diagram, parse_mode(args.mode)).to_dict())
    else:
        data.update(annihilator_fixed_dim(diagram, RationalDirection.from_vector(args.direction)).to_dict())
    return EXIT_OK, canonical_json(data)


def run_cli(args: Sequence[str], environ: Optional[Mapping[str, str]] = None) -> Tuple[int, str]:
    """
    Run one command.

    Args:
        args: Command line arguments without the program name
        environ: Environment used for configuration overrides (os.environ when None)

    Returns:
        (exit code, text for stdout); error messages go to stderr
    """
    parser = build_parser()
    try:
        parsed = parser.parse_args(list(args))
        if parsed.command is None:
            raise UsageError("a command is required: verify, mult, fixdim or axioms")
        config = Config(parsed.config, environ=environ)
        setup_logging(config=config)
        if parsed.command == "verify":
            return _cmd_verify(parsed, config)
        if parsed.command == "mult":
            return _cmd_mult(parsed)
        if parsed.command == "fixdim":
            return _cmd_fixdim(parsed)
        return EXIT_OK, render_axioms(axiom_ledger(), parsed.format)
    except _ParserExit as e:
        return e.status, "".join(_collect_output(parser))
    except (UsageError, InputError, ValueError, OSError) as e:
        logger.error(f"{e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR, ""
    except ComputationError as e:
        logger.exception(f"Internal consistency check failed: {e}")
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_ERROR, ""


def _collect_output(parser: RaisingArgumentParser) -> List[str]:
    """Help text may have been printed by the top-level parser or by a subparser."""
    output = list(parser.output)
    for action in parser._actions:
        if isinstance(action, argparse._SubParsersAction):
            for child in action.choices.values():
                output.extend(_collect_output(child))
    return output


def main(argv: Optional[Sequence[str]] = None) -> int:
    code, output = run_cli(sys.argv[1:] if argv is None else argv)
    if output:
        sys.stdout.write(output)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
