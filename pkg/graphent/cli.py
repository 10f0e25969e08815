import argparse
import io
import math
import sys

from .entanglement import CrossRouteError
from .entanglement import entanglement_report, check_report
from .entanglement import report_to_csv, report_to_json
from .graph import PRESETS, dump_spec, load_spec, preset
from .graphstate import circuit_description, circuit_to_json
from .logging import create_logger
from .sweep import DEFAULT_PHI_POINTS, DEFAULT_THETA_POINTS
from .sweep import SweepKind, SweepSpec, run_sweep, sweep_to_csv


EXIT_OK = 0
EXIT_INPUT_ERROR = 2
EXIT_CROSS_ROUTE = 3


parser = argparse.ArgumentParser(
    prog="graphent",
    description="""Prepares weighted-graph states built with controlled phase
    shift gates and quantifies the geometric measure of entanglement of
    every qubit with the rest of the register.""")
parser.add_argument('command', choices=[
                        'report', 'sweep-phi', 'sweep-theta', 'emit-circuit', 'preset'
                    ],
                    help="""Specifies the graphent command to run:
                    report - Entanglement of every qubit of a spec file via the
                    closed form, the statevector and (with --shots) simulated
                    mean-spin measurements.
                    sweep-phi - Two-qubit sweep of the CP angle over [0, 2π]
                    with both qubits in |+>.
                    sweep-theta - Two-qubit sweep of both initial angles over
                    [0, π]² with a CZ edge.
                    emit-circuit - Prints the gate sequence preparing a spec file
                    as JSON.
                    preset - Prints a uniform spec document for a named graph
                    family (edgeless, path, cycle, star, complete, two-qubit).""")
parser.add_argument('target', nargs='?', default=None,
                    help="""The spec file for report/emit-circuit, or the family
                    name for preset.""")
parser.add_argument('-s', '--shots', required=False, default=None, type=int,
                    help="""Shots per measurement basis. Enables the simulated
                    measurement route for report and the sweeps.""")
parser.add_argument('--seed', required=False, default=None, type=int,
                    help="""Base seed of the simulated measurements. Needs --shots.
                    Defaults to 0""")
parser.add_argument('--flip', required=False, default=None, type=float,
                    help="""Symmetric readout flip probability in [0, 0.5]. Needs
                    --shots. Defaults to 0""")
parser.add_argument('-p', '--points', required=False, default=None, type=int,
                    help=f"""Sweep points per axis. Defaults to {DEFAULT_PHI_POINTS}
                    for sweep-phi and {DEFAULT_THETA_POINTS} for sweep-theta""")
parser.add_argument('-w', '--workers', required=False, default=None, type=int,
                    help="""Worker processes for sweeps. Defaults to the number of
                    physical cores; 1 runs in-process""")
parser.add_argument('-f', '--format', required=False, default='csv',
                    choices=['csv', 'json'],
                    help="""Output format of report. Defaults to csv""")
parser.add_argument('-o', '--out', required=False, default=None,
                    help="""Writes the output to a file instead of stdout.""")
parser.add_argument('--hadamard', required=False, default=False, action='store_true',
                    help="""Used with emit-circuit. Emits H instead of RY(π/2) for
                    qubits starting in |+>.""")
parser.add_argument('-n', '--n', required=False, default=2, type=int,
                    help="""Used with preset. Number of vertices. Defaults to 2""")
parser.add_argument('--theta', required=False, default=math.pi / 2, type=float,
                    help="""Used with preset. Initial θ of every qubit. Defaults to π/2""")
parser.add_argument('--phi', required=False, default=math.pi, type=float,
                    help="""Used with preset. CP angle of every edge. Defaults to π""")
parser.add_argument('--alpha', required=False, default=0.0, type=float,
                    help="""Used with preset. Initial α of every qubit. Defaults to 0""")
parser.add_argument('-d', '--debug', required=False, default=False, action='store_true',
                    help="""Enables debug logging.""")
parser.add_argument('-l', '--logfile', required=False, default=False, action='store_true',
                    help="""Enables logging to a file in the current working directory
                    instead of stderr.""")


def require_target(args, what):

    if not args.target:
        raise ValueError(f"The {args.command} command needs {what}")
    return args.target


def report(args, out):
    """Writes the per-qubit entanglement report of a spec file.

    The closed form is checked against the statevector routes on every run.
    """

    spec = load_spec(require_target(args, "a spec file"))
    result = entanglement_report(
        spec, shots=args.shots, seed=args.seed, readout_flip=args.flip)
    check_report(result)

    if args.format == 'json':
        out.write(report_to_json(result) + "\n")
    else:
        report_to_csv(result, out)


def sweep(args, out, kind):

    default_points = DEFAULT_PHI_POINTS if kind is SweepKind.PHI_LINE else DEFAULT_THETA_POINTS
    definition = SweepSpec(
        kind=kind,
        points=args.points if args.points is not None else default_points,
        shots=args.shots,
        seed=args.seed,
        readout_flip=args.flip)
    rows = run_sweep(definition, workers=args.workers)
    sweep_to_csv(definition, rows, out)


def emit_circuit(args, out):

    spec = load_spec(require_target(args, "a spec file"))
    circuit = circuit_description(spec, use_hadamard=args.hadamard)
    out.write(circuit_to_json(circuit) + "\n")


def emit_preset(args, out):

    name = require_target(args, f"a family name ({', '.join(sorted(PRESETS))})")
    spec = preset(name, args.n, theta=args.theta, phi=args.phi, alpha=args.alpha)
    out.write(dump_spec(spec, indent=2) + "\n")


def resolve_shot_options(args):
    """Fills in --seed and --flip, which only apply to simulated measurements."""

    if args.shots is None and (args.seed is not None or args.flip is not None):
        raise ValueError("--seed and --flip need --shots")
    if args.seed is None:
        args.seed = 0
    if args.flip is None:
        args.flip = 0.0


def run_command(args, out):

    resolve_shot_options(args)
    if args.command == 'report':
        report(args, out)
    elif args.command == 'sweep-phi':
        sweep(args, out, SweepKind.PHI_LINE)
    elif args.command == 'sweep-theta':
        sweep(args, out, SweepKind.THETA_GRID)
    elif args.command == 'emit-circuit':
        emit_circuit(args, out)
    elif args.command == 'preset':
        emit_preset(args, out)


def main(argv=None):
    """Entry point of the graphent command.

    :param argv: Command line arguments, defaults to sys.argv[1:]
    :type argv: list, optional
    :return: 0 on success, 2 on input errors, 3 when the closed form and
    the statevector disagree
    :rtype: int
    """

    args = parser.parse_args(argv)
    logger = create_logger(debug=args.debug, log_to_file=args.logfile)
    logger.info(f"Running {args.command}")

    # Output is buffered so that a failing run writes nothing to --out
    buffer = io.StringIO()
    try:
        run_command(args, buffer)
    except CrossRouteError as e:
        logger.warning(f"Cross-route disagreement: {e}")
        print(f"graphent: internal disagreement: {e}", file=sys.stderr)
        return EXIT_CROSS_ROUTE
    except (OSError, ValueError) as e:
        print(f"graphent: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8", newline="") as f:
                f.write(buffer.getvalue())
        except OSError as e:
            print(f"graphent: {e}", file=sys.stderr)
            return EXIT_INPUT_ERROR
    else:
        sys.stdout.write(buffer.getvalue())

    logger.info(f"Finished {args.command}")
    return EXIT_OK
