"""
``qbf`` command line: parse, dispatch, wrap the results in a Report, render.

Exit status is 0 on success, 1 when a check failed and 2 on usage or input
errors.
"""

import argparse
import logging
import sys
import time
from pathlib import Path

from rest_framework.exceptions import ValidationError

from pauli_core.formats import KIND_CHOICES
from qbflab.conf import get_setting, resolve_tolerance
from qbflab.exceptions import QbfLabError
from qbflab.reports import Report
from qbflab.seeding import resolve_seed
from qbflab.serializers import TimedReportSerializer, render_structured, to_primitive

from .commands import HANDLERS, RunContext, validated
from .inputs import combined_digest
from .serializers import FORMAT_CHOICES, GlobalOptionsSerializer

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


class UsageError(QbfLabError):
    pass


class QbfArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _add_global_flags(parser, default=None):
    """Global flags are accepted before and after the subcommand."""
    parser.add_argument("--seed", type=int, default=default, help="Random seed, drawn from OS entropy when absent")
    parser.add_argument("--tol", type=float, default=default, help="Numerical tolerance (QBF_TOLERANCE)")
    parser.add_argument("--out", default=default, help="Write the report here instead of stdout")
    parser.add_argument("--format", choices=FORMAT_CHOICES, default=default)
    parser.add_argument("--kind", choices=KIND_CHOICES, default=default, help="Input kind, detected when absent")


def _add_input(parser, required=True):
    parser.add_argument("--in", dest="input", action="append", required=required, help="Operator file")


def build_parser():
    parser = QbfArgumentParser(prog="qbf", description="Quantum boolean function laboratory")
    _add_global_flags(parser)
    sub = parser.add_subparsers(dest="command", required=True)

    spectrum = sub.add_parser("spectrum", help="Pauli spectrum of an operator")
    _add_input(spectrum)

    build = sub.add_parser("build", help="Construct quantum boolean functions")
    build.add_argument(
        "construction",
        choices=("phase", "bit", "projector", "sign", "balance", "anticommuting", "spin-flip"),
    )
    _add_input(build)
    build.add_argument("--alphas", help="Comma separated real weights for 'anticommuting'")
    build.add_argument("--qubit", type=int, help="Qubit for 'spin-flip' (default: every qubit)")
    build.add_argument("--write", help="Write the built operator as a dense file")

    test = sub.add_parser("test", help="Property tests")
    test.add_argument("test", choices=("stabilizer", "locality", "hastad", "dictator", "discriminate"))
    _add_input(test)
    test.add_argument("--other", help="Second operator for 'discriminate'")
    test.add_argument("--trials", type=int)
    test.add_argument("--epsilon", type=float)
    test.add_argument("--delta", type=float)
    test.add_argument("--prior", type=float)

    gl = sub.add_parser("gl", help="Quantum Goldreich-Levin")
    _add_input(gl)
    gl.add_argument("--gamma", type=float, required=True)
    gl.add_argument("--delta", type=float, required=True)
    gl.add_argument("--exact", action="store_true", help="Use exact probabilities instead of sampling")

    noise = sub.add_parser("noise", help="Apply the noise operator T_eps")
    _add_input(noise)
    noise.add_argument("--epsilon", type=float, required=True)
    noise.add_argument("--write")

    hyper = sub.add_parser("hyper", help="Hypercontractivity checks")
    hyper.add_argument("action", choices=("check", "search", "corollaries"))
    _add_input(hyper, required=False)
    hyper.add_argument("--p")
    hyper.add_argument("--q")
    hyper.add_argument("--epsilon", type=float)
    hyper.add_argument("--grid", help="Sweep size, e.g. n=3,count=500")
    hyper.add_argument("--n", type=int)
    hyper.add_argument("--restarts", type=int)

    influence = sub.add_parser("influence", help="Influences and KKL-type checks")
    _add_input(influence)
    which = influence.add_mutually_exclusive_group()
    which.add_argument("--qubit", type=int)
    which.add_argument("--set", help="Comma separated qubits")
    which.add_argument("--total", action="store_true")
    which.add_argument("--poincare", action="store_true")
    which.add_argument("--talagrand", action="store_true")
    which.add_argument("--anticommuting-kkl", action="store_true")
    which.add_argument("--bad-influence", help="Comma separated qubits")
    which.add_argument("--haar", type=int, help="Qubit for the Haar-average estimate")
    influence.add_argument("--samples", type=int)

    fkn = sub.add_parser("fkn", help="FKN-type checks")
    _add_input(fkn, required=False)
    mode = fkn.add_mutually_exclusive_group()
    mode.add_argument("--two-norm", action="store_true")
    mode.add_argument("--exact", action="store_true")
    mode.add_argument("--infty", action="store_true")
    mode.add_argument("--sweep", action="store_true")
    fkn.add_argument("--g", help="Level-1 operator for --infty")
    fkn.add_argument("--epsilon", type=float)

    dynamics = sub.add_parser("dynamics", help="Spin chain dynamics")
    dynamics.add_argument("action", choices=("profile", "learn"))
    dynamics.add_argument("--n", type=int, required=True)
    dynamics.add_argument("--t", type=float, required=True)
    dynamics.add_argument("--qubit", type=int, required=True)
    dynamics.add_argument("--pauli", required=True, help="X, Y or Z")
    dynamics.add_argument("--radii", help="Comma separated radii")
    dynamics.add_argument("--times", help="Comma separated times; fits k as well")
    dynamics.add_argument("--gamma", type=float)
    dynamics.add_argument("--epsilon", type=float)
    dynamics.add_argument("--delta", type=float)
    for subparser in sub.choices.values():
        _add_global_flags(subparser, default=argparse.SUPPRESS)
    return parser


def tolerances(tol):
    return {
        "tol": tol,
        "sparsity": float(get_setting("QBF_SPARSITY_THRESHOLD", 1e-12)),
        "zero_eigenvalue_band": float(get_setting("QBF_ZERO_EIGENVALUE_BAND", 1e-12)),
        "rank": float(get_setting("QBF_RANK_TOLERANCE", 1e-8)),
    }


def _text_lines(value, indent=0):
    pad = "  " * indent
    if isinstance(value, dict):
        for key, item in value.items():
            if isinstance(item, (dict, list)) and item:
                yield f"{pad}{key}:"
                yield from _text_lines(item, indent + 1)
            else:
                yield f"{pad}{key}: {item}"
    elif isinstance(value, list) and value and all(isinstance(item, dict) for item in value):
        columns = list(value[0])
        yield pad + "\t".join(columns)
        for item in value:
            yield pad + "\t".join(str(item.get(column)) for column in columns)
    elif isinstance(value, list):
        for item in value:
            yield f"{pad}- {item}"
    else:
        yield f"{pad}{value}"


def render_text(report):
    """Human-readable report; lists of rows are printed as tab separated tables."""
    data = to_primitive(TimedReportSerializer(report).data)
    return "\n".join(_text_lines(data)) + "\n"


def execute(argv):
    """Parse and run ``argv``; returns the Report and the global options."""
    args = build_parser().parse_args(argv)
    options = vars(args)
    settings = validated(GlobalOptionsSerializer, options)
    tol = resolve_tolerance(settings.get("tol"))
    context = RunContext(seed=resolve_seed(settings.get("seed")), tol=tol, kind=settings.get("kind"))

    started = time.perf_counter()
    results, passed = HANDLERS[args.command](options, context)
    report = Report(
        command=" ".join(str(item) for item in argv),
        seed=context.seed,
        tolerances=tolerances(tol),
        inputs_digest=combined_digest(context.inputs),
        results=results,
        passed=passed,
        elapsed_seconds=time.perf_counter() - started,
    )
    return report, settings


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        report, settings = execute(argv)
    except ValidationError as exc:
        stderr.write(f"error: invalid options {exc.detail}\n")
        return EXIT_USAGE
    except (QbfLabError, OSError) as exc:
        logger.warning("Command failed", extra={"argv": argv, "error": str(exc)})
        stderr.write(f"error: {exc}\n")
        return EXIT_USAGE

    if settings.get("format") == "structured":
        rendered = render_structured(report).decode("utf-8") + "\n"
    else:
        rendered = render_text(report)
    if settings.get("out"):
        Path(settings["out"]).write_text(rendered, encoding="utf-8")
    else:
        stdout.write(rendered)

    logger.info(
        "Command finished",
        extra={"report": report, "passed": report.passed, "elapsed_seconds": report.elapsed_seconds},
    )
    return EXIT_OK if report.exit_status == 0 else EXIT_CHECK_FAILED
