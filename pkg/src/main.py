import argparse
import sys
import uuid
from pathlib import Path

from src.config.settings import settings
from src.core.errors import DarbouxError, DomainError, UsageError
from src.core.models import System
from src.core.utils import parse_complex
from src.infrastructure.logging import configure_logging, get_logger, reset_context

logger = get_logger(__name__)

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="darboux-phase-space",
        description="Darboux-transformed singular oscillator: verification suite and dataset emitter",
    )
    parser.add_argument("--log-level", type=str, default=None, help="Override the configured log level")
    subparsers = parser.add_subparsers(dest="command", required=True, help="Available commands")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--b", type=float, default=2.0, help="Barrier strength b >= 0 of b/x^2")
    common.add_argument("--p", type=int, default=1, help="Index p >= 0 of the transformation function")
    common.add_argument("--n-max", type=int, default=None, help="Highest level used")
    common.add_argument("--out", type=Path, default=None, help="Output file (default: stdout)")

    # Verify Command
    verify_parser = subparsers.add_parser("verify", parents=[common], help="Run the identity checks")
    verify_parser.add_argument("--tol-coarse", type=float, default=None, help="Replaces the stencil tolerance")
    verify_parser.add_argument("--tol-fine", type=float, default=None, help="Replaces the inner-product tolerance")
    verify_parser.add_argument("--grid-nodes", type=int, default=None, help="Reference grid node count")
    verify_parser.add_argument("--check", action="append", default=None,
                               help="Run only this check (repeatable)")

    # Emit Command
    emit_parser = subparsers.add_parser("emit", parents=[common], help="Write a dataset as CSV or JSON")
    emit_parser.add_argument("what", type=str, help="Dataset kind")
    emit_parser.add_argument("--format", choices=["csv", "json"], default="csv")
    emit_parser.add_argument("--range", type=float, nargs=2, metavar=("LO", "HI"), default=None,
                             help="Range of the dataset's abscissa")
    emit_parser.add_argument("--points", type=int, default=500)
    emit_parser.add_argument("--system", choices=[s.value for s in System], default=None)
    emit_parser.add_argument("--z0", type=str, default="0.5", help="Flow start as re,im")
    emit_parser.add_argument("--t-end", type=float, default=None)
    emit_parser.add_argument("--dt", type=float, default=None)

    return parser


def cmd_verify(args: argparse.Namespace) -> int:
    from src.services.oscillator import make_params
    from src.services.verification import run_suite

    params = make_params(args.b, args.p)
    if args.n_max is not None and args.n_max < 0:
        raise UsageError("--n-max must be >= 0")
    cfg = settings.with_overrides(args.tol_coarse, args.tol_fine, args.grid_nodes)
    try:
        report = run_suite(params, args.n_max, cfg, only=args.check)
    except KeyError as e:
        raise UsageError(str(e)) from e

    text = report.to_json() + "\n"
    if args.out is None:
        sys.stdout.write(text)
    else:
        args.out.write_text(text, encoding="utf-8")
    for failure in report.failures:
        logger.warning("Check failed", check=failure.name, residual=failure.residual,
                       tolerance=failure.tolerance, detail=failure.detail)
    return EXIT_OK if report.all_passed else EXIT_FAILED


def cmd_emit(args: argparse.Namespace) -> int:
    import math

    from src.services.datasets import EmitRequest, build_dataset, write_dataset
    from src.services.oscillator import make_params

    params = make_params(args.b, args.p)
    lo, hi = args.range if args.range is not None else (None, None)
    request = EmitRequest(
        params=params,
        lo=lo,
        hi=hi,
        points=args.points,
        n_max=5 if args.n_max is None else args.n_max,
        system=None if args.system is None else System(args.system),
        z0=parse_complex(args.z0),
        t_end=2 * math.pi if args.t_end is None else args.t_end,
        dt=settings.flow.dt if args.dt is None else args.dt,
    )
    frame = build_dataset(args.what, request)
    write_dataset(frame, args.format, args.out)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    # Initialize structlog
    configure_logging(args.log_level)
    reset_context(run_id=uuid.uuid4().hex[:8], command=args.command, b=args.b, p=args.p)
    logger.info("Command started", command=args.command)

    handlers = {"verify": cmd_verify, "emit": cmd_emit}
    try:
        return handlers[args.command](args)
    except (UsageError, DomainError) as e:
        logger.error("Invalid arguments", error=str(e))
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        logger.error("Output failed", error=str(e))
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO
    except DarbouxError as e:
        logger.error("Command failed", error=str(e), exc_info=True)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
