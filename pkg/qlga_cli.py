"""
Batch command line front end: validate configs, evolve packets, compute spectra and sweeps
"""
import argparse
import logging
import sys
from typing import List, Optional

import numpy as np
import pandas as pd
from pydantic import ValidationError

from config.constants import (
    CSV_FLOAT_FORMAT,
    DISPERSION_COLUMNS,
    EXIT_INPUT_ERROR,
    EXIT_NUMERIC_ERROR,
    EXIT_OK,
    LOG_LEVEL,
)
from config.schemas import RuleParams
from data_processing.output_writer import OutputWriter
from lattice_gas import dynamics, spectral
from lattice_gas.lattice import assemble_operator, load_config, unitarity_report
from memory.run_ledger import RunLedger
from utils.errors import (
    BadRange,
    CapExceeded,
    ConfigValidationError,
    LengthMismatch,
    NumericalError,
    OutOfRange,
)
from utils.numeric_helpers import format_complex, parse_grid, parse_packet

logger = logging.getLogger("qlga_cli")

INPUT_ERRORS = (ConfigValidationError, OutOfRange, BadRange, LengthMismatch, CapExceeded, ValidationError, ValueError, OSError)


def _emit(frame: pd.DataFrame, writer: Optional[OutputWriter], filename: str) -> None:
    if writer is None:
        sys.stdout.write(frame.to_csv(index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n"))
    else:
        writer.write_frame(frame, filename)


def _finish(ledger: RunLedger, writer: Optional[OutputWriter]) -> None:
    if writer is not None:
        writer.write_text(ledger.manifest_json(), "manifest.json")


def cmd_validate(args: argparse.Namespace) -> int:
    config = load_config(args.config)
    report = unitarity_report(assemble_operator(config))
    for line in report.lines():
        print(line)
    return EXIT_OK if report.passed else EXIT_NUMERIC_ERROR


def cmd_evolve(args: argparse.Namespace, ledger: RunLedger, writer: OutputWriter) -> int:
    config = load_config(args.config)
    packet = parse_packet(args.packet)
    ledger.set_option("packet", args.packet)
    ledger.set_option("steps", args.steps)
    ledger.set_option("stride", args.stride)

    op = assemble_operator(config)
    state = dynamics.packet_for_config(packet, config, op)
    trajectory = dynamics.evolve(op, state, args.steps, args.stride)
    writer.write_frame(trajectory.to_frame(), "trajectory.csv")
    if args.heatmap:
        ledger.set_option("pmax", args.pmax)
        writer.write_heatmap(trajectory.total_probabilities(), "heatmap.pgm", pmax=args.pmax)
    logger.info("norm drift over %d steps: %.3e", args.steps, trajectory.norm_drift())
    return EXIT_OK


def cmd_spectrum(args: argparse.Namespace, ledger: RunLedger, writer: Optional[OutputWriter]) -> int:
    config = load_config(args.config)
    result = spectral.full_spectrum(assemble_operator(config))
    _emit(result.to_frame(), writer, "spectrum.csv")
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace, ledger: RunLedger, writer: Optional[OutputWriter]) -> int:
    config = load_config(args.config)
    grid = parse_grid(args.grid)
    ledger.set_option("param", args.param)
    ledger.set_option("grid", args.grid)
    sweep = spectral.boundary_sweep(config, args.param, grid, workers=args.workers)
    _emit(sweep.to_frame(), writer, "sweep.csv")
    return EXIT_OK


def cmd_dispersion(args: argparse.Namespace, ledger: RunLedger, writer: Optional[OutputWriter]) -> int:
    if args.n < 1:
        raise BadRange(f"--n must be positive, got {args.n}")
    rule = RuleParams(rho=args.rho, theta=args.theta)
    for key in ("rho", "theta", "kmin", "kmax", "n"):
        ledger.set_option(key, getattr(args, key))
    k = np.linspace(args.kmin, args.kmax, args.n)
    frame = pd.DataFrame({"k": k, "omega": spectral.dispersion_omega(k, rule)}, columns=DISPERSION_COLUMNS)
    _emit(frame, writer, "dispersion.csv")
    return EXIT_OK


def cmd_roots(args: argparse.Namespace, ledger: RunLedger, writer: Optional[OutputWriter]) -> int:
    ledger.set_option("N", args.N)
    ledger.set_option("theta", args.theta)
    roots = spectral.quantization_roots(args.N, args.theta)
    _emit(spectral.roots_frame(roots, args.theta), writer, "roots.csv")
    return EXIT_OK


def cmd_reflection(args: argparse.Namespace, ledger: RunLedger, writer: Optional[OutputWriter]) -> int:
    rule = RuleParams(rho=args.rho, theta=args.theta)
    kind = {"I": "typeI", "II": "typeII", "III": "typeIII"}[args.type]
    eigenfunction = spectral.boundary_eigenfunction(
        kind, args.k, args.epsilon, rule,
        upsilon=args.upsilon, zeta=args.zeta, theta_prime=args.theta_prime,
    )
    print(f"A = {format_complex(eigenfunction.A)}")
    print(f"|A| = {abs(eigenfunction.A):.17g}")
    print(f"omega = {np.real(eigenfunction.omega):.17g}")
    if kind == "typeIII":
        print(f"psi_minus(0) = {format_complex(eigenfunction.psi_minus_0)}")
    print(f"residual = {eigenfunction.residual:.3e}")
    if args.size is not None and kind == "typeI":
        right = spectral.reflection_type1_right(args.k, args.epsilon, rule, args.upsilon, args.size)
        print(f"A_right(N={args.size}) = {format_complex(right)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qlga", description="One-particle quantum lattice-gas automaton toolkit")
    parser.add_argument("--verbose", action="store_true", help="debug logging")
    parser.add_argument("--seedless", action="store_true",
                        help="assert that no random numbers are used (always true)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a config and report unitarity")
    p.add_argument("--config", required=True)

    p = sub.add_parser("evolve", help="evolve a binomial packet and record probabilities")
    p.add_argument("--config", required=True)
    p.add_argument("--packet", required=True, help="k0,x0,w,eps")
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--stride", type=int, default=1)
    p.add_argument("--out", required=True)
    p.add_argument("--heatmap", action="store_true")
    p.add_argument("--pmax", type=float, default=None, help="heatmap clipping level")

    p = sub.add_parser("spectrum", help="full spectrum of the assembled operator")
    p.add_argument("--config", required=True)
    p.add_argument("--out")

    p = sub.add_parser("sweep", help="spectra over a boundary parameter grid")
    p.add_argument("--config", required=True)
    p.add_argument("--param", required=True, choices=["upsilon", "zeta", "theta_prime"])
    p.add_argument("--grid", required=True, help="a:b:n, n values in [a, b)")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--out")

    p = sub.add_parser("dispersion", help="omega(k) on a k grid")
    p.add_argument("--rho", type=float, required=True)
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--kmin", type=float, default=-np.pi)
    p.add_argument("--kmax", type=float, default=np.pi)
    p.add_argument("--n", type=int, default=101)
    p.add_argument("--out")

    p = sub.add_parser("roots", help="quantization roots for Type I boundaries, rho = 0, upsilon = 0")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--out")

    p = sub.add_parser("reflection", help="reflection amplitude and boundary eigenfunction residual")
    p.add_argument("--type", required=True, choices=["I", "II", "III"])
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--rho", type=float, default=0.0)
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--epsilon", type=int, default=1, choices=[1, -1])
    p.add_argument("--upsilon", type=float, default=0.0)
    p.add_argument("--zeta", type=float, default=0.0)
    p.add_argument("--theta-prime", dest="theta_prime", type=float, default=0.0)
    p.add_argument("--size", type=int, default=None, help="also report the right-boundary amplitude for N sites")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else LOG_LEVEL,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )

    try:
        if args.command == "validate":
            return cmd_validate(args)

        out = getattr(args, "out", None)
        ledger = RunLedger(args.command, getattr(args, "config", None), out)
        writer = OutputWriter(out, ledger) if out else None
        handlers = {
            "evolve": cmd_evolve,
            "spectrum": cmd_spectrum,
            "sweep": cmd_sweep,
            "dispersion": cmd_dispersion,
            "roots": cmd_roots,
            "reflection": cmd_reflection,
        }
        status = handlers[args.command](args, ledger, writer)
        _finish(ledger, writer)
        return status
    except ConfigValidationError as error:
        for violation in error.violations:
            print(str(violation), file=sys.stderr)
        return EXIT_INPUT_ERROR
    except INPUT_ERRORS as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except NumericalError as error:
        print(f"numerical failure: {error}", file=sys.stderr)
        return EXIT_NUMERIC_ERROR


if __name__ == "__main__":
    sys.exit(main())
