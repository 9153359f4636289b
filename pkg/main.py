"""
Spin Helix Toolkit - exact spin-helix eigenstates of anisotropic
Heisenberg models, verified by direct application of the Hamiltonian.

Each run resolves a configuration (JSON file and/or flags), executes one
command and writes JSON reports and CSV data files into the output
directory. Exit status: 0 when every check passed, 1 on invalid
configuration or model errors, 2 when a check failed (reports are still
written), 130 on Ctrl+C.
"""

import argparse
import logging
import sys
from typing import Any, Dict, List, Optional

from components.command_runner import CommandRunner
from components.exceptions import ConfigurationError, HelixError
from components.services.config_provider import COMMANDS, ConfigurationProvider, merge_config
from components.ui_components import UIManager

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_FAILED_CHECKS = 2
EXIT_INTERRUPTED = 130

logger = logging.getLogger(__name__)


def setup_logging(verbosity: int = 0):
    """WARNING by default, INFO with -v, DEBUG with -vv."""
    logging.basicConfig(
        level=logging.WARNING,
        format='%(levelname)s - %(name)s - %(message)s'
    )
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.getLogger().setLevel(level)

    # Theta evaluations are chatty below -vv
    if verbosity < 2:
        logging.getLogger('components.core.elliptic').setLevel(logging.WARNING)
    else:
        logging.getLogger('components.core.elliptic').setLevel(logging.NOTSET)


def _split(text: Optional[str], sep: str = ",") -> Optional[List[str]]:
    if text is None:
        return None
    return [part.strip() for part in text.split(sep) if part.strip()]


def _int_list(text: Optional[str], flag: str) -> Optional[List[int]]:
    parts = _split(text)
    if parts is None:
        return None
    try:
        return [int(p) for p in parts]
    except ValueError as e:
        raise ConfigurationError(f"{flag}: expected comma-separated integers, got '{text}'") from e


def _long_range(text: Optional[str]) -> Optional[List[List[float]]]:
    parts = _split(text)
    if parts is None:
        return None
    try:
        return [[int(k), float(w)] for k, w in (p.split(":") for p in parts)]
    except ValueError as e:
        raise ConfigurationError(f"--long-range: expected k:F_k pairs, got '{text}'") from e


def _tolerances(entries: Optional[List[str]]) -> Optional[Dict[str, float]]:
    if not entries:
        return None
    tolerances = {}
    for entry in entries:
        name, _, value = entry.partition("=")
        try:
            tolerances[name.strip()] = float(value)
        except ValueError as e:
            raise ConfigurationError(f"--tolerance: expected name=value, got '{entry}'") from e
    return tolerances


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Spin Helix Toolkit - construct and verify spin-helix eigenstates",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python main.py couplings --eta 2/11 --tau 0,0.8
  python main.py identities --samples 100 --seed 7
  python main.py verify-shs --config config_example.json --negative-control
  python main.py texture --config config_example.json --output-dir results
  python main.py towers --variant xxz --dims 6 --eta 1/3

Complex numbers are given as re,im. Use --u=-0.5,0 for negative values.
        """
    )
    parser.add_argument("command", nargs="?", choices=COMMANDS,
                        help="Command to run (may also come from --config)")
    parser.add_argument("--config", help="RunConfig JSON file")

    model = parser.add_argument_group("model")
    model.add_argument("--variant", help="xyz, xxz, xy_a, xy_b, long_range, direction_dependent, open_chain_1d")
    model.add_argument("--twice-s", type=int, help="Twice the spin (1 for spin-1/2)")
    model.add_argument("--dims", help="Lattice lengths, e.g. 11 or 4,4")
    model.add_argument("--boundary", choices=("periodic", "open"))
    model.add_argument("--eta", help="Anisotropy: 2/11, 10/27*tau, 1/2-tau or re,im")
    model.add_argument("--eta-per-axis", help="One exact eta per axis, comma-separated")
    model.add_argument("--tau", help="Modular parameter as re,im")
    model.add_argument("--long-range", help="Distance weights k:F_k, e.g. 1:1,2:0.5")
    model.add_argument("--u0", help="Open-chain phase as re,im")

    state = parser.add_argument_group("state")
    state.add_argument("--u", help="Helix phase as re,im")
    state.add_argument("--u-values", help="Several phases, separated by ';'")
    state.add_argument("--epsilon", help="Chirality signs, e.g. 1,-1")
    state.add_argument("--n", type=int, help="Tower level for the entropy command")
    state.add_argument("--va", type=int, help="Subsystem sites for the entropy command")
    state.add_argument("--sign", type=int, choices=(1, -1), help="Divergence branch")
    state.add_argument("--negative-control", action="store_true", default=None,
                       help="Also run the eta-perturbed control (verify-shs)")

    run = parser.add_argument_group("run")
    run.add_argument("--seed", type=int)
    run.add_argument("--samples", type=int)
    run.add_argument("--tolerance", action="append", metavar="NAME=VALUE",
                     help="Override a tolerance, e.g. residual=1e-10")
    run.add_argument("--output-dir", help="Output directory (default: $SPIN_HELIX_OUTPUT_DIR or results)")
    run.add_argument("--format", choices=("json", "csv"))
    run.add_argument("--name", help="Base name of the output files")
    run.add_argument("-v", "--verbose", action="count", default=0)
    run.add_argument("-q", "--quiet", action="store_true")
    return parser


def overrides_from_args(args: argparse.Namespace) -> Dict[str, Any]:
    """Nested RunConfig overrides; unset flags are None and skipped on merge."""
    u_values = _split(args.u_values, ";")
    return {
        "command": args.command,
        "model": {
            "variant": args.variant,
            "twice_s": args.twice_s,
            "dims": _int_list(args.dims, "--dims"),
            "boundary": args.boundary,
            "eta": args.eta,
            "eta_per_axis": _split(args.eta_per_axis),
            "tau": args.tau,
            "long_range_weights": _long_range(args.long_range),
            "u0": args.u0,
        },
        "state": {
            "u": args.u,
            "u_values": u_values,
            "epsilon": _int_list(args.epsilon, "--epsilon"),
            "n": args.n,
            "va": args.va,
            "sign": args.sign,
            "negative_control": args.negative_control,
        },
        "tolerances": _tolerances(args.tolerance),
        "seed": args.seed,
        "samples": args.samples,
        "output": {"directory": args.output_dir, "format": args.format, "name": args.name},
    }


def resolve_config(args: argparse.Namespace) -> ConfigurationProvider:
    """
    File (if any) merged with flag overrides.

    Raises:
        ConfigurationError: Naming the offending field
    """
    overrides = overrides_from_args(args)
    if args.config:
        return ConfigurationProvider.from_file(args.config, overrides)
    if args.command is None:
        raise ConfigurationError("command: give a command or a --config file that names one")
    return ConfigurationProvider(merge_config({}, overrides))


def main(argv: Optional[List[str]] = None) -> int:
    """Run one command; returns the process exit status."""
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.verbose)
    ui = UIManager(quiet=args.quiet)

    try:
        provider = resolve_config(args)
        result = CommandRunner(ui, provider).run()
        return EXIT_OK if result.passed else EXIT_FAILED_CHECKS
    except KeyboardInterrupt:
        ui.display_interrupted()
        return EXIT_INTERRUPTED
    except HelixError as e:
        logger.debug("Run aborted", exc_info=True)
        ui.display_error(str(e), hint=type(e).__name__)
        return EXIT_ERROR
    except Exception as e:
        ui.display_error(f"Unexpected error: {e}", hint="Rerun with -vv for the traceback")
        if args.verbose >= 2:
            logger.exception("Unexpected error")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
