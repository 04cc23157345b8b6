"""Command-line front end.

Subcommands: sweep (run a config file), preset (run a named figure
preset), negativity (one-shot diagonal-state evaluation), validate
(oracle and invariant suite).  Data goes to the output file or stdout;
diagnostics go to stderr.

Exit codes: 0 success, 1 argument or config parse failure, 2 unknown
preset, 3 I/O failure, 4 unphysical state, 5 validation failure.
"""

import argparse
import os
import sys
from dataclasses import dataclass, replace
from enum import Enum

from .config import parse_config
from .entanglement import negativity_of_state
from .errors import InvalidConfig, UnknownPreset, UnphysicalState
from .evolution import InitialState
from .pulses import CoefficientMode
from .scenarios import paper_figure_presets, run_sweep
from .validation import VALIDATION_NOTES, run_validation

__all__ = [
    "Command",
    "RunManifest",
    "build_parser",
    "cmd_negativity",
    "cmd_preset",
    "cmd_sweep",
    "cmd_validate",
    "entry",
    "main",
]

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_UNKNOWN_PRESET = 2
EXIT_IO = 3
EXIT_UNPHYSICAL = 4
EXIT_VALIDATION = 5


class Command(Enum):
    SWEEP = "sweep"
    PRESET = "preset"
    NEGATIVITY = "negativity"
    VALIDATE = "validate"


@dataclass(frozen=True)
class RunManifest:
    """Everything one invocation needs, captured before any work happens."""

    command: Command
    config_path: str | None = None
    preset_name: str | None = None
    out_path: str | None = None
    mode: CoefficientMode | None = None
    correlations: tuple[float, float, float] | None = None
    seed: int = 0


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad arguments; this tool reserves
    # 2 for unknown presets, so parse failures are remapped to 1.
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        _diag(message)
        raise SystemExit(EXIT_PARSE)


def _diag(message: str) -> None:
    text = f"error: {message}"
    if sys.stderr.isatty() and not os.environ.get("NO_COLOR"):
        text = f"\x1b[31m{text}\x1b[0m"
    print(text, file=sys.stderr)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="pulsepair",
        description="Entanglement dynamics of a driven two-qubit pair.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="run a sweep described by a config file")
    sweep.add_argument("--config", required=True, help="key=value config file")
    sweep.add_argument("--mode", choices=["literal", "unitary"], default=None)
    sweep.add_argument("--out", required=True, help="CSV output path")

    preset = sub.add_parser("preset", help="run a named figure preset")
    preset.add_argument("name")
    preset.add_argument("--mode", choices=["literal", "unitary"], default=None)
    preset.add_argument("--out", default=None, help="CSV path (default <name>.csv)")

    neg = sub.add_parser("negativity", help="negativity of a diagonal state")
    neg.add_argument("cxx", type=float)
    neg.add_argument("cyy", type=float)
    neg.add_argument("czz", type=float)

    val = sub.add_parser("validate", help="run the oracle and invariant checks")
    val.add_argument("--seed", type=int, default=0)
    return parser


def _manifest(args: argparse.Namespace) -> RunManifest:
    command = Command(args.command)
    mode = CoefficientMode(args.mode) if getattr(args, "mode", None) else None
    if command is Command.SWEEP:
        return RunManifest(command, config_path=args.config, out_path=args.out, mode=mode)
    if command is Command.PRESET:
        out = args.out if args.out is not None else f"{args.name}.csv"
        return RunManifest(command, preset_name=args.name, out_path=out, mode=mode)
    if command is Command.NEGATIVITY:
        return RunManifest(command, correlations=(args.cxx, args.cyy, args.czz))
    return RunManifest(command, seed=args.seed)


def cmd_sweep(manifest: RunManifest) -> int:
    try:
        with open(manifest.config_path, encoding="ascii") as fh:
            text = fh.read()
    except OSError as exc:
        _diag(f"cannot read config: {exc}")
        return EXIT_IO
    try:
        cfg = parse_config(text)
    except InvalidConfig as exc:
        _diag(f"bad config: {exc}")
        return EXIT_PARSE
    if manifest.mode is not None:
        cfg = replace(cfg, mode=manifest.mode)
    result = run_sweep(cfg)
    try:
        result.write_csv(manifest.out_path)
    except OSError as exc:
        _diag(f"cannot write output: {exc}")
        return EXIT_IO
    return EXIT_OK


def cmd_preset(manifest: RunManifest) -> int:
    presets = paper_figure_presets()
    try:
        cfg = presets[manifest.preset_name]
    except KeyError:
        known = ", ".join(sorted(presets))
        _diag(f"unknown preset {manifest.preset_name!r} (known: {known})")
        return EXIT_UNKNOWN_PRESET
    if manifest.mode is not None:
        cfg = replace(cfg, mode=manifest.mode)
    result = run_sweep(cfg)
    try:
        result.write_csv(manifest.out_path)
    except OSError as exc:
        _diag(f"cannot write output: {exc}")
        return EXIT_IO
    return EXIT_OK


def cmd_negativity(manifest: RunManifest) -> int:
    cxx, cyy, czz = manifest.correlations
    try:
        state = InitialState.generalized_werner(cxx, cyy, czz)
    except UnphysicalState as exc:
        _diag(str(exc))
        return EXIT_UNPHYSICAL
    result = negativity_of_state(state.state())
    for i, mu in enumerate(result.eigenvalues, start=1):
        print(f"mu_{i} = {mu:.12f}")
    print(f"E = {result.value:.12f}")
    return EXIT_OK


def cmd_validate(manifest: RunManifest) -> int:
    results = run_validation(seed=manifest.seed)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(
            f"check {r.name} max_error={r.max_error:.3e} "
            f"tolerance={r.tolerance:.3e} status={status}"
        )
    for note in VALIDATION_NOTES:
        print(f"note: {note}")
    failed = [r for r in results if not r.passed]
    passed = len(results) - len(failed)
    print(f"validation: {passed}/{len(results)} checks passed (seed={manifest.seed})")
    if failed:
        first = failed[0]
        _diag(
            f"validation failed at check {first.name} "
            f"(max_error={first.max_error:.3e}, tolerance={first.tolerance:.3e})"
        )
        return EXIT_VALIDATION
    return EXIT_OK


_DISPATCH = {
    Command.SWEEP: cmd_sweep,
    Command.PRESET: cmd_preset,
    Command.NEGATIVITY: cmd_negativity,
    Command.VALIDATE: cmd_validate,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # also covers --help, which argparse exits 0 from
        return exc.code if isinstance(exc.code, int) else EXIT_PARSE
    manifest = _manifest(args)
    try:
        return _DISPATCH[manifest.command](manifest)
    except UnknownPreset as exc:
        _diag(str(exc))
        return EXIT_UNKNOWN_PRESET
    except UnphysicalState as exc:
        _diag(str(exc))
        return EXIT_UNPHYSICAL
    except InvalidConfig as exc:
        _diag(str(exc))
        return EXIT_PARSE


def entry() -> None:
    sys.exit(main(sys.argv[1:]))


if __name__ == "__main__":
    entry()
