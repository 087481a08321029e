"""Command-line entry point: ``fracwave <study> [options]``.

Settings come from an optional JSON config file (a flat object whose keys
match the long option names with dashes replaced by underscores) and are
overridden by explicit flags. Exit codes: 0 success, 1 configuration error,
2 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .errors import ConfigurationError
from .quadrature import QuadratureSpec
from .studies import StudyConfig, run_study
from .tables import emit_table

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_IO = 2

SUBCOMMANDS = {
    "geometry": "geometry",
    "epsilon-sweep": "epsilon_sweep",
    "superpose": "superpose_convergence",
    "caputo-check": "caputo_check",
    "residual": "residual_sweep",
    "verify-pde": "verify_pde",
}

CONFIG_KEYS = {
    "s", "n_values", "big_l", "c", "a1", "a2", "a3", "mu",
    "quad_nodes", "quad_scheme", "abs_tol", "kappa", "workers", "out",
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def _float_list(text: str) -> list[float]:
    return [float(v) for v in text.split(",") if v.strip()]


def _int_list(text: str) -> list[int]:
    return [int(v) for v in text.split(",") if v.strip()]


def _add_shared(p: argparse.ArgumentParser) -> None:
    p.add_argument("--s", help="comma-separated fractional orders in (0, 1)")
    p.add_argument("--n-values", help="comma-separated branch counts")
    p.add_argument("--big-l", type=float, help="base branch length L")
    p.add_argument("--c", type=float, help="wave speed")
    p.add_argument("--a1", type=float)
    p.add_argument("--a2", type=float)
    p.add_argument("--a3", type=float)
    p.add_argument("--mu", help="comma-separated perturbation sizes")
    p.add_argument("--kappa", type=float, help="override the diffusion coefficient")
    p.add_argument("--quad-nodes", type=int, help="quadrature node count")
    p.add_argument("--quad-scheme", choices=["gauss_legendre", "midpoint"])
    p.add_argument("--abs-tol", type=float)
    p.add_argument("--workers", type=int, help="worker threads (output does not depend on it)")
    p.add_argument("--config", help="JSON config file")
    p.add_argument("--out", help="output path (default: standard output)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fracwave", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, study in SUBCOMMANDS.items():
        _add_shared(sub.add_parser(name, help=f"run the {study} study"))
    return parser


def _load_config(path: str) -> dict:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigurationError(f"config {path} is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ConfigurationError(f"config {path} must hold a flat JSON object")
    unknown = set(data) - CONFIG_KEYS
    if unknown:
        raise ConfigurationError(f"unknown config keys: {', '.join(sorted(unknown))}")
    return data


def _as_list(v, convert):
    if isinstance(v, str):
        return convert(v)
    if isinstance(v, (list, tuple)):
        return list(v)
    return [v]


def build_config(args: argparse.Namespace) -> StudyConfig:
    settings = _load_config(args.config) if args.config else {}
    for key in CONFIG_KEYS:
        v = getattr(args, key, None)
        if v is not None:
            settings[key] = v

    kwargs: dict = {"study": SUBCOMMANDS[args.command]}
    try:
        if "s" in settings:
            kwargs["s_values"] = tuple(float(v) for v in _as_list(settings["s"], _float_list))
        if "n_values" in settings:
            ns = _as_list(settings["n_values"], _int_list)
            if any(isinstance(n, float) and not n.is_integer() for n in ns):
                raise ConfigurationError(f"branch counts must be integers, got {ns}")
            kwargs["N_values"] = tuple(int(n) for n in ns)
        if "mu" in settings:
            kwargs["mu_values"] = tuple(float(v) for v in _as_list(settings["mu"], _float_list))
        for key, name in (("big_l", "L"), ("c", "c"), ("a1", "a1"), ("a2", "a2"), ("a3", "a3"), ("kappa", "kappa")):
            if key in settings:
                kwargs[name] = float(settings[key])
        if "workers" in settings:
            kwargs["workers"] = int(settings["workers"])
        quad = {}
        if "quad_nodes" in settings:
            quad["node_count"] = int(settings["quad_nodes"])
        if "quad_scheme" in settings:
            quad["scheme"] = settings["quad_scheme"]
        if "abs_tol" in settings:
            quad["abs_tol"] = float(settings["abs_tol"])
        kwargs["quad"] = QuadratureSpec(**quad)
        kwargs["output_path"] = settings.get("out")
        return StudyConfig(**kwargs)
    except ConfigurationError:
        raise
    except (TypeError, ValueError) as exc:
        raise ConfigurationError(str(exc)) from None


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = build_config(args)
        text = emit_table(run_study(cfg))
    except ConfigurationError as exc:
        print(f"fracwave: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"fracwave: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    try:
        if cfg.output_path:
            with open(cfg.output_path, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
            sys.stdout.flush()
    except OSError as exc:
        print(f"fracwave: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
