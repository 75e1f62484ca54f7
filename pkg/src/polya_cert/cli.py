"""Command line entry point: ``polya-cert``.

Exit status: 0 certified (or mode succeeded), 2 refuted, 3 inconclusive,
4 certificate rejected by ``verify``, 1 input or usage error.
"""
from __future__ import annotations

import argparse
import logging
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Literal, Optional

from . import formats
from .certify import (
    DEFAULT_GRID_DEPTH,
    DEFAULT_M_MAX,
    counterexample_search,
    margin_estimate,
    polya_exponent_search,
    pure_state_scan,
    verify_certificate,
)
from .errors import PolyaError

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_REFUTED = 2
EXIT_INCONCLUSIVE = 3
EXIT_REJECTED = 4

THREADS_ENV = "POLYA_CERT_THREADS"

Mode = Literal["certify", "refute-only", "margin", "pure-state-scan"]


@dataclass(frozen=True)
class JobConfig:
    mode: Mode = "certify"
    m_max: int = DEFAULT_M_MAX
    grid_depth: int = DEFAULT_GRID_DEPTH
    output_path: Optional[Path] = None
    witnesses: bool = False
    threads: int = 1

    def __post_init__(self):
        if self.m_max < 0:
            raise ValueError("--m-max must be >= 0")
        if self.grid_depth < 1:
            raise ValueError("--grid-depth must be >= 1")
        if self.threads < 1:
            raise ValueError(f"{THREADS_ENV} must be >= 1")


def threads_from_env() -> int:
    raw = os.environ.get(THREADS_ENV)
    if not raw:
        return os.cpu_count() or 1
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{THREADS_ENV} must be an integer, got {raw!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polya-cert",
        description="Compute and verify Pólya certificates for symmetric matrices of forms.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def job(name, help_text, m_max=False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", type=Path)
        if m_max:
            p.add_argument("--m-max", type=int, default=DEFAULT_M_MAX)
            p.add_argument("--witnesses", action="store_true", help="include all leading minors")
        p.add_argument("--grid-depth", type=int, default=DEFAULT_GRID_DEPTH)
        p.add_argument("--output", type=Path)
        return p

    job("certify", "search for the least Pólya exponent", m_max=True)
    job("refute-only", "look for a simplex counterexample only")
    job("margin", "grid estimate of min eigenvalue on the simplex")
    job("pure-state-scan", "minimise the pure-state functional over a grid")

    v = sub.add_parser("verify", help="re-check a certificate against its input")
    v.add_argument("input", type=Path)
    v.add_argument("certificate", type=Path)
    v.add_argument("--output", type=Path)
    return parser


def _write(text: str, path: Optional[Path]) -> None:
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        path.write_text(text, encoding="utf-8")


def run_job(config: JobConfig, B) -> tuple[str, int]:
    if config.mode == "certify":
        report = polya_exponent_search(B, config.m_max, config.grid_depth, threads=config.threads)
        status = {"certified": EXIT_OK, "refuted": EXIT_REFUTED, "inconclusive": EXIT_INCONCLUSIVE}
        return formats.emit_report(report, config.witnesses), status[report.outcome]

    ce = counterexample_search(B, config.grid_depth, config.threads)
    if config.mode == "refute-only":
        if ce is not None:
            return formats.dump_doc(formats.counterexample_to_doc(ce)), EXIT_REFUTED
        doc = {"outcome": "inconclusive", "grid_depth": config.grid_depth}
        return formats.dump_doc(doc), EXIT_INCONCLUSIVE
    if config.mode == "margin":
        if ce is not None:
            return formats.dump_doc(formats.counterexample_to_doc(ce)), EXIT_REFUTED
        return formats.emit_margin(config.grid_depth, margin_estimate(B, config.grid_depth)), EXIT_OK
    if config.mode == "pure-state-scan":
        scan = pure_state_scan(B, config.grid_depth)
        status = EXIT_OK if scan.min_value > 0 else EXIT_REFUTED
        return formats.emit_pure_state_scan(config.grid_depth, scan), status
    raise ValueError(f"unknown mode {config.mode!r}")


def run_cli(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT_ERROR
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)

    try:
        B = formats.parse_matrix_form(args.input.read_text(encoding="utf-8"))
        if args.command == "verify":
            cert = formats.parse_certificate(args.certificate.read_text(encoding="utf-8"))
            ok = verify_certificate(B, cert)
            _write(formats.dump_doc({"verified": ok}), args.output)
            return EXIT_OK if ok else EXIT_REJECTED
        config = JobConfig(
            mode=args.command,
            m_max=getattr(args, "m_max", DEFAULT_M_MAX),
            grid_depth=args.grid_depth,
            output_path=args.output,
            witnesses=getattr(args, "witnesses", False),
            threads=threads_from_env(),
        )
        text, status = run_job(config, B)
    except (OSError, PolyaError, ValueError) as exc:
        print(f"polya-cert: error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    _write(text, config.output_path)
    return status


def main() -> None:
    sys.exit(run_cli())
