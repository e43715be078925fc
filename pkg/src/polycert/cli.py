"""Command-line front end: certify, verify, roots, fejer, suite.

Exit codes: 0 success (certified / all checks passed), 1 a verification
check failed, 2 rejected, 3 inconclusive, 64 malformed input, 65 numerical
non-convergence.  Identical configuration and seed produce byte-identical
output; files are written atomically.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from dataclasses import dataclass

from . import figures
from .certify import (
    CERTIFIED_TIGHT,
    CERTIFIED,
    INCONCLUSIVE,
    REJECTED,
    Certificate,
    build_fejer_family,
    check_condition,
    enestrom_kakeya_bound,
)
from .errors import (
    NonConvergenceError,
    NotApplicableError,
    PolynomialFormatError,
)
from .poly import SparsePolynomial
from .roots import find_roots, govil_chain_check
from .verify import (
    divided_difference_sampling,
    half_plane_agreement,
    pointwise_grid,
    verify_aziz,
    verify_circle_bernstein,
    verify_combined_min,
    verify_pointwise_bernstein,
    verify_strict_interior,
    verify_tail_chain,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_REJECTED = 2
EXIT_INCONCLUSIVE = 3
EXIT_BAD_INPUT = 64
EXIT_NO_CONVERGENCE = 65

GRID_CSV_HEADER = "x,y,abs_z_dP,deg_abs_P,ratio"


@dataclass
class RunConfig:
    command: str
    input_path: str | None = None
    tol: float = 1e-9
    samples: int = 100_000
    seed: int = 42
    out: str | None = None
    format: str = "json"
    figures_dir: str | None = None
    n: int | None = None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polycert",
        description="Certify the coefficient tail condition and verify the "
        "derivative inequalities it implies.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_input=True):
        if needs_input:
            p.add_argument("input", help="polynomial file {\"terms\": [[k, re, im], ...]}")
        p.add_argument("--tol", type=float, default=1e-9, help="certification tolerance")
        p.add_argument("--samples", type=int, default=100_000, help="sample count")
        p.add_argument("--seed", type=int, default=42, help="sampling seed")
        p.add_argument("--out", default=None, help="output path (default: stdout)")
        p.add_argument("--format", choices=("json", "csv"), default="json",
                       help="output format; csv is the verify grid dump")
        p.add_argument("--figures", dest="figures_dir", default=None,
                       help="directory for rendered PNG figures")

    common(sub.add_parser("certify", help="certify the ratio tail condition"))
    common(sub.add_parser("verify", help="run all applicable inequality checks"))
    common(sub.add_parser("roots", help="locate all roots with multiplicities"))
    fejer = sub.add_parser("fejer", help="write a kernel-family polynomial file")
    fejer.add_argument("--n", type=int, required=True, help="family degree (>= 2)")
    fejer.add_argument("--out", default=None, help="output path (default: stdout)")
    common(sub.add_parser("suite", help="certify + verify + roots with a summary"))
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=args.command)
    for name in ("input", "tol", "samples", "seed", "out", "format", "figures_dir", "n"):
        if hasattr(args, name):
            value = getattr(args, name)
            setattr(cfg, "input_path" if name == "input" else name, value)
    if cfg.tol <= 0:
        raise PolynomialFormatError("--tol must be positive", "tol")
    if cfg.samples < 1:
        raise PolynomialFormatError("--samples must be >= 1", "samples")
    return cfg


def load_polynomial(path: str) -> SparsePolynomial:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            payload = json.load(handle)
    except OSError as exc:
        raise PolynomialFormatError(str(exc), path) from exc
    except json.JSONDecodeError as exc:
        raise PolynomialFormatError(
            f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}", path
        ) from exc
    return SparsePolynomial.from_json_dict(payload)


def write_text(text: str, out: str | None) -> None:
    """Print to stdout or write the file atomically."""
    if out is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(out))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".polycert-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(text)
        os.replace(tmp, out)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def dump_json(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def certificate_exit(cert: Certificate) -> int:
    if cert.verdict in (CERTIFIED, CERTIFIED_TIGHT):
        return EXIT_OK
    if cert.verdict == REJECTED:
        return EXIT_REJECTED
    return EXIT_INCONCLUSIVE


def _grid_csv(P: SparsePolynomial, samples: int, seed: int) -> str:
    zs, lhs, rhs, ratios = pointwise_grid(P, samples, seed)
    lines = [GRID_CSV_HEADER]
    for k in range(len(zs)):
        lines.append(
            f"{zs[k].real!r},{zs[k].imag!r},{lhs[k]!r},{rhs[k]!r},{ratios[k]!r}"
        )
    return "\n".join(lines) + "\n"


def run_certify(cfg: RunConfig) -> int:
    if cfg.format != "json":
        raise PolynomialFormatError("certify only emits JSON; csv is the verify grid dump", "format")
    P = load_polynomial(cfg.input_path)
    cert = check_condition(P, cfg.tol)
    write_text(dump_json(cert.to_json_dict()), cfg.out)
    if cfg.figures_dir:
        figures.ensure_directory(cfg.figures_dir)
        figures.save_tail_minima(P, cert, os.path.join(cfg.figures_dir, "tail_minima.png"))
    return certificate_exit(cert)


def gather_reports(P: SparsePolynomial, cfg: RunConfig, certificate: Certificate):
    """Run every applicable check in a fixed order; note skipped ones on stderr."""
    reports = []

    def attempt(name, func):
        try:
            reports.append(func())
        except NotApplicableError as exc:
            print(f"skipped {name}: {exc}", file=sys.stderr)

    reports.append(verify_pointwise_bernstein(P, cfg.samples, cfg.seed))
    reports.append(verify_circle_bernstein(P))
    if certificate.is_certified():
        reports.append(verify_tail_chain(P, cfg.samples, cfg.seed))
        attempt("strict_interior", lambda: verify_strict_interior(P, cfg.samples, cfg.seed))
    else:
        print("skipped tail_chain and strict_interior: polynomial is not certified",
              file=sys.stderr)
    attempt("aziz", lambda: verify_aziz(P, cfg.samples, cfg.seed))
    attempt("combined_min",
            lambda: verify_combined_min(P, cfg.samples, cfg.seed, certificate=certificate))
    attempt("govil_chain", lambda: govil_chain_check(P, min(cfg.samples, 10_000), cfg.seed))
    if not P.is_zero() and P.degree() >= 1:
        reports.append(divided_difference_sampling(P, min(cfg.samples, 10_000), cfg.seed))
    reports.append(half_plane_agreement(cfg.samples, cfg.seed))
    return reports


def render_verify_figures(P: SparsePolynomial, cfg: RunConfig) -> None:
    figures.ensure_directory(cfg.figures_dir)
    grid_samples = min(cfg.samples, 20_000)
    zs, _, _, ratios = pointwise_grid(P, grid_samples, cfg.seed)
    figures.save_ratio_disk(zs, ratios, os.path.join(cfg.figures_dir, "ratio_disk.png"),
                            P.degree())
    figures.save_circle_profile(P, os.path.join(cfg.figures_dir, "circle_profile.png"))


def run_verify(cfg: RunConfig) -> int:
    P = load_polynomial(cfg.input_path)
    cert = check_condition(P, cfg.tol)
    reports = gather_reports(P, cfg, cert)
    if cfg.format == "csv":
        write_text(_grid_csv(P, cfg.samples, cfg.seed), cfg.out)
        for rep in reports:
            print(f"{rep.to_json_dict()['check']}: "
                  f"{'pass' if rep.to_json_dict()['passed'] else 'FAIL'}", file=sys.stderr)
    else:
        write_text(dump_json([rep.to_json_dict() for rep in reports]), cfg.out)
    if cfg.figures_dir:
        render_verify_figures(P, cfg)
    all_passed = all(rep.to_json_dict()["passed"] for rep in reports)
    return EXIT_OK if all_passed else EXIT_CHECK_FAILED


def run_roots(cfg: RunConfig) -> int:
    if cfg.format != "json":
        raise PolynomialFormatError("roots only emits JSON; csv is the verify grid dump", "format")
    P = load_polynomial(cfg.input_path)
    report = find_roots(P)
    write_text(dump_json(report.to_json_dict()), cfg.out)
    if cfg.figures_dir:
        figures.ensure_directory(cfg.figures_dir)
        try:
            outer = enestrom_kakeya_bound(P)
        except NotApplicableError:
            outer = None
        figures.save_root_map(report, os.path.join(cfg.figures_dir, "roots.png"), outer)
    return EXIT_OK


def run_fejer(cfg: RunConfig) -> int:
    try:
        P = build_fejer_family(cfg.n)
    except ValueError as exc:
        raise PolynomialFormatError(str(exc), "n") from exc
    write_text(dump_json(P.to_json_dict()), cfg.out)
    return EXIT_OK


def run_suite(cfg: RunConfig) -> int:
    if cfg.format != "json":
        raise PolynomialFormatError("suite only emits JSON; csv is the verify grid dump", "format")
    P = load_polynomial(cfg.input_path)
    cert = check_condition(P, cfg.tol)
    cert_exit = certificate_exit(cert)

    reports = gather_reports(P, cfg, cert)
    checks_passed = sum(1 for rep in reports if rep.to_json_dict()["passed"])
    verify_exit = EXIT_OK if checks_passed == len(reports) else EXIT_CHECK_FAILED

    roots_exit = EXIT_OK
    roots_payload = None
    if P.degree() >= 1:
        try:
            roots_payload = find_roots(P).to_json_dict()
        except NonConvergenceError as exc:
            roots_exit = EXIT_NO_CONVERGENCE
            if exc.partial is not None:
                roots_payload = exc.partial.to_json_dict()

    summary = (
        f"verdict={cert.verdict} margin={cert.margin:.3e} "
        f"checks={checks_passed}/{len(reports)} passed"
    )
    payload = {
        "certificate": cert.to_json_dict(),
        "checks": [rep.to_json_dict() for rep in reports],
        "roots": roots_payload,
        "summary": summary,
    }
    write_text(dump_json(payload), cfg.out)
    print(summary, file=sys.stderr)

    if cfg.figures_dir:
        figures.ensure_directory(cfg.figures_dir)
        figures.save_tail_minima(P, cert, os.path.join(cfg.figures_dir, "tail_minima.png"))
        render_verify_figures(P, cfg)
        if roots_payload is not None:
            try:
                outer = enestrom_kakeya_bound(P)
            except NotApplicableError:
                outer = None
            figures.save_root_map(find_roots(P),
                                  os.path.join(cfg.figures_dir, "roots.png"), outer)
    return max(cert_exit, verify_exit, roots_exit)


_COMMANDS = {
    "certify": run_certify,
    "verify": run_verify,
    "roots": run_roots,
    "fejer": run_fejer,
    "suite": run_suite,
}


def run(cfg: RunConfig) -> int:
    return _COMMANDS[cfg.command](cfg)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(args)
        return run(cfg)
    except PolynomialFormatError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except NonConvergenceError as exc:
        print(f"numerical non-convergence: {exc}", file=sys.stderr)
        return EXIT_NO_CONVERGENCE


if __name__ == "__main__":
    sys.exit(main())
