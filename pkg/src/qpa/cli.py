"""Command-line front end.

A thin client over the service layer: every subcommand builds the same
request model the HTTP endpoints accept and dispatches in process, or to a
running server when --server is given.  Exit codes: 0 success, 1
verification failure, 2 usage/parse/precondition error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .asymptotics import phase_rows_to_csv, PhaseRow
from .service import schemas
from .service.app import (
    handle_asymptote,
    handle_overall,
    handle_phase_diagram,
    handle_sector,
    handle_verify,
)

DEFAULT_WORKERS = int(os.environ.get("QPA_WORKERS", "1"))


class CLIError(Exception):
    pass


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _dump(payload: dict, output: str | None) -> None:
    _emit(json.dumps(payload, separators=(",", ":")), output)


def _post(server: str, path: str, payload: dict) -> dict:
    import httpx

    response = httpx.post(server.rstrip("/") + path, json=payload, timeout=600.0)
    if response.status_code >= 400:
        detail = response.json().get("detail", response.text)
        raise CLIError(f"server rejected the request: {detail}")
    return response.json()


def _run_sector(args) -> int:
    req = schemas.SectorRequest(
        shape=args.shape,
        k=args.k,
        m=args.m,
        spectrum=args.spectrum,
        environment=args.environment,
        objective=args.objective,
    )
    if args.server:
        payload = _post(args.server, "/sector", req.model_dump())
    else:
        payload = handle_sector(req).model_dump()
    _dump(payload, args.output)
    return 0


def _run_overall(args) -> int:
    req = schemas.OverallRequest(
        n=args.n,
        d=args.d,
        k=args.k,
        m=args.m,
        spectrum=args.spectrum,
        rule=args.rule,
        objective=args.objective,
        removal=args.removal,
        float_mode=args.float,
    )
    if args.server:
        payload = _post(args.server, "/overall", req.model_dump())
    else:
        if args.workers > 1:
            # per-sector fan-out happens inside the engine
            from .fidelity import overall_fidelity
            from .protocol import RemovalVector
            from .tableaux import parse_spectrum

            explicit = None
            if req.removal is not None:
                explicit = RemovalVector(tuple(int(t) for t in req.removal.split(",")))
            payload = overall_fidelity(
                req.n, req.d, req.k, req.m, parse_spectrum(req.spectrum),
                objective=req.objective, rule=req.rule, explicit_removal=explicit,
                as_float=req.float_mode, workers=args.workers,
            ).to_json_dict()
        else:
            payload = handle_overall(req)
    _dump(payload, args.output)
    return 0


def _run_asymptote(args) -> int:
    req = schemas.AsymptoteRequest(
        kind=args.kind,
        spectrum=args.spectrum,
        k=args.k,
        m=args.m,
        n=args.n,
        R=args.R,
        objective=args.objective,
        d_k_min=args.d_k_min,
        alpha=args.alpha,
    )
    if args.server:
        payload = _post(args.server, "/asymptote", req.model_dump(by_alias=True))
    else:
        payload = handle_asymptote(req).model_dump()
    _dump(payload, args.output)
    return 0


def _parse_grid(text: str) -> list[float]:
    if ":" in text:
        start_s, stop_s, step_s = text.split(":")
        start, stop, step = float(start_s), float(stop_s), float(step_s)
        if step <= 0:
            raise CLIError(f"grid step must be positive in {text!r}")
        out = []
        x = start
        while x <= stop + 1e-12:
            out.append(round(x, 12))
            x += step
        return out
    return [float(tok) for tok in text.split(",") if tok.strip()]


def _run_phase_diagram(args) -> int:
    spectra = None
    lambdas = _parse_grid(args.lambdas)
    if args.spectra_file:
        spectra = []
        lambdas = []
        with open(args.spectra_file) as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                if ":" not in line:
                    raise CLIError(
                        f"{args.spectra_file}:{lineno}: expected 'lambda: p1,p2,...'"
                    )
                lam_s, spec_s = line.split(":", 1)
                lambdas.append(float(lam_s))
                spectra.append(spec_s.strip())
    req = schemas.PhaseDiagramRequest(
        family="explicit" if spectra is not None else "depolarized",
        d=None if args.d in (None, "inf") else int(args.d),
        k=args.k,
        mode=args.mode,
        lambdas=lambdas,
        rates=_parse_grid(args.R_grid),
        spectra=spectra,
    )
    if args.server:
        payload = _post(args.server, "/phase-diagram", req.model_dump())
    else:
        payload = handle_phase_diagram(req).model_dump()
    for line in payload.get("diagnostics", []):
        print(f"note: {line}", file=sys.stderr)
    if args.format == "csv":
        rows = [
            PhaseRow(r["lambda"], r["R"], r["fidelity"], r["phase"])
            for r in payload["rows"]
        ]
        _emit(phase_rows_to_csv(rows), args.output)
    else:
        _dump(payload, args.output)
    return 0


def _run_verify(args) -> int:
    req = schemas.VerifyRequest(
        suite=args.suite,
        seed=args.seed,
        cases=args.cases,
        max_n=args.max_n,
        samples=args.samples,
    )
    if args.server:
        payload = _post(args.server, "/verify", req.model_dump())
    else:
        payload = handle_verify(req).model_dump()
    _dump(payload, args.output)
    return 0 if payload["passed"] else 1


def _run_serve(args) -> int:
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qpa",
        description="Exact and asymptotic purity-amplification calculator.",
    )
    parser.add_argument("--server", help="base URL of a running service", default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sector", help="sector-wise fidelity")
    p.add_argument("--shape", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--spectrum", required=True)
    p.add_argument("--environment", default=None)
    p.add_argument("--objective", choices=["all", "one"], default="all")
    p.add_argument("--output", default=None)
    p.set_defaults(func=_run_sector)

    p = sub.add_parser("overall", help="overall fidelity report")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--spectrum", required=True)
    p.add_argument("--rule", choices=["overhang", "optimal", "explicit"], default="overhang")
    p.add_argument("--objective", choices=["all", "one"], default="all")
    p.add_argument("--removal", default=None, help="removal counts for --rule explicit")
    p.add_argument("--float", action="store_true", help="binary64 evaluation mode")
    p.add_argument("--workers", type=int, default=DEFAULT_WORKERS)
    p.add_argument("--output", default=None)
    p.set_defaults(func=_run_overall)

    p = sub.add_parser("asymptote", help="asymptotic laws and bounds")
    p.add_argument(
        "--kind",
        choices=["intensive", "extensive", "one-site", "all-bound", "one-bound",
                 "threshold", "concentration"],
        required=True,
    )
    p.add_argument("--spectrum", default=None)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--R", type=float, default=None)
    p.add_argument("--objective", choices=["all", "one"], default="all")
    p.add_argument("--d-k-min", type=float, default=None, dest="d_k_min")
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--output", default=None)
    p.set_defaults(func=_run_asymptote)

    p = sub.add_parser("phase-diagram", help="fidelity table over (lambda, R)")
    p.add_argument("--family", choices=["depolarized"], default="depolarized")
    p.add_argument("--d", default=None, help="local dimension, or 'inf'")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--mode", choices=["all", "one"], default="all")
    p.add_argument("--lambdas", default="0.2,0.4,0.6,0.8")
    p.add_argument("--R-grid", default="0.1:1.0:0.1", dest="R_grid")
    p.add_argument("--spectra-file", default=None,
                   help="explicit family: lines 'lambda: p1,p2,...'")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--output", default=None)
    p.set_defaults(func=_run_phase_diagram)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--cases", type=int, default=None)
    p.add_argument("--max-n", type=int, default=None, dest="max_n")
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--output", default=None)
    p.set_defaults(func=_run_verify)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=_run_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CLIError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
