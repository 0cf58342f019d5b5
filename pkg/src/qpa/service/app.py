"""FastAPI service wrapping the calculator.

The handler functions are plain callables shared by the HTTP endpoints and
the CLI thin client; all domain errors surface as ValueError and map to
HTTP 400.
"""

from __future__ import annotations

import inspect

from fastapi import FastAPI, HTTPException

from .. import asymptotics, verify
from ..fidelity import (
    overall_fidelity,
    sector_fidelity_all,
    sector_fidelity_one,
)
from ..protocol import (
    RemovalVector,
    overhang_removal,
    removal_from_environment,
)
from ..tableaux import parse_diagram, parse_spectrum
from .schemas import (
    AsymptoteRequest,
    AsymptoteResponse,
    OverallRequest,
    PhaseDiagramRequest,
    PhaseDiagramResponse,
    SectorRequest,
    SectorResponse,
    VerifyRequest,
    VerifyResponse,
)


def handle_sector(req: SectorRequest) -> SectorResponse:
    sigma = parse_diagram(req.shape)
    spectrum = parse_spectrum(req.spectrum)
    if req.environment is not None:
        env = parse_diagram(req.environment)
        removal = removal_from_environment(sigma, env)
        if removal.total != req.m:
            raise ValueError(
                f"environment {env} removes {removal.total} boxes, expected m={req.m}"
            )
    else:
        removal = overhang_removal(sigma, req.k, req.m)
        env = removal.environment(sigma)
    if req.objective == "all":
        value = sector_fidelity_all(sigma, req.k, removal, spectrum)
    else:
        value = sector_fidelity_one(sigma, req.k, env, spectrum)
    return SectorResponse(
        shape=str(sigma),
        k=req.k,
        m=req.m,
        environment=str(env),
        objective=req.objective,
        fidelity=str(value),
    )


def handle_overall(req: OverallRequest) -> dict:
    spectrum = parse_spectrum(req.spectrum)
    explicit = None
    if req.removal is not None:
        counts = tuple(int(t) for t in req.removal.split(","))
        explicit = RemovalVector(counts)
    report = overall_fidelity(
        req.n,
        req.d,
        req.k,
        req.m,
        spectrum,
        objective=req.objective,
        rule=req.rule,
        explicit_removal=explicit,
        as_float=req.float_mode,
    )
    return report.to_json_dict()


def handle_asymptote(req: AsymptoteRequest) -> AsymptoteResponse:
    def need_spectrum():
        if req.spectrum is None:
            raise ValueError(f"kind {req.kind!r} needs a spectrum")
        return parse_spectrum(req.spectrum)

    extras: dict = {}
    valid = None
    if req.kind == "intensive":
        spec = need_spectrum()
        if req.m is None or req.n is None:
            raise ValueError("intensive risk needs m and n")
        value = asymptotics.intensive_risk(spec, req.k, req.m, req.n)
    elif req.kind == "extensive":
        spec = need_spectrum()
        if req.rate is None:
            raise ValueError("extensive fidelity needs the rate R")
        value = asymptotics.extensive_fidelity(spec, req.k, req.rate)
        extras["terminal_index"] = asymptotics.macroscopic_terminal_index(
            spec, req.k, req.rate
        )
    elif req.kind == "one-site":
        spec = need_spectrum()
        if req.rate is None or req.n is None:
            raise ValueError("one-site risk needs R and n")
        value = asymptotics.one_site_risk_asymptotic(spec, req.k, req.rate, req.n)
    elif req.kind == "all-bound":
        spec = need_spectrum()
        if req.m is None or req.n is None:
            raise ValueError("the all-site bound needs m and n")
        value, valid = asymptotics.nonasymptotic_all_bound(spec, req.k, req.m, req.n)
    elif req.kind == "one-bound":
        spec = need_spectrum()
        if req.m is None or req.n is None:
            raise ValueError("the one-site bound needs m and n")
        value, valid = asymptotics.nonasymptotic_one_bound(spec, req.k, req.m, req.n)
    elif req.kind == "threshold":
        if req.m is None:
            raise ValueError("the optimality threshold needs m")
        if req.d_k_min is not None:
            value = asymptotics.optimality_threshold(
                req.k, req.m, req.d_k_min, req.objective
            )
        else:
            spec = need_spectrum()
            value = asymptotics.optimality_threshold(
                req.k, req.m, float(spec.min_gap(req.k)), req.objective
            )
            extras = asymptotics.optimality_thresholds_two_gap(
                spec, req.k, req.m, req.objective
            )
    elif req.kind == "concentration":
        if req.n is None or req.alpha is None:
            raise ValueError("the concentration bound needs n and alpha")
        value = asymptotics.concentration_bound(req.n, req.alpha)
        extras["joint"] = asymptotics.concentration_bound_joint(req.n, req.alpha)
    else:  # pragma: no cover - pydantic restricts the literal
        raise ValueError(f"unknown kind {req.kind!r}")
    return AsymptoteResponse(kind=req.kind, value=float(value), valid=valid, extras=extras)


def handle_phase_diagram(req: PhaseDiagramRequest) -> PhaseDiagramResponse:
    diagnostics: list[str] = []
    if req.family == "depolarized" and req.d is None:
        if req.mode != "all":
            raise ValueError("the d->inf depolarized limit is an all-site curve")
        rows = asymptotics.phase_diagram_depolarized_limit(req.lambdas, req.rates)
    elif req.family == "depolarized":
        family = asymptotics.depolarized_family(req.d, req.lambdas)
        rows, diagnostics = asymptotics.phase_diagram(family, req.k, req.rates, req.mode)
    else:
        if req.spectra is None or len(req.spectra) != len(req.lambdas):
            raise ValueError("explicit family needs one spectrum per lambda")
        family = []
        for lam, text in zip(req.lambdas, req.spectra):
            try:
                family.append((lam, parse_spectrum(text)))
            except ValueError as exc:
                diagnostics.append(f"lambda={lam}: {exc}")
                family.append((lam, None))
        rows, more = asymptotics.phase_diagram(family, req.k, req.rates, req.mode)
        diagnostics.extend(more)
    return PhaseDiagramResponse(
        rows=[
            {"lambda": r.lam, "R": r.rate, "fidelity": r.fidelity, "phase": r.phase}
            for r in rows
        ],
        diagnostics=diagnostics,
    )


def handle_verify(req: VerifyRequest) -> VerifyResponse:
    runner = verify.SUITES.get(req.suite)
    if runner is None:
        raise ValueError(f"unknown suite {req.suite!r}; choose from {sorted(verify.SUITES)}")
    accepted = inspect.signature(runner).parameters
    kwargs = {}
    for name in ("seed", "cases", "max_n", "samples"):
        value = getattr(req, name)
        if value is not None and name in accepted:
            kwargs[name] = value
    verdict = runner(**kwargs)
    return VerifyResponse(**verdict.to_json_dict())


app = FastAPI(
    title="purity amplification calculator",
    description=(
        "Exact and asymptotic fidelities of optimal coherent purity "
        "amplification protocols, plus the combinatorial verification suites."
    ),
)


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


def _wrap(handler, request):
    try:
        return handler(request)
    except (ValueError, ZeroDivisionError, KeyError) as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


@app.post("/sector", response_model=SectorResponse)
def sector(request: SectorRequest) -> SectorResponse:
    return _wrap(handle_sector, request)


@app.post("/overall")
def overall(request: OverallRequest) -> dict:
    return _wrap(handle_overall, request)


@app.post("/asymptote", response_model=AsymptoteResponse)
def asymptote(request: AsymptoteRequest) -> AsymptoteResponse:
    return _wrap(handle_asymptote, request)


@app.post("/phase-diagram", response_model=PhaseDiagramResponse)
def phase_diagram(request: PhaseDiagramRequest) -> PhaseDiagramResponse:
    return _wrap(handle_phase_diagram, request)


@app.post("/verify", response_model=VerifyResponse)
def verify_endpoint(request: VerifyRequest) -> VerifyResponse:
    return _wrap(handle_verify, request)
