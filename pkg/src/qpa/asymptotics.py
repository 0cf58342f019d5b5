"""Closed-form asymptotic laws, nonasymptotic bounds, and phase diagrams.

Everything here is binary64; exact arithmetic stays in the finite-n
modules.  Breakpoints R = D_{k,i} belong to the right branch (the
terminal index jumps at equality).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .protocol import terminal_index
from .tableaux import Spectrum

POLY_TAIL_CONSTANT = 12.0  # c in the polynomial tail bound; fixes N0 below


class DegenerateGapError(ValueError):
    """A spectral gap needed by the asymptotic formula vanishes."""


def _gaps(spectrum: Spectrum, k: int) -> list[float]:
    return [float(spectrum.gap(k, i)) for i in range(1, spectrum.d + 1)]


def _require_nondegenerate(spectrum: Spectrum, k: int) -> None:
    for i in range(1, spectrum.d + 1):
        if i != k and spectrum.gap(k, i) == 0:
            raise DegenerateGapError(f"gap D_{k},{i} vanishes for {spectrum}")


def macroscopic_terminal_index(spectrum: Spectrum, k: int, rate: float) -> int:
    """I* = min{i : D_{k,i+1} >= R}, with D_{k,d+1} = +inf."""
    gaps = [float(spectrum.gap(k, j)) for j in range(k + 1, spectrum.d + 1)]
    return terminal_index(gaps, k, rate)


def intensive_risk(spectrum: Spectrum, k: int, m: int, n: int) -> float:
    """Leading all-site risk (m/n) sum_{i != k} p_i / D_{k,i}^2."""
    _require_nondegenerate(spectrum, k)
    gaps = _gaps(spectrum, k)
    total = sum(
        float(spectrum.p(i)) / gaps[i - 1] ** 2
        for i in range(1, spectrum.d + 1)
        if i != k
    )
    return m / n * total


def extensive_fidelity(spectrum: Spectrum, k: int, rate: float) -> float:
    """Limiting all-site fidelity at output rate R = m/n."""
    if rate < 0:
        raise ValueError("rate must be nonnegative")
    if rate == 0:
        return 1.0
    _require_nondegenerate(spectrum, k)
    d = spectrum.d
    i_star = macroscopic_terminal_index(spectrum, k, rate)
    pk = float(spectrum.p(k))
    value = 1.0
    for i in range(k, i_star):
        value *= float(spectrum.gap(k, i + 1)) ** 2 / (pk * rate)
    for i in range(1, d + 1):
        if k <= i <= i_star:
            continue
        gap_sq = float(spectrum.gap(k, i)) ** 2
        value *= gap_sq / (gap_sq + float(spectrum.p(i)) * rate)
    return value


def one_site_risk_asymptotic(spectrum: Spectrum, k: int, rate: float, n: int) -> float:
    """Leading one-site risk at output rate R and n inputs."""
    if rate <= 0:
        raise ValueError("rate must be positive")
    _require_nondegenerate(spectrum, k)
    return one_site_hazard(spectrum, k, rate) / n


def one_site_hazard(spectrum: Spectrum, k: int, rate: float) -> float:
    """n times the limiting one-site risk; also the exponent of the m-fold marginal."""
    d = spectrum.d
    i_star = macroscopic_terminal_index(spectrum, k, rate)
    total = sum(
        float(spectrum.p(i)) / float(spectrum.gap(k, i)) ** 2
        for i in range(1, d + 1)
        if i != k
    )
    for i in range(k + 1, i_star + 1):
        total += 1.0 / float(spectrum.gap(k, i)) - 1.0 / rate
    return total


def _n0_threshold(d_min: float) -> float:
    c = POLY_TAIL_CONSTANT
    base = 16.0 * c * c / d_min**2
    return base * math.log(base)


def nonasymptotic_all_bound(
    spectrum: Spectrum, k: int, m: int, n: int
) -> tuple[float, bool]:
    """Dimension-uniform upper bound on the all-site risk, with validity flag."""
    _require_nondegenerate(spectrum, k)
    d = spectrum.d
    d_min = float(spectrum.min_gap(k))
    lead = (
        m
        / n
        * sum(
            float(spectrum.p(i)) / (abs(float(spectrum.gap(k, i))) * d_min)
            for i in range(1, d + 1)
            if i != k
        )
    )
    remainder = (
        m
        / n
        * 4.0
        * math.sqrt(math.log(n))
        / math.sqrt(n)
        * (
            1.0
            + sum(
                6.0 * float(spectrum.p(i)) / (abs(float(spectrum.gap(k, i))) * d_min**2)
                for i in range(1, d + 1)
                if i != k
            )
        )
    )
    valid = n >= _n0_threshold(d_min)
    return lead + remainder, valid


def nonasymptotic_one_bound(
    spectrum: Spectrum, k: int, m: int, n: int
) -> tuple[float, bool]:
    """One-site analogue; the remainder is R_all / m."""
    all_bound, all_valid = nonasymptotic_all_bound(spectrum, k, m, n)
    d = spectrum.d
    d_min = float(spectrum.min_gap(k))
    lead = (
        1.0
        / n
        * sum(
            float(spectrum.p(i)) / (abs(float(spectrum.gap(k, i))) * d_min)
            for i in range(1, d + 1)
            if i != k
        )
    )
    remainder_all = all_bound - m * lead
    extra = True
    if k < d:
        extra = n >= 2 * m / float(spectrum.gap(k, k + 1))
    return lead + remainder_all / m, all_valid and extra


def optimality_threshold(k: int, m: int, d_k_min: float, objective: str) -> float:
    """Sufficient row-gap threshold for unique sector-wise optimality."""
    if objective == "all":
        return 2.0 * m * m * (2 * m - 1 + 1.0 / d_k_min)
    if objective == "one":
        return max(float(m), 2.0 / d_k_min)
    raise ValueError(f"unknown objective {objective!r}")


def optimality_thresholds_two_gap(
    spectrum: Spectrum, k: int, m: int, objective: str
) -> dict[str, float]:
    """The finer per-gap thresholds (row above the target, row below)."""
    below = sum(
        float(spectrum.p(i)) / float(spectrum.gap(i, k)) for i in range(1, k)
    )
    above = sum(
        float(spectrum.p(i)) / float(spectrum.gap(k, i))
        for i in range(k + 1, spectrum.d + 1)
    )
    if objective == "all":
        return {
            "gap_above": 2.0 * m * m * (m - 1 + below),
            "gap_below": 2.0 * m * m * (2 * m - 1 + above),
        }
    if objective == "one":
        return {
            "gap_above": 2.0 * below,
            "gap_below": max(float(m), 2.0 * above),
        }
    raise ValueError(f"unknown objective {objective!r}")


def concentration_bound(n: int, alpha: float) -> float:
    """Tail bound on one normalized row gap deviating by alpha."""
    if alpha <= 4.0 / math.sqrt(n):
        raise ValueError("bound requires alpha > 4/sqrt(n)")
    return 2.0 * math.exp(-((math.sqrt(n) * alpha - 4.0) ** 2) / 32.0)


def concentration_bound_joint(n: int, alpha: float) -> float:
    """Joint version for the two gaps adjacent to the target row."""
    return 2.0 * concentration_bound(n, alpha)


def depolarized_spectrum(d: int, eta: Fraction) -> Spectrum:
    """Spectrum of (1-eta) psi + eta I/d, sorted nonincreasing."""
    eta = Fraction(eta)
    if not 0 <= eta <= 1:
        raise ValueError("noise parameter must lie in [0, 1]")
    top = 1 - eta * (d - 1) / d
    rest = eta / d
    return Spectrum((top,) + (rest,) * (d - 1))


def extensive_fidelity_depolarized_limit(eta: float, rate: float) -> float:
    """d -> infinity limit of the depolarized all-site phase curve (k = 1)."""
    if not 0 < eta < 1:
        raise ValueError("noise parameter must lie in (0, 1)")
    if rate <= 0:
        return 1.0
    gap = 1.0 - eta
    if rate <= gap:
        return math.exp(-eta * rate / gap**2)
    return 0.0


@dataclass(frozen=True)
class PhaseRow:
    lam: float
    rate: float
    fidelity: float
    phase: int


def phase_diagram(
    family: Sequence[tuple[float, Spectrum | None]],
    k: int,
    rate_grid: Sequence[float],
    mode: str = "all",
) -> tuple[list[PhaseRow], list[str]]:
    """Tabulate limiting fidelities over a (lambda, R) grid.

    `family` pairs each lambda with a spectrum (None or an invalid entry is
    skipped with a diagnostic).  Mode 'all' is the limiting all-site
    fidelity; mode 'one' is the limiting m-fold marginal utility
    exp(-R * hazard).
    """
    if mode not in ("all", "one"):
        raise ValueError(f"unknown mode {mode!r}")
    rows: list[PhaseRow] = []
    diagnostics: list[str] = []
    for lam, spectrum in family:
        if spectrum is None:
            diagnostics.append(f"lambda={lam}: invalid spectrum row skipped")
            continue
        try:
            _require_nondegenerate(spectrum, k)
        except DegenerateGapError as exc:
            diagnostics.append(f"lambda={lam}: {exc}")
            continue
        for rate in rate_grid:
            if rate <= 0:
                value, phase = 1.0, 0
            else:
                phase = macroscopic_terminal_index(spectrum, k, rate) - k
                if mode == "all":
                    value = extensive_fidelity(spectrum, k, rate)
                else:
                    value = math.exp(-rate * one_site_hazard(spectrum, k, rate))
            rows.append(PhaseRow(lam, rate, value, phase))
    return rows, diagnostics


def depolarized_family(
    d: int, lambdas: Iterable[float]
) -> list[tuple[float, Spectrum | None]]:
    out: list[tuple[float, Spectrum | None]] = []
    for lam in lambdas:
        try:
            out.append((lam, depolarized_spectrum(d, Fraction(lam).limit_denominator(10**6))))
        except ValueError:
            out.append((lam, None))
    return out


def phase_diagram_depolarized_limit(
    lambdas: Iterable[float], rate_grid: Sequence[float]
) -> list[PhaseRow]:
    """The d -> infinity depolarized family; collapsed phase reported as -1."""
    rows = []
    for lam in lambdas:
        for rate in rate_grid:
            value = extensive_fidelity_depolarized_limit(lam, rate) if rate > 0 else 1.0
            phase = 0 if rate <= 1.0 - lam else -1
            rows.append(PhaseRow(lam, rate, value, phase))
    return rows


def phase_rows_to_csv(rows: Sequence[PhaseRow]) -> str:
    lines = ["lambda,R,fidelity,phase"]
    for row in rows:
        lines.append(f"{row.lam},{row.rate},{row.fidelity},{row.phase}")
    return "\n".join(lines) + "\n"
