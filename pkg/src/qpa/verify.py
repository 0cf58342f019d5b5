"""Named verification suites for the combinatorial theorems and oracles.

Each suite runs a batch of exact (or statistical, where stated) checks and
returns a verdict with a minimal counterexample on failure.  Randomized
suites take an explicit seed and record it in the verdict.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from . import asymptotics
from .dense2 import dense_two_copy_fidelity
from .fidelity import (
    f_symbol_sq,
    optimal_sector_channel,
    sector_fidelity_all,
    sector_fidelity_one,
)
from .protocol import overhang_removal
from .gyd import (
    GeneralizedDiagram,
    constrained_schur,
    constrained_weyl_average,
    skew_cells,
)
from .protocol import enumerate_environments
from .tableaux import (
    Spectrum,
    YoungDiagram,
    enumerate_diagrams,
    enumerate_gt_patterns,
    sample_sw_many,
    schur_polynomial,
    schur_polynomial_jacobi_trudi,
    specht_dim,
    sw_distribution,
    weyl_dim,
)

DEFAULT_SEED = 2024


@dataclass
class Verdict:
    suite: str
    passed: bool
    cases: int
    violations: int
    counterexample: dict | None
    seed: int | None = None
    params: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "cases": self.cases,
            "violations": self.violations,
            "counterexample": self.counterexample,
            "seed": self.seed,
            "params": self.params,
        }


def _random_spectrum(rng: random.Random, d: int, resolution: int = 60) -> Spectrum:
    while True:
        cuts = sorted(rng.randint(1, resolution) for _ in range(d))
        total = sum(cuts)
        probs = tuple(sorted((Fraction(c, total) for c in cuts), reverse=True))
        if all(p > 0 for p in probs):
            return Spectrum(probs)


def _random_distinct_spectrum(rng: random.Random, d: int, resolution: int = 97) -> Spectrum:
    while True:
        s = _random_spectrum(rng, d, resolution)
        if s.is_nondegenerate():
            return s


# -- exact suites --------------------------------------------------------------


def suite_normalization(max_n: int = 8, max_d: int = 4, seed: int = DEFAULT_SEED) -> Verdict:
    """SW distribution sums to 1 exactly; Schur-Weyl dimensions resolve d^n."""
    rng = random.Random(seed)
    cases = 0
    for d in range(2, max_d + 1):
        spectra = [_random_spectrum(rng, d) for _ in range(2)]
        for n in range(0, max_n + 1):
            dim_total = sum(
                specht_dim(shape) * weyl_dim(shape) for shape in enumerate_diagrams(n, d)
            )
            cases += 1
            if dim_total != d**n:
                return Verdict(
                    "normalization", False, cases, 1,
                    {"n": n, "d": d, "dimension_sum": dim_total, "expected": d**n},
                    seed,
                )
            for spec in spectra:
                if n == 0:
                    continue
                total = sum(sw_distribution(n, d, spec).values())
                cases += 1
                if total != 1:
                    return Verdict(
                        "normalization", False, cases, 1,
                        {"n": n, "d": d, "spectrum": str(spec), "mass_sum": str(total)},
                        seed,
                    )
    return Verdict("normalization", True, cases, 0, None, seed,
                   {"max_n": max_n, "max_d": max_d})


def suite_f_symbols(max_n: int = 7, max_d: int = 3) -> Verdict:
    """Squared F-symbols of every valid environment resolve to exactly 1."""
    cases = 0
    for d in range(2, max_d + 1):
        for n in range(1, max_n + 1):
            for sigma in enumerate_diagrams(n, d):
                for m in range(1, n + 1):
                    for rem in enumerate_environments(sigma, m):
                        env = rem.environment(sigma)
                        total = sum(
                            (f_symbol_sq(sigma, env, i, m) for i in range(1, d + 1)),
                            Fraction(0),
                        )
                        cases += 1
                        if total != 1:
                            return Verdict(
                                "f-symbols", False, cases, 1,
                                {"sigma": str(sigma), "env": str(env), "m": m,
                                 "sum": str(total)},
                            )
    return Verdict("f-symbols", True, cases, 0, None, None,
                   {"max_n": max_n, "max_d": max_d})


def suite_majorization(max_n: int = 7, max_d: int = 3) -> Verdict:
    """Overhang F-symbol partial sums dominate every other environment's."""
    cases = 0
    for d in range(2, max_d + 1):
        for n in range(1, max_n + 1):
            for sigma in enumerate_diagrams(n, d):
                for k in range(1, d + 1):
                    # strict dominance needs a nonempty target overhang
                    # (the gap below row d counts as infinite)
                    if k < d and sigma.gap(k, k + 1) < 1:
                        continue
                    for m in range(1, n + 1):
                        mu = overhang_removal(sigma, k, m).environment(sigma)
                        mu_sums = _partial_f_sums(sigma, mu, k, m)
                        for rem in enumerate_environments(sigma, m):
                            env = rem.environment(sigma)
                            if env == mu:
                                continue
                            lam_sums = _partial_f_sums(sigma, env, k, m)
                            cases += 1
                            bad = any(l > u for l, u in zip(lam_sums, mu_sums))
                            if bad or not lam_sums[0] < mu_sums[0]:
                                return Verdict(
                                    "majorization", False, cases, 1,
                                    {"sigma": str(sigma), "k": k, "m": m,
                                     "env": str(env), "mu": str(mu),
                                     "lam_partial": [str(x) for x in lam_sums],
                                     "mu_partial": [str(x) for x in mu_sums]},
                                )
    return Verdict("majorization", True, cases, 0, None, None,
                   {"max_n": max_n, "max_d": max_d})


def _partial_f_sums(sigma: YoungDiagram, env: YoungDiagram, k: int, m: int) -> list[Fraction]:
    vals = [f_symbol_sq(sigma, env, i, m) for i in range(k, sigma.d + 1)]
    sums = []
    acc = Fraction(0)
    for v in vals:
        acc += v
        sums.append(acc)
    return sums


def suite_oracle_consistency(seed: int = DEFAULT_SEED, schur_cases: int = 200) -> Verdict:
    """Two-copy dense oracle vs the CGC engine, and GT-sum vs Jacobi-Trudi Schur."""
    rng = random.Random(seed)
    cases = 0
    # Schur polynomial double route
    for _ in range(schur_cases):
        d = rng.randint(2, 4)
        spec = _random_spectrum(rng, d)
        for n in range(0, 7):
            for shape in enumerate_diagrams(n, d):
                cases += 1
                via_gt = schur_polynomial(shape, spec.probs)
                via_jt = schur_polynomial_jacobi_trudi(shape, spec.probs)
                if via_gt != via_jt:
                    return Verdict(
                        "oracle-consistency", False, cases, 1,
                        {"shape": str(shape), "spectrum": str(spec),
                         "gt": str(via_gt), "jacobi_trudi": str(via_jt)},
                        seed,
                    )
    # dense two-copy channel vs the sector engine
    spectra = {
        2: [Spectrum((Fraction(3, 4), Fraction(1, 4))),
            _random_distinct_spectrum(rng, 2)],
        3: [Spectrum((Fraction(1, 2), Fraction(1, 3), Fraction(1, 6))),
            asymptotics.depolarized_spectrum(3, Fraction(1, 2)),
            _random_distinct_spectrum(rng, 3)],
    }
    for d, specs in spectra.items():
        for spec in specs:
            for sigma in enumerate_diagrams(2, d):
                if schur_polynomial(sigma, spec.probs) == 0:
                    continue
                for m in (1, 2):
                    out_rows = YoungDiagram((m,) + (0,) * (d - 1))
                    for rem in enumerate_environments(sigma, m):
                        env = rem.environment(sigma)
                        for k in range(1, d + 1):
                            if not spec.nondegenerate_at(k):
                                continue
                            engine_all = sector_fidelity_all(sigma, k, rem, spec)
                            dense_all = dense_two_copy_fidelity(
                                sigma, out_rows, env, k, spec, "all"
                            )
                            engine_one = sector_fidelity_one(sigma, k, env, spec)
                            dense_one = dense_two_copy_fidelity(
                                sigma, out_rows, env, k, spec, "one"
                            )
                            cases += 1
                            if engine_all != dense_all or engine_one != dense_one:
                                return Verdict(
                                    "oracle-consistency", False, cases, 1,
                                    {"sigma": str(sigma), "env": str(env), "k": k,
                                     "m": m, "spectrum": str(spec),
                                     "engine_all": str(engine_all),
                                     "dense_all": str(dense_all),
                                     "engine_one": str(engine_one),
                                     "dense_one": str(dense_one)},
                                    seed,
                                )
    return Verdict("oracle-consistency", True, cases, 0, None, seed,
                   {"schur_cases": schur_cases})


THRESHOLD_SPECTRA = (
    Spectrum((Fraction(9, 10), Fraction(1, 10))),
    Spectrum((Fraction(3, 5), Fraction(3, 10), Fraction(1, 10))),
)

DEPOLARIZING_ETAS = (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4))


def threshold_optimality_check(
    max_n: int = 12,
    spectra: Sequence[Spectrum] = THRESHOLD_SPECTRA,
    m_max: int = 3,
) -> tuple[int, int, dict | None]:
    """Overhang is the unique argmax on every threshold-qualified instance.

    Returns (cases, qualified, counterexample-or-None).
    """
    cases = 0
    qualified = 0
    for spec in spectra:
        d = spec.d
        for n in range(1, max_n + 1):
            for sigma in enumerate_diagrams(n, d):
                for k in range(1, d + 1):
                    gaps = []
                    if k > 1:
                        gaps.append(sigma.gap(k - 1, k))
                    if k < d:
                        gaps.append(sigma.gap(k, k + 1))
                    if not gaps:
                        continue
                    gap_min = min(gaps)
                    d_min = float(spec.min_gap(k))
                    for m in range(1, m_max + 1):
                        for objective in ("all", "one"):
                            thr = asymptotics.optimality_threshold(k, m, d_min, objective)
                            if gap_min <= thr:
                                continue
                            qualified += 1
                            cases += 1
                            bad = _check_unique_overhang_argmax(
                                sigma, k, m, spec, objective
                            )
                            if bad is not None:
                                bad["objective"] = objective
                                return cases, qualified, bad
    return cases, qualified, None


def depolarizing_optimality_check(
    max_n: int = 6,
    m_max: int = 3,
    etas: Sequence[Fraction] = DEPOLARIZING_ETAS,
) -> tuple[int, dict | None]:
    """One-site overhang optimality for depolarized inputs, k = 1, exhaustively."""
    cases = 0
    for d in (2, 3):
        for eta in etas:
            spec = asymptotics.depolarized_spectrum(d, eta)
            for n in range(1, max_n + 1):
                for sigma in enumerate_diagrams(n, d):
                    if schur_polynomial(sigma, spec.probs) == 0:
                        continue
                    for m in range(1, m_max + 1):
                        mu = overhang_removal(sigma, 1, m).environment(sigma)
                        f_mu = sector_fidelity_one(sigma, 1, mu, spec)
                        for rem in enumerate_environments(sigma, m):
                            env = rem.environment(sigma)
                            if env == mu:
                                continue
                            cases += 1
                            f_env = sector_fidelity_one(sigma, 1, env, spec)
                            if not f_env < f_mu:
                                return cases, {
                                    "regime": "depolarizing", "sigma": str(sigma),
                                    "eta": str(eta), "m": m, "env": str(env),
                                    "f_env": str(f_env), "f_mu": str(f_mu),
                                }
    return cases, None


def suite_optimality(
    max_n: int = 12,
    seed: int = DEFAULT_SEED,
    depolarizing_max_n: int = 6,
) -> Verdict:
    """Threshold-certified and depolarizing sector optimality of overhang removal."""
    cases, qualified, bad = threshold_optimality_check(max_n)
    if bad is not None:
        return Verdict("optimality", False, cases, 1, bad, seed)
    dep_cases, dep_bad = depolarizing_optimality_check(depolarizing_max_n)
    cases += dep_cases
    if dep_bad is not None:
        return Verdict("optimality", False, cases, 1, dep_bad, seed)
    if qualified == 0:
        return Verdict("optimality", False, cases, 1,
                       {"error": "no threshold-qualified instances"}, seed)
    return Verdict("optimality", True, cases, 0, None, seed,
                   {"max_n": max_n, "qualified": qualified})


def _check_unique_overhang_argmax(
    sigma: YoungDiagram, k: int, m: int, spec: Spectrum, objective: str
) -> dict | None:
    mu_rem = overhang_removal(sigma, k, m)
    mu = mu_rem.environment(sigma)
    best, top, ranking = optimal_sector_channel(sigma, k, m, spec, objective)
    if best.counts != mu_rem.counts:
        return {
            "sigma": str(sigma), "k": k, "m": m, "objective": objective,
            "spectrum": str(spec), "argmax": str(best.environment(sigma)),
            "overhang": str(mu),
        }
    runner_up = ranking[1].value if len(ranking) > 1 else None
    if runner_up is not None and not runner_up < top.value:
        return {
            "sigma": str(sigma), "k": k, "m": m, "objective": objective,
            "spectrum": str(spec), "tie_value": str(top.value),
        }
    return None


# -- randomized gYD suites -----------------------------------------------------


def _random_gyd(rng: random.Random, max_cells: int = 6) -> GeneralizedDiagram:
    count = rng.randint(1, max_cells)
    cells = set()
    while len(cells) < count:
        cells.add((rng.randint(0, 2), rng.randint(0, 3)))
    return GeneralizedDiagram.of(cells)


def _random_monotone_function(
    rng: random.Random, cells: Sequence, d: int, terms: int = 3
) -> Callable[[dict], Fraction]:
    steps = [
        (rng.choice(list(cells)), rng.randint(1, d), Fraction(rng.randint(1, 5)))
        for _ in range(terms)
    ]

    def func(filling: dict) -> Fraction:
        total = Fraction(0)
        for cell, threshold, coeff in steps:
            if filling[cell] >= threshold:
                total += coeff
        return total

    return func


def suite_monotonicity(cases: int = 1000, seed: int = DEFAULT_SEED) -> Verdict:
    """Weyl averages of monotone functions grow with entrywise-larger constraints."""
    rng = random.Random(seed)
    done = 0
    attempts = 0
    while done < cases:
        attempts += 1
        if attempts > 50 * cases:
            return Verdict("monotonicity", False, done, 1,
                           {"error": "could not generate enough feasible cases"}, seed)
        d = rng.randint(2, 4)
        diagram = _random_gyd(rng)
        cells = diagram.sorted_cells()
        lo_cons = {}
        hi_cons = {}
        for cell in cells:
            xl = rng.randint(1, d)
            xu = rng.randint(xl, d)
            xl2 = rng.randint(xl, d)
            xu2 = rng.randint(max(xu, xl2), d)
            lo_cons[cell] = (xl, xu)
            hi_cons[cell] = (xl2, xu2)
        spec = _random_spectrum(rng, d)
        norm_lo = constrained_schur(diagram, d, lo_cons, spec.probs)
        norm_hi = constrained_schur(diagram, d, hi_cons, spec.probs)
        if norm_lo == 0 or norm_hi == 0:
            continue
        func = _random_monotone_function(rng, cells, d)
        avg_lo = constrained_weyl_average(diagram, d, lo_cons, spec.probs, func)
        avg_hi = constrained_weyl_average(diagram, d, hi_cons, spec.probs, func)
        done += 1
        if avg_lo > avg_hi:
            return Verdict(
                "monotonicity", False, done, 1,
                {"cells": sorted(diagram.cells), "d": d,
                 "x": {str(c): v for c, v in lo_cons.items()},
                 "x_prime": {str(c): v for c, v in hi_cons.items()},
                 "avg_low": str(avg_lo), "avg_high": str(avg_hi)},
                seed,
            )
    return Verdict("monotonicity", True, done, 0, None, seed, {"cases": cases})


def _random_contained_pair(rng: random.Random, d: int, max_n: int) -> tuple[YoungDiagram, YoungDiagram]:
    while True:
        outer = rng.choice(enumerate_diagrams(rng.randint(0, max_n), d))
        inner_rows = tuple(rng.randint(0, r) for r in outer.rows)
        inner_rows = tuple(
            min(inner_rows[: i + 1]) for i in range(len(inner_rows))
        )  # force weakly decreasing
        try:
            inner = YoungDiagram(inner_rows)
        except Exception:
            continue
        return outer, inner


def suite_log_convexity(cases: int = 500, seed: int = DEFAULT_SEED) -> Verdict:
    """Skew Schur polynomials are log-supermodular under entrywise min/max."""
    rng = random.Random(seed)
    done = 0
    while done < cases:
        d = rng.randint(2, 3)
        lam1, nu1 = _random_contained_pair(rng, d, 6)
        lam2, nu2 = _random_contained_pair(rng, d, 6)
        spec = _random_spectrum(rng, d)
        lam_max = YoungDiagram(tuple(max(a, b) for a, b in zip(lam1.rows, lam2.rows)))
        lam_min = YoungDiagram(tuple(min(a, b) for a, b in zip(lam1.rows, lam2.rows)))
        nu_max = YoungDiagram(tuple(max(a, b) for a, b in zip(nu1.rows, nu2.rows)))
        nu_min = YoungDiagram(tuple(min(a, b) for a, b in zip(nu1.rows, nu2.rows)))

        def skew(outer: YoungDiagram, inner: YoungDiagram) -> Fraction:
            return constrained_schur(skew_cells(outer, inner), d, None, spec.probs)

        lhs = skew(lam_max, nu_max) * skew(lam_min, nu_min)
        rhs = skew(lam1, nu1) * skew(lam2, nu2)
        done += 1
        if lhs < rhs:
            return Verdict(
                "log-convexity", False, done, 1,
                {"lam1": str(lam1), "nu1": str(nu1), "lam2": str(lam2),
                 "nu2": str(nu2), "spectrum": str(spec),
                 "lhs": str(lhs), "rhs": str(rhs)},
                seed,
            )
    return Verdict("log-convexity", True, done, 0, None, seed, {"cases": cases})


def _random_step_vector_function(
    rng: random.Random, arity: int, increasing: bool, terms: int = 3
) -> Callable[..., Fraction]:
    steps = [
        (rng.randrange(arity), rng.randint(0, 5), Fraction(rng.randint(1, 4)))
        for _ in range(max(terms, 1))
    ]

    def func(*args: int) -> Fraction:
        total = Fraction(0)
        for pos, threshold, coeff in steps:
            hit = args[pos] >= threshold if increasing else args[pos] <= threshold
            if hit:
                total += coeff
        return total

    if arity == 0:
        return lambda *args: Fraction(1)
    return func


def _weyl_average_pattern_function(
    shape: YoungDiagram, probs: Sequence[Fraction], func
) -> Fraction:
    num = Fraction(0)
    den = Fraction(0)
    for w in enumerate_gt_patterns(shape):
        wt = w.weight(probs)
        den += wt
        num += func(w) * wt
    if den == 0:
        return Fraction(0)
    return num / den


def suite_splitting(cases: int = 500, seed: int = DEFAULT_SEED) -> Verdict:
    """Both splitting inequalities for ordinary diagrams cut at a row k."""
    rng = random.Random(seed)
    done = 0
    while done < cases:
        d = rng.randint(2, 4)
        n = rng.randint(1, 6)
        sigma = rng.choice(enumerate_diagrams(n, d))
        k = rng.randint(2, d)
        spec = _random_spectrum(rng, d)
        dec_above = _random_step_vector_function(rng, k - 1, increasing=False)
        inc_below = _random_step_vector_function(rng, d - k + 1, increasing=True)
        inc_above = _random_step_vector_function(rng, k - 1, increasing=True)
        dec_below = _random_step_vector_function(rng, d - k + 1, increasing=False)

        def above_args(w):
            return tuple(w.row_occupancy(d, r) for r in range(1, k))

        def below_args(w):
            return tuple(w.row_occupancy(d, r) for r in range(k, d + 1))

        lhs1 = _weyl_average_pattern_function(
            sigma, spec.probs, lambda w: dec_above(*above_args(w)) * inc_below(*below_args(w))
        )
        lhs2 = _weyl_average_pattern_function(
            sigma, spec.probs, lambda w: inc_above(*above_args(w)) * dec_below(*below_args(w))
        )

        # reduced diagrams and spectra of the corollary
        top_shape = YoungDiagram(
            tuple(sigma.gap(i, k) for i in range(1, k)) + (0,)
        )
        top_probs = tuple(spec.probs[: k - 1]) + (spec.probs[d - 1],)
        bottom_shape = YoungDiagram(tuple(sigma.rows[k - 1:]))
        bottom_probs = tuple(spec.probs[k - 1:])
        a_letters = d - k + 1

        avg_dec_above = _weyl_average_pattern_function(
            top_shape, top_probs,
            lambda w: dec_above(*(w.row_occupancy(k, r) for r in range(1, k))),
        )
        avg_inc_below = _weyl_average_pattern_function(
            bottom_shape, bottom_probs,
            lambda w: inc_below(*(w.row_occupancy(a_letters, r) for r in range(1, a_letters + 1))),
        )
        avg_inc_above = _weyl_average_pattern_function(
            top_shape, top_probs,
            lambda w: inc_above(*(w.row_occupancy(k, r) for r in range(1, k))),
        )
        avg_dec_below = _weyl_average_pattern_function(
            bottom_shape, bottom_probs,
            lambda w: dec_below(*(w.row_occupancy(a_letters, r) for r in range(1, a_letters + 1))),
        )
        done += 1
        ok1 = lhs1 >= avg_dec_above * avg_inc_below
        ok2 = lhs2 <= avg_inc_above * avg_dec_below
        if not (ok1 and ok2):
            return Verdict(
                "splitting", False, done, 1,
                {"sigma": str(sigma), "k": k, "spectrum": str(spec),
                 "lhs1": str(lhs1), "rhs1": str(avg_dec_above * avg_inc_below),
                 "lhs2": str(lhs2), "rhs2": str(avg_inc_above * avg_dec_below)},
                seed,
            )
    return Verdict("splitting", True, done, 0, None, seed, {"cases": cases})


def suite_occupancy_monotonicity(max_n: int = 6, seed: int = DEFAULT_SEED) -> Verdict:
    """Monotone observables of one occupancy grow when boxes are added."""
    rng = random.Random(seed)
    cases = 0
    for d in (2, 3):
        spec = _random_spectrum(rng, d)
        shapes = [s for n in range(0, max_n + 1) for s in enumerate_diagrams(n, d)]
        for small in shapes:
            for big in shapes:
                if big.n <= small.n:
                    continue
                if any(b < s for s, b in zip(small.rows, big.rows)):
                    continue
                for letter in range(1, d + 1):
                    threshold = rng.randint(0, 4)
                    func = lambda w, b=letter, t=threshold: Fraction(
                        int(w.occupancy(b) >= t)
                    )
                    lo = _weyl_average_pattern_function(small, spec.probs, func)
                    hi = _weyl_average_pattern_function(big, spec.probs, func)
                    cases += 1
                    if lo > hi:
                        return Verdict(
                            "occupancy-monotonicity", False, cases, 1,
                            {"small": str(small), "big": str(big), "letter": letter,
                             "threshold": threshold, "spectrum": str(spec),
                             "avg_small": str(lo), "avg_big": str(hi)},
                            seed,
                        )
    return Verdict("occupancy-monotonicity", True, cases, 0, None, seed,
                   {"max_n": max_n})


# -- statistical suite ----------------------------------------------------------


def suite_concentration(
    samples: int = 10_000,
    n: int = 400,
    spectrum: Spectrum | None = None,
    alphas: Sequence[float] = (0.5, 0.6, 0.7, 0.8),
    seed: int = DEFAULT_SEED,
) -> Verdict:
    """Empirical RSK row-gap tails stay under the analytic bound (+3 sigma)."""
    spec = spectrum or Spectrum((Fraction(1, 2), Fraction(3, 10), Fraction(1, 5)))
    d = spec.d
    draws = sample_sw_many(n, spec, seed, samples)
    cases = 0
    for i in range(1, d):
        gap_target = float(spec.gap(i, i + 1))
        deviations = [
            abs((shape.row(i) - shape.row(i + 1)) / n - gap_target) for shape in draws
        ]
        for alpha in alphas:
            if alpha <= 4.0 / n**0.5:
                continue
            bound = asymptotics.concentration_bound(n, alpha)
            hits = sum(1 for dev in deviations if dev >= alpha)
            rate = hits / samples
            sigma3 = 3.0 * (max(bound * (1 - bound), 1e-12) / samples) ** 0.5
            cases += 1
            if rate > bound + sigma3:
                return Verdict(
                    "concentration", False, cases, 1,
                    {"row": i, "alpha": alpha, "empirical": rate,
                     "bound": bound, "slack": sigma3},
                    seed,
                )
    return Verdict("concentration", True, cases, 0, None, seed,
                   {"samples": samples, "n": n, "spectrum": str(spec)})


SUITES: dict[str, Callable[..., Verdict]] = {
    "normalization": suite_normalization,
    "f-symbols": suite_f_symbols,
    "majorization": suite_majorization,
    "monotonicity": suite_monotonicity,
    "log-convexity": suite_log_convexity,
    "splitting": suite_splitting,
    "occupancy-monotonicity": suite_occupancy_monotonicity,
    "concentration": suite_concentration,
    "optimality": suite_optimality,
    "oracle-consistency": suite_oracle_consistency,
}


def run_suite(name: str, **kwargs) -> Verdict:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](**kwargs)
