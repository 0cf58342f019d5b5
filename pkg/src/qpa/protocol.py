"""Protocol layer: target reindexing, overhang removal, environment enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .tableaux import InvalidSpectrumError, Spectrum, YoungDiagram

INF = float("inf")


class InvalidRemovalError(ValueError):
    """Removal vector violates the horizontal-strip condition."""


@dataclass(frozen=True)
class RemovalVector:
    """Per-row removal counts m_i; the environment is sigma - m."""

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(c < 0 for c in self.counts):
            raise InvalidRemovalError(f"negative removal in {self.counts}")

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def d(self) -> int:
        return len(self.counts)

    def validate_for(self, sigma: YoungDiagram) -> None:
        """Horizontal-strip condition: m_i <= Delta_{i,i+1} for i < d; m_d free."""
        if self.d != sigma.d:
            raise InvalidRemovalError("removal vector and diagram disagree on d")
        for i in range(1, self.d):
            if self.counts[i - 1] > sigma.gap(i, i + 1):
                raise InvalidRemovalError(
                    f"m_{i}={self.counts[i - 1]} exceeds overhang "
                    f"Delta_{i},{i + 1}={sigma.gap(i, i + 1)} of {sigma}"
                )

    def is_valid_for(self, sigma: YoungDiagram) -> bool:
        try:
            self.validate_for(sigma)
        except InvalidRemovalError:
            return False
        return True

    def environment(self, sigma: YoungDiagram) -> YoungDiagram:
        self.validate_for(sigma)
        return YoungDiagram(tuple(r - c for r, c in zip(sigma.rows, self.counts)))


def removal_from_environment(sigma: YoungDiagram, env: YoungDiagram) -> RemovalVector:
    if env.d != sigma.d:
        raise InvalidRemovalError("environment and sector disagree on d")
    vec = RemovalVector(tuple(r - e for r, e in zip(sigma.rows, env.rows)))
    vec.validate_for(sigma)
    return vec


def reindex_spectrum(
    spectrum: Spectrum, k: int, *, strict: bool = True
) -> tuple[tuple[Fraction, ...], tuple[int, ...]]:
    """Relabel so the target eigenvalue sits in slot d.

    Returns (q, sigma_map) with sigma_map the 1-indexed permutation
    sigma(i): q_{sigma(i)} = p_i.  With strict=False the degeneracy check
    is skipped (the relabeling itself never needs it; sector formulas stay
    well defined for tied spectra).
    """
    d = spectrum.d
    if not 1 <= k <= d:
        raise ValueError(f"target index {k} out of range 1..{d}")
    if strict and not spectrum.nondegenerate_at(k):
        raise InvalidSpectrumError(
            f"target eigenvalue p_{k} of {spectrum} is degenerate; "
            "a nondegenerate target is required"
        )
    perm = tuple(i if i < k else (d if i == k else i - 1) for i in range(1, d + 1))
    q = [Fraction(0)] * d
    for i, pos in enumerate(perm, start=1):
        q[pos - 1] = spectrum.p(i)
    return tuple(q), perm


def invert_reindex(q: Sequence[Fraction], perm: tuple[int, ...]) -> tuple[Fraction, ...]:
    """Recover p from (q, sigma_map)."""
    return tuple(q[pos - 1] for pos in perm)


def terminal_index(gaps_from_k, k: int, budget) -> int:
    """Smallest i with gap(k, i+1) >= budget.

    `gaps_from_k[t]` is the gap between row/eigenvalue k and k+1+t; entries
    beyond the sequence count as +inf, so the result is at most
    k + len(gaps_from_k).
    """
    for t, gap in enumerate(gaps_from_k):
        if gap >= budget:
            return k + t
    return k + len(gaps_from_k)


def overhang_terminal_index(sigma: YoungDiagram, k: int, m: int) -> int:
    gaps = [sigma.gap(k, j) for j in range(k + 1, sigma.d + 1)]
    return terminal_index(gaps, k, m)


def overhang_removal(sigma: YoungDiagram, k: int, m: int) -> RemovalVector:
    """The overhang removal rule: strip m boxes starting at row k, moving down."""
    sigma.require_sector()
    d = sigma.d
    if not 1 <= k <= d:
        raise ValueError(f"row index {k} out of range 1..{d}")
    if m < 0:
        raise ValueError("removal count must be nonnegative")
    i_star = overhang_terminal_index(sigma, k, m)
    mu = list(sigma.rows)
    for i in range(k, i_star):
        mu[i - 1] = sigma.row(i + 1)
    mu[i_star - 1] = sigma.row(k) - m
    env = YoungDiagram(tuple(mu))
    return removal_from_environment(sigma, env)


def enumerate_environments(sigma: YoungDiagram, m: int, d: int | None = None) -> list[RemovalVector]:
    """All valid removal vectors of m boxes, lexicographically decreasing."""
    sigma.require_sector()
    d = sigma.d if d is None else d
    if d != sigma.d:
        raise ValueError("diagram must carry explicit rows up to d")
    out: list[RemovalVector] = []

    def rec(i: int, left: int, prefix: list[int]) -> None:
        if i == d:
            out.append(RemovalVector(tuple(prefix + [left])))
            return
        cap = min(left, sigma.gap(i, i + 1))
        for c in range(cap, -1, -1):
            rec(i + 1, left - c, prefix + [c])

    rec(1, m, [])
    return out
