"""Young-diagram and Gelfand-Tsetlin combinatorics.

Enumeration of partitions and GT patterns, Specht/Weyl dimensions, Schur
polynomials (GT sum plus an independent Jacobi-Trudi oracle), the
Schur-Weyl distribution, and RSK-based sampling from it.

Everything finite-n is exact: integers and `fractions.Fraction` only.
"""

from __future__ import annotations

import random
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import product as iter_product
from math import factorial
from operator import mul
from typing import Iterator, Sequence, Union

Rational = Fraction
Scalar = Union[Fraction, float]


class InvalidShapeError(ValueError):
    """Row lengths do not form a weakly decreasing sequence."""


class InvalidSpectrumError(ValueError):
    """Probability vector violates normalization, order, or positivity."""


@dataclass(frozen=True)
class YoungDiagram:
    """Weakly decreasing integer rows, trailing zeros explicit.

    Sector labels have nonnegative rows; environment labels (dominant
    weights) may carry negative rows.  Two diagrams compare equal only
    when they have the same number of rows.
    """

    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.rows:
            raise InvalidShapeError("diagram needs at least one row")
        for a, b in zip(self.rows, self.rows[1:]):
            if a < b:
                raise InvalidShapeError(f"rows {self.rows} not weakly decreasing")

    @property
    def d(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return sum(self.rows)

    def row(self, i: int) -> int:
        """1-indexed row length."""
        return self.rows[i - 1]

    def gap(self, i: int, j: int) -> int:
        """Row gap between rows i < j, both 1-indexed.  j = d+1 means +inf."""
        if j > self.d:
            raise ValueError("gap beyond row d is infinite; handle at call site")
        return self.rows[i - 1] - self.rows[j - 1]

    def is_sector(self) -> bool:
        return self.rows[-1] >= 0

    def require_sector(self) -> None:
        if not self.is_sector():
            raise InvalidShapeError(f"{self.rows} has negative rows; not a sector label")

    def __str__(self) -> str:
        return ",".join(str(r) for r in self.rows)


def parse_diagram(text: str) -> YoungDiagram:
    """Parse the comma-separated row format, e.g. '7,5,3,1'."""
    rows = []
    pos = 0
    for tok in text.split(","):
        try:
            rows.append(int(tok.strip()))
        except ValueError:
            raise InvalidShapeError(
                f"bad diagram row {tok!r} at column {pos + 1} of {text!r}"
            ) from None
        pos += len(tok) + 1
    return YoungDiagram(tuple(rows))


@dataclass(frozen=True)
class Spectrum:
    """Exact-rational probability vector, sorted nonincreasing."""

    probs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.probs:
            raise InvalidSpectrumError("empty spectrum")
        if any(p < 0 for p in self.probs):
            raise InvalidSpectrumError(f"negative entry in {self.probs}")
        if sum(self.probs) != 1:
            raise InvalidSpectrumError(f"spectrum {self.probs} does not sum to 1")
        for a, b in zip(self.probs, self.probs[1:]):
            if a < b:
                raise InvalidSpectrumError(f"spectrum {self.probs} not sorted nonincreasing")

    @property
    def d(self) -> int:
        return len(self.probs)

    def p(self, i: int) -> Fraction:
        """1-indexed eigenvalue."""
        return self.probs[i - 1]

    def gap(self, k: int, i: int) -> Fraction:
        """D_{k,i} = p_k - p_i (1-indexed)."""
        return self.probs[k - 1] - self.probs[i - 1]

    def min_gap(self, k: int) -> Fraction:
        """D_{k,min} = min_{i != k} |p_k - p_i|."""
        return min(abs(self.gap(k, i)) for i in range(1, self.d + 1) if i != k)

    def is_nondegenerate(self) -> bool:
        return all(a > b for a, b in zip(self.probs, self.probs[1:]))

    def nondegenerate_at(self, k: int) -> bool:
        """Strict separation of p_k from its neighbors."""
        if k < 1 or k > self.d:
            return False
        if k > 1 and self.probs[k - 2] <= self.probs[k - 1]:
            return False
        if k < self.d and self.probs[k - 1] <= self.probs[k]:
            return False
        return True

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.probs)


def parse_spectrum(text: str) -> Spectrum:
    """Parse comma-separated rationals ('3/4,1/4') or exact decimals ('0.75,0.25')."""
    probs = []
    pos = 0
    for tok in text.split(","):
        t = tok.strip()
        try:
            probs.append(Fraction(t))
        except (ValueError, ZeroDivisionError):
            raise InvalidSpectrumError(
                f"bad spectrum entry {tok!r} at column {pos + 1} of {text!r}"
            ) from None
        pos += len(tok) + 1
    return Spectrum(tuple(probs))


@dataclass(frozen=True)
class GTPattern:
    """Triangular interlacing array; levels[b-1] is the length-b row of level b."""

    levels: tuple[tuple[int, ...], ...]

    @property
    def d(self) -> int:
        return len(self.levels)

    @property
    def top(self) -> tuple[int, ...]:
        return self.levels[-1]

    def entry(self, i: int, b: int) -> int:
        """w_{i,b}, both 1-indexed, 1 <= i <= b <= d."""
        return self.levels[b - 1][i - 1]

    def occupancy(self, b: int) -> int:
        """#_b(w): number of letters b in the Weyl tableau."""
        upper = sum(self.levels[b - 1])
        lower = sum(self.levels[b - 2]) if b >= 2 else 0
        return upper - lower

    def occupancies(self) -> tuple[int, ...]:
        return tuple(self.occupancy(b) for b in range(1, self.d + 1))

    def row_occupancy(self, b: int, row: int) -> int:
        """#_{b,row}(w): number of letters b in the given row (row <= b)."""
        if row > b:
            return 0
        upper = self.levels[b - 1][row - 1]
        lower = self.levels[b - 2][row - 1] if row <= b - 1 else 0
        return upper - lower

    def weight(self, q: Sequence[Scalar]) -> Scalar:
        """Monomial weight prod_b q_b^{#_b(w)}."""
        w = q[0] ** self.occupancy(1)
        for b in range(2, self.d + 1):
            w = w * q[b - 1] ** self.occupancy(b)
        return w

    def validate(self) -> None:
        for b in range(1, self.d):
            hi, lo = self.levels[b], self.levels[b - 1]
            for i in range(b):
                if not (hi[i] >= lo[i] >= hi[i + 1]):
                    raise InvalidShapeError(
                        f"interlacing violated at level {b}, index {i + 1}: "
                        f"{hi[i]} >= {lo[i]} >= {hi[i + 1]} fails"
                    )


def enumerate_diagrams(n: int, d: int) -> list[YoungDiagram]:
    """All partitions of n into at most d parts, reverse-lexicographic."""
    if n < 0 or d < 1:
        raise ValueError("need n >= 0 and d >= 1")
    out: list[YoungDiagram] = []

    def rec(remaining: int, maxpart: int, prefix: list[int], slots: int) -> None:
        if slots == 0:
            if remaining == 0:
                out.append(YoungDiagram(tuple(prefix)))
            return
        if slots == 1:
            if remaining <= maxpart:
                out.append(YoungDiagram(tuple(prefix + [remaining])))
            return
        for part in range(min(remaining, maxpart), -1, -1):
            # weakly decreasing and able to absorb the rest
            if part * slots >= remaining:
                rec(remaining - part, part, prefix + [part], slots - 1)

    rec(n, n, [], d)
    return out


def specht_dim(shape: YoungDiagram) -> int:
    """Number of standard Young tableaux of the shape (hook length formula)."""
    shape.require_sector()
    rows = [r for r in shape.rows if r > 0]
    n = sum(rows)
    if n == 0:
        return 1
    hooks = []
    for i, r in enumerate(rows):
        for j in range(r):
            below = sum(1 for rr in rows[i + 1:] if rr > j)
            hooks.append(r - j + below)
    return factorial(n) // reduce(mul, hooks, 1)


def weyl_dim(shape: YoungDiagram, d: int | None = None) -> int:
    """GL(d) Weyl-module dimension; valid for dominant weights with negative rows."""
    d = shape.d if d is None else d
    if d != shape.d:
        raise ValueError("diagram must carry explicit rows up to d")
    num = 1
    den = 1
    for i in range(1, d + 1):
        for j in range(i + 1, d + 1):
            num *= shape.row(i) - shape.row(j) + j - i
            den *= j - i
    return num // den


def enumerate_gt_patterns(shape: YoungDiagram, d: int | None = None) -> Iterator[GTPattern]:
    """All GT patterns with top row `shape`, deterministic order.

    Levels are generated from d-1 downward; each level runs low-to-high in
    lexicographic order.
    """
    shape.require_sector()
    d = shape.d if d is None else d
    if d != shape.d:
        raise ValueError("diagram must carry explicit rows up to d")
    top = shape.rows

    def level_choices(upper: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        b = len(upper) - 1
        ranges = [range(upper[i + 1], upper[i] + 1) for i in range(b)]
        yield from iter_product(*ranges)

    def rec(levels_above: list[tuple[int, ...]]) -> Iterator[GTPattern]:
        upper = levels_above[0]
        if len(upper) == 1:
            yield GTPattern(tuple(levels_above))
            return
        for row in level_choices(upper):
            yield from rec([row] + levels_above)

    yield from rec([top])


def schur_polynomial(shape: YoungDiagram, q: Sequence[Scalar]) -> Scalar:
    """Schur polynomial as the GT-pattern sum of monomial weights."""
    shape.require_sector()
    if len(q) != shape.d:
        raise ValueError("argument vector length must equal the row count")
    total: Scalar = 0
    for w in enumerate_gt_patterns(shape):
        total += w.weight(q)
    return total


def complete_homogeneous(deg_max: int, q: Sequence[Scalar]) -> list[Scalar]:
    """h_0..h_deg_max of the variables q, by the one-variable-at-a-time recurrence."""
    h: list[Scalar] = [1] + [0] * deg_max
    for v in q:
        for k in range(1, deg_max + 1):
            h[k] = h[k] + v * h[k - 1]
    return h


def _det(mat: list[list[Scalar]]) -> Scalar:
    """Exact determinant by expansion (matrices here are at most 4x4)."""
    size = len(mat)
    if size == 1:
        return mat[0][0]
    total: Scalar = 0
    for j in range(size):
        if mat[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in mat[1:]]
        term = mat[0][j] * _det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def schur_polynomial_jacobi_trudi(shape: YoungDiagram, q: Sequence[Scalar]) -> Scalar:
    """Independent Schur-polynomial oracle: det(h_{lambda_i - i + j})."""
    shape.require_sector()
    d = shape.d
    if len(q) != d:
        raise ValueError("argument vector length must equal the row count")
    h = complete_homogeneous(shape.row(1) + d, q)

    def h_at(k: int) -> Scalar:
        return 0 if k < 0 else h[k]

    mat = [[h_at(shape.row(i) - i + j) for j in range(1, d + 1)] for i in range(1, d + 1)]
    return _det(mat)


def sw_mass(shape: YoungDiagram, spectrum: Spectrum) -> Fraction:
    """Schur-Weyl probability mass g^sigma * s_sigma(p)."""
    return Fraction(specht_dim(shape)) * schur_polynomial(shape, spectrum.probs)


def sw_distribution(n: int, d: int, spectrum: Spectrum) -> dict[YoungDiagram, Fraction]:
    """The full Schur-Weyl distribution over sectors of n boxes, <= d rows."""
    if spectrum.d != d:
        raise InvalidSpectrumError("spectrum length must equal d")
    return {shape: sw_mass(shape, spectrum) for shape in enumerate_diagrams(n, d)}


def rsk_shape(word: Sequence[int], d: int | None = None) -> YoungDiagram:
    """Shape of the RSK row-insertion tableau of the word (letters 1..d)."""
    rows: list[list[int]] = []
    for x in word:
        cur = x
        for row in rows:
            # bump the leftmost entry strictly greater than cur
            pos = bisect_right(row, cur)
            if pos == len(row):
                row.append(cur)
                cur = -1
                break
            row[pos], cur = cur, row[pos]
        if cur != -1:
            rows.append([cur])
    if d is None:
        d = max(word) if word else 1
    lengths = [len(r) for r in rows] + [0] * (d - len(rows))
    return YoungDiagram(tuple(lengths[:max(d, len(rows))]))


def sample_sw(n: int, spectrum: Spectrum, seed: int) -> YoungDiagram:
    """Sample a sector from the SW distribution by RSK on an i.i.d. word."""
    rng = random.Random(seed)
    return rsk_shape(_iid_word(n, spectrum, rng), spectrum.d)


def sample_sw_many(n: int, spectrum: Spectrum, seed: int, count: int) -> list[YoungDiagram]:
    """`count` independent SW samples from one seeded stream."""
    rng = random.Random(seed)
    return [rsk_shape(_iid_word(n, spectrum, rng), spectrum.d) for _ in range(count)]


def _iid_word(n: int, spectrum: Spectrum, rng: random.Random) -> list[int]:
    cum = []
    acc = Fraction(0)
    for p in spectrum.probs:
        acc += p
        cum.append(float(acc))
    word = []
    for _ in range(n):
        u = rng.random()
        letter = 1 + bisect_right(cum, u)
        word.append(min(letter, spectrum.d))
    return word
