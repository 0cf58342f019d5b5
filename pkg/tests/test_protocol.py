from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from qpa.protocol import (
    InvalidRemovalError,
    RemovalVector,
    enumerate_environments,
    invert_reindex,
    overhang_removal,
    overhang_terminal_index,
    reindex_spectrum,
    removal_from_environment,
    terminal_index,
)
from qpa.tableaux import InvalidSpectrumError, Spectrum, YoungDiagram, enumerate_diagrams


def test_reindex_examples():
    q, perm = reindex_spectrum(Spectrum((F(3, 4), F(1, 4))), 1)
    assert q == (F(1, 4), F(3, 4)) and perm == (2, 1)
    q, _ = reindex_spectrum(Spectrum((F(1, 2), F(1, 3), F(1, 6))), 2)
    assert q == (F(1, 2), F(1, 6), F(1, 3))
    q, _ = reindex_spectrum(Spectrum((F(1), F(0))), 1)
    assert q == (F(0), F(1))


def test_reindex_orders_target_last():
    spec = Spectrum((F(5, 10), F(3, 10), F(2, 10)))
    for k in (1, 2, 3):
        q, _ = reindex_spectrum(spec, k)
        assert q[-1] == spec.p(k)
        rest = [x for i, x in enumerate(q[:-1])]
        assert rest == sorted(rest, reverse=True)


def test_reindex_roundtrip():
    spec = Spectrum((F(1, 2), F(1, 3), F(1, 6)))
    for k in (1, 2, 3):
        q, perm = reindex_spectrum(spec, k)
        assert invert_reindex(q, perm) == spec.probs


def test_reindex_requires_nondegenerate_target():
    spec = Spectrum((F(2, 5), F(2, 5), F(1, 5)))
    with pytest.raises(InvalidSpectrumError):
        reindex_spectrum(spec, 1)
    # the nondegenerate slot still works
    reindex_spectrum(spec, 3)


def test_overhang_examples():
    sig = YoungDiagram((7, 5, 3, 1))
    rem = overhang_removal(sig, 2, 4)
    assert rem.environment(sig).rows == (7, 3, 1, 1)
    assert rem.counts == (0, 2, 2, 0)

    sig = YoungDiagram((2, 0))
    assert overhang_removal(sig, 1, 1).environment(sig).rows == (1, 0)

    # removal spilling past the last row dips below zero there
    sig = YoungDiagram((1, 1, 0))
    assert overhang_removal(sig, 1, 2).environment(sig).rows == (1, 0, -1)
    assert overhang_terminal_index(sig, 1, 2) == 3


def test_terminal_index_examples():
    assert terminal_index((2, 4, 6), 2, 4) == 3
    assert terminal_index((F(1, 2),), 1, F(1, 4)) == 1
    assert terminal_index((2, 4), 1, 0) == 1  # zero removal stops at the target row


def test_enumerate_environments_examples():
    sig = YoungDiagram((2, 0))
    assert [r.counts for r in enumerate_environments(sig, 1)] == [(1, 0), (0, 1)]
    sig = YoungDiagram((1, 1))
    assert [r.counts for r in enumerate_environments(sig, 1)] == [(0, 1)]
    sig = YoungDiagram((2, 1, 0))
    assert [r.counts for r in enumerate_environments(sig, 2)] == [
        (1, 1, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2),
    ]


def test_environments_match_brute_force_strips():
    sig = YoungDiagram((3, 2, 0))
    m = 3
    seen = {r.counts for r in enumerate_environments(sig, m)}
    brute = set()
    for a in range(m + 1):
        for b in range(m + 1 - a):
            c = m - a - b
            counts = (a, b, c)
            if a <= sig.gap(1, 2) and b <= sig.gap(2, 3):
                brute.add(counts)
    assert seen == brute


def test_removal_validation():
    sig = YoungDiagram((2, 1, 0))
    # dominant weight, but the strip condition m_2 <= Delta_{2,3} fails
    with pytest.raises(InvalidRemovalError):
        removal_from_environment(YoungDiagram((2, 2, 1)), YoungDiagram((2, 0, 0)))
    with pytest.raises(InvalidRemovalError):
        RemovalVector((2, 0, 0)).validate_for(YoungDiagram((2, 2, 0)))
    RemovalVector((0, 0, 5)).validate_for(sig)  # last row is unbounded


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 8), st.integers(2, 4), st.integers(1, 4), st.integers(0, 5), st.data())
def test_overhang_is_valid_and_saturates(n, d, k, m, data):
    k = min(k, d)
    shapes = enumerate_diagrams(n, d)
    sig = data.draw(st.sampled_from(shapes))
    rem = overhang_removal(sig, k, m)
    assert rem.total == m
    assert rem.counts in {r.counts for r in enumerate_environments(sig, m)}
    i_star = overhang_terminal_index(sig, k, m)
    for i in range(1, d + 1):
        if i < k or i > i_star:
            assert rem.counts[i - 1] == 0
    for i in range(k, i_star):
        assert rem.counts[i - 1] == sig.gap(i, i + 1)  # saturated rows
