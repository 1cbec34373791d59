import dataclasses
import math

import numpy as np
import pytest

from analyze.aggregator import _judge, peak_at, require_verified, verify_theorem
from analyze.engines.hadamard import hadamard_fidelity_flat, is_scaled_complex_hadamard
from analyze.engines.persistency import longest_band, persistency, persistency_summary
from analyze.engines.probability_transfer import (ScaledIntegerMatrix, probability_transfer_search, w_k4,
                                                  zero_pattern)
from analyze.models import Finding, GraphResult, TheoremReport, ZeroPattern
from dynamics.propagator import entry_series, propagator
from dynamics.pst import pst_report
from graphs.catalog import GOLDEN_MAXIMA, get_entry, w_graph
from graphs.constructors import complete, hypercube, path
from utils.config import DEFAULT_PST_TOL
from utils.errors import CertificateError, VerificationError


def test_prism6_diagonal_anchor_values(catalog):
    g = catalog['prism6'].graph
    values = entry_series(g, 1, 1, [math.pi / 2, math.pi])
    assert abs(values[0]) <= 1e-9
    assert abs(values[1] - 1 / 3) <= 1e-9


def test_persistency_large_epsilon_covers_window(catalog):
    result = persistency(catalog['prism6'].graph, 1, 1, 1.0)
    assert result.interval == (0.0, pytest.approx(2 * math.pi))
    assert result.length == pytest.approx(2 * math.pi)


def test_persistency_zero_epsilon():
    result = persistency(complete(4), 1, 2, 0.0, grid=101)
    assert result.length == 0.0


def test_persistency_rejects_negative_epsilon():
    with pytest.raises(ValueError):
        persistency(complete(4), 1, 2, -0.1)


def test_persistency_needs_integral_graph():
    with pytest.raises(CertificateError):
        persistency(w_graph(), 1, 8, 0.1)


def _brute_force_length(values, times, epsilon):
    best = 0.0
    n = len(values)
    for lo in range(n):
        hi_max, lo_min = values[lo], values[lo]
        for hi in range(lo, n):
            hi_max = max(hi_max, values[hi])
            lo_min = min(lo_min, values[hi])
            if hi_max - lo_min >= 2 * epsilon:
                break
            best = max(best, times[hi] - times[lo])
    return best


def test_persistency_matches_dense_sweep(catalog):
    """
    The coarse window agrees with a ten times denser sweep to within two
    coarse steps, not one: both window edges snap to the coarse grid
    independently, so each can move by a full step.
    """
    g = catalog['prism6'].graph
    coarse = 2001
    result = persistency(g, 1, 1, 0.05, grid=coarse)
    assert result.interval[0] <= math.pi <= result.interval[1]

    dense_times = np.linspace(0.0, 2 * math.pi, 10 * (coarse - 1) + 1)
    dense_values = np.abs(entry_series(g, 1, 1, dense_times))
    lo, hi = longest_band(dense_values, 0.05)
    dense_length = dense_times[hi] - dense_times[lo]
    step = 2 * math.pi / (coarse - 1)
    assert abs(result.length - dense_length) <= 2 * step


def test_longest_band_against_brute_force():
    rng = np.random.default_rng(7)
    values = rng.uniform(0.0, 1.0, size=300)
    times = np.arange(300, dtype=float)
    for epsilon in (0.05, 0.2, 0.4):
        lo, hi = longest_band(values, epsilon)
        assert hi - lo == _brute_force_length(values, times, epsilon)


def test_persistency_monotone_in_epsilon(catalog):
    g = catalog['k33'].graph
    lengths = [persistency(g, 1, 2, eps, grid=2001).length for eps in (0.01, 0.05, 0.1, 0.3, 0.5)]
    assert lengths == sorted(lengths)


def test_persistency_summary():
    summary = persistency_summary(complete(4), 0.1, grid=1001)
    assert summary.max_length >= summary.mean_length > 0
    assert summary.best.length == summary.max_length


def test_hadamard_p2_and_k4():
    u = propagator(path(2), math.pi / 4)
    assert is_scaled_complex_hadamard(u) == pytest.approx(1 / math.sqrt(2), abs=1e-12)
    expected = np.array([[1, -1j], [-1j, 1]]) / math.sqrt(2)
    assert np.max(np.abs(u - expected)) <= 1e-12

    k4 = propagator(complete(4), math.pi / 4)
    assert is_scaled_complex_hadamard(k4) == pytest.approx(0.5, abs=1e-12)
    assert is_scaled_complex_hadamard(math.sqrt(2) * u) == pytest.approx(1.0, abs=1e-12)
    assert is_scaled_complex_hadamard(2 * k4) == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_hadamard_hypercube_scale(k):
    u = propagator(hypercube(k), math.pi / 4)
    assert is_scaled_complex_hadamard(u) == pytest.approx(2 ** (-k / 2), abs=1e-12)
    assert hadamard_fidelity_flat(u)


def test_hadamard_rejects_identity():
    assert is_scaled_complex_hadamard(np.eye(3)) is None
    assert not hadamard_fidelity_flat(np.eye(3))


def test_hadamard_scale_consistency():
    u = propagator(complete(4), math.pi / 4)
    c = 0.3 - 0.4j
    assert is_scaled_complex_hadamard(c * u) == pytest.approx(abs(c) * 0.5, abs=1e-12)


def test_hadamard_requires_square():
    with pytest.raises(ValueError):
        is_scaled_complex_hadamard(np.ones((2, 3)))


def test_w_k4_structure():
    w = w_k4()
    b = np.array(w.entries)
    assert int(b[0] @ b[1]) == 0
    assert w.is_unitary()
    u = w.to_array()
    assert np.max(np.abs(u @ u.conj().T - np.eye(4))) <= 1e-15
    pattern = zero_pattern(w)
    assert pattern.as_matrix().tolist() == (~np.eye(4, dtype=bool)).tolist()


def test_scaled_integer_square():
    w = w_k4()
    square = w @ w
    assert square.power == 2
    assert square.entries[0] == (1, 0, 2, -2)
    assert square.is_unitary()


def test_w_k4_has_no_transfer_and_two_patterns():
    result = probability_transfer_search(w_k4(), 1000)
    assert result.hit is None
    assert len(result.patterns) == 2
    assert result.patterns[0] == zero_pattern(w_k4())


def test_w_k4_pattern_closure():
    # no third pattern appears over a much longer run
    result = probability_transfer_search(w_k4(), 3000)
    assert len(result.patterns) == 2


def test_identity_has_no_off_diagonal_transfer():
    result = probability_transfer_search(np.eye(4), 5)
    assert result.hit is None
    assert len(result.patterns) == 1


def test_permutation_transfers_immediately():
    # 4-cycle 1 -> 2 -> 3 -> 4 -> 1, column i holds the image of i
    perm = np.zeros((4, 4))
    for i in range(4):
        perm[(i + 1) % 4, i] = 1
    result = probability_transfer_search(perm, 10)
    assert result.hit == (1, 1, 2)


def test_non_unitary_rejected():
    with pytest.raises(ValueError):
        probability_transfer_search(2 * np.eye(2), 3)
    with pytest.raises(ValueError):
        probability_transfer_search(ScaledIntegerMatrix.from_rows([[1, 1], [1, 1]], base=2), 3)


def test_zero_pattern_model():
    pattern = ZeroPattern.from_mask([[True, False], [False, True]])
    assert pattern[1, 1] and not pattern[1, 2]
    assert pattern.rows() == ["10", "01"]
    assert str(pattern) == "10\n01"
    assert zero_pattern(np.array([[1e-12, 1.0], [1.0, 0.0]])) == ZeroPattern.from_mask([[False, True], [True, False]])


def test_require_verified_raises_on_critical_finding():
    report = pst_report(complete(4), grid=2000)
    theorem = TheoremReport([
        GraphResult('k4', report, [Finding("separation", 0.5, "Info", "fine")]),
        GraphResult('prism3', report, [Finding("golden", 0.9, "Warn", "off"),
                                       Finding("cubic", None, "Critical", "not regular")]),
    ])
    assert not theorem.verified
    assert theorem.pst_graphs == []
    with pytest.raises(VerificationError) as excinfo:
        require_verified(theorem)
    assert excinfo.value.graph == 'prism3'
    assert "cubic" in str(excinfo.value)


def test_require_verified_passes_warnings_through():
    report = pst_report(hypercube(3), grid=2000)
    theorem = TheoremReport([GraphResult('cube', report, [Finding("golden", 1.0, "Warn", "off")])])
    assert require_verified(theorem) is theorem
    assert theorem.pst_graphs == ['cube']


@pytest.fixture(scope="module")
def theorem():
    return verify_theorem(grid=4000)


@pytest.mark.parametrize("key", sorted(GOLDEN_MAXIMA))
def test_published_maxima_are_reproduced(theorem, key):
    result = next(r for r in theorem.results if r.graph == key)
    golden = GOLDEN_MAXIMA[key]
    best = result.report.best
    assert golden.accepts(best.f_star), (key, best.f_star)
    if golden.t_star is not None:
        assert golden.accepts(peak_at(get_entry(key).graph, golden.t_star))
        assert best.t_star <= golden.t_star + 1e-6
    assert not result.failed, [f.item for f in result.failed]


@pytest.mark.parametrize("key, t_star", [
    ('k4', math.pi / 4),
    ('k33', math.pi / 3),
    ('cube', math.pi / 2),
    ('petersen', math.pi),
    ('dk23', 2 * math.pi / 5),
    ('nauru', math.pi),
])
def test_published_maximizing_times(theorem, key, t_star):
    best = next(r for r in theorem.results if r.graph == key).report.best
    assert abs(best.t_star - t_star) <= 1e-6


def test_theorem_holds(theorem):
    assert theorem.verified
    assert theorem.pst_graphs == ['cube']
    items = {f.item for f in theorem.results[0].findings}
    assert {"integral", "numeric_spectrum", "cubic", "periodic", "golden", "golden_time"} <= items


def test_golden_mismatch_is_critical(catalog):
    entry = catalog['k4']
    report = pst_report(entry.graph, grid=2000)
    forged = dataclasses.replace(report, best=dataclasses.replace(report.best, f_star=0.45))
    failed = {f.item for f in _judge(entry, forged, DEFAULT_PST_TOL) if f.severity == "Critical"}
    assert failed == {"golden"}
