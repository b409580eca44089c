"""
Tests for oracles, comparisons, tables, checks and sweeps
"""
import math
from pathlib import Path

import numpy as np
import pytest

from src.basegraph.text_format import load_base_graph
from src.lift.builder import build_lift
from src.models.base_graph import AdjacencyMode, CombinedBaseGraph
from src.models.verification import Verdict
from src.spectral.engine import full_spectrum
from src.verify.checks import VerificationSuite, automorphism_check, frobenius_identity, trace_identity
from src.verify.comparison import compare_multisets
from src.verify.oracles import adjacency_spectrum, direct_spectrum, token_graph_cycle
from src.verify.sweep import random_base_graph, random_sweep
from src.verify.table import table_report, table_rows
from tests.conftest import F3C6_SPECTRUM, J42_SPECTRUM


def test_direct_spectrum_j42(j42):
    """Test the octahedron eigenvalues"""
    values = direct_spectrum(build_lift(j42))

    assert [v.real for v in values] == pytest.approx(J42_SPECTRUM, abs=1e-10)
    assert all(v.imag == 0 for v in values)


def test_direct_spectrum_single_vertex():
    """Test an edgeless one-vertex lift"""
    base = CombinedBaseGraph.from_edges(m=3, vertices=[("a", 1)])

    assert direct_spectrum(build_lift(base)) == [0j]


def test_adjacency_spectrum_nonsymmetric():
    """Test the directed 3-cycle"""
    values = adjacency_spectrum(np.array([[0, 1, 0], [0, 0, 1], [1, 0, 0]]))

    assert sorted(round(v.real, 9) for v in values) == [-0.5, -0.5, 1.0]
    assert adjacency_spectrum(np.zeros((0, 0))) == []


def test_token_graph_f3c6():
    """Test F3(C6): 20 vertices, degrees 2^6 4^12 6^2, 36 edges"""
    a = token_graph_cycle(6, 3)

    assert a.shape == (20, 20)
    assert np.array_equal(a, a.T)
    assert sorted(a.sum(axis=1).tolist()) == [2] * 6 + [4] * 12 + [6] * 2
    assert a.sum() // 2 == 36


def test_token_graph_one_token_is_host():
    """Test F1(C3) = C3"""
    assert token_graph_cycle(3, 1).tolist() == [[0, 1, 1], [1, 0, 1], [1, 1, 0]]


def test_token_graph_c4_two_tokens():
    """Test F2(C4) = K_{2,4}"""
    a = token_graph_cycle(4, 2)
    values = [v.real for v in adjacency_spectrum(a)]

    assert a.sum() // 2 == 8
    assert values == pytest.approx([2 * math.sqrt(2), 0, 0, 0, 0, -2 * math.sqrt(2)], abs=1e-10)


def test_token_graph_rejects_bad_counts():
    """Test the token count range"""
    with pytest.raises(ValueError):
        token_graph_cycle(5, 5)
    with pytest.raises(ValueError):
        token_graph_cycle(5, 0)


def test_f3c6_three_way_equality(f3c6):
    """Test polymat = direct = token graph spectra"""
    polymat = full_spectrum(f3c6).spectrum
    direct = direct_spectrum(build_lift(f3c6))
    token = adjacency_spectrum(token_graph_cycle(6, 3))

    for left, right in ((polymat, direct), (direct, token), (polymat, token)):
        report = compare_multisets(left, right, 1e-6)
        assert report.passed
        assert len(report.pairs) == 20
    assert [v.real for v in direct] == pytest.approx(F3C6_SPECTRUM, abs=1e-8)


def test_j42_polymat_matches_direct(j42):
    """Test the octahedron at tolerance 1e-8"""
    report = compare_multisets(full_spectrum(j42).spectrum, direct_spectrum(build_lift(j42)), 1e-8)

    assert report.passed


def test_compare_multisets_pass():
    """Test matching after reordering"""
    report = compare_multisets([1.0, 2.0], [2.0 + 1e-12, 1.0 - 1e-12], 1e-9)

    assert report.verdict == Verdict.PASS
    assert report.max_gap <= 1e-11


def test_compare_multisets_fail():
    """Test a value off by one"""
    report = compare_multisets([1, 2], [1, 3], 1e-9)

    assert report.verdict == Verdict.FAIL
    assert report.max_gap == pytest.approx(1.0)


def test_compare_multisets_size_mismatch():
    """Test the surplus of the longer multiset"""
    report = compare_multisets([1, 2, 5], [1, 2], 1e-9)

    assert not report.passed
    assert report.unmatched_left == [5]
    assert report.unmatched_right == []


def test_compare_multisets_complex_is_permutation_invariant():
    """Test greedy matching on complex values"""
    left = [1j, -1j, 2 + 0j, 0.5 + 0.5j]
    right = [0.5 + 0.5j + 1e-12, 2.0, -1j, 1j]
    forward = compare_multisets(left, right, 1e-9)
    backward = compare_multisets(list(reversed(left)), list(reversed(right)), 1e-9)

    assert forward.passed and backward.passed
    assert forward.max_gap == pytest.approx(backward.max_gap, abs=1e-15)


def test_f3c6_table(f3c6):
    """Test the per-r table of the F3(C6) base"""
    rows = table_rows(f3c6)

    assert rows == [
        ("spec(B(ζ^0))", ["4", "0", "-2", "-2"]),
        ("spec(B(ζ^1))=spec(B(ζ^5))", ["2", "0*", "-1", "-1"]),
        ("spec(B(ζ^2))=spec(B(ζ^4))", ["1", "1", "0*", "-2"]),
        ("spec(B(ζ^3))", ["2", "2", "0", "-4"]),
    ]
    assert table_report(f3c6).splitlines()[1].endswith(": 2, 0*, -1, -1")


def test_j42_table(j42):
    """Test the per-r table of the J(4,2) base"""
    assert table_rows(j42) == [
        ("spec(B(ζ^0))", ["4", "-2"]),
        ("spec(B(ζ^1))=spec(B(ζ^3))", ["0", "0*"]),
        ("spec(B(ζ^2))", ["0", "-2"]),
    ]


def test_trace_and_frobenius_identities(f3c6):
    """Test Σλ = 0 and Σλ² = 72 on the F3(C6) lift"""
    lift = build_lift(f3c6)
    spectrum = full_spectrum(f3c6).spectrum

    assert trace_identity(lift, spectrum).passed
    assert frobenius_identity(lift, spectrum).passed
    assert sum(v * v for v in spectrum).real == pytest.approx(72)
    assert not trace_identity(lift, spectrum[1:]).passed


def test_automorphisms_on_builtins_and_random_bases(f3c6, j42):
    """Test translation automorphisms and the homomorphism property"""
    rng = np.random.default_rng(3)
    bases = [f3c6, j42] + [random_base_graph(rng, 12, 5) for _ in range(20)]
    for base in bases:
        for mode in AdjacencyMode:
            assert automorphism_check(build_lift(base, mode)).passed


@pytest.mark.parametrize("name", ["f3c6", "j42"])
def test_verification_suite_passes(name, f3c6, j42):
    """Test the full suite on the builtins"""
    base = {"f3c6": f3c6, "j42": j42}[name]
    report = VerificationSuite().run(base, AdjacencyMode.MULTIPLICITY, label=name)

    assert report.passed, report.to_json_document()
    assert [c.name for c in report.checks] == [
        "oracle-match", "completeness", "residuals", "automorphisms", "trace", "frobenius",
    ]


def test_verification_suite_flags_simple_mode(coarse_pair):
    """Test that simple mode fails where intersections exceed one"""
    report = VerificationSuite().run(coarse_pair, AdjacencyMode.SIMPLE)
    failed = {c.name for c in report.checks if not c.passed}

    assert "oracle-match" in failed
    assert "residuals" in failed


def test_random_base_graph_respects_bounds():
    """Test the random generator ranges and restrictions"""
    rng = np.random.default_rng(11)
    for _ in range(50):
        base = random_base_graph(rng, 8, 4)
        assert 2 <= base.m <= 8
        assert 1 <= base.n <= 4
        assert all(base.m % d == 0 for d in base.indices)
    for _ in range(20):
        base = random_base_graph(rng, 8, 4, "trivial")
        assert set(base.indices) == {base.m}
    for _ in range(20):
        base = random_base_graph(rng, 12, 4, "full-lcm")
        for arc in base.arcs:
            assert math.lcm(base.indices[arc.tail], base.indices[arc.head]) == base.m
    with pytest.raises(ValueError):
        random_base_graph(rng, 8, 4, "bogus")


def test_sweep_multiplicity_mode_always_passes(tmp_path):
    """Test 200 random bases: complete and oracle-equal in multiplicity mode"""
    report = random_sweep(seed=1, trials=200, max_m=12, max_n=5, corpus_dir=str(tmp_path))

    assert report.multiplicity_passes == 200
    assert all(t.multiplicity.complete for t in report.results)
    assert [t.trial_id for t in report.results] == list(range(200))
    for trial in report.results:
        if trial.simple.verdict == Verdict.FAIL:
            assert Path(trial.simple.archived).exists()
            assert not trial.modes_agree
    archived = sorted(tmp_path.glob("*.cvg"))
    assert all(path.name.endswith("-simple.cvg") for path in archived)
    for path in archived[:5]:
        assert load_base_graph(path).m >= 2


def test_sweep_trivial_restriction(tmp_path):
    """Test that trivial subgroups pass in both modes"""
    report = random_sweep(seed=1, trials=40, restriction="trivial", corpus_dir=str(tmp_path))

    assert report.multiplicity_passes == 40
    assert report.simple_passes == 40
    assert report.mode_agreements == 40
    assert list(tmp_path.iterdir()) == []


def test_sweep_full_lcm_restriction(tmp_path):
    """Test that lcm = m on every arc makes the modes coincide"""
    report = random_sweep(seed=1, trials=40, restriction="full-lcm", corpus_dir=str(tmp_path))

    assert report.mode_agreements == 40
    assert report.multiplicity_passes == 40
    assert report.simple_passes == 40


def test_sweep_is_order_independent(tmp_path):
    """Test that a trial does not depend on the trials before it"""
    full = random_sweep(seed=5, trials=6, max_m=8, max_n=3, corpus_dir=str(tmp_path))
    short = random_sweep(seed=5, trials=3, max_m=8, max_n=3, corpus_dir=str(tmp_path))

    assert full.results[:3] == short.results
    assert full.to_json_document()["seed"] == 5


def test_sweep_rejects_zero_trials(tmp_path):
    """Test the trial count precondition"""
    with pytest.raises(ValueError):
        random_sweep(seed=1, trials=0, corpus_dir=str(tmp_path))
