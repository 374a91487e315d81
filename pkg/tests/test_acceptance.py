"""Acceptance criteria, one test per criterion.

Arithmetic is exact throughout, so every tolerance is equality; runtime
budgets are asserted with the stated limits.  Each test prints a PASS line
(visible under pytest -s).
"""

import json
import time

import pytest

from qlike import catalog
from qlike.bundles import (QuotientBundle, SplittingType, annihilator,
                           h0_dimension_by_solve, is_split_extension,
                           saturate, splitting_type,
                           verify_canonical_sequences)
from qlike.cli import main as cli_main
from qlike.orbit import dimension_report, normal_bundle
from qlike.sampling import random_quadruples, random_structures
from qlike.structures import (analyze, dualize, heaven_data, minus_data,
                              minus_family, validate, verify_factorization)
from qlike.bundles import family_span_equal


RANDOM_STRUCTURE_SEED = 20250808
RANDOM_QUADRUPLE_SEED = 4242


@pytest.fixture(scope="module")
def structure_suite():
    """The three fixtures plus 50 seeded random valid structures, analyzed
    once; criterion 6 asserts the runtime budget over this computation."""
    t0 = time.time()
    structures = [
        ("quaternionic-h1", catalog.build_quaternionic(1)),
        ("conic-r3", catalog.build_conic_r3()),
        ("twisted-plane-c4", catalog.build_twisted_plane_c4()),
    ]
    structures += [("random-%02d" % i, s) for i, s in
                   enumerate(random_structures(RANDOM_STRUCTURE_SEED, 50))]
    analyses = []
    for name, s in structures:
        report = analyze(s)
        analyses.append((name, s, report))
    elapsed = time.time() - t0
    return {"analyses": analyses, "elapsed": elapsed}


def test_criterion_1_veronese_formula():
    t0 = time.time()
    for k in (2, 3, 4, 5):
        expected = SplittingType.of([k + 2] * (k - 1))
        report = normal_bundle(catalog.build_veronese(k), expected=expected,
                               expected_source="closed-form")
        assert report.normal == expected, (k, report.normal)
        assert report.match
        assert report.dim_z == k
    elapsed = time.time() - t0
    assert elapsed < 60.0, "veronese suite took %.1fs" % elapsed
    print("\nACCEPTANCE 1 PASS: veronese normal bundles k=2..5 equal "
          "(k-1) copies of O(k+2) (%.1fs)" % elapsed)


def test_criterion_2_symplectic_formula():
    t0 = time.time()
    r4 = normal_bundle(catalog.build_sp(4),
                       expected=SplittingType.of([2, 2]))
    assert r4.normal == SplittingType.of([2, 2]) and r4.match
    r6 = normal_bundle(catalog.build_sp(6),
                       expected=SplittingType.of([2, 2, 1, 1, 1, 1]))
    assert r6.normal == SplittingType.of([2, 2, 1, 1, 1, 1]) and r6.match
    elapsed = time.time() - t0
    assert elapsed < 120.0
    print("\nACCEPTANCE 2 PASS: sp(4) -> {2,2}, sp(6) -> {2,2,1,1,1,1} "
          "(%.1fs)" % elapsed)


def test_criterion_3_adjoint_formula():
    t0 = time.time()
    cases = [("sl(2)", "principal", 0), ("sl(3)", "principal", 4),
             ("sl(3)", "minimal", 2), ("sl(4)", "principal", 10)]
    for algebra, nilp, count in cases:
        q = catalog.build_adjoint(algebra, nilp)
        expected = catalog.adjoint_expected(q)       # recomputed live
        assert expected == SplittingType.of([1] * count)
        report = normal_bundle(q, expected=expected)
        assert report.normal == expected
        dims = dimension_report(q, report)
        assert dims["orbit_consistency"]
    elapsed = time.time() - t0
    assert elapsed < 120.0
    print("\nACCEPTANCE 3 PASS: adjoint normal bundles equal "
          "(-2 + sum j a_j) copies of O(1) with live multiplicities, "
          "orbit dimensions consistent (%.1fs)" % elapsed)


def test_criterion_4_so5_sp4_cross_consistency():
    r_so = normal_bundle(catalog.build_so(5))
    r_sp = normal_bundle(catalog.build_sp(4))
    assert r_so.normal == r_sp.normal == SplittingType.of([2, 2])
    print("\nACCEPTANCE 4 PASS: so(5) and sp(4) give identical normal "
          "splittings {2, 2}")


def test_criterion_5_nonnegativity():
    for entry in catalog.catalog_entries():
        if entry.kind != "quadruple":
            continue
        report = normal_bundle(entry.build())
        assert report.nonnegative, entry.name
        assert report.normal.is_nonnegative(), entry.name
    quadruples = random_quadruples(RANDOM_QUADRUPLE_SEED, 25,
                                   pool=("sl(3)", "sl(4)", "so(5)"))
    for q in quadruples:
        report = normal_bundle(q)
        assert report.normal.is_nonnegative(), q.name
    print("\nACCEPTANCE 5 PASS: all catalog and 25 seeded random "
          "quadruples have nonnegative normal splittings")


def test_criterion_6_factorization_suite(structure_suite):
    assert len(structure_suite["analyses"]) == 53
    for name, s, report in structure_suite["analyses"]:
        fact = report.factorization
        assert fact.solvable, name
        assert all(fact.facts.values()), (name, fact.facts)
    elapsed = structure_suite["elapsed"]
    assert elapsed < 300.0, "factorization suite took %.1fs" % elapsed
    print("\nACCEPTANCE 6 PASS: factorization identity solvable and facts "
          "(b)-(e) exact on 3 fixtures + 50 random structures (%.1fs)"
          % elapsed)


def test_criterion_7_canonical_sequences(structure_suite):
    for name, s, report in structure_suite["analyses"]:
        seqs = report.canonical_sequences
        assert seqs.get("ok"), (name, seqs)
        assert report.serre_identity, name
    print("\nACCEPTANCE 7 PASS: canonical-sequence checks and the "
          "Serre-duality dimension identity hold on every suite structure")


def test_criterion_8_oracle_equivalence(structure_suite):
    checked = 0
    for name, s, report in structure_suite["analyses"][:20]:
        fam = minus_family(s)
        # free-basis-degree route
        st = SplittingType.of([-e for e in fam.degrees])
        # independent route: second differences of directly solved h^0
        lo, hi = min(fam.degrees), max(fam.degrees)
        h = {m: h0_dimension_by_solve(fam, m)
             for m in range(lo - 2, hi + 2)}
        for m in range(lo, hi + 1):
            mult = sum(1 for a in st.summands if a == -m)
            second = (h[m] - h[m - 1]) - (h[m - 1] - h[m - 2])
            assert mult == second, (name, m)
        assert not is_split_extension(fam), name
        checked += 1
    # constant-complement fixture splits
    from qlike.polymatrix import PolyMatrix
    from qlike.forms import parse_form
    const = saturate(PolyMatrix.from_columns(
        2, [[parse_form("1"), parse_form("0")]]))
    assert is_split_extension(const)
    print("\nACCEPTANCE 8 PASS: splitting types match h^0 second "
          "differences on %d suite bundles; nonsplitting holds on all "
          "valid structures and fails on the constant-complement fixture"
          % checked)


def test_criterion_9_classification_fixtures():
    a_quat = analyze(catalog.build_quaternionic(1))
    assert a_quat.label == "quaternionic"
    conic = catalog.build_conic_r3()
    a_conic = analyze(conic)
    assert a_conic.label == "rho-star-quaternionic" and a_conic.flags["cr"]
    dual = dualize(conic)
    a_dual = analyze(dual)
    assert a_dual.label == "rho-quaternionic" and a_dual.flags["co_cr"]
    for s in (conic, catalog.build_quaternionic(1),
              catalog.build_twisted_plane_c4()):
        assert family_span_equal(minus_family(dualize(dualize(s))),
                                 minus_family(s))
    print("\nACCEPTANCE 9 PASS: classification labels, flags, and the "
          "double-dual family identity hold on the fixtures")


def test_criterion_10_determinism(capsys):
    code1 = cli_main(["verify", "--suite", "random", "--seed", "11",
                      "--count", "4"])
    out1 = capsys.readouterr().out
    code2 = cli_main(["verify", "--suite", "random", "--seed", "11",
                      "--count", "4"])
    out2 = capsys.readouterr().out
    assert code1 == code2 == 0
    assert out1 == out2
    assert json.loads(out1)["pass"] is True
    print("\nACCEPTANCE 10 PASS: cmd_verify random suite is byte-identical "
          "across runs for a fixed seed")
