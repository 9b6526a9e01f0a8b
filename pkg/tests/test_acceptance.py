"""Acceptance gate: every published claim of the build at its exact tolerance.

One test per criterion; each prints a single pass/fail line.  All
comparisons are exact (subspace equality is canonical-basis identity);
"tolerance" therefore means equality, with runtime targets asserted where
stated.  The full-scale density check (n = 5) runs with --slow.
"""

import random
import time

import pytest

from conftest import checks_by_name


def _report(num, desc, ok):
    print(f"[acceptance] criterion {num:>2} ({desc}): {'PASS' if ok else 'FAIL'}")
    assert ok, f"criterion {num}: {desc}"


EXPECTED_DIMS = {"g": 24, "V1": 126, "V2": 126, "V3": 24, "V4": 24, "V5": 200,
                 "V6": 75, "V7": 24, "V8": 1, "p": 24, "q": 24, "V4p": 24}


def test_criterion_01_dimension_ledger(table_report):
    checks = checks_by_name(table_report)
    ok = True
    for name, want in EXPECTED_DIMS.items():
        c = checks[f"dim_{name}"]
        ok = ok and c["status"] == "pass" and c["details"]["dim"] == want
    elapsed = table_report["elapsed_seconds"]
    ok = ok and elapsed < 300
    _report(1, f"dimension ledger n=5, {elapsed:.1f}s < 300s", ok)


def test_criterion_02_decomposition_identities(facts_report):
    checks = checks_by_name(facts_report)
    names = ["sl_direct_sum", "so_m1_chain", "so_chain", "sl_m1_chain",
             "sl_chain", "v4_v4p"]
    ok = all(checks[n]["status"] == "pass" for n in names)
    ok = ok and checks["sl_direct_sum"]["details"]["dim"] == 624
    _report(2, "decomposition identities n=5 (624/276/300/575 chains)", ok)


def test_criterion_03_highest_weight_certification(table_report):
    checks = checks_by_name(table_report)
    ok = all(checks[f"hwv_{name}"]["status"] == "pass" for name in EXPECTED_DIMS)
    ok = ok and all(checks[f"weight_{name}"]["status"] == "pass"
                    for name in ("V1", "V2", "V5", "V6"))
    _report(3, "highest-weight certification, 12 vectors + eigen spot checks", ok)


def test_criterion_04_closure_facts(facts_report):
    checks = checks_by_name(facts_report)
    ok = all(checks[n]["status"] == "pass" for n in
             ("closure_g_V5", "closure_g_V6", "closure_g_p_q", "closure_g_V1",
              "closure_g_V2", "g_V3_not_closed", "so_m1_V3_closed"))
    ok = ok and checks["closure_g_p_q"]["details"]["dim"] == 624
    _report(4, "closure facts n=5 (V5/V6 reach sl(24), g+p+q = sl(25), V1/V2 "
               "reach so(24), g+V3 open)", ok)


def test_criterion_05_w_lambda_family(facts_report):
    checks = checks_by_name(facts_report)
    ok = all(checks[f"w_family_{lam}"]["status"] == "pass"
             for lam in ("0", "1", "-1", "3"))
    ok = ok and all(checks[f"w_family_{lam}"]["details"]["dim"] == 48
                    for lam in ("0", "1", "-1", "3"))
    ok = ok and checks["w_singular"]["status"] == "pass"
    _report(5, "W(lambda) family: closed, dim 48, coefficient identity, "
               "singular lambda rejected", ok)


def test_criterion_06_classifier_round_trip(classifier_sweep):
    results = classifier_sweep["results"]
    ok = all(r["round_trip_ok"] and r["self_certified"] for r in results)
    elapsed = classifier_sweep["elapsed"]
    ok = ok and elapsed < 1800
    bad = [str(r["label"]) for r in results if not (r["round_trip_ok"] and r["self_certified"])]
    _report(6, f"classifier round trip, {classifier_sweep['cases']} cases, "
               f"{elapsed:.0f}s < 1800s" + (f", failures: {bad}" if bad else ""), ok)


def test_criterion_07_corollary_suite(corollaries_report):
    checks = checks_by_name(corollaries_report)
    ok = checks["trace_condition"]["status"] == "pass"
    ok = ok and checks["trace_condition"]["details"]["dim"] == 24
    for w in ("kernel_witness_skew", "kernel_witness_p", "kernel_witness_q",
              "kernel_witness_w_lambda", "kernel_witness_g_plus_t"):
        ok = ok and checks[w]["status"] == "pass"
    ok = ok and checks["f_xy"]["status"] == "pass" and checks["f_xy"]["details"]["dim"] == 24
    ok = ok and checks["f_xyz"]["status"] == "pass" and checks["f_xyz"]["details"]["dim"] == 24
    _report(7, "corollary suite n=5: trace condition = g, five kernel "
               "witnesses (incl. the Q(i) one), f-derivations = g", ok)


def test_criterion_08_density_suite(density_report):
    checks = checks_by_name(density_report)
    ok = checks["css_equivalence_n2"]["status"] == "pass"
    ok = ok and checks["css_equivalence_n2"]["details"]["css_dim"] == 9
    ok = ok and checks["css_equivalence_n3"]["status"] == "pass"
    ok = ok and checks["css_equivalence_n3"]["details"]["css_dim"] == 64
    ok = ok and checks["multiplication_algebra_n3"]["status"] == "pass"
    ok = ok and checks["multiplication_algebra_n3"]["details"]["dim"] == 81
    ok = ok and checks["density_interpolation_n3"]["status"] == "pass"
    ok = ok and checks["density_interpolation_n3"]["details"]["solved"] == 50
    _report(8, "density suite: algebra generated by derivations (9, 64), "
               "multiplication algebra 81, 50/50 interpolations", ok)


@pytest.mark.slow
def test_criterion_08_density_full_scale():
    from innerlie.corollaries import derivation_algebra_dim_check
    css_dim, clo_dim, equal = derivation_algebra_dim_check(5)
    ok = equal and css_dim == clo_dim == 576
    _report(8, "density suite full scale (--slow): n=5 equality at dim 576", ok)


def test_criterion_09_rank_properties(corollaries_report):
    checks = checks_by_name(corollaries_report)
    ok = True
    for lam in ("0", "1", "3"):
        c = checks[f"rank_floor_{lam}"]
        ok = (ok and c["status"] == "pass" and c["details"]["samples"] == 200
              and c["details"]["min_rank_seen"] >= 3
              and c["details"]["two_term_max"] <= 2)
    _report(9, "rank floors: 200 seeded samples per lambda all >= 3, "
               "two-term maps <= 2", ok)


def test_criterion_10_kernel_level_properties():
    import numpy as np
    from innerlie import gint
    from innerlie.closure import lie_closure
    from innerlie.operators import tensor, vec_row_to_op
    from innerlie import matrices as M
    from innerlie.subspaces import Subspace

    rng = np.random.default_rng(625)
    ambient = 625
    ok = True
    t0 = time.time()
    for _ in range(1000):
        da, db = int(rng.integers(0, 51)), int(rng.integers(0, 51))
        a = Subspace.from_rows(
            [gint.GArr(rng.integers(-3, 4, ambient).astype(np.int64)) for _ in range(da)],
            ambient)
        b = Subspace.from_rows(
            [gint.GArr(rng.integers(-3, 4, ambient).astype(np.int64)) for _ in range(db)],
            ambient)
        if a.dim + b.dim != a.sum(b).dim + a.intersect(b).dim:
            ok = False
            break
    grassmann_elapsed = time.time() - t0

    rnd = random.Random(99)
    for _ in range(20):
        n = 3
        gens = [tensor(M.random_matrix(n, rnd, -1, 1), M.random_matrix(n, rnd, -1, 1))
                for _ in range(rnd.randint(1, 3))]
        rep = lie_closure(gens, n)
        again = lie_closure([vec_row_to_op(r, n) for r in rep.closure.basis_rows()], n)
        if again.closure != rep.closure:
            ok = False
            break
    _report(10, f"kernel-level properties: 1000 Grassmann pairs in ambient 625 "
                f"({grassmann_elapsed:.0f}s), closure idempotence on 20 generator sets", ok)
