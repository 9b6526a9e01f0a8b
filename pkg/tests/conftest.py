import time

import pytest

from innerlie import catalog as _catalog_mod  # noqa: F401  (import keeps caches shared)


def pytest_addoption(parser):
    parser.addoption("--slow", action="store_true", default=False,
                     help="also run the full-scale (n=5) density checks")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full-scale checks enabled with --slow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--slow"):
        return
    skip = pytest.mark.skip(reason="enable with --slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session")
def table_report():
    """Module dimension ledger at n=5, timed from cold caches."""
    from innerlie.catalog import ambient, catalog, g_algebra
    from innerlie.verify import run_table
    catalog.cache_clear()
    g_algebra.cache_clear()
    t0 = time.time()
    rep = run_table(5)
    rep["total_elapsed"] = time.time() - t0
    return rep


@pytest.fixture(scope="session")
def facts_report(table_report):
    from innerlie.verify import run_facts
    t0 = time.time()
    rep = run_facts(5)
    rep["total_elapsed"] = time.time() - t0
    return rep


@pytest.fixture(scope="session")
def corollaries_report(table_report):
    from innerlie.verify import run_corollaries
    t0 = time.time()
    rep = run_corollaries(5, seed=0)
    rep["total_elapsed"] = time.time() - t0
    return rep


@pytest.fixture(scope="session")
def density_report():
    from innerlie.verify import run_density
    t0 = time.time()
    rep = run_density(5, slow=False, seed=7)
    rep["total_elapsed"] = time.time() - t0
    return rep


def checks_by_name(report):
    return {c["name"]: c for c in report["checks"]}


@pytest.fixture(scope="session")
def classifier_sweep():
    """All classifier round trips; shared by the acceptance criterion."""
    from innerlie.classify import ClassLabel, LIST_KINDS, canonical_label, classify, construct
    from innerlie.scalars import GaussRational as G

    n = 5
    cases = []
    ft_values = [None, (G(1), G(0)), (G(0), G(1)), (G(1), G(1)), (G(2), G(3))]
    for kind in ("SL_N2",) + LIST_KINDS:
        for ft in (ft_values if kind != "SL_N2" else [None]):
            cases.append(ClassLabel(kind, ft=ft))
    for r in (G(1), G(2), G(-3), G(0, 1)):
        for ft in (None, (G(1), G(1))):
            cases.append(ClassLabel("SO_CONJ", t_ratio=r, ft=ft))
    for lam in (G(0), G(1), G(-1), G(3)):
        for ft in (None, (G(1), G(1))):
            cases.append(ClassLabel("G_PLUS_W", lam=lam, ft=ft))

    t0 = time.time()
    results = []
    for label in cases:
        space = construct(label, n)
        got = classify(space, n)
        expected = canonical_label(label, n)
        recon = construct(got, n)
        results.append({
            "label": label, "expected": expected, "got": got,
            "dim": space.dim,
            "round_trip_ok": got == expected,
            "self_certified": recon == space,
        })
    elapsed = time.time() - t0
    return {"results": results, "elapsed": elapsed, "cases": len(cases)}
