"""One check per acceptance criterion; each records a PASS/FAIL line.

The lines are printed in the terminal summary.  Criteria marked with an "s"
suffix are the stretch ranges; they are fast enough to run by default.
"""

import time

import pytest
from conftest import ACCEPTANCE

from freecurve.families import gen_prop4i, gen_prop4ii
from freecurve.verify import FAMILY_SUITES, Verifier, cross_oracle_check

BUDGET = {"thm2ii": 5, "prop2i": 30, "stfam": 10, "prop3": 60, "prop4i": 60, "prop4ii": 300,
          "arrangements": 10, "valles": 60}


@pytest.fixture(scope="module")
def verifier():
    return Verifier()


def record(key: str, title: str, ok: bool, detail: str):
    ACCEPTANCE[key] = f"criterion {key:>3}: {'PASS' if ok else 'FAIL'}  {title}  ({detail})"
    assert ok, detail


def _suite(verifier, key, name, title):
    t0 = time.perf_counter()
    claims = verifier.run([name])
    dt = time.perf_counter() - t0
    failed = [f"{c.id}: {c.claim} expected {c.expected} computed {c.computed}" for c in claims if not c.passed]
    ok = not failed and dt < BUDGET[name]
    detail = f"{len(claims) - len(failed)}/{len(claims)} claims, {dt:.1f}s of {BUDGET[name]}s"
    record(key, title, ok, detail + ("; " + "; ".join(failed[:3]) if failed else ""))


def test_criterion_01_theorem_series(verifier):
    _suite(verifier, "1", "thm2ii", "k = 2..5 free, tau = 3k^2, d1 = d2 = k, mu consistent, r1/r2 verified")


def test_criterion_02_two_cusp_recursion(verifier):
    _suite(verifier, "2", "prop2i", "reference C_4..C_10 reproduced; d = 5..10 free with tau = d^2-4d+7, "
           "(A_d, B_d, C_d) verified")


def test_criterion_02s_two_cusp_to_fifteen():
    t0 = time.perf_counter()
    v = Verifier(stretch=True)
    claims = [c for c in v.suite_prop2i() if c.id in {f"prop2i:d={d}" for d in range(11, 16)}]
    bad = [c.id for c in claims if not c.passed]
    record("2s", "d = 11..15 free, tau = d^2-4d+7, relation verified", not bad and len(claims) == 10,
           f"{len(claims) - len(bad)}/{len(claims)} claims, {time.perf_counter() - t0:.1f}s")


def test_criterion_03_one_cusp_family(verifier):
    _suite(verifier, "3", "stfam", "d = 5..9 free, tau = d^2-4d+7, exponents (2, d-3)")


def test_criterion_04_tricuspidal(verifier):
    _suite(verifier, "4", "prop3", "every (a, b) with 5 <= a+b+2 <= 10 divides exactly, free, d1 = 2")


def test_criterion_05_unicuspidal_series(verifier):
    _suite(verifier, "5", "prop4i", "k = 3..6 free with d1 = 2, the quartic k = 2 not free")


def test_criterion_05s_unicuspidal_to_ten():
    t0 = time.perf_counter()
    v = Verifier(stretch=True)
    claims = []
    for k in range(7, 11):
        d = 2 * k
        claims += v._free_claims(gen_prop4i(k), "free, d1 = 2", d * d - 4 * d + 7, 2, d - 3)
    bad = [c.id for c in claims if not c.passed]
    record("5s", "k = 7..10 free with d1 = 2, tau = d^2-4d+7", not bad,
           f"{len(claims) - len(bad)}/{len(claims)} claims, {time.perf_counter() - t0:.1f}s")


def test_criterion_06_fibonacci(verifier):
    _suite(verifier, "6", "prop4ii", "(d, tau, d1) = (5,12,2), (13,108,6), (34,823,14)")


def test_criterion_06s_fibonacci_degree_89():
    t0 = time.perf_counter()
    v = Verifier(stretch=True)
    claims = v._free_claims(gen_prop4ii(3), "free", 5889, 35, 53)
    a = v.analysis(gen_prop4ii(3))
    dt = time.perf_counter() - t0
    ok = claims[0].passed and a.profile.d == 89 and dt < 3600
    record("6s", "k = 3: (d, tau, d1) = (89, 5889, 35)", ok,
           f"d={a.profile.d}, tau={a.report.tau}, d1={a.report.d1}, {dt:.1f}s of 3600s")


def test_criterion_07_line_arrangements(verifier):
    _suite(verifier, "7", "arrangements", "tau = 27, 37, 49 with exponents (3,3), (3,4), (3,5)")


def test_criterion_08_valles_curve(verifier):
    _suite(verifier, "8", "valles", "free; tau = 156 and exponents (4, 10) pinned from the first verified run")


def test_criterion_09_identities(verifier):
    t0 = time.perf_counter()
    claims = [c for c in verifier.suite_identities() if not c.id.startswith("probe:")]
    bad = [f"{c.id}: {c.computed}" for c in claims if not c.passed]
    record("9", "identity suite on the corpus and 20 random singular quintics/sextics", not bad,
           f"{len(claims)} checks, {len(bad)} violations, {time.perf_counter() - t0:.1f}s"
           + ("; " + "; ".join(bad[:3]) if bad else ""))


def test_criterion_10_conjecture_probes(verifier):
    probes = [c for c in verifier.suite_identities() if c.id.startswith("probe:")]
    parts = [f"{c.id} checked {c.computed['checked']}, counterexamples {c.computed['counterexamples']}"
             for c in probes]
    record("10", "ct + st = T iff free; conjectured families free from degree 5",
           len(probes) == 2 and all(c.passed for c in probes), "; ".join(parts))


def test_criterion_11_cross_oracle(verifier):
    t0 = time.perf_counter()
    verifier.run(list(FAMILY_SUITES))
    specs = sorted((s for s, _ in verifier.cache.values()), key=lambda s: (s.d, s.id))
    total, bad = 0, []
    for spec in specs:
        for name, exact, modular in cross_oracle_check(spec):
            total += 1
            if exact != modular:
                bad.append(f"{name}: {exact} vs {modular}")
    record("11", "Bareiss rank equals multi-modular rank on every matrix with <= 200 columns",
           not bad and total > 0, f"{total} matrices from {len(specs)} curves, {len(bad)} mismatches, "
           f"{time.perf_counter() - t0:.1f}s")
