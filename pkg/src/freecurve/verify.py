"""The catalogue of claims checked by ``freecurve verify-paper``.

Each suite returns :class:`Claim` records.  Analyses are cached per curve id,
so the identity suite and the cross-oracle check reuse the work of the family
suites instead of recomputing profiles.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from importlib import resources

from .analysis import Analysis, ProbeSummary, analyze, ct_st_probe, family_freeness_probe, identity_violations
from .arith import DEFAULT_SEED, PrimeSource
from .families import (FIB_EXPECTED, CurveSpec, gen_line_arrangement, gen_prop2i, gen_prop3, gen_prop4i,
                       gen_prop4ii, gen_stfam, gen_thm2ii, gen_valles_pencil, prop2i_chain, smooth_fermat,
                       syzygy_template_rkeq2i, syzygy_templates_thm2ii)
from .linalg.exact import rank_exact
from .linalg.modular import multi_modular_rank
from .milnor import CurveInput, annihilates, jacobian_matrix_in_degree, koszul_matrix, syzygy_basis_in_degree
from .parser import parse_expression
from .poly import TriPoly, X, Y, Z, dim_s

SUITES = ("stfam", "prop2i", "prop3", "prop4i", "prop4ii", "thm2ii", "arrangements", "valles", "syzygies",
          "identities")
FAMILY_SUITES = SUITES[:8]
CROSS_ORACLE_COLS = 200
# the direct saturation oracle is run next to the formula up to this degree
DIRECT_DEFECT_MAX_DEGREE = 15


def load_golden() -> dict:
    return json.loads(resources.files("freecurve").joinpath("data/golden.json").read_text())


@dataclass
class Claim:
    id: str
    claim: str
    expected: object
    computed: object
    passed: bool
    runtime: float = 0.0

    def to_json(self) -> dict:
        return {"id": self.id, "claim": self.claim, "expected": self.expected, "computed": self.computed,
                "pass": self.passed, "runtime_s": round(self.runtime, 3)}


@dataclass
class Verifier:
    stretch: bool = False
    seed: int = DEFAULT_SEED
    cache: dict = field(default_factory=dict)

    def analysis(self, spec: CurveSpec) -> Analysis:
        if spec.id not in self.cache:
            mode = "both" if spec.d <= DIRECT_DEFECT_MAX_DEGREE else "formula"
            self.cache[spec.id] = (spec, analyze(spec, saturation=mode, seed=self.seed))
        return self.cache[spec.id][1]

    def run(self, suites=SUITES) -> list:
        unknown = set(suites) - set(SUITES)
        if unknown:
            raise ValueError(f"unknown suites {sorted(unknown)}; choose from {', '.join(SUITES)}")
        out = []
        for name in SUITES:  # fixed order, whatever order was asked for
            if name in suites:
                out.extend(getattr(self, "suite_" + name)())
        return out

    # -- helpers ----------------------------------------------------------

    def _free_claims(self, spec: CurveSpec, what: str, tau=None, d1=None, d2=None, free=True) -> list:
        t0 = time.perf_counter()
        a = self.analysis(spec)
        rt = time.perf_counter() - t0
        rep = a.report
        exp = {"free": free}
        got = {"free": rep.free and rep.criterion_ii}
        if not free:
            got = {"free": rep.criterion_ii or rep.criterion_iii}
        if tau is not None:
            exp["tau"], got["tau"] = tau, rep.tau
        if d1 is not None:
            exp["d1"], got["d1"] = d1, rep.d1
        if d2 is not None:
            exp["d2"], got["d2"] = d2, rep.d2
        ok = exp == got and not rep.inconsistencies
        return [Claim(spec.id, what, exp, got, ok, rt)]

    # -- family suites ----------------------------------------------------

    def suite_thm2ii(self) -> list:
        out = []
        for k in range(2, 6):
            spec = gen_thm2ii(k)
            out += self._free_claims(spec, "(y^(k-1)z+x^k)^2y - x^(2k+1) is free with tau = 3k^2, exponents (k, k)",
                                     3 * k * k, k, k)
            eu = self.analysis(spec).report.euler
            mu = 2 * k * (2 * k - 1)
            out.append(Claim(spec.id, "mu = 2k(2k-1) and (d1-1)(d2-1) = mu - tau + 1",
                             {"mu": mu, "cuspidal_consistent": True},
                             {"mu": eu.mu if eu else None, "cuspidal_consistent": eu.cuspidal_consistent if eu else None},
                             eu is not None and eu.mu == mu and eu.cuspidal_consistent is True))
            c = CurveInput(spec.f)
            r1, r2 = syzygy_templates_thm2ii(k)
            out.append(Claim(spec.id, "explicit relations r1, r2 annihilate the gradient", True,
                             annihilates(c, r1) and annihilates(c, r2),
                             annihilates(c, r1) and annihilates(c, r2)))
        return out

    def suite_prop2i(self) -> list:
        out = []
        reference = load_golden()["two_cusp_reference"]
        chain = prop2i_chain(10)
        for d in range(4, 11):
            t0 = time.perf_counter()
            same = chain[d - 3][0] == parse_expression(reference[str(d)])
            out.append(Claim(f"prop2i:d={d}", "substitution recursion reproduces the reference C_d", True, same, same,
                             time.perf_counter() - t0))
        top = 15 if self.stretch else 10
        for d in range(5, top + 1):
            spec = gen_prop2i(d)
            out += self._free_claims(spec, "two-cusp curve is free, tau = d^2-4d+7, d1 = 2",
                                     d * d - 4 * d + 7, 2, d - 3)
            ok = annihilates(CurveInput(spec.f), syzygy_template_rkeq2i(d))
            out.append(Claim(spec.id, "(A_d, B_d, C_d) annihilates the gradient", True, ok, ok))
        return out

    def suite_stfam(self) -> list:
        out = []
        for d in range(5, 10):
            out += self._free_claims(gen_stfam(d), "one-cusp family is free, tau = d^2-4d+7, exponents (2, d-3)",
                                     d * d - 4 * d + 7, 2, d - 3)
        out += self._free_claims(gen_stfam(8, 1, 1, 1), "degree 8 member with a = b = c = 1 has tau = 39", 39, 2, 5)
        return out

    def suite_prop3(self) -> list:
        out = []
        for d in range(5, 11):
            for b in range(1, d - 1):
                a = d - 2 - b
                if a < b:
                    break
                out += self._free_claims(gen_prop3(a, b), "tricuspidal curve divides exactly, is free, d1 = 2, "
                                         "tau = d^2-4d+7", d * d - 4 * d + 7, 2, d - 3)
        return out

    def suite_prop4i(self) -> list:
        out = self._free_claims(gen_prop4i(2), "the rational quartic (zy-x^2)^2 - xy^3 is not free", free=False)
        top = 10 if self.stretch else 6
        for k in range(3, top + 1):
            d = 2 * k
            out += self._free_claims(gen_prop4i(k), "(zy-x^2)^k - xy^(2k-1) is free, d1 = 2, tau = d^2-4d+7",
                                     d * d - 4 * d + 7, 2, d - 3)
        return out

    def suite_prop4ii(self) -> list:
        out = []
        top = 3 if self.stretch else 2
        for k in range(0, top + 1):
            d, tau, _, d1 = FIB_EXPECTED[k]
            spec = gen_prop4ii(k)
            deg_ok = spec.d == d
            out.append(Claim(spec.id, "degree is the Fibonacci number F(2k+5)", d, spec.d, deg_ok))
            out += self._free_claims(spec, "Fibonacci unicuspidal curve is free with the listed tau and d1",
                                     tau, d1, d - 1 - d1)
        return out

    def suite_arrangements(self) -> list:
        out = []
        for which, tau, (d1, d2) in (("d7", 27, (3, 3)), ("d8", 37, (3, 4)), ("d9", 49, (3, 5))):
            out += self._free_claims(gen_line_arrangement(which), "free line arrangement with the listed tau",
                                     tau, d1, d2)
        return out

    def suite_valles(self) -> list:
        g = load_golden()["valles"]
        spec = gen_valles_pencil()
        out = self._free_claims(spec, "Hesse pencil curve of degree 15 is free; tau and exponents pinned",
                                g["tau"], g["d1"], g["d2"])
        return out

    # -- syzygies ------------------------------------------------------------

    def suite_syzygies(self) -> list:
        out = []
        for k in range(2, 7):
            c = CurveInput(gen_thm2ii(k).f)
            r1, r2 = syzygy_templates_thm2ii(k)
            ok = annihilates(c, r1) and annihilates(c, r2)
            out.append(Claim(f"thm2ii:k={k}", "relations r1, r2 annihilate the gradient", True, ok, ok))
        for d in range(5, 16):
            c = CurveInput(gen_prop2i(d).f)
            ok = annihilates(c, syzygy_template_rkeq2i(d))
            out.append(Claim(f"prop2i:d={d}", "(A_d, B_d, C_d) with A_d = (d-2)x^2 - 4(d-3)xy annihilates "
                             "the gradient", True, ok, ok))
        c = CurveInput(gen_prop2i(7).f)
        bad = annihilates(c, syzygy_template_rkeq2i(7, plus_sign=True))
        out.append(Claim("prop2i:d=7", "the +4(d-3)xy sign variant of A_d is not a relation", False, bad, not bad))

        t0 = time.perf_counter()
        c = CurveInput(gen_thm2ii(3).f)
        basis = syzygy_basis_in_degree(c, 3)
        r1, r2 = syzygy_templates_thm2ii(3)
        span_ok = len(basis) == 2 and _in_span(basis, r1) and _in_span(basis, r2)
        out.append(Claim("thm2ii:k=3", "degree-3 relations form a 2-dimensional space containing r1, r2",
                         2, len(basis), span_ok, time.perf_counter() - t0))
        n = len(syzygy_basis_in_degree(CurveInput(gen_stfam(7).f), 2))
        out.append(Claim("stfam:d=7", "degree-2 relations of the d = 7 member: one generator", 1, n, n == 1))
        n = len(syzygy_basis_in_degree(CurveInput(smooth_fermat(5)), 3))
        out.append(Claim("fermat:d=5", "smooth quintic has no relations of degree 3", 0, n, n == 0))
        return out

    # -- identities ----------------------------------------------------------

    def corpus(self) -> list:
        """Every curve behind the family suites, analysed."""
        for name in FAMILY_SUITES:
            getattr(self, "suite_" + name)()
        return [a for _, a in sorted(self.cache.values(), key=lambda t: (t[0].d, t[0].id))]

    def suite_identities(self) -> list:
        out = []
        analyses = self.corpus()
        randoms = [analyze(f, curve_id=cid, saturation="both", seed=self.seed)
                   for cid, f in random_nonfree_curves(20, self.seed)]
        for a in analyses + randoms:
            t0 = time.perf_counter()
            bad = identity_violations(a)
            out.append(Claim(a.curve_id, "identity suite (ar relation, ct = mdr + d - 2, balance, Hilbert "
                             "identities, defect symmetry, formula vs direct defects, criteria)",
                             [], bad, not bad, time.perf_counter() - t0))
        for a in randoms:
            out.append(Claim(a.curve_id, "random singular curve is not free", False, a.report.free,
                             not a.report.free))
        ctst, fam = ProbeSummary(), ProbeSummary()
        for a in analyses + randoms:
            ctst.add(ct_st_probe(a))
            fam.add(family_freeness_probe(a))
        out.append(Claim("probe:ct+st", "ct + st = T exactly for free curves (conjectural)", [],
                         ctst.to_json(), not ctst.counterexamples))
        out.append(Claim("probe:families", "members of degree >= 5 of the conjectured families are free", [],
                         fam.to_json(), not fam.counterexamples))
        return out


def _in_span(basis, triple) -> bool:
    """Whether ``triple`` is a QQ-combination of the triples in ``basis``."""
    from .linalg.sparse import SparseMat

    mons = sorted({m for t in list(basis) + [triple] for part in t for m in part.terms})
    index = {m: i for i, m in enumerate(mons)}

    def column(t):
        return [(blk * len(mons) + index[m], v) for blk, part in enumerate(t) for m, v in part.items()]

    trip = [(r, j, v) for j, t in enumerate(basis) for r, v in column(t)]
    rows = 3 * len(mons)
    a = SparseMat.from_triplets(rows, len(basis), trip)
    b = SparseMat.from_triplets(rows, len(basis) + 1, trip + [(r, len(basis), v) for r, v in column(triple)])
    return rank_exact(a) == rank_exact(b)


def random_nonfree_curves(count: int, seed: int = DEFAULT_SEED) -> list:
    """Sparse quintics and sextics with a double point at (0:0:1), rejecting free or non-reduced draws.

    The point is forced singular by leaving out z^d, z^(d-1)x and z^(d-1)y,
    and the z^(d-2)xy term makes it a node generically.
    """
    from .freeness import freeness_by_midpoint
    from .milnor import full_profile

    rng = random.Random(seed)
    out = []
    attempts = 0
    while len(out) < count:
        attempts += 1
        d = 5 + len(out) % 2
        allowed = [(a, b, d - a - b) for a in range(d + 1) for b in range(d + 1 - a) if d - a - b <= d - 2]
        f = X * Y * Z ** (d - 2) + X**d + Y**d
        for m in rng.sample(allowed, 6):
            f = f + TriPoly.monomial(m, rng.choice([-3, -2, -1, 1, 2, 3]))
        if f.homogeneous_degree != d:
            continue
        prof = full_profile(CurveInput(f), source=PrimeSource(seed))
        if not prof.plateau_verified or freeness_by_midpoint(prof) or prof.tau == 0:
            continue
        out.append((f"random:d={d},n={len(out)}", f))
    return out


def cross_oracle_matrices(spec: CurveSpec, max_cols: int = CROSS_ORACLE_COLS):
    """The Jacobian and Koszul matrices of the curve with at most ``max_cols`` columns."""
    c = CurveInput(spec.f)
    d = c.d
    j = 0
    while 3 * dim_s(j) <= max_cols:
        k = j + d - 1
        yield f"jacobian:{spec.id}:k={k}", jacobian_matrix_in_degree(c, k)
        yield f"koszul:{spec.id}:k={k}", koszul_matrix(c, k)
        j += 1


def cross_oracle_check(spec: CurveSpec, seed: int = DEFAULT_SEED, max_cols: int = CROSS_ORACLE_COLS) -> list:
    """(name, exact rank, multi-modular rank) for every small matrix of the curve."""
    out = []
    for name, m in cross_oracle_matrices(spec, max_cols):
        exact = rank_exact(m)
        cert = multi_modular_rank(m, source=PrimeSource(seed))
        out.append((name, exact, cert.rank if cert.agreement else None))
    return out


def summary(claims: list) -> dict:
    failed = [c.id + ": " + c.claim for c in claims if not c.passed]
    return {"total": len(claims), "passed": len(claims) - len(failed), "failed": len(failed), "failures": failed}
