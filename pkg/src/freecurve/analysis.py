"""One-call analysis of a curve plus the identity checks run over the corpus.

``analyze`` wires the profile and the freeness report together.  The
identity checks recompute relations that the profile does not use when it is
built, so a passing check is an actual cross-check rather than a tautology.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .arith import DEFAULT_SEED, PrimeSource
from .families import CurveSpec, SingularityMeta
from .freeness import UNCOMPUTED, FreenessReport, formula_range, freeness_report
from .milnor import INFINITE, CurveInput, MilnorProfile, ar_dim, full_profile
from .poly import TriPoly, dim_s

# direct ar_j ranks are only recomputed while the matrix stays this narrow
AR_CHECK_COLS = 300


@dataclass
class Analysis:
    curve_id: str
    f: TriPoly
    profile: MilnorProfile
    report: FreenessReport
    meta: SingularityMeta | None = None
    irreducible: bool | None = None
    saturation: str = "formula"
    runtime: float = 0.0

    @property
    def inconsistent(self) -> bool:
        return bool(self.report.inconsistencies)

    def to_json(self) -> dict:
        p = self.profile
        return {
            "curve": {"id": self.curve_id, "degree": p.d, "polynomial": self.f.render()},
            "profile": p.to_json(),
            "report": self.report.to_json(),
            "saturation": {"mode": self.saturation, "method": list(self.report.defects.method)
                           if self.report.defects else []},
            "primes": list(p.primes),
            "notes": list(self.report.notes),
            "inconsistencies": list(self.report.inconsistencies),
            "runtime_s": round(self.runtime, 3),
        }


def analyze(f: TriPoly | CurveSpec, curve_id: str = "input", meta: SingularityMeta | None = None,
            irreducible: bool | None = None, engine: str = "gb", saturation: str = "formula",
            kmax: int | None = None, seed: int = DEFAULT_SEED) -> Analysis:
    """Profile, freeness verdict and saturation defects of one curve."""
    if isinstance(f, CurveSpec):
        curve_id = f.id
        meta = meta or f.singularities
        if irreducible is None:
            irreducible = f.expected.irreducible
        f = f.f
    t0 = time.perf_counter()
    c = CurveInput(f)
    source = PrimeSource(seed)
    prof = full_profile(c, engine=engine, kmax=kmax, source=source)
    rep = freeness_report(prof, c, meta, irreducible, saturation, source)
    return Analysis(curve_id, f, prof, rep, meta, irreducible, saturation, time.perf_counter() - t0)


# -- identities --------------------------------------------------------------


def identity_violations(a: Analysis, direct_ar: bool = True) -> list:
    """Every identity that fails on this analysis, as readable strings.

    Covered: ar_j = m_{d-1+j} - m_s(d-1+j) for j <= d-2 (direct ranks),
    ct = mdr + d - 2, the er balance and Hilbert identities on free curves,
    defect symmetry, formula against direct defects, agreement of the two
    criteria and the bounds on irreducible free curves.
    """
    p, rep = a.profile, a.report
    d = p.d
    out = []
    if not p.plateau_verified:
        return ["tau plateau not verified"]
    if direct_ar:
        c = CurveInput(a.f)
        for j in range(0, d - 1):
            if 3 * dim_s(j) > AR_CHECK_COLS:
                break
            want = p.m_at(d - 1 + j) - p.smooth_at(d - 1 + j)
            got = ar_dim(c, j)
            if got != want:
                out.append(f"ar_{j}: direct {got} vs m - m_s {want}")
    if not p.ct_mdr_consistent:
        out.append(f"ct = mdr + d - 2 fails (ct={p.ct}, mdr={p.mdr})")
    if rep.criterion_ii != rep.criterion_iii:
        out.append("balance and midpoint criteria disagree")
    if rep.free:
        for j in range(p.K + 1):
            if p.m_at(2 * d - 5 - j) + p.er[j] != p.tau:
                out.append(f"m_(2d-5-j) + er_j = tau fails at j={j}")
                break
        if not rep.hp_identities_ok:
            out.append("Hilbert identities of a free curve fail")
        if a.irreducible and not rep.wh_bounds_ok:
            out.append("bounds on irreducible free curves fail")
    if rep.defects is not None:
        n = rep.defects.n
        for j in range(p.T + 1):
            u, v = n[j], n[p.T - j]
            if UNCOMPUTED not in (u, v) and u != v:
                out.append(f"defect symmetry fails at {j}: {u} vs {v}")
                break
        if a.saturation == "both":
            missing = [j for j in formula_range(d) if rep.defects.method[j] != "both-agree"]
            if missing:
                out.append(f"formula and direct defects not both available at {missing[:5]}")
    for msg in rep.inconsistencies:
        if msg not in out:
            out.append(msg)
    return out


# -- conjecture probes -----------------------------------------------------------

# families that a conjecture predicts to be free from degree 5 on
CONJ_FREE_FAMILIES = ("prop2i", "prop3", "prop4i", "prop4ii")


def ct_st_probe(a: Analysis) -> dict:
    """ct + st = T compared with the freeness verdict."""
    p = a.profile
    holds = p.ct != INFINITE and p.ct + p.st == p.T
    return {"id": a.curve_id, "ct_plus_st_eq_T": holds, "free": a.report.free,
            "counterexample": holds != a.report.free}


def family_freeness_probe(a: Analysis) -> dict | None:
    """Degree >= 5 members of the conjectured families should be free."""
    fam = a.curve_id.split(":", 1)[0]
    if fam not in CONJ_FREE_FAMILIES or a.profile.d < 5:
        return None
    return {"id": a.curve_id, "free": a.report.free, "counterexample": not a.report.free}


@dataclass
class ProbeSummary:
    checked: int = 0
    counterexamples: list = field(default_factory=list)

    def add(self, rec: dict | None):
        if rec is None:
            return
        self.checked += 1
        if rec["counterexample"]:
            self.counterexamples.append(rec["id"])

    def to_json(self) -> dict:
        return {"checked": self.checked, "counterexamples": list(self.counterexamples)}
