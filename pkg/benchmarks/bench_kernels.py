"""Compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]   (the pure path needs about two minutes)

Times the truncated Groebner basis (Hilbert function of the Jacobian ideal)
and the sparse echelon of one Jacobian matrix, with both backends, and checks
that they return identical results.
"""

import argparse
import time

from freecurve.families import gen_prop2i, gen_prop4ii, gen_valles_pencil
from freecurve.linalg import backend
from freecurve.linalg.graded import hilbert_ideal_dims_mod_p
from freecurve.linalg.modular import rank_mod_p
from freecurve.milnor import CurveInput, jacobian_matrix_in_degree

P = 2147483647


def best_of(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=1)
    args = ap.parse_args(argv)
    if not backend.COMPILED_AVAILABLE:
        raise SystemExit("compiled extension not built; run: pip install -e . --no-build-isolation")

    cases = []
    for spec in (gen_prop2i(10), gen_valles_pencil(), gen_prop4ii(1), gen_prop4ii(2)):
        c = CurveInput(spec.f)
        K = c.T + 2
        cases.append((f"hilbert  {spec.id} (K={K})",
                      lambda pure, c=c, K=K: hilbert_ideal_dims_mod_p(list(c.gradient), P, K, pure)))
        m = jacobian_matrix_in_degree(c, c.T // 2 + c.d).mod_p(P)
        cases.append((f"echelon  {spec.id} ({m.rows}x{m.cols})", lambda pure, m=m: rank_mod_p(m, pure)))

    print(f"{'case':<46} {'python':>9} {'compiled':>9} {'speedup':>8}")
    for name, fn in cases:
        tp, rp = best_of(lambda: fn(True), args.repeat)
        tc, rc = best_of(lambda: fn(False), args.repeat)
        if rp != rc:
            raise SystemExit(f"{name}: backends disagree")
        print(f"{name:<46} {tp:9.3f} {tc:9.3f} {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
