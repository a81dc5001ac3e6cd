"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Every workload runs through both backends on identical inputs; results are
checked for agreement before timings are printed.
"""

import argparse
import random
import time

from degseq import _pykernels
from degseq.graph_core import complement
from degseq.transform import enumerate_class, fixture, sample_member

try:
    from degseq import _ckernels
except ImportError:
    _ckernels = None


def _workloads():
    rng = random.Random(7)
    corpus = enumerate_class((4, 5)).members()
    samples = [sample_member((7, 8), 300, rng.getrandbits(32)) for _ in range(100)]
    dense = [fixture("complete", 14), fixture("dodecahedron"), fixture("icosahedron")]
    return [
        ("canonical G[4,5] corpus", "canonical_labeling", [(list(g.masks), g.order) for g in corpus]),
        ("canonical K14/dodeca/icosa", "canonical_labeling", [(list(g.masks), g.order) for g in dense]),
        ("ham cycle G[7,8] samples", "hamiltonian_cycle", [(list(g.masks), g.order) for g in samples]),
        ("ham path G[7,8] samples", "hamiltonian_path", [(list(g.masks), g.order) for g in samples]),
        ("pancyclic lengths compl. G[4,5]", "cycle_of_length",
         [(list(complement(g).masks), 9, k) for g in corpus[:60] for k in range(3, 10)]),
        ("MIS G[7,8] samples", "max_independent_set", [(list(g.masks), g.order) for g in samples]),
    ]


def _time(fn, inputs, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = [fn(*args) for args in inputs]
        best = min(best, time.perf_counter() - t)
    return best, out


def _norm(name, results):
    # witnesses may differ between backends; compare presence and sizes
    if name == "canonical_labeling":
        return [rows for _, rows in results]
    if name == "max_independent_set":
        return [bin(m).count("1") for m in results]
    return [r is None for r in results]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled extension not built; only the Python backend is available")
    print(f"{'workload':36s} {'python s':>10s} {'compiled s':>11s} {'speedup':>8s}")
    for label, name, inputs in _workloads():
        tp, rp = _time(getattr(_pykernels, name), inputs, args.repeat)
        if _ckernels is None:
            print(f"{label:36s} {tp:10.4f} {'-':>11s} {'-':>8s}")
            continue
        tc, rc = _time(getattr(_ckernels, name), inputs, args.repeat)
        if _norm(name, rp) != _norm(name, rc):
            raise SystemExit(f"backends disagree on {label}")
        print(f"{label:36s} {tp:10.4f} {tc:11.4f} {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
