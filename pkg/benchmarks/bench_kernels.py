"""Compiled kernels against the pure-Python fallback.

Kernel timings call both modules side by side in one process.  End-to-end
timings run a fresh interpreter per backend, selecting the fallback with
``STRATSET_PURE_PYTHON=1``.

    python3 benchmarks/bench_kernels.py [--repeat N] [--json]
"""
import argparse
import json
import os
import random
import subprocess
import sys
import timeit

from stratset import _kernels_py

try:
    from stratset import _kernels
except ImportError:
    _kernels = None

rng = random.Random(0)


def _monotone(n, m):
    return tuple(sorted(rng.randrange(m + 1) for _ in range(n + 1)))


VALUES = [_monotone(rng.randrange(1, 8), 5) for _ in range(400)]
SURJ = [_kernels_py.ez_factor(v)[0] for v in VALUES]
WORDS = [(_kernels_py.word_from_surjection(s), s[-1]) for s in SURJ]
PAIRS = [(VALUES[i], VALUES[i + 1][: len(VALUES[i])]) for i in range(len(VALUES) - 1) if len(VALUES[i + 1]) >= len(VALUES[i])]

KERNELS = {
    "ez_factor": lambda k: [k.ez_factor(v) for v in VALUES],
    "compose": lambda k: [k.compose(VALUES[i], SURJ[i]) for i in range(len(VALUES))],
    "repeats": lambda k: [k.repeats(v) for v in VALUES],
    "word_from_surjection": lambda k: [k.word_from_surjection(s) for s in SURJ],
    "surjection_from_word": lambda k: [k.surjection_from_word(w, d) for w, d in WORDS],
    "collapse_pair": lambda k: [k.collapse_pair(a, b) for a, b in PAIRS],
    "delannoy_paths(4,4)": lambda k: k.delannoy_paths(4, 4),
}

E2E = {
    "tensor(delta 3, delta 3)": "from stratset import marking as M; M.tensor(M.delta(3), M.delta(3))",
    "tensor(deltak(3,1), horn(3,2))": "from stratset import marking as M; M.tensor(M.delta_k(3,1), M.horn_marked(3,2))",
    "equivalent_tensors, small corpus": (
        "from stratset import harness as H; c=H.default_corpus(); H.suite_equivalent_tensors(c, budget=60)"
    ),
}


def best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def e2e(code, pure, repeat):
    env = dict(os.environ)
    env.pop("STRATSET_PURE_PYTHON", None)
    if pure:
        env["STRATSET_PURE_PYTHON"] = "1"
    prog = (
        "import timeit, stratset\n"
        f"t = min(timeit.repeat({code!r}, number=1, repeat={repeat}))\n"
        "print(stratset.BACKEND, t)\n"
    )
    out = subprocess.run([sys.executable, "-c", prog], capture_output=True, text=True, env=env, check=True).stdout.split()
    return out[0], float(out[1])


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--json", action="store_true", help="print results as JSON")
    args = ap.parse_args(argv)

    rows = []
    for name, fn in KERNELS.items():
        py = best(lambda: fn(_kernels_py), args.repeat)
        cy = best(lambda: fn(_kernels), args.repeat) if _kernels else None
        if _kernels:
            assert fn(_kernels) == fn(_kernels_py), name
        rows.append({"kind": "kernel", "name": name, "python": py, "cython": cy})
    for name, code in E2E.items():
        _, py = e2e(code, True, max(1, args.repeat // 2))
        backend, cy = e2e(code, False, max(1, args.repeat // 2))
        rows.append({"kind": "end-to-end", "name": name, "python": py, "cython": cy if backend == "cython" else None})

    if args.json:
        print(json.dumps(rows, indent=2))
        return
    if not _kernels:
        print("compiled extension not built; showing the fallback only")
    print(f"{'benchmark':<36} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for r in rows:
        cy = f"{r['cython'] * 1e3:10.2f}" if r["cython"] else f"{'-':>10}"
        sp = f"{r['python'] / r['cython']:7.2f}x" if r["cython"] else f"{'-':>8}"
        print(f"{r['name']:<36} {r['python'] * 1e3:10.2f} {cy} {sp}")


if __name__ == "__main__":
    main()
