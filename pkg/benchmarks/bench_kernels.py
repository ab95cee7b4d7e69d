"""Compare the compiled kernels with the pure-Python fallback.

Each workload runs in a fresh interpreter, once with the default backend and
once with POLARINV_PURE_PYTHON=1, and the best of ``--repeat`` runs is shown.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""
import argparse
import json
import os
import subprocess
import sys

WORKLOADS = {
    "lemma-sweep n3 m3 d6": "harness.cmd_lemma_sweep(3, 3, 6)",
    "snlead n5": "harness.cmd_snlead(5)",
    "gb noether S3 m3": "buchberger(noether_generators(symmetric_group(3), m=3).gens)",
    "gb noether A4": "buchberger(noether_generators(alternating_group(4)).gens)",
    "bound-check S3 m2": "harness.cmd_bound_check('S3', 2)",
}

SNIPPET = """
import json, sys, time
from polarinv import harness, kernels
from polarinv.groebner import buchberger
from polarinv.invariants import noether_generators
from polarinv.permaction import alternating_group, symmetric_group
best = None
for _ in range({repeat}):
    t = time.perf_counter()
    {stmt}
    dt = time.perf_counter() - t
    best = dt if best is None else min(best, dt)
print(json.dumps({{"backend": kernels.BACKEND, "seconds": best}}))
"""


def run(stmt: str, repeat: int, pure: bool) -> dict:
    env = dict(os.environ)
    env.pop("POLARINV_PURE_PYTHON", None)
    if pure:
        env["POLARINV_PURE_PYTHON"] = "1"
    out = subprocess.run([sys.executable, "-c", SNIPPET.format(stmt=stmt, repeat=repeat)],
                         env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"{'workload':<24}{'default':>16}{'python':>12}{'speedup':>10}")
    for name, stmt in WORKLOADS.items():
        fast = run(stmt, args.repeat, pure=False)
        slow = run(stmt, args.repeat, pure=True)
        label = f"{fast['seconds']:.3f}s ({fast['backend']})"
        print(f"{name:<24}{label:>16}{slow['seconds']:>11.3f}s"
              f"{slow['seconds'] / fast['seconds']:>9.2f}x")


if __name__ == "__main__":
    main()
