#!/usr/bin/env python3
"""Benchmark the compiled wedge kernel against the pure-Python fallback.

Runs the representative hot workloads (the two tau_4 invariants and a
batch of derivation actions) once per backend in separate interpreters,
then prints a comparison table.

    python benchmarks/bench_wedge.py
"""

import os
import subprocess
import sys

WORKLOAD = r"""
import json, time
import cliffsys
from cliffsys.forms import canonical_form, lie_action, psi_matrix, tau
from cliffsys.evencliff import build_e10, tau4_psi_d

timings = {"backend": cliffsys.KERNEL_BACKEND}

t0 = time.time()
spin9 = canonical_form("Spin9")
timings["tau4(psi^C) + normalize"] = time.time() - t0

t0 = time.time()
t4 = tau4_psi_d()
timings["tau4(psi^D), 210 minors"] = time.time() - t0

e10 = build_e10()
gens = e10.pairwise_products()[:8]
t0 = time.time()
for x in gens:
    lie_action(x, t4)
timings["8 derivation actions on tau4(psi^D)"] = time.time() - t0

print(json.dumps(timings))
"""


def run_backend(pure: bool) -> dict:
    env = dict(os.environ)
    if pure:
        env["CLIFFSYS_PURE"] = "1"
    else:
        env.pop("CLIFFSYS_PURE", None)
    out = subprocess.run(
        [sys.executable, "-c", WORKLOAD], env=env, capture_output=True, text=True
    )
    if out.returncode != 0:
        raise SystemExit(out.stderr)
    import json

    return json.loads(out.stdout)


def main():
    compiled = run_backend(pure=False)
    pure = run_backend(pure=True)
    if compiled["backend"] == pure["backend"]:
        print("compiled kernel not built; both runs used", pure["backend"])
    keys = [k for k in compiled if k != "backend"]
    width = max(len(k) for k in keys) + 2
    print(f"{'workload'.ljust(width)} {compiled['backend']:>12} {pure['backend']:>12} {'speedup':>8}")
    for key in keys:
        c, p = compiled[key], pure[key]
        ratio = p / c if c > 0 else float("inf")
        print(f"{key.ljust(width)} {c:>11.2f}s {p:>11.2f}s {ratio:>7.1f}x")


if __name__ == "__main__":
    main()
