"""Time the closure and orbital kernels under both backends.

Each backend runs in its own interpreter because the choice is fixed at
import time. The numba row reports a warm run (compilation excluded).

    python benchmarks/bench_kernels.py [--repeat 5]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

CHILD = r"""
import json, sys, time
import numpy as np
from e6mono import _accel, weyl
from e6mono.lattice import named
from e6mono.perm import subset_action, overgroup_scan

repeat = int(sys.argv[1])
refl = np.array(weyl.simple_reflections(named("E6")), dtype=np.int64)
refl_aut = np.concatenate([refl, -np.eye(6, dtype=np.int64)[None]])
s6 = np.array([[1, 0, 2, 3, 4, 5], [1, 2, 3, 4, 5, 0]], dtype=np.int64)
s8 = np.array([[1, 0, 2, 3, 4, 5, 6, 7], [1, 2, 3, 4, 5, 6, 7, 0]], dtype=np.int64)
sub3 = np.array([g.images for g in subset_action(3).group.generators], dtype=np.int64)

cases = {
    "W(E6) closure": lambda: _accel.matrix_closure(refl, 10**6),
    "Aut(E6) closure": lambda: _accel.matrix_closure(refl_aut, 10**6),
    "S8 closure": lambda: _accel.perm_closure(s8, 10**6),
    "pair orbits, degree 20": lambda: _accel.pair_orbit_labels(sub3, 20),
    "overgroup scan": lambda: overgroup_scan(subset_action(2).group),
}
out = {"backend": _accel.backend()}
for name, fn in cases.items():
    fn()  # warm-up / JIT
    best = min((lambda t0: (fn(), time.perf_counter() - t0)[1])(time.perf_counter()) for _ in range(repeat))
    out[name] = best
print(json.dumps(out))
"""


def run(disable: bool, repeat: int) -> dict:
    env = dict(os.environ)
    env.pop("E6MONO_DISABLE_NUMBA", None)
    if disable:
        env["E6MONO_DISABLE_NUMBA"] = "1"
    proc = subprocess.run([sys.executable, "-c", CHILD, str(repeat)], env=env,
                          capture_output=True, text=True, check=True)
    return json.loads(proc.stdout)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    fast, slow = run(False, args.repeat), run(True, args.repeat)
    print(f"{'kernel':28s} {fast['backend']:>10s} {slow['backend']:>10s} {'ratio':>7s}")
    for key in fast:
        if key == "backend":
            continue
        print(f"{key:28s} {fast[key]:9.4f}s {slow[key]:9.4f}s {slow[key] / fast[key]:7.2f}")


if __name__ == "__main__":
    main()
