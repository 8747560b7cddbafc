#!/usr/bin/env python3
"""Benchmark the pure-Python kernel against the compiled twin.

Runs representative hot workloads in subprocesses with GRING_KERNEL=py and
GRING_KERNEL=c and prints a comparison table.  Usage:

    python benchmarks/bench_kernel.py [--repeat N]
"""

import argparse
import json
import os
import subprocess
import sys
import textwrap

WORKLOAD = textwrap.dedent(
    """
    import json, sys, time
    import gring.kernel as kernel

    results = {"backend": kernel.backend()}

    t0 = time.time()
    from gring.ideals import hashhash_generators
    from gring.ring import build_KF, ideal_equal
    from gring.words import parse_word
    names = ["g1", "g2", "g3"]
    ring = build_KF(3)
    l = parse_word("g3^-2*g2^-1*g1", names)
    h = parse_word("g2^-1*g3^-1", names)
    conj = h * l * h.inverse()
    base = hashhash_generators([l], 3).generators
    cg = hashhash_generators([conj], 3).generators
    assert ideal_equal(base, cg, ring)
    results["conjugation_gb"] = time.time() - t0

    t0 = time.time()
    from gring.identities import run_identity_suite
    res = run_identity_suite(seed=11, n=3, pool_size=80, max_len=6)
    assert all(r.ok for r in res)
    results["identity_suite"] = time.time() - t0

    t0 = time.time()
    from gring.casestudies import SWInstance, sw_verify
    rep = sw_verify(
        SWInstance(2, 3, 5, parse_word("g1*g2*g3", names)),
        check_properness=True,
    )
    assert rep.properness == "proper"
    results["sw_properness"] = time.time() - t0

    t0 = time.time()
    from gring.oracle import fuzz_bar
    assert fuzz_bar(trials=150, max_word_length=12, n=3, seed=3).ok
    results["oracle_fuzz"] = time.time() - t0

    print(json.dumps(results))
    """
)


def run_backend(backend: str) -> dict:
    env = dict(os.environ, GRING_KERNEL=backend)
    out = subprocess.run(
        [sys.executable, "-c", WORKLOAD],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    return json.loads(out.stdout.strip().splitlines()[-1])


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=1, help="best of N runs")
    args = ap.parse_args()

    rows = {}
    for backend in ("py", "c"):
        try:
            runs = [run_backend(backend) for _ in range(args.repeat)]
        except subprocess.CalledProcessError as exc:
            print(f"backend {backend!r} failed:\n{exc.stderr}", file=sys.stderr)
            if backend == "c":
                print("(compiled kernel missing? build with: "
                      "python setup.py build_ext --inplace)", file=sys.stderr)
                continue
            return 1
        best = {
            k: min(r[k] for r in runs)
            for k in runs[0]
            if k != "backend"
        }
        rows[runs[0]["backend"]] = best

    names = sorted(next(iter(rows.values())).keys())
    header = f"{'workload':24s}" + "".join(f"{b:>12s}" for b in rows)
    if len(rows) == 2:
        header += f"{'speedup':>10s}"
    print(header)
    for name in names:
        line = f"{name:24s}"
        vals = [rows[b][name] for b in rows]
        for v in vals:
            line += f"{v:12.2f}"
        if len(vals) == 2 and vals[1] > 0:
            line += f"{vals[0] / vals[1]:9.1f}x"
        print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
