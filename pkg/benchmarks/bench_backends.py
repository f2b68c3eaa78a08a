#!/usr/bin/env python3
"""Benchmark the compiled kernel backend against the pure-Python fallback.

Runs the hot pieces of the law-check inner loop (interval kernels, element
combines, a representative law-suite slice) under both backends and prints a
comparison table.

Usage: python benchmarks/bench_backends.py [--trials 2000]
"""

import argparse
import random
import time

from ivhfss import _kernels_py


def _load_compiled():
    try:
        from ivhfss import _ckernels

        return _ckernels
    except ImportError:
        return None


def make_elements(count, seed=99, max_size=3):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        pairs = []
        for _ in range(rng.randint(1, max_size)):
            a, b = sorted((rng.random(), rng.random()))
            pairs.append((a, b))
        out.append(_kernels_py.sort_element(pairs))
    return out


def bench_scalar(k, n):
    rng = random.Random(1)
    pts = [(rng.random() * 0.5, 0.5 + rng.random() * 0.5) for _ in range(1000)]
    start = time.perf_counter()
    acc = 0.0
    for i in range(n):
        al, au = pts[i % 1000]
        bl, bu = pts[(i * 7 + 3) % 1000]
        acc += k.possibility_ge(al, au, bl, bu)
        acc += k.ring_sum_kernel(al, au, bl, bu)[0]
        acc += k.operator_kernel("O1", al, au, bl, bu)[1]
        acc += k.star_kernel(al, bu)
    return time.perf_counter() - start, acc


def bench_elements(k, n):
    elems = make_elements(500)
    start = time.perf_counter()
    count = 0
    for i in range(n):
        e1 = elems[i % 500]
        e2 = elems[(i * 13 + 7) % 500]
        count += len(k.combine_aligned(True, e1, e2, True))
        count += len(k.combine_pairwise(False, e1, e2))
        count += len(k.ring_sum_element(e1, e2))
        count += len(k.operator_element("O2", e1, e2))
        count += len(k.complement_element(e1))
    return time.perf_counter() - start, count


def bench_suite_slice(backend_env, trials):
    # spawn the law checker for a representative slice in a subprocess so the
    # backend choice is controlled by the environment variable
    import json
    import os
    import subprocess
    import sys

    code = (
        "import json,time\n"
        "from ivhfss.laws import check_law, registry, CheckConfig\n"
        f"cfg = CheckConfig(random_trials={trials})\n"
        "laws = {l.law_id: l for l in registry()}\n"
        "pick = ['P2.12.i', 'P3.10.i', 'P3.11.i', 'P4.2.i', 'P4.2.v']\n"
        "start = time.perf_counter()\n"
        "for law_id in pick:\n"
        "    check_law(laws[law_id], cfg)\n"
        "print(json.dumps(time.perf_counter() - start))\n"
    )
    env = dict(os.environ)
    env.update(backend_env)
    out = subprocess.run(
        [sys.executable, "-c", code], capture_output=True, text=True, env=env, check=True
    )
    return json.loads(out.stdout)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=2000, help="law-suite slice trials")
    parser.add_argument("--n", type=int, default=200_000, help="kernel loop iterations")
    args = parser.parse_args()

    compiled = _load_compiled()
    rows = []

    t_py, check_py = bench_scalar(_kernels_py, args.n)
    t_el_py, check_el_py = bench_elements(_kernels_py, args.n // 10)
    if compiled is not None:
        t_cy, check_cy = bench_scalar(compiled, args.n)
        t_el_cy, check_el_cy = bench_elements(compiled, args.n // 10)
        assert check_py == check_cy, "backends disagree on scalar kernels"
        assert check_el_py == check_el_cy, "backends disagree on element kernels"
    else:
        t_cy = t_el_cy = None

    rows.append(("scalar kernels", args.n, t_py, t_cy))
    rows.append(("element combines", args.n // 10, t_el_py, t_el_cy))

    t_suite_py = bench_suite_slice({"IVHFSS_PURE_PYTHON": "1"}, args.trials)
    t_suite_cy = bench_suite_slice({"IVHFSS_PURE_PYTHON": "0"}, args.trials) if compiled else None
    rows.append((f"law slice ({args.trials} trials)", 5, t_suite_py, t_suite_cy))

    print(f"{'workload':<28}{'iterations':>12}{'python':>12}{'cython':>12}{'speedup':>10}")
    for name, n, tp, tc in rows:
        if tc:
            print(f"{name:<28}{n:>12}{tp:>11.3f}s{tc:>11.3f}s{tp / tc:>9.2f}x")
        else:
            print(f"{name:<28}{n:>12}{tp:>11.3f}s{'n/a':>12}{'':>10}")
    if compiled is None:
        print("\ncompiled backend not available; rebuild with `pip install -e .`")


if __name__ == "__main__":
    main()
