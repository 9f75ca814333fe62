"""Time the compiled and pure-Python tuple kernels on the same workloads.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import time

from codepoly import kernels
from codepoly.algebra import extension_field, prime_field
from codepoly.codes import enumerate_codewords

# (label, ring, generators, genus, reference vector or None)
WORKLOADS = [
    ("F2 [6,3] g=3", prime_field(2),
     [(1, 0, 0, 1, 1, 0), (0, 1, 0, 1, 0, 1), (0, 0, 1, 0, 1, 1)], 3, None),
    ("F2 [6,3] g=5", prime_field(2),
     [(1, 0, 0, 1, 1, 0), (0, 1, 0, 1, 0, 1), (0, 0, 1, 0, 1, 1)], 5, None),
    ("F2 [8,4] g=4 +v", prime_field(2),
     [(1, 0, 0, 0, 0, 1, 1, 1), (0, 1, 0, 0, 1, 0, 1, 1),
      (0, 0, 1, 0, 1, 1, 0, 1), (0, 0, 0, 1, 1, 1, 1, 0)], 4, (1, 0, 1, 0, 1, 0, 1, 0)),
    ("F3 [4,2] g=4", prime_field(3), [(1, 0, 1, 1), (0, 1, 1, 2)], 4, None),
    ("F4 [4,2] g=3 +v", extension_field(2, 2), [(1, 0, 1, 1), (0, 1, 1, 2)], 3, (1, 2, 3, 0)),
]


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)

    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled kernel not built; only the Python backend is available")
    print(f"{'workload':<20}{'tuples':>10}" + "".join(f"{b:>12}" for b in backends) + f"{'speedup':>10}")
    for label, ring, gens, g, ref in WORKLOADS:
        code = enumerate_codewords(gens, ring)
        words = list(code.codewords)
        times = {}
        results = {}
        for b in backends:
            times[b] = best_of(lambda: kernels.column_profiles(words, g, ring.size, ref, backend=b), args.repeat)
            results[b] = kernels.column_profiles(words, g, ring.size, ref, backend=b)
        if len(set(map(lambda r: tuple(sorted(r.items())), results.values()))) != 1:
            raise SystemExit(f"{label}: backends disagree")
        row = f"{label:<20}{code.size**g:>10}" + "".join(f"{times[b]:>11.4f}s" for b in backends)
        if len(backends) == 2:
            row += f"{times['python'] / times['cython']:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
