"""Compare the numba and numpy convolution kernels on representative workloads.

    python benchmarks/bench_kernels.py [--repeat 5]

Numba compile time is excluded by a warm-up call.
"""

import argparse
import random
import time

import numpy as np

from fgunits import GroupSpec, InvolutionSpec
from fgunits import kernels
from fgunits.algebra import batch_inv, batch_involution, batch_mul
from fgunits.oracle import all_normalized


def unitary_filter(G):
    eta = InvolutionSpec.canonical(G)
    V = all_normalized(G)
    star = batch_involution(V, eta.index_map)
    return lambda: batch_mul(G, V, star)


def batch_inverse(G):
    V = all_normalized(G)
    return lambda: batch_inv(G, V)


def single_products(G, count=3):
    r = random.Random(0)
    X = np.array([[r.randrange(G.p) for _ in range(G.size)] for _ in range(count)])
    Y = np.array([[r.randrange(G.p) for _ in range(G.size)] for _ in range(count)])
    return lambda: batch_mul(G, X, Y)


WORKLOADS = [
    ("x * x^* over V(F3[C3xC3]), 6561 rows", lambda: unitary_filter(GroupSpec(3, (3, 3)))),
    ("inverse of every unit in V(F3[C9])", lambda: batch_inverse(GroupSpec(3, (9,)))),
    ("3 dense products in F3[C3^6]", lambda: single_products(GroupSpec(3, (3,) * 6))),
    ("3 dense products in F3[C27xC27]", lambda: single_products(GroupSpec(3, (27, 27)))),
    ("1 dense product in F3[C3^8]", lambda: single_products(GroupSpec(3, (3,) * 8), count=1)),
]


def timeit(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = kernels.available_backends()
    print(f"backends: {', '.join(backends)}")
    print(f"{'workload':44} " + " ".join(f"{b:>10}" for b in backends) + "   speedup")
    for label, setup in WORKLOADS:
        fn = setup()
        times, results = {}, {}
        for b in backends:
            kernels.set_backend(b)
            results[b] = fn()  # warm-up and result capture
            times[b] = timeit(fn, args.repeat)
        ref = results[backends[0]]
        assert all(np.array_equal(ref, r) for r in results.values()), label
        row = " ".join(f"{times[b] * 1e3:8.1f}ms" for b in backends)
        speed = f"{times['numpy'] / times['numba']:8.1f}x" if "numba" in times else ""
        print(f"{label:44} {row} {speed}")


if __name__ == "__main__":
    main()
