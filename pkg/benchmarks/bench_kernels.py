"""Time the compiled and pure-Python kernels on the same workloads.

    python3 benchmarks/bench_kernels.py --size 5
"""

import argparse
import time

from staircase import kernel
from staircase.symbols import LABELS, events_for_size


def enumerate_a(k, n):
    level = [b""]
    for size in range(n):
        codes = [e.code() for e in events_for_size(size)]
        level = [c for t in level for c in k.children_a(t, size, codes)]
    return level


def enumerate_b(k, n):
    level = [b""]
    for size in range(n):
        codes = [e.code() for e in events_for_size(size, first=LABELS)]
        level = [c for t in level for c in k.children_b(t, size, codes)]
    return level


def workloads(n, nb):
    cells_a = enumerate_a(kernel.python_kernel, n)
    cells_b = enumerate_b(kernel.python_kernel, nb)
    return {
        f"enumerate type A, size {n}": lambda k: enumerate_a(k, n),
        f"weight type A, size {n}": lambda k: [k.weight_a(c, n) for c in cells_a],
        f"validate type A, size {n}": lambda k: [k.is_valid_a(c, n) for c in cells_a],
        f"uninsert type A, size {n}": lambda k: [k.uninsert_a(c, n) for c in cells_a],
        f"enumerate type B, size {nb}": lambda k: enumerate_b(k, nb),
        f"weight type B, size {nb}": lambda k: [k.weight_b(c, nb) for c in cells_b],
    }


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--size", type=int, default=5)
    parser.add_argument("--size-b", type=int, default=4)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = {"python": kernel.python_kernel}
    if kernel.compiled_kernel is not None:
        backends["cython"] = kernel.compiled_kernel
    else:
        print("compiled extension not built; timing the Python kernel only")

    print(f"{'workload':32} " + " ".join(f"{b:>10}" for b in backends) + "   speedup")
    for name, fn in workloads(args.size, args.size_b).items():
        secs = {b: best_of(lambda: fn(k), args.repeat) for b, k in backends.items()}
        row = f"{name:32} " + " ".join(f"{s:9.3f}s" for s in secs.values())
        if "cython" in secs:
            row += f"   {secs['python'] / secs['cython']:6.1f}x"
        print(row)


if __name__ == "__main__":
    main()
