"""Compiled vs pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Times the raw kernels on random inputs, then a closed-form product sweep
(the dense oracle for every pair of types at a few sizes) with each backend
patched in turn.
"""
from __future__ import annotations

import argparse
import random
import timeit
from array import array
from contextlib import contextmanager
from itertools import product

from christoffel import _kernels, _pykernels
from christoffel.arith import units
from christoffel.lexarray import ChristoffelMatrix, dense_mul, mul_closed
from christoffel.ring import prime_field

try:
    from christoffel import _ckernels
except ImportError:
    _ckernels = None

NAMES = ("matmul_mod", "matmul_i64", "christoffel_pattern")


@contextmanager
def backend(module):
    saved = {name: getattr(_kernels, name) for name in NAMES}
    for name in NAMES:
        setattr(_kernels, name, getattr(module, name))
    try:
        yield
    finally:
        for name, fn in saved.items():
            setattr(_kernels, name, fn)


def best(fn, repeat: int) -> float:
    number, _ = timeit.Timer(fn).autorange()
    return min(timeit.repeat(fn, number=number, repeat=repeat)) / number


def kernel_rows(repeat: int):
    rng = random.Random(0)
    for n in (16, 32, 64, 128):
        for modulus in (2, 65521):
            x = array("q", (rng.randrange(modulus) for _ in range(n * n)))
            y = array("q", (rng.randrange(modulus) for _ in range(n * n)))
            yield (f"matmul_mod n={n} N={modulus}",
                   lambda m, x=x, y=y, n=n, q=modulus: m.matmul_mod(x, y, n, q))
        x = array("q", (rng.randint(-1000, 1000) for _ in range(n * n)))
        yield f"matmul_i64 n={n}", lambda m, x=x, n=n: m.matmul_i64(x, x, n)
        yield f"christoffel_pattern n={n}", lambda m, n=n: m.christoffel_pattern(n, n // 2 - 1 | 1)


def sweep():
    field = prime_field(5)
    for n in (17, 24, 31):
        for m1, m2 in product(units(n), repeat=2):
            x, y = ChristoffelMatrix(field, n, m1, 2, 4), ChristoffelMatrix(field, n, m2, 1, 3)
            assert mul_closed(x, y).to_dense() == dense_mul(x.to_dense(), y.to_dense())


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    if _ckernels is None:
        raise SystemExit("compiled extension not built; run `pip install -e . --no-build-isolation`")

    print(f"{'case':<34}{'python':>12}{'cython':>12}{'speedup':>10}")
    for label, call in kernel_rows(args.repeat):
        py = best(lambda: call(_pykernels), args.repeat)
        cy = best(lambda: call(_ckernels), args.repeat)
        print(f"{label:<34}{py * 1e6:>10.1f}us{cy * 1e6:>10.1f}us{py / cy:>9.1f}x")

    times = {}
    for name, module in (("python", _pykernels), ("cython", _ckernels)):
        with backend(module):
            times[name] = best(sweep, max(1, args.repeat // 2))
    print(f"{'closed-form product sweep (F_5)':<34}{times['python']:>11.3f}s{times['cython']:>11.3f}s"
          f"{times['python'] / times['cython']:>9.1f}x")


if __name__ == "__main__":
    main()
