"""Operation-count and wall-time benchmarks."""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass

import numpy as np

from .core import TridiagonalMatrix, determinant
from .inverse import invert
from .oracle import dense_inverse, to_dense
from .scalars import Counted, FlopCounter

__all__ = ["BenchRecord", "OPERATIONS", "DENSE_CAP", "random_dominant", "count_flops", "run_bench"]

OPERATIONS = ("determinant", "invert", "dense_inverse")
DENSE_CAP = 512


@dataclass(frozen=True)
class BenchRecord:
    n: int
    op: str
    flops: int
    nanos: int  # median wall time of one repetition
    reps: int

    def csv_row(self):
        return f"{self.n},{self.op},{self.flops},{self.nanos},{self.reps}"


CSV_HEADER = "n,op,flops,nanos,reps"


def random_dominant(n, rng, mode="double"):
    """Random strictly diagonally dominant tridiagonal matrix.

    Off-diagonals are uniform on [-1, 1]; each ``|d_i|`` exceeds the sum of
    its row's off-diagonal magnitudes by a uniform [1, 2) margin.
    """
    a = rng.uniform(-1.0, 1.0, n - 1)
    b = rng.uniform(-1.0, 1.0, n - 1)
    off = np.zeros(n)
    off[:-1] += np.abs(a)
    off[1:] += np.abs(b)
    sign = rng.choice([-1.0, 1.0], n)
    d = sign * (off + rng.uniform(1.0, 2.0, n))
    return TridiagonalMatrix(d.tolist(), a.tolist(), b.tolist(), mode=mode)


def _counted(A, counter):
    def wrap(xs):
        return [Counted(x, counter) for x in xs]

    return TridiagonalMatrix(wrap(A.d), wrap(A.a), wrap(A.b), mode=A.mode)


def _runner(op):
    if op == "determinant":
        return determinant
    if op == "invert":
        return invert
    if op == "dense_inverse":
        return lambda A: dense_inverse(to_dense(A))
    raise ValueError(f"unknown operation {op!r}; expected one of {OPERATIONS}")


def count_flops(op, A):
    """Scalar ``+ - * /`` operations ``op`` performs on ``A``."""
    counter = FlopCounter()
    if op == "dense_inverse":
        dense_inverse(to_dense(A), counter=counter)
    else:
        _runner(op)(_counted(A, counter))
    return counter.count


def run_bench(sizes, ops=OPERATIONS, seed=0, reps=3, mode="scaled"):
    """Yield one :class:`BenchRecord` per ``(n, op)`` pair.

    Matrices come from ``numpy.random.default_rng([seed, n])``, so flop
    counts are reproducible. The default scaled mode keeps the minors of
    large matrices finite (in double mode they overflow near ``n = 700``).
    ``dense_inverse`` always runs in double precision and is skipped above
    ``n = DENSE_CAP``.
    """
    for n in sizes:
        if n < 1:
            raise ValueError(f"sizes must be positive, got {n}")
        A = random_dominant(n, np.random.default_rng([seed, n]), mode=mode)
        for op in ops:
            if op == "dense_inverse" and n > DENSE_CAP:
                continue
            fn = _runner(op)
            flops = count_flops(op, A)
            times = []
            for _ in range(reps):
                t0 = time.perf_counter_ns()
                fn(A)
                times.append(time.perf_counter_ns() - t0)
            yield BenchRecord(n, op, flops, int(statistics.median(times)), reps)
