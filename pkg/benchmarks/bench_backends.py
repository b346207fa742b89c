#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Covers both hot paths: subalgebra closure saturation (full-algebra generator
closures plus a proper-subalgebra case) and exhaustive term evaluation over
the finite models.  Run as ``python benchmarks/bench_backends.py``.
"""

import random
import statistics
import time

from skewbool import kernels
from skewbool.decide import compile_program
from skewbool.free import Variety, free_signature, generator_embedding, to_finite
from skewbool.orthosum import parse_signature
from skewbool.primitive import PrimitiveShape, op_tables
from skewbool.terms import Alphabet, Diff, Join, Meet, Variable, Zero

try:
    import numba  # noqa: F401
    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False


def timeit(fn, repeats=5):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def random_term(rng, names, depth):
    if depth == 0 or rng.random() < 0.25:
        return Zero() if rng.random() < 0.12 else Variable(rng.choice(names))
    op = rng.choice((Meet, Join, Diff))
    return op(random_term(rng, names, depth - 1), random_term(rng, names, depth - 1))


def closure_cases():
    cases = []
    for variety, n in ((Variety.LSBA, 3), (Variety.SBA, 3)):
        sig = free_signature(variety, n)
        alphabet = Alphabet(["x", "y", "z"][:n])
        gens = [to_finite(generator_embedding(variety, alphabet, i)) for i in range(n)]
        cases.append((f"closure {variety.value}_{n} ({sig.size} elements)", sig, gens))
    sig = parse_signature("3L^4")
    cases.append(("closure 3L^4 triple (81 of 81)", sig,
                  [(1, 1, 0, 1), (2, 0, 1, 2), (0, 2, 2, 2)]))
    # proper subalgebra inside a larger ambient: pads the ambient with killed factors
    sig = parse_signature("3L^4 4L^2")
    cases.append(("closure padded (81 of 2025)", sig,
                  [(1, 1, 0, 1, 0, 0), (2, 0, 1, 2, 0, 0), (0, 2, 2, 2, 0, 0)]))
    return cases


def bench_closure():
    print("== closure saturation ==")
    for label, sig, gens in closure_cases():
        tables = kernels.sig_tables(sig.factors)
        seeds = kernels.encode_elements(tables, [sig.zero()] + list(gens))
        t_np = timeit(lambda: kernels._closure_numpy(tables, seeds))
        line = f"{label:38} numpy {t_np * 1e3:8.1f} ms"
        if HAVE_NUMBA:
            kernels._closure_numba(tables, seeds)  # compile before timing
            t_nb = timeit(lambda: kernels._closure_numba(tables, seeds))
            line += f"   numba {t_nb * 1e3:8.1f} ms   speedup {t_np / t_nb:5.1f}x"
        print(line)


def bench_eval():
    print("== exhaustive model evaluation ==")
    rng = random.Random(7)
    names = ["x", "y", "z", "w"]
    alphabet = Alphabet(names)
    tables = op_tables(PrimitiveShape(2, 1))
    meet, join, diff = tables["meet"], tables["join"], tables["diff"]
    assigns = kernels.assignment_matrix(4, 3)
    programs = [compile_program(random_term(rng, names, 6), alphabet)
                for _ in range(2000)]

    def run(eval_fn):
        for ops, args in programs:
            eval_fn(ops, args, assigns, meet, join, diff)

    t_np = timeit(lambda: run(kernels._eval_program_numpy), repeats=3)
    line = f"{'2000 programs x 81 assignments':38} numpy {t_np * 1e3:8.1f} ms"
    if HAVE_NUMBA:
        jitted = kernels._jit("eval_program", kernels._eval_program_scalar)
        run(jitted)  # compile before timing
        t_nb = timeit(lambda: run(jitted), repeats=3)
        line += f"   numba {t_nb * 1e3:8.1f} ms   speedup {t_np / t_nb:5.1f}x"
    print(line)


def main():
    print(f"active backend: {kernels.BACKEND} (numba installed: {HAVE_NUMBA})")
    bench_closure()
    bench_eval()


if __name__ == "__main__":
    main()
