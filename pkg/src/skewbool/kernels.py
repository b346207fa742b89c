"""Vectorized kernels for the two hot loops: subalgebra closure saturation and
exhaustive evaluation of term programs over finite models.

Elements of a product of primitives are packed into int64 keys in mixed radix
(first factor most significant, so key order is lexicographic tuple order).
Both kernels exist in a pure-numpy version and a numba ``@njit`` version; the
active backend is chosen once at import from the ``SKEWBOOL_BACKEND``
environment variable (``numba`` or ``numpy``).  The default is numba when it
imports, numpy otherwise.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .primitive import PrimitiveShape, op_tables

__all__ = [
    "BACKEND", "SigTables", "sig_tables", "encode_elements", "decode_key",
    "closure_keys", "op_on_keys", "eval_program", "assignment_matrix",
    "OP_VAR", "OP_ZERO", "OP_MEET", "OP_JOIN", "OP_DIFF",
]


def _pick_backend() -> str:
    choice = os.environ.get("SKEWBOOL_BACKEND", "").strip().lower()
    if choice == "numpy":
        return "numpy"
    if choice == "numba":
        import numba  # noqa: F401 -- fail loudly if explicitly requested but absent
        return "numba"
    if choice == "":
        try:
            import numba  # noqa: F401
            return "numba"
        except ImportError:
            return "numpy"
    raise ValueError(f"SKEWBOOL_BACKEND must be 'numba' or 'numpy', got {choice!r}")


BACKEND = _pick_backend()

_jitted: dict[str, object] = {}


def _jit(name: str, pyfunc):
    fn = _jitted.get(name)
    if fn is None:
        from numba import njit

        fn = njit(cache=True)(pyfunc)
        _jitted[name] = fn
    return fn


@dataclass
class SigTables:
    """Operation tables of a product of primitive shapes, padded to a common size."""

    sizes: np.ndarray    # (nf,) int64 factor sizes
    strides: np.ndarray  # (nf,) int64 mixed-radix strides, first factor most significant
    meet: np.ndarray     # (nf, smax, smax) int64
    join: np.ndarray
    diff: np.ndarray
    total: int


@lru_cache(maxsize=256)
def sig_tables(factors: tuple[PrimitiveShape, ...]) -> SigTables:
    nf = len(factors)
    sizes = np.array([s.size for s in factors], dtype=np.int64)
    strides = np.empty(nf, dtype=np.int64)
    acc = 1
    for i in range(nf - 1, -1, -1):
        strides[i] = acc
        acc *= int(sizes[i])
    smax = int(sizes.max()) if nf else 1
    meet = np.zeros((nf, smax, smax), dtype=np.int64)
    join = np.zeros_like(meet)
    diff = np.zeros_like(meet)
    for i, shape in enumerate(factors):
        t = op_tables(shape)
        s = shape.size
        meet[i, :s, :s] = t["meet"]
        join[i, :s, :s] = t["join"]
        diff[i, :s, :s] = t["diff"]
    return SigTables(sizes=sizes, strides=strides, meet=meet, join=join, diff=diff, total=acc)


def encode_elements(tables: SigTables, elems) -> np.ndarray:
    arr = np.asarray(list(elems), dtype=np.int64)
    if arr.size == 0:
        return np.empty(0, dtype=np.int64)
    if arr.ndim == 1:  # a single element was passed
        arr = arr[None, :]
    return arr @ tables.strides if tables.strides.size else np.zeros(arr.shape[0], dtype=np.int64)


def decode_key(tables: SigTables, key: int) -> tuple[int, ...]:
    return tuple(int(key // st) % int(sz) for st, sz in zip(tables.strides, tables.sizes))


def _digits(tables: SigTables, keys: np.ndarray) -> list[np.ndarray]:
    return [(keys // st) % sz for st, sz in zip(tables.strides, tables.sizes)]


def op_on_keys(tables: SigTables, op: str, xkeys: np.ndarray, ykeys: np.ndarray) -> np.ndarray:
    """Componentwise operation on packed keys, broadcasting x against y."""
    table = getattr(tables, op)
    out = np.zeros(np.broadcast_shapes(xkeys.shape, ykeys.shape), dtype=np.int64)
    for f in range(tables.sizes.size):
        st, sz = tables.strides[f], tables.sizes[f]
        out += table[f][(xkeys // st) % sz, (ykeys // st) % sz] * st
    return out


# --- closure saturation -----------------------------------------------------

_CHUNK = 1 << 21  # pair block budget for the numpy rounds


def _closure_numpy(tables: SigTables, seeds: np.ndarray) -> np.ndarray:
    total = tables.total
    visited = np.zeros(total, dtype=bool)
    known = np.unique(seeds)
    visited[known] = True
    nvisited = known.size
    frontier = known
    while frontier.size and nvisited < total:
        fresh_parts = []
        for X, Y in ((frontier, known), (known, frontier)):
            step = max(1, _CHUNK // max(1, Y.size))
            dy = _digits(tables, Y)
            for start in range(0, X.size, step):
                xc = X[start:start + step]
                accs = [np.zeros((xc.size, Y.size), dtype=np.int64) for _ in range(3)]
                for f in range(tables.sizes.size):
                    st, sz = tables.strides[f], tables.sizes[f]
                    dxf = ((xc // st) % sz)[:, None]
                    dyf = dy[f][None, :]
                    accs[0] += tables.meet[f][dxf, dyf] * st
                    accs[1] += tables.join[f][dxf, dyf] * st
                    accs[2] += tables.diff[f][dxf, dyf] * st
                for acc in accs:
                    keys = acc.ravel()
                    fresh = keys[~visited[keys]]
                    if fresh.size:
                        fresh = np.unique(fresh)
                        visited[fresh] = True
                        nvisited += fresh.size
                        fresh_parts.append(fresh)
                        if nvisited >= total:
                            return np.arange(total, dtype=np.int64)
        if not fresh_parts:
            break
        frontier = np.concatenate(fresh_parts)
        known = np.concatenate([known, frontier])
    return np.flatnonzero(visited).astype(np.int64)


def _closure_pairs(meet, join, diff, sizes, strides, total, seeds):
    # Scan i over the growing element list, pairing with every j <= i in both
    # orders; bail out as soon as the whole ambient algebra is reached.
    visited = np.zeros(total, dtype=np.bool_)
    elems = np.empty(total, dtype=np.int64)
    count = 0
    for s in seeds:
        if not visited[s]:
            visited[s] = True
            elems[count] = s
            count += 1
    nf = sizes.size
    i = 0
    while i < count and count < total:
        x = elems[i]
        j = 0
        while j <= i:
            y = elems[j]
            m1 = 0; j1 = 0; d1 = 0
            m2 = 0; j2 = 0; d2 = 0
            for f in range(nf):
                st = strides[f]
                sz = sizes[f]
                dx = (x // st) % sz
                dy = (y // st) % sz
                m1 += meet[f, dx, dy] * st
                j1 += join[f, dx, dy] * st
                d1 += diff[f, dx, dy] * st
                m2 += meet[f, dy, dx] * st
                j2 += join[f, dy, dx] * st
                d2 += diff[f, dy, dx] * st
            if not visited[m1]:
                visited[m1] = True; elems[count] = m1; count += 1
            if not visited[j1]:
                visited[j1] = True; elems[count] = j1; count += 1
            if not visited[d1]:
                visited[d1] = True; elems[count] = d1; count += 1
            if not visited[m2]:
                visited[m2] = True; elems[count] = m2; count += 1
            if not visited[j2]:
                visited[j2] = True; elems[count] = j2; count += 1
            if not visited[d2]:
                visited[d2] = True; elems[count] = d2; count += 1
            if count >= total:
                break
            j += 1
        i += 1
    if count >= total:
        return np.arange(total, dtype=np.int64)
    return np.sort(elems[:count])


def _closure_numba(tables: SigTables, seeds: np.ndarray) -> np.ndarray:
    fn = _jit("closure_pairs", _closure_pairs)
    return fn(tables.meet, tables.join, tables.diff, tables.sizes, tables.strides,
              tables.total, seeds)


def closure_keys(tables: SigTables, seeds: np.ndarray) -> np.ndarray:
    """Sorted keys of the subalgebra generated by ``seeds`` under meet, join, diff."""
    if seeds.size == 0:
        return seeds
    if BACKEND == "numba":
        return _closure_numba(tables, seeds)
    return _closure_numpy(tables, seeds)


# --- term program evaluation ------------------------------------------------

OP_VAR, OP_ZERO, OP_MEET, OP_JOIN, OP_DIFF = 0, 1, 2, 3, 4


@lru_cache(maxsize=64)
def assignment_matrix(nvars: int, base: int) -> np.ndarray:
    """All assignments of ``nvars`` variables to codes 0..base-1, enumerated
    lexicographically with the first variable most significant.  Cached;
    callers must not mutate the result."""
    count = base ** nvars
    if nvars == 0:
        return np.empty((1, 0), dtype=np.int64)
    idx = np.arange(count, dtype=np.int64)
    cols = [(idx // base ** (nvars - 1 - v)) % base for v in range(nvars)]
    return np.stack(cols, axis=1)


def _eval_program_numpy(ops, args, assigns, meet, join, diff):
    stack = []
    count = assigns.shape[0]
    for k in range(ops.size):
        op = ops[k]
        if op == OP_VAR:
            stack.append(assigns[:, args[k]])
        elif op == OP_ZERO:
            stack.append(np.zeros(count, dtype=np.int64))
        else:
            b = stack.pop()
            a = stack.pop()
            table = meet if op == OP_MEET else join if op == OP_JOIN else diff
            stack.append(table[a, b])
    return stack[0]


def _eval_program_scalar(ops, args, assigns, meet, join, diff):
    count = assigns.shape[0]
    out = np.empty(count, dtype=np.int64)
    stack = np.empty(ops.size + 1, dtype=np.int64)
    for ai in range(count):
        sp = 0
        for k in range(ops.size):
            op = ops[k]
            if op == OP_VAR:
                stack[sp] = assigns[ai, args[k]]
                sp += 1
            elif op == OP_ZERO:
                stack[sp] = 0
                sp += 1
            else:
                b = stack[sp - 1]
                a = stack[sp - 2]
                sp -= 1
                if op == OP_MEET:
                    stack[sp - 1] = meet[a, b]
                elif op == OP_JOIN:
                    stack[sp - 1] = join[a, b]
                else:
                    stack[sp - 1] = diff[a, b]
        out[ai] = stack[0]
    return out


def eval_program(ops: np.ndarray, args: np.ndarray, assigns: np.ndarray,
                 meet: np.ndarray, join: np.ndarray, diff: np.ndarray) -> np.ndarray:
    """Evaluate a postorder term program over every assignment row; returns codes."""
    if BACKEND == "numba":
        fn = _jit("eval_program", _eval_program_scalar)
        return fn(ops, args, assigns, meet, join, diff)
    return _eval_program_numpy(ops, args, assigns, meet, join, diff)
