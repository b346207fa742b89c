import random

import numpy as np
import pytest

from skewbool import kernels
from skewbool.decide import compile_program
from skewbool.orthosum import elem_diff, elem_join, elem_meet, parse_signature
from skewbool.primitive import PrimitiveShape, op_tables
from skewbool.terms import Alphabet

from conftest import random_term

try:
    import numba  # noqa: F401
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

needs_numba = pytest.mark.skipif(not HAVE_NUMBA, reason="numba not installed")


SIGS = [parse_signature(s) for s in ["2", "3L", "3L^4", "2 3L*3R 4R", "3L 3R 2^2"]]


class TestEncoding:
    def test_round_trip(self):
        for sig in SIGS:
            tables = kernels.sig_tables(sig.factors)
            elems = list(sig.elements())
            keys = kernels.encode_elements(tables, elems)
            assert sorted(int(k) for k in keys) == list(range(sig.size))
            for e, k in zip(elems, keys):
                assert kernels.decode_key(tables, int(k)) == e

    def test_key_order_is_lexicographic(self):
        sig = parse_signature("3L 2")
        tables = kernels.sig_tables(sig.factors)
        elems = list(sig.elements())
        keys = kernels.encode_elements(tables, elems)
        assert list(keys) == sorted(keys)


class TestOpOnKeys:
    def test_matches_elementwise_ops(self):
        rng = random.Random(3)
        for sig in SIGS:
            tables = kernels.sig_tables(sig.factors)
            elems = list(sig.elements())
            xs = [rng.choice(elems) for _ in range(50)]
            ys = [rng.choice(elems) for _ in range(50)]
            xk = kernels.encode_elements(tables, xs)
            yk = kernels.encode_elements(tables, ys)
            for name, fn in (("meet", elem_meet), ("join", elem_join), ("diff", elem_diff)):
                out = kernels.op_on_keys(tables, name, xk, yk)
                expected = kernels.encode_elements(tables, [fn(sig, x, y)
                                                            for x, y in zip(xs, ys)])
                assert np.array_equal(out, expected)


class TestAssignmentMatrix:
    def test_lexicographic_most_significant_first(self):
        m = kernels.assignment_matrix(2, 3)
        assert m.shape == (9, 2)
        assert [tuple(r) for r in m[:4]] == [(0, 0), (0, 1), (0, 2), (1, 0)]

    def test_zero_variables(self):
        m = kernels.assignment_matrix(0, 3)
        assert m.shape == (1, 0)


def _closure_both(sig, seeds):
    tables = kernels.sig_tables(sig.factors)
    seed_keys = kernels.encode_elements(tables, seeds)
    results = [kernels._closure_numpy(tables, seed_keys)]
    if HAVE_NUMBA:
        results.append(kernels._closure_numba(tables, seed_keys))
    return results


class TestClosureBackends:
    def test_backends_agree(self):
        rng = random.Random(21)
        for sig in SIGS:
            elems = list(sig.elements())
            seeds = [sig.zero()] + [rng.choice(elems) for _ in range(2)]
            results = _closure_both(sig, seeds)
            first = [int(k) for k in results[0]]
            for other in results[1:]:
                assert [int(k) for k in other] == first

    def test_full_algebra_early_exit(self):
        sig = parse_signature("3L^4")
        seeds = [(0, 0, 0, 0), (1, 1, 0, 1), (2, 0, 1, 2), (0, 2, 2, 2), (1, 0, 0, 0),
                 (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (2, 0, 0, 0), (0, 2, 0, 0),
                 (0, 0, 2, 0), (0, 0, 0, 2)]
        for result in _closure_both(sig, seeds):
            assert len(result) == sig.size


class TestEvalProgramBackends:
    @needs_numba
    def test_backends_agree_on_random_programs(self):
        rng = random.Random(31)
        names = ["x", "y", "z"]
        alphabet = Alphabet(names)
        t3l = op_tables(PrimitiveShape(2, 1))
        assigns = kernels.assignment_matrix(3, 3)
        for _ in range(50):
            ops, args = compile_program(random_term(rng, names, 5), alphabet)
            a = kernels._eval_program_numpy(ops, args, assigns,
                                            t3l["meet"], t3l["join"], t3l["diff"])
            b = kernels._jit("eval_program", kernels._eval_program_scalar)(
                ops, args, assigns, t3l["meet"], t3l["join"], t3l["diff"])
            assert np.array_equal(a, b)

    def test_numpy_program_matches_reference(self):
        from conftest import eval_term_direct

        rng = random.Random(32)
        names = ["x", "y"]
        alphabet = Alphabet(names)
        sig = parse_signature("3L")
        t3l = op_tables(PrimitiveShape(2, 1))
        assigns = kernels.assignment_matrix(2, 3)
        for _ in range(40):
            t = random_term(rng, names, 4)
            ops, args = compile_program(t, alphabet)
            got = kernels._eval_program_numpy(ops, args, assigns,
                                              t3l["meet"], t3l["join"], t3l["diff"])
            for row, value in zip(assigns, got):
                assignment = {name: (int(code),) for name, code in zip(names, row)}
                assert eval_term_direct(sig, assignment, t) == (int(value),)


class TestBackendSelection:
    def test_backend_is_valid(self):
        assert kernels.BACKEND in ("numba", "numpy")

    def test_env_override(self, monkeypatch):
        monkeypatch.setenv("SKEWBOOL_BACKEND", "numpy")
        assert kernels._pick_backend() == "numpy"
        monkeypatch.setenv("SKEWBOOL_BACKEND", "bogus")
        with pytest.raises(ValueError):
            kernels._pick_backend()
