"""Decide term equality and order in each variety.

Two independent routes: exhaustive evaluation over the variety's small
characteristic models (2, 3_L, 3_R), and comparison of normal forms in the
finite free algebra.  The finite-model route returns the first falsifying
assignment as a witness; assignments are enumerated lexicographically with
variables in alphabet order and model elements ordered 0 < 1 < 2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import CapExceeded
from .free import Variety, eval_term
from .primitive import PrimitiveShape, op_tables
from .terms import Diff, Join, Meet, Term, Variable, Zero, Alphabet, variables

__all__ = [
    "Verdict", "Witness", "VARIABLE_CAP",
    "decide_equal", "decide_equal_nf", "decide_leq", "decide_preceq",
    "identity_suite", "IdentityCheck", "union_alphabet",
]

VARIABLE_CAP = 12  # 3^12 assignments; beyond this the normal-form route is authoritative

_MODEL_SHAPES = {"2": PrimitiveShape(1, 1),
                 "3L": PrimitiveShape(2, 1),
                 "3R": PrimitiveShape(1, 2)}

_VARIETY_MODELS = {Variety.LSBA: ("3L",),
                   Variety.RSBA: ("3R",),
                   Variety.SBA: ("3L", "3R"),
                   Variety.GBA: ("2",)}

_model_cache: dict[str, tuple] = {}


def _model(name: str):
    entry = _model_cache.get(name)
    if entry is None:
        t = op_tables(_MODEL_SHAPES[name])
        entry = (_MODEL_SHAPES[name].size, t["meet"], t["join"], t["diff"])
        _model_cache[name] = entry
    return entry


@dataclass(frozen=True)
class Witness:
    """A falsifying assignment into one of the characteristic models."""

    model: str
    assignment: dict
    left_value: int
    right_value: int

    def __str__(self):
        vals = " ".join(f"{k}={v}" for k, v in self.assignment.items())
        return f"[{self.model}] {vals} gives {self.left_value} vs {self.right_value}"


@dataclass(frozen=True)
class Verdict:
    equal: bool
    witness: Witness | None = None

    def __bool__(self):
        return self.equal


def union_alphabet(t1: Term, t2: Term) -> Alphabet:
    names = dict.fromkeys(variables(t1).names)
    names.update(dict.fromkeys(variables(t2).names))
    return Alphabet(names)


def compile_program(t: Term, alphabet: Alphabet) -> tuple[np.ndarray, np.ndarray]:
    """Postorder instruction arrays for the evaluation kernels."""
    ops: list[int] = []
    args: list[int] = []

    def walk(node: Term):
        if isinstance(node, Zero):
            ops.append(kernels.OP_ZERO)
            args.append(0)
        elif isinstance(node, Variable):
            ops.append(kernels.OP_VAR)
            args.append(alphabet.index[node.name])
        else:
            walk(node.left)
            walk(node.right)
            ops.append({Meet: kernels.OP_MEET, Join: kernels.OP_JOIN,
                        Diff: kernels.OP_DIFF}[type(node)])
            args.append(0)

    walk(t)
    return np.array(ops, dtype=np.int64), np.array(args, dtype=np.int64)


def decide_equal(variety: Variety, t1: Term, t2: Term) -> Verdict:
    """Exhaustive evaluation over the variety's characteristic models."""
    alphabet = union_alphabet(t1, t2)
    n = len(alphabet)
    if n > VARIABLE_CAP:
        raise CapExceeded(
            f"exhaustive evaluation capped at {VARIABLE_CAP} variables, term pair has {n}")
    p1 = compile_program(t1, alphabet)
    p2 = compile_program(t2, alphabet)
    for model_name in _VARIETY_MODELS[variety]:
        size, meet, join, diff = _model(model_name)
        assigns = kernels.assignment_matrix(n, size)
        r1 = kernels.eval_program(*p1, assigns, meet, join, diff)
        r2 = kernels.eval_program(*p2, assigns, meet, join, diff)
        unequal = np.nonzero(r1 != r2)[0]
        if unequal.size:
            idx = int(unequal[0])
            assignment = {name: int(assigns[idx, i]) for i, name in enumerate(alphabet.names)}
            return Verdict(False, Witness(model_name, assignment, int(r1[idx]), int(r2[idx])))
    return Verdict(True)


def decide_equal_nf(variety: Variety, t1: Term, t2: Term) -> Verdict:
    """Normal-form comparison in the free algebra over the union alphabet."""
    alphabet = union_alphabet(t1, t2)
    e1 = eval_term(variety, alphabet, t1)
    e2 = eval_term(variety, alphabet, t2)
    if e1.atoms == e2.atoms:
        return Verdict(True)
    if len(alphabet) <= VARIABLE_CAP:
        model_verdict = decide_equal(variety, t1, t2)
        if model_verdict.witness is None:
            raise RuntimeError("normal forms differ but no model witness exists")
        return Verdict(False, model_verdict.witness)
    return Verdict(False)


def decide_leq(variety: Variety, t1: Term, t2: Term) -> Verdict:
    """t1 <= t2 in the natural partial order: t2&t1 = t1 = t1&t2 as identities."""
    v = decide_equal(variety, Meet(t2, t1), t1)
    if not v.equal:
        return v
    return decide_equal(variety, Meet(t1, t2), t1)


def decide_preceq(variety: Variety, t1: Term, t2: Term) -> Verdict:
    """t1 preceq t2 in the natural preorder: t1&t2&t1 = t1 as an identity."""
    return decide_equal(variety, Meet(Meet(t1, t2), t1), t1)


ALL = frozenset(Variety)
_LEFTLIKE = frozenset({Variety.LSBA, Variety.GBA})
_RIGHTLIKE = frozenset({Variety.RSBA, Variety.GBA})
_GBA_ONLY = frozenset({Variety.GBA})


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    equation: str
    expected: frozenset
    results: dict

    @property
    def ok(self) -> bool:
        return all(self.results[v] == (v in self.expected) for v in Variety)


_IDENTITY_TABLE = [
    ("difference distributes over meet", r"(x & y) \ z = (x \ z) & (y \ z)", ALL),
    ("difference distributes over join", r"(x | y) \ z = (x \ z) | (y \ z)", ALL),
    ("de Morgan for join", r"x \ (y | z) = (x \ y) & (x \ z)", ALL),
    ("de Morgan for meet", r"x \ (y & z) = (x \ y) | (x \ z)", ALL),
    ("iterated difference commutes", r"(x \ y) \ z = (x \ z) \ y", ALL),
    ("iterated difference as joined difference", r"(x \ y) \ z = x \ (y | z)", ALL),
    ("subtrahend join commutes", r"x \ (y | z) = x \ (z | y)", ALL),
    ("double difference", r"x \ (x \ y) = x & y & x", ALL),
    ("difference-join absorption", r"(x \ y) | y = y | x | y", ALL),
    ("difference-join commutation", r"(x \ y) | y = y | (x \ y)", ALL),
    ("difference ignores meet", r"x \ (x & y) = x \ y", ALL),
    ("difference ignores reversed meet", r"x \ (y & x) = x \ y", ALL),
    ("absorption (a)", r"x & (x | y) = x", ALL),
    ("absorption (b)", r"(y | x) & x = x", ALL),
    ("absorption (c)", r"x | (x & y) = x", ALL),
    ("absorption (d)", r"(y & x) | x = x", ALL),
    ("complement join", r"(x & y & x) | (x \ y) = x", ALL),
    ("complement meet", r"(x & y & x) & (x \ y) = 0", ALL),
    ("complement meet reversed", r"(x \ y) & (x & y & x) = 0", ALL),
    ("strong distributivity (left)", r"x & (y | z) = (x & y) | (x & z)", ALL),
    ("strong distributivity (right)", r"(x | y) & z = (x & z) | (y & z)", ALL),
    ("meet commutativity", r"x & y = y & x", _GBA_ONLY),
    ("join commutativity", r"x | y = y | x", _GBA_ONLY),
    ("left-handed meet", r"x & y & x = x & y", _LEFTLIKE),
    ("left-handed join", r"x | y | x = y | x", _LEFTLIKE),
    ("right-handed meet", r"x & y & x = y & x", _RIGHTLIKE),
    ("right-handed join", r"x | y | x = x | y", _RIGHTLIKE),
]


def identity_suite() -> list[IdentityCheck]:
    """Run the identity battery through decide_equal in every variety."""
    from .terms import parse

    out = []
    for name, equation, expected in _IDENTITY_TABLE:
        lhs, rhs = equation.split("=")
        t1, t2 = parse(lhs), parse(rhs)
        results = {v: decide_equal(v, t1, t2).equal for v in Variety}
        out.append(IdentityCheck(name, equation, expected, results))
    return out
