"""Shared test helpers: random term generation and brute-force oracles."""

from __future__ import annotations

import random

import pytest

from skewbool.free import FreeAtom, FreeElement, Variety
from skewbool.orthosum import elem_diff, elem_join, elem_meet
from skewbool.terms import Diff, Join, Meet, Term, Variable, Zero


def random_term(rng: random.Random, names: list[str], depth: int) -> Term:
    """Random term of the given maximum depth; leaves are variables or 0."""
    if depth == 0 or rng.random() < 0.25:
        if rng.random() < 0.12:
            return Zero()
        return Variable(rng.choice(names))
    op = rng.choice((Meet, Join, Diff))
    return op(random_term(rng, names, depth - 1), random_term(rng, names, depth - 1))


def term_pairs(seed: int, count: int, names: list[str], depth: int):
    rng = random.Random(seed)
    return [(random_term(rng, names, depth), random_term(rng, names, depth))
            for _ in range(count)]


def eval_term_direct(sig, assignment: dict, t: Term):
    """Reference term evaluator over orthosum elements, independent of the kernels."""
    if isinstance(t, Zero):
        return sig.zero()
    if isinstance(t, Variable):
        return assignment[t.name]
    a = eval_term_direct(sig, assignment, t.left)
    b = eval_term_direct(sig, assignment, t.right)
    if isinstance(t, Meet):
        return elem_meet(sig, a, b)
    if isinstance(t, Join):
        return elem_join(sig, a, b)
    return elem_diff(sig, a, b)


def commutes_with_all(sig, x, elements) -> bool:
    """Brute-force centrality: x meet- and join-commutes with every element."""
    return all(elem_meet(sig, x, y) == elem_meet(sig, y, x)
               and elem_join(sig, x, y) == elem_join(sig, y, x)
               for y in elements)


def random_free_element(rng: random.Random, variety: Variety, alphabet) -> FreeElement:
    n = len(alphabet)
    atoms = []
    for mask in range(1, 1 << n):
        members = [i for i in range(n) if (mask >> i) & 1]
        size = variety.class_size(len(members))
        pick = rng.randrange(size + 1)
        if pick == 0:
            continue
        pick -= 1
        if variety is Variety.GBA:
            atoms.append(FreeAtom(mask))
        elif variety is Variety.LSBA:
            atoms.append(FreeAtom(mask, members[pick], None))
        elif variety is Variety.RSBA:
            atoms.append(FreeAtom(mask, None, members[pick]))
        else:
            k = len(members)
            atoms.append(FreeAtom(mask, members[pick // k], members[pick % k]))
    return FreeElement(variety, alphabet, frozenset(atoms))


@pytest.fixture(scope="session")
def warm_kernels():
    """Compile the jitted kernels once so timed tests measure steady state."""
    from skewbool import closure, parse_signature
    from skewbool.decide import decide_equal
    from skewbool.terms import parse

    closure(parse_signature("3L"), [(1,)])
    decide_equal(Variety.LSBA, parse("x & y"), parse("y & x"))
    return True
