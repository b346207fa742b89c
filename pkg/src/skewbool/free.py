"""Finite free skew Boolean algebras in the four varieties.

Atoms of the free algebra on an alphabet are (possibly pointed) nonempty
variable subsets: a support bitmask plus a left and/or right leader depending
on the variety.  An element is a set of atoms with pairwise distinct supports,
which is exactly its orthosum normal form; term evaluation, intersections,
centers and alphabet extension all act on these atom sets directly.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import reduce
from math import comb, prod

from .orthosum import AlgebraSignature
from .primitive import PrimitiveShape
from .terms import Alphabet, Diff, Join, Meet, Term, Variable, Zero, variables

__all__ = [
    "Variety", "FreeAtom", "FreeElement", "MAX_VARIABLES",
    "free_signature", "free_size", "atom_count", "support_order",
    "generator_embedding", "eval_term", "normal_form_terms", "format_orthosum",
    "extend_alphabet", "free_intersection", "free_center_size", "is_central_free",
    "to_finite", "from_finite", "enumerate_elements",
    "kimura_left", "kimura_right",
    "element_to_json", "element_from_json",
]

MAX_VARIABLES = 63  # supports are bitmasks in a machine word


class Variety(enum.Enum):
    LSBA = "lsba"
    RSBA = "rsba"
    SBA = "sba"
    GBA = "gba"

    @classmethod
    def parse(cls, text: str) -> "Variety":
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise ValueError(f"unknown variety {text!r}; expected lsba, rsba, sba or gba") from None

    @property
    def has_left(self) -> bool:
        return self in (Variety.LSBA, Variety.SBA)

    @property
    def has_right(self) -> bool:
        return self in (Variety.RSBA, Variety.SBA)

    def class_size(self, k: int) -> int:
        """Size of an atomic D-class whose support has k variables."""
        if self is Variety.GBA:
            return 1
        if self is Variety.SBA:
            return k * k
        return k

    def shape_for(self, k: int) -> PrimitiveShape:
        if self is Variety.GBA:
            return PrimitiveShape(1, 1)
        if self is Variety.LSBA:
            return PrimitiveShape(k, 1)
        if self is Variety.RSBA:
            return PrimitiveShape(1, k)
        return PrimitiveShape(k, k)


@dataclass(frozen=True)
class FreeAtom:
    """An atom: support bitmask plus leaders (left and/or right per variety)."""

    support: int
    left: int | None = None
    right: int | None = None


@dataclass(frozen=True)
class FreeElement:
    """A set of atoms with pairwise distinct supports: the orthosum normal form."""

    variety: Variety
    alphabet: Alphabet
    atoms: frozenset

    def __post_init__(self):
        object.__setattr__(self, "atoms", frozenset(self.atoms))
        n = len(self.alphabet)
        if n > MAX_VARIABLES:
            raise ValueError(f"alphabets are capped at {MAX_VARIABLES} variables")
        full = (1 << n) - 1
        supports = set()
        for a in self.atoms:
            if not 0 < a.support <= full:
                raise ValueError(f"atom support {a.support:#b} outside the alphabet")
            if a.support in supports:
                raise ValueError("two atoms share a support")
            supports.add(a.support)
            if (a.left is not None) != self.variety.has_left or \
               (a.right is not None) != self.variety.has_right:
                raise ValueError(f"atom leaders {a} do not fit variety {self.variety.value}")
            for leader in (a.left, a.right):
                if leader is not None and not (a.support >> leader) & 1:
                    raise ValueError(f"leader {leader} outside its support")

    @property
    def is_zero(self) -> bool:
        return not self.atoms

    def by_support(self) -> dict:
        return {a.support: a for a in self.atoms}


def support_order(n: int) -> list[int]:
    """Canonical factor order: nonempty supports by ascending size, then mask value."""
    return sorted(range(1, 1 << n), key=lambda m: (m.bit_count(), m))


def free_signature(variety: Variety, n: int) -> AlgebraSignature:
    return AlgebraSignature(tuple(variety.shape_for(m.bit_count()) for m in support_order(n)))


def free_size(variety: Variety, n: int) -> int:
    return prod((variety.class_size(k) + 1) ** comb(n, k) for k in range(1, n + 1))


def atom_count(variety: Variety, n: int) -> int:
    """Number of atoms, by closed form, cross-checked against the binomial sum."""
    by_sum = sum(comb(n, k) * variety.class_size(k) for k in range(1, n + 1))
    if n == 0:
        closed = 0
    elif variety is Variety.GBA:
        closed = (1 << n) - 1
    elif variety is Variety.SBA:
        closed = (n * (n + 1) << n) >> 2
    else:
        closed = n << (n - 1)
    if closed != by_sum:
        raise RuntimeError(f"atom count mismatch for {variety}: {closed} != {by_sum}")
    return closed


def _atom(variety: Variety, support: int, left: int | None, right: int | None) -> FreeAtom:
    return FreeAtom(support,
                    left if variety.has_left else None,
                    right if variety.has_right else None)


def generator_embedding(variety: Variety, alphabet: Alphabet, i: int) -> FreeElement:
    """The i-th generator as an orthosum of one atom per support containing it,
    with every leader equal to the generator itself."""
    n = len(alphabet)
    if not 0 <= i < n:
        raise ValueError(f"generator index {i} out of range")
    rest = [j for j in range(n) if j != i]
    atoms = []
    for r in range(len(rest) + 1):
        for combo in itertools.combinations(rest, r):
            support = (1 << i) | sum(1 << j for j in combo)
            atoms.append(_atom(variety, support, i, i))
    return FreeElement(variety, alphabet, frozenset(atoms))


def _meet_atoms(variety, m1, m2):
    out = {}
    for s, a in m1.items():
        b = m2.get(s)
        if b is not None:
            out[s] = _atom(variety, s, a.left, b.right)
    return out


def _join_atoms(variety, m1, m2):
    out = {}
    for s in m1.keys() | m2.keys():
        a, b = m1.get(s), m2.get(s)
        if a is None:
            out[s] = b
        elif b is None:
            out[s] = a
        else:
            out[s] = _atom(variety, s, b.left, a.right)
    return out


def _diff_atoms(variety, m1, m2):
    return {s: a for s, a in m1.items() if s not in m2}


def eval_term(variety: Variety, alphabet: Alphabet, t: Term) -> FreeElement:
    """Evaluate a term to its normal form over the given alphabet."""
    for name in variables(t):
        if name not in alphabet:
            raise ValueError(f"unknown variable {name!r}")
    gens = {}

    def ev(node: Term) -> dict:
        if isinstance(node, Zero):
            return {}
        if isinstance(node, Variable):
            i = alphabet.index[node.name]
            if i not in gens:
                gens[i] = generator_embedding(variety, alphabet, i).by_support()
            return gens[i]
        a, b = ev(node.left), ev(node.right)
        if isinstance(node, Meet):
            return _meet_atoms(variety, a, b)
        if isinstance(node, Join):
            return _join_atoms(variety, a, b)
        return _diff_atoms(variety, a, b)

    return FreeElement(variety, alphabet, frozenset(ev(t).values()))


def _atom_sort_key(a: FreeAtom):
    return (a.support.bit_count(), a.support,
            -1 if a.left is None else a.left,
            -1 if a.right is None else a.right)


def _atom_term(variety: Variety, alphabet: Alphabet, a: FreeAtom) -> Term:
    support = [i for i in range(len(alphabet)) if (a.support >> i) & 1]
    outside = [i for i in range(len(alphabet)) if not (a.support >> i) & 1]
    if variety is Variety.GBA:
        chain = support
    elif variety is Variety.LSBA:
        chain = [a.left] + [i for i in support if i != a.left]
    elif variety is Variety.RSBA:
        chain = [i for i in support if i != a.right] + [a.right]
    elif len(support) == 1:
        chain = support
    elif a.left != a.right:
        chain = [a.left] + [i for i in support if i not in (a.left, a.right)] + [a.right]
    else:
        chain = [a.left] + [i for i in support if i != a.left] + [a.left]
    meet_part = reduce(Meet, (Variable(alphabet.names[i]) for i in chain))
    if not outside:
        return meet_part
    join_part = reduce(Join, (Variable(alphabet.names[i]) for i in outside))
    return Diff(meet_part, join_part)


def normal_form_terms(e: FreeElement) -> list[Term]:
    """One term per atom, in canonical atom order; their orthosum re-evaluates to e."""
    return [_atom_term(e.variety, e.alphabet, a)
            for a in sorted(e.atoms, key=_atom_sort_key)]


def format_orthosum(e: FreeElement) -> str:
    from .terms import format_term

    if e.is_zero:
        return "0"
    parts = []
    for t in normal_form_terms(e):
        s = format_term(t)
        parts.append(f"({s})" if isinstance(t, (Meet, Join, Diff)) else s)
    return " + ".join(parts)


def extend_alphabet(e: FreeElement, new_var: str) -> FreeElement:
    """Adjoin a fresh variable: every atom splits into its support-extended copy
    plus itself; the element denotes the same term value."""
    alphabet = e.alphabet.extended(new_var)
    j = len(e.alphabet)
    atoms = []
    for a in e.atoms:
        atoms.append(a)
        atoms.append(FreeAtom(a.support | (1 << j), a.left, a.right))
    return FreeElement(e.variety, alphabet, frozenset(atoms))


def free_intersection(e1: FreeElement, e2: FreeElement) -> FreeElement:
    """Greatest lower bound: the orthosum of the atoms common to both."""
    if e1.variety is not e2.variety or e1.alphabet != e2.alphabet:
        raise ValueError("intersection needs a common variety and alphabet")
    return FreeElement(e1.variety, e1.alphabet, e1.atoms & e2.atoms)


def is_central_free(e: FreeElement) -> bool:
    if e.variety is Variety.GBA:
        return True
    return all(a.support.bit_count() == 1 for a in e.atoms)


def free_center_size(variety: Variety, n: int) -> int:
    # All of a free GBA is central; in the skew varieties only the orthosums of
    # singleton-support atoms are.
    if variety is Variety.GBA:
        return free_size(variety, n)
    return 1 << n


# --- the isomorphism with the product-of-primitives form ----------------------

def _sorted_support(a: FreeAtom, n: int) -> list[int]:
    return [i for i in range(n) if (a.support >> i) & 1]


def to_finite(e: FreeElement) -> tuple:
    """Coordinates of e in ``free_signature(variety, n)``: per support, zero or the
    code of (leader rank, leader rank) inside the atomic class."""
    n = len(e.alphabet)
    by_support = e.by_support()
    coords = []
    for mask in support_order(n):
        a = by_support.get(mask)
        if a is None:
            coords.append(0)
            continue
        members = _sorted_support(a, n)
        row = members.index(a.left) if a.left is not None else 0
        col = members.index(a.right) if a.right is not None else 0
        coords.append(e.variety.shape_for(len(members)).element(row, col))
    return tuple(coords)


def from_finite(variety: Variety, alphabet: Alphabet, coords) -> FreeElement:
    n = len(alphabet)
    order = support_order(n)
    if len(coords) != len(order):
        raise ValueError("coordinate count does not match the free signature")
    atoms = []
    for mask, code in zip(order, coords):
        if code == 0:
            continue
        members = [i for i in range(n) if (mask >> i) & 1]
        shape = variety.shape_for(len(members))
        shape.check(code)
        atoms.append(_atom(variety, mask,
                           members[shape.row_of(code)], members[shape.col_of(code)]))
    return FreeElement(variety, alphabet, frozenset(atoms))


def enumerate_elements(variety: Variety, alphabet: Alphabet):
    """Every element of the free algebra; feasible only for small alphabets."""
    n = len(alphabet)
    options = []
    for mask in support_order(n):
        members = [i for i in range(n) if (mask >> i) & 1]
        choices = [None]
        if variety is Variety.GBA:
            choices.append(_atom(variety, mask, None, None))
        elif variety is Variety.LSBA:
            choices.extend(_atom(variety, mask, l, None) for l in members)
        elif variety is Variety.RSBA:
            choices.extend(_atom(variety, mask, None, r) for r in members)
        else:
            choices.extend(_atom(variety, mask, l, r)
                           for l in members for r in members)
        options.append(choices)
    for combo in itertools.product(*options):
        yield FreeElement(variety, alphabet, frozenset(a for a in combo if a is not None))


def kimura_left(e: FreeElement) -> FreeElement:
    """Left-handed image of a two-sided element (right leaders erased)."""
    if e.variety is not Variety.SBA:
        raise ValueError("left projection applies to two-sided elements")
    return FreeElement(Variety.LSBA, e.alphabet,
                       frozenset(FreeAtom(a.support, a.left, None) for a in e.atoms))


def kimura_right(e: FreeElement) -> FreeElement:
    if e.variety is not Variety.SBA:
        raise ValueError("right projection applies to two-sided elements")
    return FreeElement(Variety.RSBA, e.alphabet,
                       frozenset(FreeAtom(a.support, None, a.right) for a in e.atoms))


# --- JSON form ----------------------------------------------------------------

def element_to_json(e: FreeElement) -> dict:
    atoms = []
    for a in sorted(e.atoms, key=_atom_sort_key):
        entry = {"support": [e.alphabet.names[i]
                             for i in _sorted_support(a, len(e.alphabet))]}
        if a.left is not None:
            entry["left"] = e.alphabet.names[a.left]
        if a.right is not None:
            entry["right"] = e.alphabet.names[a.right]
        atoms.append(entry)
    return {"variety": e.variety.value,
            "alphabet": list(e.alphabet.names),
            "atoms": atoms}


def element_from_json(data: dict) -> FreeElement:
    variety = Variety.parse(data["variety"])
    alphabet = Alphabet(data["alphabet"])
    atoms = []
    for entry in data["atoms"]:
        support = 0
        for name in entry["support"]:
            support |= 1 << alphabet.index[name]
        left = alphabet.index[entry["left"]] if "left" in entry else None
        right = alphabet.index[entry["right"]] if "right" in entry else None
        atoms.append(FreeAtom(support, left, right))
    return FreeElement(variety, alphabet, frozenset(atoms))
