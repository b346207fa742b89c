"""Finite skew Boolean algebras as products (orthosums) of primitive algebras.

An algebra is an ordered list of primitive shapes; an element is a tuple of
primitive element codes, one per factor.  All three operations act
componentwise, so order, Green's relations, intersections and centers reduce
to per-coordinate rules.  Subalgebra closure runs on the packed-key kernels.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod

from . import kernels
from .errors import CapExceeded
from .primitive import PrimitiveShape, format_shape, parse_shape, prim_diff, prim_join, prim_meet

__all__ = [
    "AlgebraSignature", "parse_signature", "format_signature",
    "elem_meet", "elem_join", "elem_diff",
    "natural_leq", "natural_preceq", "green_d", "green_l", "green_r",
    "intersection", "center", "is_central",
    "closure", "CLOSURE_CAP",
    "HomSpec", "apply_hom", "is_epi", "identity_hom",
    "kimura_signatures", "kimura_project",
    "format_element",
]

CLOSURE_CAP = 10_000_000

FiniteElement = tuple  # tuple of primitive element codes, one per factor


@dataclass(frozen=True)
class AlgebraSignature:
    """Ordered list of primitive factors; the empty list is the trivial algebra."""

    factors: tuple[PrimitiveShape, ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))

    @property
    def size(self) -> int:
        return prod(f.size for f in self.factors)

    def __len__(self):
        return len(self.factors)

    def zero(self) -> FiniteElement:
        return (0,) * len(self.factors)

    def check(self, x: FiniteElement) -> None:
        if len(x) != len(self.factors):
            raise ValueError(f"element has {len(x)} coordinates, signature has {len(self.factors)}")
        for shape, code in zip(self.factors, x):
            shape.check(code)

    def elements(self):
        """All elements in lexicographic (packed-key) order; only for small algebras."""
        return itertools.product(*(range(f.size) for f in self.factors))

    def standardize(self) -> "AlgebraSignature":
        return AlgebraSignature(tuple(sorted(self.factors, key=lambda f: (f.left_width, f.right_width))))

    def tables(self) -> kernels.SigTables:
        return kernels.sig_tables(self.factors)

    def __str__(self):
        return format_signature(self)


def parse_signature(text: str) -> AlgebraSignature:
    """Parse whitespace-separated shape tokens with optional ``^k`` powers,
    e.g. ``2^2 3L^4 4L^3``."""
    factors: list[PrimitiveShape] = []
    for token in text.split():
        base, _, power = token.partition("^")
        k = 1
        if power:
            if not power.isdigit() or int(power) < 1:
                raise ValueError(f"malformed power in signature token {token!r}")
            k = int(power)
        factors.extend([parse_shape(base)] * k)
    return AlgebraSignature(tuple(factors))


def format_signature(sig: AlgebraSignature) -> str:
    parts = []
    for shape, group in itertools.groupby(sig.factors):
        parts.append(f"{format_shape(shape)}^{len(list(group))}")
    return " ".join(parts)


def format_element(sig: AlgebraSignature, x: FiniteElement) -> str:
    """Parenthesized coordinate tuple; one-sided coordinates print their atom
    index (the usual one-sided labels 1, 2, ...), two-sided ones as ``r.c``."""
    parts = []
    for shape, code in zip(sig.factors, x):
        if code == 0 or shape.left_width == 1 or shape.right_width == 1:
            parts.append(str(code))
        else:
            parts.append(f"{shape.row_of(code)}.{shape.col_of(code)}")
    return "(" + ", ".join(parts) + ")"


# --- element arithmetic -----------------------------------------------------

def elem_meet(sig: AlgebraSignature, x: FiniteElement, y: FiniteElement) -> FiniteElement:
    sig.check(x)
    sig.check(y)
    return tuple(prim_meet(f, a, b) for f, a, b in zip(sig.factors, x, y))


def elem_join(sig: AlgebraSignature, x: FiniteElement, y: FiniteElement) -> FiniteElement:
    sig.check(x)
    sig.check(y)
    return tuple(prim_join(f, a, b) for f, a, b in zip(sig.factors, x, y))


def elem_diff(sig: AlgebraSignature, x: FiniteElement, y: FiniteElement) -> FiniteElement:
    sig.check(x)
    sig.check(y)
    return tuple(prim_diff(f, a, b) for f, a, b in zip(sig.factors, x, y))


def natural_leq(sig: AlgebraSignature, x: FiniteElement, y: FiniteElement) -> bool:
    """x <= y in the natural partial order: each coordinate of x is zero or equals y's."""
    sig.check(x)
    sig.check(y)
    return all(a == 0 or a == b for a, b in zip(x, y))


def natural_preceq(sig: AlgebraSignature, x: FiniteElement, y: FiniteElement) -> bool:
    """Natural preorder: the support of x is contained in the support of y."""
    sig.check(x)
    sig.check(y)
    return all(a == 0 or b != 0 for a, b in zip(x, y))


def green_d(sig: AlgebraSignature, x: FiniteElement, y: FiniteElement) -> bool:
    sig.check(x)
    sig.check(y)
    return all((a == 0) == (b == 0) for a, b in zip(x, y))


def green_l(sig: AlgebraSignature, x: FiniteElement, y: FiniteElement) -> bool:
    sig.check(x)
    sig.check(y)
    return all((a == 0) == (b == 0) and (a == 0 or f.col_of(a) == f.col_of(b))
               for f, a, b in zip(sig.factors, x, y))


def green_r(sig: AlgebraSignature, x: FiniteElement, y: FiniteElement) -> bool:
    sig.check(x)
    sig.check(y)
    return all((a == 0) == (b == 0) and (a == 0 or f.row_of(a) == f.row_of(b))
               for f, a, b in zip(sig.factors, x, y))


def intersection(sig: AlgebraSignature, x: FiniteElement, y: FiniteElement) -> FiniteElement:
    """Greatest lower bound under the natural partial order: keep agreeing coordinates."""
    sig.check(x)
    sig.check(y)
    return tuple(a if a == b else 0 for a, b in zip(x, y))


def is_central(sig: AlgebraSignature, x: FiniteElement) -> bool:
    """Central elements are supported only on factors whose D-class is a singleton."""
    sig.check(x)
    return all(code == 0 or shape.class_size == 1 for shape, code in zip(sig.factors, x))


def center(sig: AlgebraSignature) -> list[FiniteElement]:
    boolean_positions = [i for i, f in enumerate(sig.factors) if f.class_size == 1]
    out = []
    for choice in itertools.product((0, 1), repeat=len(boolean_positions)):
        x = [0] * len(sig.factors)
        for pos, c in zip(boolean_positions, choice):
            x[pos] = c
        out.append(tuple(x))
    return out


# --- subalgebra closure -----------------------------------------------------

def closure(sig: AlgebraSignature, gens, *, cap: int = CLOSURE_CAP) -> set[FiniteElement]:
    """Least subset containing the generators and zero, closed under all three
    operations.  Refuses ambient algebras larger than ``cap`` elements."""
    if sig.size > cap:
        raise CapExceeded(f"ambient algebra has {sig.size} > {cap} elements")
    gens = list(gens)
    for g in gens:
        sig.check(g)
    tables = sig.tables()
    seeds = kernels.encode_elements(tables, [sig.zero()] + gens)
    keys = kernels.closure_keys(tables, seeds)
    return {kernels.decode_key(tables, int(k)) for k in keys}


# --- homomorphisms (per-factor kill or rectangular class map) ----------------

@dataclass(frozen=True)
class HomSpec:
    """Homomorphism between orthosums: each source factor is either killed or
    sent to a distinct target factor by a pair of coordinate maps
    ``(row_map, col_map)``, acting as ``(r, c) -> (row_map[r], col_map[c])``."""

    source: AlgebraSignature
    target: AlgebraSignature
    actions: tuple  # per source factor: None or (target_index, row_map, col_map)

    def __post_init__(self):
        object.__setattr__(self, "actions", tuple(self.actions))
        if len(self.actions) != len(self.source.factors):
            raise ValueError("one action required per source factor")
        used = set()
        for src_shape, action in zip(self.source.factors, self.actions):
            if action is None:
                continue
            tgt_idx, row_map, col_map = action
            if not (0 <= tgt_idx < len(self.target.factors)):
                raise ValueError(f"target index {tgt_idx} out of range")
            if tgt_idx in used:
                raise ValueError(f"duplicate target factor {tgt_idx}")
            used.add(tgt_idx)
            tgt_shape = self.target.factors[tgt_idx]
            if len(row_map) != src_shape.left_width or len(col_map) != src_shape.right_width:
                raise ValueError("class map does not cover the source rectangle")
            if any(not 0 <= r < tgt_shape.left_width for r in row_map):
                raise ValueError("row map leaves the target rectangle")
            if any(not 0 <= c < tgt_shape.right_width for c in col_map):
                raise ValueError("column map leaves the target rectangle")


def identity_hom(sig: AlgebraSignature) -> HomSpec:
    actions = [(i, tuple(range(f.left_width)), tuple(range(f.right_width)))
               for i, f in enumerate(sig.factors)]
    return HomSpec(sig, sig, tuple(actions))


def apply_hom(h: HomSpec, x: FiniteElement) -> FiniteElement:
    h.source.check(x)
    out = [0] * len(h.target.factors)
    for src_shape, action, code in zip(h.source.factors, h.actions, x):
        if action is None or code == 0:
            continue
        tgt_idx, row_map, col_map = action
        tgt_shape = h.target.factors[tgt_idx]
        out[tgt_idx] = tgt_shape.element(row_map[src_shape.row_of(code)],
                                         col_map[src_shape.col_of(code)])
    return tuple(out)


def is_epi(h: HomSpec) -> bool:
    """True when every target factor is the image of a source class map that is
    onto its rectangle."""
    covered = [False] * len(h.target.factors)
    for action in h.actions:
        if action is None:
            continue
        tgt_idx, row_map, col_map = action
        tgt_shape = h.target.factors[tgt_idx]
        if set(row_map) == set(range(tgt_shape.left_width)) and \
           set(col_map) == set(range(tgt_shape.right_width)):
            covered[tgt_idx] = True
    return all(covered)


# --- Kimura projections -----------------------------------------------------

def kimura_signatures(sig: AlgebraSignature) -> tuple[AlgebraSignature, AlgebraSignature]:
    """The left- and right-handed quotient signatures (columns resp. rows erased)."""
    left = AlgebraSignature(tuple(PrimitiveShape(f.left_width, 1) for f in sig.factors))
    right = AlgebraSignature(tuple(PrimitiveShape(1, f.right_width) for f in sig.factors))
    return left, right


def kimura_project(sig: AlgebraSignature, x: FiniteElement) -> tuple[FiniteElement, FiniteElement]:
    sig.check(x)
    left = tuple(0 if c == 0 else 1 + f.row_of(c) for f, c in zip(sig.factors, x))
    right = tuple(0 if c == 0 else 1 + f.col_of(c) for f, c in zip(sig.factors, x))
    return left, right
