"""Independently constructed models used as oracles.

The section model: over an alphabet of size n, take all pairs (f, x) where f
is a nonzero bit vector and x a position with f(x) = 1; subsets of this pair
space form a left-handed skew Boolean algebra under restriction-style set
operations, and the generator sets i(x) = {(f, x) : f(x) = 1} generate a free
copy.  Partial-function algebras give a second model isomorphic to powers of
one-sided primitives.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import CapExceeded
from .orthosum import AlgebraSignature
from .primitive import PrimitiveShape
from .saturation import saturate

__all__ = [
    "SXSpace", "sx_meet", "sx_join", "sx_diff", "sx_generator",
    "sx_verify_free", "sx_closure_size",
    "PartialFn", "pfun_meet", "pfun_join", "pfun_diff", "PfunIso", "pfun_iso",
]

SX_MAX_N = 20


class SXSpace:
    """The pair space over n generators: (f, x) with f a nonzero bitmask over n
    positions and x a position where f has a one bit."""

    def __init__(self, n: int):
        if not 1 <= n <= SX_MAX_N:
            raise ValueError(f"pair space needs 1 <= n <= {SX_MAX_N}")
        self.n = n
        self.pairs = tuple((f, x) for f in range(1, 1 << n)
                           for x in range(n) if (f >> x) & 1)
        self.pair_set = frozenset(self.pairs)

    def check(self, a: frozenset) -> None:
        if not a <= self.pair_set:
            raise ValueError("element contains pairs outside the space")


SXElement = frozenset


def _projection(a: SXElement) -> set[int]:
    return {f for f, _ in a}


def sx_meet(space: SXSpace, a: SXElement, b: SXElement) -> SXElement:
    space.check(a)
    space.check(b)
    common = _projection(a) & _projection(b)
    return frozenset(p for p in a if p[0] in common)


def sx_diff(space: SXSpace, a: SXElement, b: SXElement) -> SXElement:
    space.check(a)
    space.check(b)
    only = _projection(a) - _projection(b)
    return frozenset(p for p in a if p[0] in only)


def sx_join(space: SXSpace, a: SXElement, b: SXElement) -> SXElement:
    return sx_diff(space, a, b) | b


def sx_generator(space: SXSpace, i: int) -> SXElement:
    if not 0 <= i < space.n:
        raise ValueError(f"generator index {i} out of range")
    return frozenset(p for p in space.pairs if p[1] == i)


def _atomic_evaluations(space: SXSpace):
    """Evaluate every atomic term (leader-first meet chain minus the join of the
    complement) on the generator sets."""
    gens = [sx_generator(space, i) for i in range(space.n)]
    for support in range(1, 1 << space.n):
        members = [i for i in range(space.n) if (support >> i) & 1]
        outside = [i for i in range(space.n) if not (support >> i) & 1]
        for leader in members:
            acc = gens[leader]
            for i in members:
                if i != leader:
                    acc = sx_meet(space, acc, gens[i])
            if outside:
                sub = gens[outside[0]]
                for i in outside[1:]:
                    sub = sx_join(space, sub, gens[i])
                acc = sx_diff(space, acc, sub)
            yield (support, leader), acc


def sx_verify_free(space: SXSpace) -> bool:
    """True when the atomic terms yield n * 2^(n-1) distinct nonempty sets."""
    outcomes = [value for _, value in _atomic_evaluations(space)]
    expected = space.n << (space.n - 1)
    return (len(outcomes) == expected
            and all(outcomes)
            and len(set(outcomes)) == expected)


def sx_closure_size(space: SXSpace) -> int:
    """Size of the subalgebra generated by the generator sets; must equal the
    free left-handed algebra size.  Feasible for n <= 3 only."""
    if space.n > 3:
        raise CapExceeded("section-model closure is capped at 3 generators")
    # encode elements as bitmasks over the pair list, with per-f blocks
    index = {p: i for i, p in enumerate(space.pairs)}
    blocks = [0] * (1 << space.n)
    for p, i in index.items():
        blocks[p[0]] |= 1 << i
    nf = (1 << space.n) - 1
    union_cache: dict[int, int] = {}

    def union_of(fset: int) -> int:
        got = union_cache.get(fset)
        if got is None:
            got = 0
            for f in range(1, nf + 1):
                if (fset >> (f - 1)) & 1:
                    got |= blocks[f]
            union_cache[fset] = got
        return got

    pmask_cache: dict[int, int] = {}

    def pmask(a: int) -> int:
        got = pmask_cache.get(a)
        if got is None:
            got = 0
            for f in range(1, nf + 1):
                if a & blocks[f]:
                    got |= 1 << (f - 1)
            pmask_cache[a] = got
        return got

    full_f = (1 << nf) - 1

    def meet(a, b):
        return a & union_of(pmask(a) & pmask(b))

    def diff(a, b):
        return a & union_of(pmask(a) & ~pmask(b) & full_f)

    def join(a, b):
        return diff(a, b) | b

    def encode(elem: SXElement) -> int:
        out = 0
        for p in elem:
            out |= 1 << index[p]
        return out

    seeds = [0] + [encode(sx_generator(space, i)) for i in range(space.n)]
    return len(saturate(seeds, (meet, join, diff)))


# --- partial function algebras ------------------------------------------------

@dataclass(frozen=True)
class PartialFn:
    """Partial map {1..domain_size} -> {1..codomain_size}, stored as a dense
    tuple of values (None where undefined)."""

    domain_size: int
    codomain_size: int
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.values) != self.domain_size:
            raise ValueError("value tuple does not match the domain size")
        for v in self.values:
            if v is not None and not 1 <= v <= self.codomain_size:
                raise ValueError(f"value {v} outside the codomain")

    @classmethod
    def from_mapping(cls, domain_size: int, codomain_size: int, mapping: dict) -> "PartialFn":
        values = [None] * domain_size
        for k, v in mapping.items():
            values[k - 1] = v
        return cls(domain_size, codomain_size, tuple(values))

    def mapping(self) -> dict:
        return {i + 1: v for i, v in enumerate(self.values) if v is not None}

    def __str__(self):
        inner = ", ".join(f"{k}->{v}" for k, v in self.mapping().items())
        return "{" + inner + "}"


def _check_compatible(f: PartialFn, g: PartialFn) -> None:
    if f.codomain_size != g.codomain_size or f.domain_size != g.domain_size:
        raise ValueError("partial functions live in different spaces")


def pfun_meet(f: PartialFn, g: PartialFn) -> PartialFn:
    """Restriction of f to the common subdomain."""
    _check_compatible(f, g)
    return PartialFn(f.domain_size, f.codomain_size,
                     tuple(v if g.values[i] is not None else None
                           for i, v in enumerate(f.values)))


def pfun_join(f: PartialFn, g: PartialFn) -> PartialFn:
    """Override: g wins on the common subdomain."""
    _check_compatible(f, g)
    return PartialFn(f.domain_size, f.codomain_size,
                     tuple(g.values[i] if g.values[i] is not None else v
                           for i, v in enumerate(f.values)))


def pfun_diff(f: PartialFn, g: PartialFn) -> PartialFn:
    """f restricted away from g's domain."""
    _check_compatible(f, g)
    return PartialFn(f.domain_size, f.codomain_size,
                     tuple(v if g.values[i] is None else None
                           for i, v in enumerate(f.values)))


class PfunIso:
    """The bijection between partial maps {1..n} -> {1..m} and elements of the
    n-fold power of the one-sided primitive with m atoms; coordinate i is 0
    where i is undefined and the atom f(i) otherwise."""

    def __init__(self, n: int, m: int):
        self.n = n
        self.m = m
        self.signature = AlgebraSignature((PrimitiveShape(m, 1),) * n)

    def to_element(self, f: PartialFn) -> tuple:
        if f.domain_size != self.n or f.codomain_size != self.m:
            raise ValueError("partial function does not match this space")
        return tuple(0 if v is None else v for v in f.values)

    def to_pfun(self, element) -> PartialFn:
        self.signature.check(element)
        return PartialFn(self.n, self.m,
                         tuple(None if c == 0 else c for c in element))

    def all_pfuns(self):
        for values in itertools.product([None] + list(range(1, self.m + 1)), repeat=self.n):
            yield PartialFn(self.n, self.m, values)


def pfun_iso(n: int, m: int) -> PfunIso:
    return PfunIso(n, m)
