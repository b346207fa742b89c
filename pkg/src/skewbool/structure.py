"""Rank, free covers, epimorphism existence and minimal generating sets for
finite skew Boolean algebras given by their signatures.

The rank of an algebra is the least n such that the free algebra on n
generators covers it; the covering conditions compare, for every class size k,
the number of free factors of class size >= k (a binomial tail sum) with the
number of target factors of class size >= k.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import CapExceeded
from .free import Variety, free_signature, generator_embedding, to_finite
from .orthosum import AlgebraSignature, CLOSURE_CAP, HomSpec, apply_hom, closure
from .primitive import PrimitiveShape
from .terms import Alphabet

__all__ = [
    "gamma", "RankReport", "BindingConstraint", "rank",
    "epi_exists", "min_generators", "rank_table",
]


def gamma(m: int, n: int) -> int:
    """Tail sum of binomials C(n,m) + C(n,m+1) + ... + C(n,n)."""
    if m < 0 or n < m:
        raise ValueError(f"gamma requires 0 <= m <= n, got m={m}, n={n}")
    return sum(comb(n, j) for j in range(m, n + 1))


def _tail(k: int, n: int) -> int:
    # number of free-algebra factors of class size >= k; zero when k exceeds n
    return gamma(k, n) if k <= n else 0


def _handedness(sig: AlgebraSignature) -> str:
    if all(f.class_size == 1 for f in sig.factors):
        return "gba"
    if all(f.right_width == 1 for f in sig.factors):
        return "left"
    if all(f.left_width == 1 for f in sig.factors):
        return "right"
    return "two"


_VARIETY_FOR = {"gba": Variety.GBA, "left": Variety.LSBA,
                "right": Variety.RSBA, "two": Variety.SBA}


def _class_sizes(sig: AlgebraSignature) -> list[int]:
    # in the two-sided case every factor counts as its squared-up max width
    hand = _handedness(sig)
    if hand == "two":
        return [max(f.left_width, f.right_width) for f in sig.factors]
    if hand == "right":
        return [f.right_width for f in sig.factors]
    return [f.left_width for f in sig.factors]


@dataclass(frozen=True)
class BindingConstraint:
    """The covering condition that fails one generator below the rank:
    gamma(k, n) < required factors of class size >= k."""

    k: int
    n: int
    gamma: int
    required: int


@dataclass(frozen=True)
class RankReport:
    rank: int
    variety: Variety
    free_cover: AlgebraSignature
    binding_constraint: BindingConstraint | None


def rank(sig: AlgebraSignature) -> RankReport:
    """Least n such that the free algebra on n generators covers sig."""
    variety = _VARIETY_FOR[_handedness(sig)]
    if not sig.factors:
        return RankReport(0, variety, AlgebraSignature(()), None)
    sizes = _class_sizes(sig)
    m = max(sizes)
    required = {k: sum(1 for s in sizes if s >= k) for k in range(1, m + 1)}
    n = m
    while not all(_tail(k, n) >= required[k] for k in range(1, m + 1)):
        n += 1
    binding = None
    if n >= 1:
        for k in range(m, 0, -1):  # scan the largest classes first
            if _tail(k, n - 1) < required[k]:
                binding = BindingConstraint(k, n - 1, _tail(k, n - 1), required[k])
                break
    return RankReport(n, variety, free_signature(variety, n), binding)


def _covers_one_handed(src_sizes: list[int], tgt_sizes: list[int]) -> bool:
    src = sorted(src_sizes, reverse=True)
    tgt = sorted(tgt_sizes, reverse=True)
    return len(src) >= len(tgt) and all(s >= t for s, t in zip(src, tgt))


def _covers_matching(src: AlgebraSignature, tgt: AlgebraSignature) -> bool:
    # maximum bipartite matching by augmenting paths, in deterministic order
    srcs = src.factors
    tgts = tgt.factors
    match_of_src: list[int | None] = [None] * len(srcs)

    def feasible(i: int, j: int) -> bool:
        return srcs[i].left_width >= tgts[j].left_width and \
            srcs[i].right_width >= tgts[j].right_width

    def augment(j: int, seen: set[int]) -> bool:
        for i in range(len(srcs)):
            if i in seen or not feasible(i, j):
                continue
            seen.add(i)
            if match_of_src[i] is None or augment(match_of_src[i], seen):
                match_of_src[i] = j
                return True
        return False

    return all(augment(j, set()) for j in range(len(tgts)))


def epi_exists(source: AlgebraSignature, target: AlgebraSignature) -> bool:
    """Whether some epimorphism maps source onto target (covering criteria)."""
    hs, ht = _handedness(source), _handedness(target)
    if {hs, ht} == {"left", "right"}:
        raise ValueError("mixed-handedness signatures; convert one side first")
    if hs == "two" or ht == "two":
        return _covers_matching(source, target)
    return _covers_one_handed(_class_sizes(source), _class_sizes(target))


def min_generators(sig: AlgebraSignature, *, cap: int = CLOSURE_CAP) -> list[tuple]:
    """A minimal generating set: rank-many elements, verified by closure.

    The free cover's atomic classes are matched to the target factors greedily
    by descending class size; each matched class map sends leaders (in alphabet
    order) onto the target class, cycling through it in canonical order.
    """
    if sig.size > cap:
        raise CapExceeded(f"algebra with {sig.size} elements exceeds the closure cap")
    report = rank(sig)
    n = report.rank
    if n == 0:
        return []
    variety = report.variety
    alphabet = Alphabet([f"x{i + 1}" for i in range(n)])
    free_sig = report.free_cover

    # both lists are ordered by the width that a class map must cover
    free_classes = sorted(((max(f.left_width, f.right_width), i)
                           for i, f in enumerate(free_sig.factors)),
                          key=lambda t: (-t[0], t[1]))
    targets = sorted(((max(f.left_width, f.right_width), j) for j, f in enumerate(sig.factors)),
                     key=lambda t: (-t[0], t[1]))

    actions: list[tuple | None] = [None] * len(free_sig)
    for (tgt_size, j), (cls_size, i) in zip(targets, free_classes):
        if cls_size < tgt_size:
            raise RuntimeError("greedy matching violated the covering conditions")
        src_shape = free_sig.factors[i]
        tgt_shape = sig.factors[j]
        row_map = tuple(r % tgt_shape.left_width for r in range(src_shape.left_width))
        col_map = tuple(c % tgt_shape.right_width for c in range(src_shape.right_width))
        actions[i] = (j, row_map, col_map)

    hom = HomSpec(free_sig, sig, tuple(actions))
    gens = [apply_hom(hom, to_finite(generator_embedding(variety, alphabet, i)))
            for i in range(n)]
    generated = closure(sig, gens, cap=cap)
    if len(generated) != sig.size:
        raise RuntimeError(
            f"generator verification failed: closure has {len(generated)} of {sig.size} elements")
    return gens


def rank_table(shape: PrimitiveShape, max_power: int) -> list[tuple[int, int, int]]:
    """Rows (lo, hi, rank): powers lo..hi of the shape have the given rank."""
    m = max(shape.left_width, shape.right_width)
    rows = []
    k = 0
    while True:
        lo = 1 if k == 0 else gamma(m, m + k - 1) + 1
        if lo > max_power:
            break
        rows.append((lo, gamma(m, m + k), m + k))
        k += 1
    return rows
