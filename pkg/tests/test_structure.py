import random

import pytest

from skewbool.free import Variety, free_signature, free_size
from skewbool.models import pfun_diff, pfun_iso, pfun_join, pfun_meet
from skewbool.orthosum import AlgebraSignature, closure, format_signature, parse_signature
from skewbool.primitive import PrimitiveShape, parse_shape
from skewbool.saturation import saturate
from skewbool.structure import (BindingConstraint, epi_exists, gamma, min_generators,
                                rank, rank_table)

REFERENCE_TRIPLE = [(1, 1, 0, 1), (2, 0, 1, 2), (0, 2, 2, 2)]


class TestGamma:
    def test_published_values(self):
        assert gamma(2, 4) == 11
        assert gamma(4, 8) == 163

    def test_diagonal(self):
        for n in range(8):
            assert gamma(n, n) == 1

    def test_row_sum(self):
        assert gamma(1, 5) == 2 ** 5 - 1

    def test_rejects_m_above_n(self):
        with pytest.raises(ValueError):
            gamma(3, 2)


class TestRank:
    def test_trivial_algebra(self):
        report = rank(AlgebraSignature(()))
        assert report.rank == 0
        assert report.binding_constraint is None

    def test_single_boolean_factor(self):
        assert rank(parse_signature("2")).rank == 1

    def test_one_sided_primitive_rule(self):
        # a single n_L (or n_R) factor has rank n-1
        for n in range(2, 9):
            assert rank(parse_signature(f"{n}L")).rank == n - 1
            assert rank(parse_signature(f"{n}R")).rank == n - 1

    def test_large_power_rank(self):
        assert rank(parse_signature("3L^57")).rank == 6

    def test_large_mixed_signature_with_binding_constraint(self):
        report = rank(parse_signature("2^2 3L^4 4L^3 5L^48 6L^11 7L^8"))
        assert report.rank == 8
        assert report.binding_constraint == BindingConstraint(k=4, n=7, gamma=64, required=67)
        assert format_signature(report.free_cover).startswith("2^8 3L^28")

    def test_free_algebras_have_full_rank(self):
        for n in range(1, 9):
            assert rank(free_signature(Variety.LSBA, n)).rank == n
        for n in range(1, 6):
            assert rank(free_signature(Variety.SBA, n)).rank == n
            assert rank(free_signature(Variety.GBA, n)).rank == n

    def test_two_sided_uses_max_replacement(self):
        # (3L*5R) squares up to width 4, like 5L*5R
        assert rank(parse_signature("3L*5R")).rank == 4
        assert rank(parse_signature("5L*5R")).rank == 4


def _random_signature(rng: random.Random, handed: str) -> AlgebraSignature:
    count = rng.randrange(1, 10)
    factors = []
    for _ in range(count):
        a = rng.randrange(1, 7)
        if handed == "left":
            factors.append(PrimitiveShape(a, 1))
        elif handed == "right":
            factors.append(PrimitiveShape(1, a))
        else:
            factors.append(PrimitiveShape(a, rng.randrange(1, 7)))
    return AlgebraSignature(tuple(factors))


class TestRankAgainstCoveringOracle:
    @pytest.mark.parametrize("handed", ["left", "right", "two"])
    def test_rank_is_least_covering_n(self, handed):
        rng = random.Random(hash(handed) & 0xFFFF)
        for _ in range(25):
            sig = _random_signature(rng, handed)
            report = rank(sig)
            variety = report.variety
            assert epi_exists(free_signature(variety, report.rank), sig)
            if report.rank > 0:
                assert not epi_exists(free_signature(variety, report.rank - 1), sig)


class TestEpiExists:
    def test_free_cover_covers(self):
        for text in ["2", "3L^4", "2^2 3L^4 4L^3", "3L*3R^2 2"]:
            sig = parse_signature(text)
            assert epi_exists(rank(sig).free_cover, sig)

    def test_too_few_atoms(self):
        assert not epi_exists(parse_signature("3L"), parse_signature("4L"))

    def test_six_generator_tail(self):
        assert epi_exists(free_signature(Variety.LSBA, 6), parse_signature("3L^57"))
        assert not epi_exists(free_signature(Variety.LSBA, 5), parse_signature("3L^57"))

    def test_two_sided_matching(self):
        assert epi_exists(parse_signature("3L*3R"), parse_signature("3L*3R"))
        assert epi_exists(parse_signature("4L*3R"), parse_signature("3L*3R"))
        assert not epi_exists(parse_signature("3L 3R"), parse_signature("3L*3R"))
        assert epi_exists(parse_signature("3L*3R 4L*5R"), parse_signature("3L*3R 3L*3R"))
        assert not epi_exists(parse_signature("3L*3R 5L"), parse_signature("3L*3R 3L*3R"))

    def test_two_sided_source_covers_one_sided_target(self):
        assert epi_exists(parse_signature("3L*3R"), parse_signature("3L"))
        assert epi_exists(parse_signature("3L*3R"), parse_signature("3R"))

    def test_one_sided_source_cannot_cover_two_sided_target(self):
        assert not epi_exists(parse_signature("3L^5"), parse_signature("3L*3R"))

    def test_mixed_handedness_rejected(self):
        with pytest.raises(ValueError):
            epi_exists(parse_signature("3L"), parse_signature("3R"))
        with pytest.raises(ValueError):
            epi_exists(parse_signature("3R 2"), parse_signature("2 3L"))

    def test_gba_targets(self):
        assert epi_exists(parse_signature("3L^3"), parse_signature("2^3"))
        assert not epi_exists(parse_signature("3L^3"), parse_signature("2^4"))


class TestMinGenerators:
    def test_power_of_three_l(self):
        sig = parse_signature("3L^4")
        gens = min_generators(sig)
        assert len(gens) == 3
        assert len(closure(sig, gens)) == 81

    def test_reference_triple_also_generates(self):
        sig = parse_signature("3L^4")
        assert len(closure(sig, REFERENCE_TRIPLE)) == 81

    def test_boolean_factor(self):
        assert min_generators(parse_signature("2")) == [(1,)]

    def test_five_l_needs_four(self):
        sig = parse_signature("5L")
        gens = min_generators(sig)
        assert len(gens) == 4
        assert len(closure(sig, gens)) == 5

    def test_two_sided(self):
        sig = parse_signature("3L*3R^2")
        gens = min_generators(sig)
        assert len(gens) == rank(sig).rank == 3
        assert len(closure(sig, gens)) == sig.size == 25

    def test_right_handed(self):
        sig = parse_signature("3R^4")
        gens = min_generators(sig)
        assert len(gens) == 3
        assert len(closure(sig, gens)) == 81

    def test_mixed_two_sided_and_one_sided_factors(self):
        sig = parse_signature("3L*3R 4L 2")
        gens = min_generators(sig)
        assert len(gens) == rank(sig).rank == 3
        assert len(closure(sig, gens)) == sig.size == 40

    def test_free_signatures_regenerate_themselves(self):
        for variety, n in [(Variety.LSBA, 2), (Variety.LSBA, 3), (Variety.SBA, 2),
                           (Variety.GBA, 3)]:
            sig = free_signature(variety, n)
            gens = min_generators(sig)
            assert len(gens) == n
            assert len(closure(sig, gens)) == free_size(variety, n)

    def test_trivial_algebra(self):
        assert min_generators(AlgebraSignature(())) == []

    def test_generators_translate_to_partial_maps(self):
        # the three generators of 3L^4, read as partial maps {1..4} -> {1,2},
        # generate the whole partial-function algebra
        iso = pfun_iso(4, 2)
        maps = [iso.to_pfun(g) for g in min_generators(parse_signature("3L^4"))]
        empty = iso.to_pfun((0, 0, 0, 0))
        generated = saturate([empty] + maps, (pfun_meet, pfun_join, pfun_diff))
        assert len(generated) == 81


class TestRankTable:
    def test_three_l_table(self):
        assert rank_table(parse_shape("3L"), 57) == \
            [(1, 1, 2), (2, 4, 3), (5, 11, 4), (12, 26, 5), (27, 57, 6)]

    def test_five_l_table(self):
        assert rank_table(parse_shape("5L"), 163) == \
            [(1, 1, 4), (2, 6, 5), (7, 22, 6), (23, 64, 7), (65, 163, 8)]

    def test_boolean_rule(self):
        # rank of the n-th power of 2 is the least k with 2^k - 1 >= n
        rows = rank_table(parse_shape("2"), 100)
        for lo, hi, r in rows:
            for n in range(lo, min(hi, 100) + 1):
                assert (2 ** r - 1 >= n) and (2 ** (r - 1) - 1 < n)

    def test_table_agrees_with_rank(self):
        for shape_text, limit in [("3L", 57), ("4R", 30), ("2", 20)]:
            shape = parse_shape(shape_text)
            for lo, hi, r in rank_table(shape, limit):
                for n in {lo, hi}:
                    sig = AlgebraSignature((shape,) * n)
                    assert rank(sig).rank == r
