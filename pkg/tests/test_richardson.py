"""Block-table tests: regular classes, Richardson forward map, image, inversion."""

import pytest

from unipotent_atlas.classes import Char, Family, GroupSpec
from unipotent_atlas.decomp import satisfies_difference_condition
from unipotent_atlas.errors import InputError, ResourceLimitError
from unipotent_atlas.partitions import Partition, iter_partitions
from unipotent_atlas.richardson import (
    ParabolicDescriptor,
    enumerate_distinguished_parabolics,
    in_richardson_image,
    parabolic_from_blocks,
    regular_jordan_blocks,
    richardson_jordan_blocks,
)


def spec(family, dim, char=Char.TWO):
    return GroupSpec(family, dim, char)


def test_regular_blocks_examples():
    lam, eps = regular_jordan_blocks(spec(Family.SO, 13))
    assert lam == Partition((12, 1)) and eps[12] == 1 and eps[1] == -1
    lam, _ = regular_jordan_blocks(spec(Family.SO, 16))
    assert lam == Partition((14, 2))
    lam, eps = regular_jordan_blocks(spec(Family.O, 6), nonidentity_component=True)
    assert lam == Partition((6,)) and eps[6] == 1
    lam, eps = regular_jordan_blocks(spec(Family.SO, 4))
    assert lam == Partition((2, 2)) and eps[2] == 1
    assert regular_jordan_blocks(spec(Family.SO, 2))[0] == Partition((1, 1))
    assert regular_jordan_blocks(spec(Family.SO, 9, Char.GOOD))[0] == Partition((9,))
    assert regular_jordan_blocks(spec(Family.SO, 10, Char.GOOD))[0] == Partition((9, 1))
    assert regular_jordan_blocks(spec(Family.SP, 10, Char.GOOD))[0] == Partition((10,))
    assert regular_jordan_blocks(spec(Family.GL, 5, Char.GOOD))[0] == Partition((5,))
    assert regular_jordan_blocks(spec(Family.SO, 1))[0] == Partition((1,))
    with pytest.raises(InputError):
        regular_jordan_blocks(spec(Family.SO, 6), nonidentity_component=True)


def test_descriptor_validation_and_normalization():
    so12 = spec(Family.SO, 12)
    P = ParabolicDescriptor(so12, (3, 1), 1)
    assert P.block_sizes() == Partition((2, 1, 1, 1))
    # an even orthogonal descriptor written with m0 = 0 normalizes to m0 = 1
    assert ParabolicDescriptor.make(so12, (4, 1), 0) == P
    with pytest.raises(InputError):
        ParabolicDescriptor(so12, (4, 1), 0)
    with pytest.raises(InputError):
        ParabolicDescriptor(so12, (0, 2), 1)  # chain condition
    with pytest.raises(InputError):
        ParabolicDescriptor(so12, (3, 1), 2)  # wrong weight
    with pytest.raises(InputError):
        ParabolicDescriptor(spec(Family.SP, 8), (2,), 2)  # symplectic remainder
    with pytest.raises(InputError):
        ParabolicDescriptor(spec(Family.SO, 9), (1,), 3)  # window violation


def test_richardson_blocks_examples():
    for m in (1, 2, 5):
        borel = ParabolicDescriptor.borel(spec(Family.SP, 2 * m))
        assert richardson_jordan_blocks(borel)[0] == Partition((2 * m,))
    lam, eps = richardson_jordan_blocks(ParabolicDescriptor(spec(Family.SO, 12), (3, 1), 1))
    assert lam == Partition((8, 4)) and eps[8] == 1 and eps[4] == 1
    lam, eps = richardson_jordan_blocks(ParabolicDescriptor(spec(Family.SO, 13), (3, 1), 1))
    assert lam == Partition((8, 4, 1)) and eps[1] == -1


def test_borel_matches_regular_class_all_families():
    for char in (Char.TWO, Char.GOOD):
        for rank in range(1, 13):
            groups = [spec(Family.SP, 2 * rank, char), spec(Family.SO, 2 * rank + 1, char)]
            if rank >= 2:
                groups.append(spec(Family.SO, 2 * rank, char))
            if char is Char.GOOD:
                groups.append(spec(Family.GL, rank, char))
            for G in groups:
                borel = ParabolicDescriptor.borel(G)
                assert richardson_jordan_blocks(borel) == regular_jordan_blocks(G)


def test_in_richardson_image_examples():
    assert not in_richardson_image(spec(Family.SO, 16), Partition((6, 4, 4, 2)))
    assert in_richardson_image(spec(Family.SO, 12), Partition((8, 4)))
    assert in_richardson_image(spec(Family.SP, 12), Partition((6, 4, 2)))
    assert not in_richardson_image(spec(Family.SP, 12), Partition((4, 4, 2, 2)))
    assert in_richardson_image(spec(Family.SO, 13), Partition((8, 4, 1)))
    assert not in_richardson_image(spec(Family.SO, 13), Partition((4, 4, 4, 1)))
    assert in_richardson_image(spec(Family.SO, 12, Char.GOOD), Partition((7, 5)))
    assert not in_richardson_image(spec(Family.SO, 12, Char.GOOD), Partition((5, 5, 1, 1)))
    assert in_richardson_image(spec(Family.GL, 5, Char.GOOD), Partition((2, 2, 1)))
    with pytest.raises(InputError):
        in_richardson_image(spec(Family.SO, 12), Partition((8, 2)))


def test_parabolic_from_blocks_examples():
    P = parabolic_from_blocks(spec(Family.SO, 12), Partition((8, 4)))
    assert (P.c, P.m0) == ((3, 1), 1)
    P = parabolic_from_blocks(spec(Family.SP, 10), Partition((10,)))
    assert P == ParabolicDescriptor.borel(spec(Family.SP, 10))
    P = parabolic_from_blocks(spec(Family.SO, 24), Partition((10, 8, 4, 2)))
    assert (P.c, P.m0) == ((2, 1, 2), 2)
    P = parabolic_from_blocks(spec(Family.SO, 36), Partition((12, 12, 6, 6)))
    assert (P.c, P.m0) == ((1, 2, 1, 2), 2)
    with pytest.raises(InputError):
        parabolic_from_blocks(spec(Family.SO, 16), Partition((6, 4, 4, 2)))


def test_enumeration_examples_and_regressions():
    gl3 = [(P.c, P.m0) for P in enumerate_distinguished_parabolics(spec(Family.GL, 3, Char.GOOD))]
    # GL enumerates every Levi shape; the map to blocks is shape -> dual
    assert gl3 == [((0, 0, 1), 0), ((1, 1), 0), ((3,), 0)]
    sp2 = enumerate_distinguished_parabolics(spec(Family.SP, 2))
    assert [(P.c, P.m0) for P in sp2] == [((1,), 0)]
    # frozen regression value: SO_8 at p=2 has exactly two distinguished parabolics
    so8 = enumerate_distinguished_parabolics(spec(Family.SO, 8))
    assert len(so8) == 2
    assert sorted(richardson_jordan_blocks(P)[0].parts for P in so8) == [(4, 4), (6, 2)]
    with pytest.raises(ResourceLimitError):
        enumerate_distinguished_parabolics(spec(Family.SO, 80))


def test_forward_map_injective_image_matches_table_ranks_to_12():
    for char in (Char.TWO, Char.GOOD):
        for rank in range(1, 13):
            groups = [spec(Family.SP, 2 * rank, char)]
            for dim in (2 * rank, 2 * rank + 1):
                if dim >= 2:
                    groups.append(spec(Family.SO, dim, char))
            if char is Char.GOOD and rank <= 10:
                groups.append(spec(Family.GL, rank, char))
            for G in groups:
                descs = enumerate_distinguished_parabolics(G)
                blocks = [richardson_jordan_blocks(P)[0] for P in descs]
                assert len(set(blocks)) == len(blocks), G.describe()
                image = {b.parts for b in blocks}
                table = {
                    parts
                    for parts in iter_partitions(G.dim)
                    if in_richardson_image(G, Partition(parts))
                }
                assert image == table, G.describe()


def test_orthogonal_p2_image_satisfies_difference_condition():
    for dim in range(3, 17):
        G = spec(Family.SO, dim)
        for P in enumerate_distinguished_parabolics(G):
            lam, _ = richardson_jordan_blocks(P)
            assert satisfies_difference_condition(lam)


def test_descriptor_structure_queries():
    P = ParabolicDescriptor(spec(Family.SO, 13), (3, 1), 1)
    assert P.semisimple_rank() == 2
    assert P.max_simple_factor_rank() == 1
    assert not P.is_borel()
    assert P.levi_name() == "GL1^3 GL2 SO3"
    borel = ParabolicDescriptor.borel(spec(Family.SO, 12))
    assert borel.is_borel() and borel.levi_name() == "GL1^5 SO2"
    big = parabolic_from_blocks(spec(Family.SO, 16), Partition((6, 6, 2, 2)))
    assert big.max_simple_factor_rank() == 2  # GL_3 block: not (a_j)-labelable
