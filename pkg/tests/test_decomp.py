"""Scan-map and decomposition tests, including the worked golden cases."""

from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from unipotent_atlas.classes import Char, Family, GroupSpec
from unipotent_atlas.decomp import (
    apply_f,
    decompose,
    has_bad_sequence,
    render_trace,
    satisfies_difference_condition,
)
from unipotent_atlas.errors import InputError
from unipotent_atlas.partitions import Partition

SO = lambda n, char=Char.TWO: GroupSpec(Family.SO, n, char)
SP = lambda n, char=Char.TWO: GroupSpec(Family.SP, n, char)


@st.composite
def admissible_betas(draw):
    """Partitions with at most one 1, other parts even of multiplicity <= 2,
    and evenly many parts when no part equals 1."""
    halves = draw(st.lists(st.integers(1, 12), max_size=8))
    parts = []
    for value, mult in Counter(halves).items():
        parts.extend([2 * value] * min(mult, 2))
    with_one = draw(st.booleans())
    if with_one or len(parts) % 2 == 1:
        parts.append(1)
    return Partition(tuple(parts))


def test_apply_f_examples():
    assert apply_f(Partition((8, 4, 1))).bits == (1, 1, 1)
    assert apply_f(Partition((12, 12, 10, 8, 6, 6, 4, 2))).bits == (1, 1, 0, 0, 1, 1, 0, 0)
    assert apply_f(Partition((2, 2, 1, 1, 1))).bits == (1, 1, 0, 0, 0)
    assert apply_f(Partition()).bits == ()


def test_decompose_so_examples():
    dec = decompose(Partition((6, 4, 4, 2, 2, 1)), SO(19))
    assert dec.pieces() == (Partition((6, 4)), Partition((4, 2)), Partition((2, 1)))
    dec = decompose(Partition((12, 12, 10, 8, 6, 6, 4, 2)), SO(60))
    assert dec.pieces() == (
        Partition((12, 12, 6, 6)),
        Partition((10, 8, 4, 2)),
        Partition(),
    )
    dec = decompose(Partition((8, 4, 1)), SO(13))
    assert dec.beta1 == Partition((8, 4, 1))
    assert not dec.beta2 and not dec.beta3


def test_decompose_sp_and_good_char():
    dec = decompose(Partition((4, 4)), SP(8))
    assert dec.pieces() == (Partition((4,)), Partition((4,)), Partition())
    dec = decompose(Partition((6, 4, 4, 2)), SP(16))
    assert dec.pieces() == (Partition((6, 4, 2)), Partition((4,)), Partition())
    dec = decompose(Partition((7, 5, 1)), SO(13, Char.GOOD))
    assert dec.pieces() == (Partition((7, 5, 1)), Partition(), Partition())
    dec = decompose(Partition((6, 4, 2)), SP(12, Char.GOOD))
    assert dec.beta1 == Partition((6, 4, 2))


def test_decompose_shape_rejections():
    with pytest.raises(InputError, match="more than one part equal to 1"):
        decompose(Partition((4, 1, 1)), SO(6))
    with pytest.raises(InputError, match="odd part 3"):
        decompose(Partition((3, 1)), SO(4))
    with pytest.raises(InputError, match="multiplicity 3"):
        decompose(Partition((2, 2, 2)), SO(6))
    with pytest.raises(InputError, match="number of parts must be even"):
        decompose(Partition((6, 4, 2)), SO(12))
    with pytest.raises(InputError, match="odd part 1"):
        decompose(Partition((2, 1)), SP(4))
    with pytest.raises(InputError, match="distinct parts"):
        decompose(Partition((4, 4)), SP(8, Char.GOOD))
    with pytest.raises(InputError, match="not odd"):
        decompose(Partition((4, 1)), SO(5, Char.GOOD))


def test_difference_condition_examples():
    assert satisfies_difference_condition(Partition((8, 4, 1)))
    assert not satisfies_difference_condition(Partition((6, 4, 4, 2)))
    assert satisfies_difference_condition(Partition())
    assert satisfies_difference_condition(Partition((4, 4)))
    assert not satisfies_difference_condition(Partition((4, 2, 1)))


def test_bad_sequence_examples():
    assert has_bad_sequence(Partition((8, 4, 4, 2, 2)))
    assert not has_bad_sequence(Partition((12, 12, 6, 6)))
    assert not has_bad_sequence(Partition())
    assert not has_bad_sequence(Partition((4, 4, 2, 2)))  # pattern must sit at an even index
    assert has_bad_sequence(Partition((10, 6, 6, 4, 4)))


def test_trace_rendering_matches_worked_array():
    dec = decompose(Partition((12, 12, 10, 8, 6, 6, 4, 2)), SO(60))
    assert render_trace(dec.trace1, "beta") == (
        "map to 1: 12 12      6 6\n"
        "beta:     12 12 10 8 6 6 4 2\n"
        "map to 0:       10 8     4 2"
    )


@given(admissible_betas())
def test_decompose_conserves_and_obeys_shape_laws(beta):
    G = SO(beta.total if beta.total else 2)
    dec = decompose(beta, G)
    assert dec.beta1 + dec.beta2 + dec.beta3 == beta
    if beta:
        assert dec.trace1.bits[0] == 1
    for piece in dec.pieces():
        assert satisfies_difference_condition(piece)
        if piece and piece.multiplicity(1) == 0:
            assert len(piece) % 2 == 0
    assert not has_bad_sequence(dec.trace1.zeros())
    if satisfies_difference_condition(beta):
        assert dec.beta1 == beta
