"""Greedy separated pair families."""

import itertools

import pytest

from tokengames.sfamily import build_s_family, offset_sequence


def test_offset_sequence_prefix():
    prefix = list(itertools.islice(offset_sequence(), 15))
    assert prefix == [0, 0, 1, 0, 1, 2, 0, 1, 2, 3, 0, 1, 2, 3, 4]


def test_greedy_examples():
    assert build_s_family(3, 3).pairs == ((0, 0), (3, 3), (6, 7))
    assert build_s_family(1, 2).pairs == ((0, 0), (1, 1))


def test_separation_holds_for_every_prefix():
    family = build_s_family(4, 30)
    for cut in range(len(family.pairs) + 1):
        assert type(family)(4, family.pairs[:cut]).separation_ok()


def test_every_offset_recurs():
    family = build_s_family(2, 60)
    offsets = [m - n for n, m in family.pairs]
    for c in range(6):
        assert offsets.count(c) >= 3


def test_offsets_match_generating_sequence():
    family = build_s_family(5, 12)
    expected = list(itertools.islice(offset_sequence(), 12))
    assert [m - n for n, m in family.pairs] == expected


def test_validation():
    with pytest.raises(ValueError):
        build_s_family(0, 3)
    with pytest.raises(ValueError):
        build_s_family(2, -1)
    assert build_s_family(2, 0).pairs == ()
