from fractions import Fraction

import pytest

from mgnef import (
    IRR,
    DuplicateLabel,
    GenusMarking,
    InvalidPair,
    UnstableSignature,
    canonical_pair,
    enumerate_boundary,
    enumerate_upsilon,
    halving_weight,
    sep_index,
    validate_signature,
)


def test_stability():
    validate_signature(1, (1,))
    validate_signature(0, (1, 2, 3))
    with pytest.raises(UnstableSignature):
        validate_signature(1, ())
    with pytest.raises(UnstableSignature):
        validate_signature(0, (1, 2))
    with pytest.raises(DuplicateLabel):
        validate_signature(2, (1, 1))


def test_boundary_counts():
    # unmarked: irr plus one index per split {i, g-i}
    for g in range(3, 9):
        sig = validate_signature(g, ())
        assert len(enumerate_boundary(sig)) == 1 + g // 2
    # one marked point: irr plus i = 1..g-1
    for g in range(2, 9):
        sig = validate_signature(g, (1,))
        assert len(enumerate_boundary(sig)) == 1 + (g - 1)
    # two marked points: irr, delta_1..delta_g, sigma_1..sigma_{g-1}
    for g in range(2, 9):
        sig = validate_signature(g, (1, 2))
        assert len(enumerate_boundary(sig)) == 2 * g


def test_boundary_order_irr_first_and_deterministic():
    sig = validate_signature(4, (1, 2))
    idxs = enumerate_boundary(sig)
    assert idxs[0] is IRR
    keys = [i.sort_key() for i in idxs[1:]]
    assert keys == sorted(keys)
    assert len(set(idxs)) == len(idxs)


def test_unstable_parts_excluded():
    sig = validate_signature(3, (1,))
    parts = {m for idx in enumerate_boundary(sig) if not idx.is_irr for m in idx.pair}
    assert GenusMarking(0, ()) not in parts
    assert GenusMarking(0, (1,)) not in parts
    ups = enumerate_upsilon(sig)
    assert GenusMarking(0, ()) not in ups


def test_canonical_pair_orders_and_validates():
    sig = validate_signature(4, (1, 2))
    a = GenusMarking(3, (1, 2))
    b = GenusMarking(1, ())
    idx = canonical_pair(a, b, sig)
    assert idx == canonical_pair(b, a, sig)
    assert idx.pair[0] == b
    with pytest.raises(InvalidPair):
        canonical_pair(GenusMarking(1, ()), GenusMarking(2, (1, 2)), sig)  # genus sum
    with pytest.raises(InvalidPair):
        canonical_pair(GenusMarking(1, (1,)), GenusMarking(3, (1, 2)), sig)  # labels overlap
    with pytest.raises(InvalidPair):
        canonical_pair(GenusMarking(0, ()), GenusMarking(4, (1, 2)), sig)  # unstable part


def test_halving_weight():
    sig = validate_signature(5, (1,))
    special = sep_index(sig, 1, (), 4, (1,))
    other = sep_index(sig, 2, (), 3, (1,))
    assert halving_weight(special, sig) == Fraction(1, 2)
    assert halving_weight(other, sig) == 1
    assert halving_weight(IRR, sig) == 1


def test_index_text_form():
    sig = validate_signature(3, (1, 2))
    assert str(IRR) == "dirr"
    idx = sep_index(sig, 1, (1,), 2, (2,))
    assert str(idx) == "d{(1,[1]),(2,[2])}"
