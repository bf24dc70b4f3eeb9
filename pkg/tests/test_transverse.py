import pytest

from torus_cables.legendrian import CableSpec, classify
from torus_cables.torus_knots import TorusKnotSpec
from torus_cables.transverse import (
    TOP_CHAIN,
    classify_transverse,
    count_transverse,
    max_sl,
    pushoff_sl,
    quotient_transverse,
    verify_qualitative,
)

from conftest import reduced_pairs

T23 = TorusKnotSpec(2, 3)
T25 = TorusKnotSpec(2, 5)
T34 = TorusKnotSpec(3, 4)


def side_branches(t):
    return sorted((b.sl_top, b.merge_sl) for b in t.side_branches)


def test_pushoff_examples():
    assert pushoff_sl(6, 1, 1) == 5
    assert pushoff_sl(6, -1, 1) == 7
    assert pushoff_sl(5, 2, 1) == 3
    assert pushoff_sl(5, 2, -1) == 7
    with pytest.raises(ValueError):
        pushoff_sl(6, 2, 1)


def test_max_sl_examples():
    assert max_sl(CableSpec(T23, 2, 3)) == 7
    assert max_sl(CableSpec(T25, 3, 2)) == 9
    assert max_sl(CableSpec(T23, 2, 5)) == 13


def test_quotient_trefoil_2_3():
    t = quotient_transverse(classify(CableSpec(T23, 2, 3)))
    assert t.max_sl == 7 and not t.simple
    assert side_branches(t) == [(3, 1)]
    assert not t.side_branches[0].destabilizable


def test_quotient_trefoil_2_5():
    t = quotient_transverse(classify(CableSpec(T23, 2, 5)))
    assert t.max_sl == 13
    assert side_branches(t) == [(5, 3), (7, 3)]
    assert all(not b.destabilizable for b in t.side_branches)
    origins = {b.origin for b in t.side_branches}
    assert origins == {"protected_l:2:+", "protected_k:+"}


def test_quotient_upper_influence():
    t = quotient_transverse(classify(CableSpec(T25, 3, 2)))
    assert t.max_sl == 9
    assert side_branches(t) == [(3, 1)]


def test_classify_transverse_direct():
    t = classify_transverse(CableSpec(T23, 2, 3))
    assert t.max_sl == 7 and side_branches(t) == [(3, 1)]
    t = classify_transverse(CableSpec(T23, 3, 2))
    assert t.simple and t.max_sl == 5 and t.branches[0].origin == TOP_CHAIN
    t = classify_transverse(CableSpec(T25, 5, 3))
    assert side_branches(t) == [(9, 7)] and t.max_sl == 19


def test_count_transverse_examples():
    t = quotient_transverse(classify(CableSpec(T23, 2, 3)))
    assert count_transverse(t, 3) == 2
    assert count_transverse(t, 1) == 1
    assert count_transverse(t, 9) == 0
    t = quotient_transverse(classify(CableSpec(T23, 2, 5)))
    assert count_transverse(t, 5) == 3


def test_sl_parity_and_bound():
    for cable in (CableSpec(T23, 2, 5), CableSpec(T25, 5, 3), CableSpec(T25, 3, 2)):
        t = quotient_transverse(classify(cable))
        assert t.max_sl % 2 == 1
        for b in t.branches:
            assert b.sl_top % 2 == 1
            assert b.sl_top <= t.max_sl


def test_count_bookkeeping_is_exact():
    # each branch contributes one class at every second level of its range,
    # the top chain everywhere below the maximum, and nothing else
    for cable in (CableSpec(T23, 3, 7), CableSpec(T23, 2, 5), CableSpec(T25, 7, 5)):
        t = quotient_transverse(classify(cable))
        merges = [b.merge_sl for b in t.side_branches]
        floor = (min(merges) if merges else t.max_sl - 6) - 4
        for sl in range(t.max_sl, floor, -2):
            expected = 1 + sum(
                1 for b in t.side_branches if b.merge_sl + 2 <= sl <= b.sl_top
            )
            assert count_transverse(t, sl) == expected
        if merges:
            assert count_transverse(t, min(merges)) == 1


def _covered(spec, r, s):
    if s == 1 and r < spec.width:
        return False
    return True


def test_quotient_coherence_small():
    for spec in (T23, T25):
        for r, s in reduced_pairs(8):
            if not _covered(spec, r, s):
                continue
            cable = CableSpec(spec, r, s)
            a = quotient_transverse(classify(cable))
            b = classify_transverse(cable)
            assert a.max_sl == b.max_sl, cable
            assert a.simple == b.simple, cable
            assert side_branches(a) == side_branches(b), cable


def test_verify_qualitative_examples():
    rep = verify_qualitative(T23, "qual1", 1, 1, 2)
    assert rep.passed and (rep.cable.r, rep.cable.s) == (2, 3)
    rep = verify_qualitative(T23, "qual1", 2, 1, 3)
    assert rep.passed and (rep.cable.r, rep.cable.s) == (3, 8)
    rep = verify_qualitative(T25, "qual4", 2, 1, 1)
    assert rep.passed and (rep.cable.r, rep.cable.s) == (4, 3)


def test_verify_qualitative_rejects_bad_parameters():
    with pytest.raises(ValueError):
        verify_qualitative(T23, "qual1", 2, 2, 3)  # gcd(k, m) != 1
    with pytest.raises(ValueError):
        verify_qualitative(T23, "qual1", 1, 1, 1)  # n too small
    with pytest.raises(ValueError):
        verify_qualitative(T23, "qual2", 1, 1, 2)  # n too small
    with pytest.raises(ValueError):
        verify_qualitative(T25, "qual1", 1, 1, 2)  # trefoil suite
    with pytest.raises(ValueError):
        verify_qualitative(T25, "qual4", 3, 1, 1)  # 3 divides the width
    with pytest.raises(ValueError):
        verify_qualitative(T23, "qual4", 2, 1, 1)  # not for the trefoil
    with pytest.raises(ValueError):
        verify_qualitative(T25, "qual4", 2, 2, 2)  # gcd(m, n) != 1
    with pytest.raises(ValueError):
        verify_qualitative(T25, "nope", 1, 1, 1)


def test_trefoil_band_counts_match_statement():
    # spot-check the transverse statement pattern for a band slope with n = 3
    cable = CableSpec(T23, 3, 10)  # slope 10/3 in [3, 4)
    t = quotient_transverse(classify(cable))
    r, s = 3, 10
    rs = r * s
    assert t.max_sl == rs + s - r
    assert count_transverse(t, rs + r - s) == 3  # n distinct classes, n - 1 heads + top
    heads = [b for b in t.side_branches if b.sl_top == rs + r - s]
    assert len(heads) == 2 and all(not b.destabilizable for b in heads)
    assert all(b.merge_sl == rs - r - s for b in t.side_branches)
    assert count_transverse(t, rs - r - s) == 1
