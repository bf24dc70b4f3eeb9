from math import gcd

import pytest

from torus_cables.farey import Slope, intersect, mediant
from torus_cables.torus_knots import (
    INFLUENCE_LOWER,
    INFLUENCE_UPPER,
    LOW_RANGE,
    NEGATIVE,
    SIMPLE_MID,
    TREFOIL_BAND,
    TorusKnotSpec,
    exceptional_indices,
    exceptional_slope,
    influence_interval,
    locate,
    nonthickenable_profile,
    thickening_outcome,
    tori_census,
    width,
)

from conftest import S

T23 = TorusKnotSpec(2, 3)
T25 = TorusKnotSpec(2, 5)
T34 = TorusKnotSpec(3, 4)


def test_spec_validation():
    with pytest.raises(ValueError):
        TorusKnotSpec(3, 2)
    with pytest.raises(ValueError):
        TorusKnotSpec(2, 4)
    with pytest.raises(ValueError):
        TorusKnotSpec(1, 5)


def test_width_examples():
    assert width(T23) == 1
    assert width(T25) == 3
    assert width(T34) == 5


def test_exceptional_slope_examples():
    assert exceptional_slope(T23, 4) == S("4/1")
    assert exceptional_slope(T25, 2) == S("2/3")
    assert exceptional_slope(T25, 3) == S("1/1")


def test_exceptional_indices_examples():
    assert exceptional_indices(T23, 5) == frozenset({2, 3, 4, 5})
    assert exceptional_indices(T25, 8) == frozenset({2, 4, 5, 7, 8})
    assert exceptional_indices(T34, 6) == frozenset({2, 3, 4, 6})


def test_preconditions_rejected():
    with pytest.raises(ValueError):
        exceptional_slope(T25, 0)
    with pytest.raises(ValueError):
        exceptional_indices(T25, 1)
    with pytest.raises(ValueError):
        influence_interval(T25, 0)
    with pytest.raises(ValueError):
        nonthickenable_profile(T25, 0)


def test_influence_interval_examples():
    iv = influence_interval(T25, 2)
    assert (iv.center, iv.upper, iv.lower) == (S("2/3"), S("1/1"), S("1/2"))
    iv = influence_interval(T25, 4)
    assert (iv.center, iv.upper, iv.lower) == (S("4/3"), S("3/2"), S("1/1"))
    iv = influence_interval(T23, 2)
    assert (iv.center, iv.upper, iv.lower) == (S("2/1"), S("1/0"), S("1/1"))


def test_locate_examples():
    assert str(locate(T25, S("3/4"))) == "influence_upper(2)"
    assert str(locate(T25, S("3/5"))) == "influence_lower(2)"
    assert str(locate(T25, S("2/5"))) == "simple_mid"
    assert str(locate(T23, S("7/2"))) == "trefoil_band(3)"
    assert str(locate(T23, S("1/1"))) == "trefoil_band(1)"
    assert str(locate(T25, S("1/3"))) == "low_range"
    assert str(locate(T34, S("-7/2"))) == "negative"


def test_locate_rejects_meridian_and_longitude():
    for bad in ("0/1", "1/0"):
        with pytest.raises(ValueError):
            locate(T25, S(bad))


def _region_by_scan(spec, slope):
    # Independent region decision by direct interval comparisons.
    if slope.is_negative():
        return NEGATIVE
    if spec.is_trefoil:
        return TREFOIL_BAND if slope.value >= 1 else LOW_RANGE
    w = spec.width
    if slope.value <= exceptional_slope(spec, 1).value:
        return LOW_RANGE
    scaled = slope.value * w
    bound = max(2, scaled.numerator // scaled.denominator + 2)
    for n in sorted(exceptional_indices(spec, bound)):
        iv = influence_interval(spec, n)
        if iv.in_upper_half(slope):
            return INFLUENCE_UPPER, n
        if iv.lower.value < slope.value < iv.center.value:
            return INFLUENCE_LOWER, n
    return SIMPLE_MID


def test_locate_partition_exhaustive():
    # one tag per slope, matching the independent scan, denominators <= 40
    for spec in (T25, T34):
        for den in range(1, 41):
            for num in range(-12, 13):
                if num == 0 or gcd(abs(num), den) != 1:
                    continue
                slope = Slope(num, den)
                region = locate(spec, slope)
                expected = _region_by_scan(spec, slope)
                if isinstance(expected, tuple):
                    assert (region.kind, region.index) == expected, f"{spec} {slope}"
                else:
                    assert region.kind == expected, f"{spec} {slope}"


def test_disjointness_quick():
    for spec in (T25, T34):
        ivs = [influence_interval(spec, n) for n in sorted(exceptional_indices(spec, 20))]
        for a, b in zip(ivs, ivs[1:]):
            assert a.upper.value <= b.lower.value, (a, b)
    # trefoil: nested, each upper end infinite
    ivs = [influence_interval(T23, n) for n in range(2, 12)]
    for a, b in zip(ivs, ivs[1:]):
        assert a.lower.value < b.lower.value
        assert a.upper.is_infinite and b.upper.is_infinite


def _slopes_in(lo, hi, max_den, closed=False):
    out = []
    for den in range(1, max_den + 1):
        for num in range(-(4 * max_den), 4 * max_den + 1):
            if gcd(abs(num), den) != 1:
                continue
            s = Slope(num, den)
            inside = lo.value < s.value < hi.value
            boundary = s == lo or s == hi
            if inside or (closed and boundary):
                out.append(s)
    return out


def test_pairing_minimality():
    # For outside slopes, the pairing with anything in the closed interval is
    # minimized only at the endpoints; lower-half slopes pair worse with the
    # upper half than with the upper endpoint.  Denominators up to 30.
    for spec, n in ((T25, 2), (T25, 4), (T34, 2)):
        iv = influence_interval(spec, n)
        inside_closed = _slopes_in(iv.lower, iv.center, 30, closed=True) + _slopes_in(
            iv.center, iv.upper, 30, closed=True
        )
        outside = [
            s
            for s in (
                Slope(a, b)
                for b in range(1, 13)
                for a in range(1, 40)
                if gcd(a, b) == 1
            )
            if s.value < iv.lower.value or s.value > iv.upper.value
        ]
        for rp in outside[::3]:
            floor_pair = min(intersect(rp, iv.upper), intersect(rp, iv.lower))
            for sp in inside_closed[::2]:
                pairing = intersect(rp, sp)
                assert pairing >= floor_pair
                if pairing == floor_pair:
                    assert sp in (iv.upper, iv.lower)
        lower_half = _slopes_in(iv.lower, iv.center, 25)
        upper_half = _slopes_in(iv.center, iv.upper, 25)
        for rp in lower_half:
            for sp in upper_half:
                assert intersect(rp, sp) > intersect(rp, iv.upper)


def test_nonthickenable_profile_examples():
    prof = nonthickenable_profile(T25, 3)
    assert (prof.n_k, prof.dividing_curves, prof.torus_count) == (3, 6, 2)
    prof = nonthickenable_profile(T25, 2)
    assert (prof.n_k, prof.dividing_curves, prof.torus_count) == (1, 2, 2)
    for spec in (T23, T25, T34):
        prof = nonthickenable_profile(spec, 1)
        assert (prof.n_k, prof.dividing_curves, prof.torus_count) == (1, 2, 1)


def test_census_examples():
    rec = tori_census(T23, S("7/2"))
    assert (rec.torus_count, rec.standard_count) == (6, 2)
    rec = tori_census(T25, S("2/5"))
    assert (rec.torus_count, rec.standard_count) == (2, 2)
    rec = tori_census(T25, S("1/2"))
    assert (rec.torus_count, rec.standard_count) == (2, 2)
    assert "tb=2" in rec.note


def test_census_influence_consistency():
    # slopes inside an upper influence interval count two extra tori
    for spec, n in ((T25, 2), (T25, 4), (T34, 3)):
        iv = influence_interval(spec, n)
        inside = mediant(iv.center, iv.upper)
        rec_in = tori_census(spec, inside)
        assert rec_in.torus_count == rec_in.standard_count + 2


def test_census_rejects_uncovered_slopes():
    with pytest.raises(ValueError):
        tori_census(T25, S("1/4"))  # below 1/w
    with pytest.raises(ValueError):
        tori_census(T25, S("2/7"))  # in (0, 1/w), not a reciprocal integer
    with pytest.raises(ValueError):
        tori_census(T23, S("1/2"))  # trefoil below the bands
    with pytest.raises(ValueError):
        tori_census(T25, S("-1/2"))  # negative reciprocal integer
    with pytest.raises(ValueError):
        tori_census(T25, S("1/0"))


def test_census_negative():
    rec = tori_census(T25, S("-2/3"))  # between -1 and -1/2, tb target -1
    assert rec.torus_count == rec.standard_count == 2 * (3 - (-2))
    assert "tb=-1" in rec.note


def test_thickening_outcome_examples():
    out = thickening_outcome(T25, S("3/4"), 1, inside_index=2, inside_sign=1)
    assert out.kind == "thickens_partial" and out.limit == S("2/3")
    out = thickening_outcome(T25, S("-1/2"), 1, inside_index=2, inside_sign=1)
    assert out.kind == "thickens_to_max"
    out = thickening_outcome(T25, S("1/1"), 1, inside_index=3, inside_sign=1)
    assert out.kind == "thickens_to_max"
    out = thickening_outcome(T25, S("2/3"), 1, inside_index=2, inside_sign=-1)
    assert out.kind == "non_thickenable"
    out = thickening_outcome(T25, S("1/1"), 3, inside_index=3)
    assert out.kind == "non_thickenable"
    # trefoil: band slopes trapped, negative and infinite slopes escape
    out = thickening_outcome(T23, S("7/2"), 1, inside_index=3)
    assert out.kind == "thickens_partial" and out.limit == S("3/1")
    out = thickening_outcome(T23, S("1/0"), 1, inside_index=3)
    assert out.kind == "thickens_to_max"


def test_thickening_outcome_rejects():
    with pytest.raises(ValueError):
        thickening_outcome(T25, S("1/2"), 1, inside_index=2)  # not interior to N_2
    with pytest.raises(ValueError):
        thickening_outcome(T25, S("3/4"), 1)  # influence slope needs context
    with pytest.raises(ValueError):
        thickening_outcome(T25, S("2/3"), 1)  # exceptional slope needs context
    with pytest.raises(ValueError):
        thickening_outcome(T25, S("0/1"), 1)


def test_thickening_outcome_without_context():
    assert thickening_outcome(T25, S("-5/7"), 1).kind == "thickens_to_max"
    assert thickening_outcome(T25, S("2/5"), 1).kind == "thickens_to_max"
    assert thickening_outcome(T25, S("3/5"), 1).kind == "thickens_to_max"  # lower half
    assert thickening_outcome(T25, S("1/1"), 1).kind == "thickens_to_max"  # e_3, fewer curves
