"""Dividing-slope dynamics of a bypass attached to a standard convex torus.

For a torus with two dividing curves of slope ``s`` and ruling curves of
slope ``r``, a bypass attached to the front along a ruling curve replaces
``s`` by the slope on the counterclockwise arc from ``r`` to ``s`` that is
closest to ``r`` (in arc order) among slopes sharing a tessellation edge
with ``s``; the ruling slope itself is excluded.  A bypass attached to the
back obeys the same rule on the arc from ``s`` to ``r``.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .farey import (
    INFINITY,
    Slope,
    ccw_strictly_between,
    circular_key,
    normalize,
)

FRONT = "front"
BACK = "back"
SIDES = (FRONT, BACK)


@dataclass(frozen=True)
class TorusState:
    """Standard convex torus: dividing slope, ruling slope, curve pairs."""

    dividing: Slope
    ruling: Slope
    curve_pairs: int = 1

    def __post_init__(self):
        if self.curve_pairs < 1:
            raise ValueError("curve_pairs must be a positive integer")
        if self.dividing == self.ruling:
            raise ValueError("ruling slope must differ from the dividing slope")


def _check(state: TorusState, side: str) -> None:
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}, got {side!r}")
    if state.curve_pairs != 1:
        raise ValueError("the slope rule applies only to tori with two dividing curves")


def _family_member(p: int, q: int, e: int, y: int) -> Slope:
    # y-th neighbor of p/q in the family p*y - q*x = e.
    return normalize((p * y - e) // q, y)


def _first_neighbor_ccw_after(s: Slope, r: Slope) -> Slope:
    """First slope with an edge to s met strictly after r, walking ccw."""
    if s.is_infinite:
        # Neighbors of the infinite slope are the integer slopes.
        return normalize(math.floor(r.value) + 1, 1)
    p, q = s.num, s.den
    sv = s.value
    candidates = []
    for e in (1, -1):
        if q == 1:
            y0 = 1
        else:
            y0 = (e * pow(p, -1, q)) % q
        parent = _family_member(p, q, e, y0)
        if e == 1:
            # Family below s, spanning [parent, s) in circular order.
            if r == parent:
                candidates.append(_family_member(p, q, e, y0 + q))
            elif ccw_strictly_between(r, parent, s):
                # First member strictly above r: minimal y > 1/(q*(s - r)).
                y_raw = math.floor(Fraction(1, q) / (sv - r.value)) + 1
                k = max(0, -((y0 - y_raw) // q))
                candidates.append(_family_member(p, q, e, y0 + k * q))
            else:
                candidates.append(parent)
        else:
            # Family above s, spanning (s, parent]; it meets the arc only
            # when r sits inside that span.
            if r != parent and ccw_strictly_between(r, s, parent):
                y_raw = math.ceil(Fraction(1, q) / (r.value - sv)) - 1
                k = (y_raw - y0) // q
                if k >= 0:
                    candidates.append(_family_member(p, q, e, y0 + k * q))
    if q == 1 and r != INFINITY and ccw_strictly_between(INFINITY, r, s):
        candidates.append(INFINITY)
    best = candidates[0]
    for c in candidates[1:]:
        if ccw_strictly_between(c, r, best):
            best = c
    return best


def attach_bypass(state: TorusState, side: str) -> Slope:
    """New dividing slope after attaching one bypass along a ruling curve."""
    _check(state, side)
    s, r = state.dividing, state.ruling
    if side == FRONT:
        return _first_neighbor_ccw_after(s, r)
    # The back rule is the front rule in the mirrored circular order, and
    # negating every slope reverses that order.
    return -_first_neighbor_ccw_after(-s, -r)


@lru_cache(maxsize=4096)
def _edge_candidates(s: Slope, den_bound: int, ruling_window: int) -> tuple:
    # Every slope of denominator <= den_bound with an edge to s, sorted by
    # circular position.  For an infinite dividing slope the edge condition
    # forces integer candidates, windowed around the ruling slope.
    out = []
    if s.is_infinite:
        for a in range(-ruling_window, ruling_window + 1):
            t = normalize(a, 1)
            out.append((circular_key(t), t))
    else:
        if s.den == 1:
            out.append((circular_key(INFINITY), INFINITY))
        for b in range(1, den_bound + 1):
            for e in (1, -1):
                top = s.num * b - e
                if top % s.den == 0:
                    t = normalize(top // s.den, b)
                    out.append((circular_key(t), t))
    out.sort(key=lambda kt: kt[0])
    return tuple(k for k, _ in out), tuple(t for _, t in out)


def attach_bypass_oracle(state: TorusState, side: str, den_bound: int) -> Slope:
    """Brute-force search over all slopes of denominator <= den_bound.

    Enumerates every slope satisfying the edge condition with the dividing
    slope, orders the candidates along the circle, and walks the attachment
    arc away from the ruling slope; the first candidate strictly inside the
    arc is by definition the arc-closest one.
    """
    _check(state, side)
    if den_bound < 1:
        raise ValueError("den_bound must be positive")
    s, r = state.dividing, state.ruling
    window = den_bound + (abs(math.floor(r.value)) + 2 if s.is_infinite else 0)
    keys, slopes = _edge_candidates(s, den_bound, window)
    kr, ks = circular_key(r), circular_key(s)
    n = len(keys)
    if side == FRONT:
        # first candidate counterclockwise after the ruling slope
        j = bisect.bisect_right(keys, kr) % n
        kt = keys[j]
        inside = (kr < kt < ks) if kr < ks else (kt > kr or kt < ks)
    else:
        # first candidate clockwise after (counterclockwise before) the ruling
        j = (bisect.bisect_left(keys, kr) - 1) % n
        kt = keys[j]
        inside = (ks < kt < kr) if ks < kr else (kt > ks or kt < kr)
    if not inside or kt == kr:
        raise ValueError("no candidate on the arc; raise den_bound")
    return slopes[j]
