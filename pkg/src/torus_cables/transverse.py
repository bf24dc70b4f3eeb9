"""Transverse classification as the negative-stabilization quotient.

Transverse representatives of a cable correspond to Legendrian classes up
to negative stabilization.  Under the class model of
:mod:`torus_cables.legendrian` the quotient is a *top chain* (the common
lineage, one class at every odd self-linking number below the maximum)
plus one branch per plus-protected generator, alive for ``bound + 1``
self-linking levels before merging into the top chain.  Minus-protected
generators fall into the top chain outright.

``classify_transverse`` builds the same data directly from the closed-form
case analysis, without the Legendrian engine, so the two routes can be
cross-checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional

from .farey import farey_combine, intersect
from .legendrian import (
    Branch,
    CableSpec,
    Classification,
    bennequin_bound,
    classes_at,
    classify,
    destabilizes,
    same_class,
    stabilize,
)
from .torus_knots import (
    INFLUENCE_LOWER,
    INFLUENCE_UPPER,
    TREFOIL_BAND,
    TorusKnotSpec,
    influence_interval,
    locate,
)

TOP_CHAIN = "top"


def pushoff_sl(tb: int, rot: int, sign: int) -> int:
    """Self-linking of the positive (+1) or negative (-1) transverse push-off."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if (tb + rot) % 2 == 0:
        raise ValueError("tb + rot must be odd")
    return tb - sign * rot


def max_sl(cable: CableSpec) -> int:
    """Maximal self-linking number r*s - r + s*w."""
    return bennequin_bound(cable)


@dataclass(frozen=True)
class TransverseBranch:
    """One chain of transverse classes: alive from sl_top down to
    merge_sl + 2, isotopic to the top chain at merge_sl and below."""

    origin: str
    sl_top: int
    destabilizable: bool
    merge_sl: Optional[int] = None

    def __post_init__(self):
        if self.sl_top % 2 == 0:
            raise ValueError("self-linking numbers are odd")
        if self.merge_sl is not None and self.merge_sl > self.sl_top - 2:
            raise ValueError("merge depth must sit strictly below the branch top")


@dataclass(frozen=True)
class TransverseClassification:
    cable: CableSpec
    max_sl: int
    branches: tuple
    simple: bool

    @property
    def side_branches(self) -> tuple:
        return tuple(b for b in self.branches if b.origin != TOP_CHAIN)


def _branch_is_destabilizable(cls: Classification, gen) -> bool:
    """Orbit search: does the negative-stabilization orbit of the branch head
    meet the image of positive stabilization?

    A transverse class destabilizes exactly when some Legendrian class one
    level up positively stabilizes into its orbit.  The orbit of the head of
    a plus-protected branch is {Branch(gen, 0, y)}; we search a few orbit
    representatives rather than assuming the answer.
    """
    for y in range(0, 3):
        target = Branch(gen, 0, y)
        for cand in classes_at(cls, target.rot - 1, target.tb + 1):
            if same_class(cls, stabilize(cand, cls, 1), target):
                return True
    return False


def quotient_transverse(cls: Classification) -> TransverseClassification:
    """Transverse classes as negative-stabilization orbits of the model."""
    top_sl = max(g.tb + abs(g.rot) for g in cls.generators)
    branches = [TransverseBranch(TOP_CHAIN, top_sl, destabilizable=False)]
    for g in cls.branches:
        if g.sign != 1:
            continue  # minus-protected branches collapse into the top chain
        sl_top = g.tb - g.rot
        branches.append(
            TransverseBranch(
                origin=g.id,
                sl_top=sl_top,
                destabilizable=_branch_is_destabilizable(cls, g),
                merge_sl=sl_top - 2 * (g.bound + 1),
            )
        )
    return TransverseClassification(
        cable=cls.cable,
        max_sl=top_sl,
        branches=tuple(branches),
        simple=len(branches) == 1,
    )


def classify_transverse(cable: CableSpec) -> TransverseClassification:
    """Transverse classification from the closed-form case analysis.

    Built independently of the Legendrian engine.  In the lower half of an
    interval of influence the branch keeps the self-linking ``tb - rot`` of
    its defining ruling curve (see the README note on the alternative
    uniform closed form).
    """
    knot, r, s = cable.knot, cable.r, cable.s
    w = knot.width
    rs = r * s
    if s == 1 and r < w:
        raise ValueError(
            f"the ({r},1)-cable is the underlying knot with a framing the cable "
            "formulas do not cover; only r >= width is supported for s = 1"
        )
    region = locate(knot, cable.slope)
    top = rs - r + s * w
    branches = [TransverseBranch(TOP_CHAIN, top, destabilizable=False)]
    if region.kind == TREFOIL_BAND:
        n = region.index
        for _ in range(n - 1):
            branches.append(
                TransverseBranch(
                    origin="protected_l:+",
                    sl_top=rs + r - s,
                    destabilizable=False,
                    merge_sl=rs - r - s,
                )
            )
        if s != r * n:
            delta = r * (n + 1) - s
            branches.append(
                TransverseBranch(
                    origin="protected_k:+",
                    sl_top=rs + r - s - 2 * delta,
                    destabilizable=False,
                    merge_sl=rs - r - s,
                )
            )
    elif region.kind == INFLUENCE_UPPER:
        iv = influence_interval(knot, region.index)
        sl_top = rs + r - s * w
        branches.append(
            TransverseBranch(
                origin="protected_k:+",
                sl_top=sl_top,
                destabilizable=False,
                merge_sl=sl_top - 2 * intersect(cable.slope, iv.upper),
            )
        )
    elif region.kind == INFLUENCE_LOWER:
        iv = influence_interval(knot, region.index)
        n = region.index
        pair_center = intersect(cable.slope, iv.center)
        pair_upper = intersect(cable.slope, iv.upper)
        sl_top = (rs - pair_center) - r * (n - 1)
        branches.append(
            TransverseBranch(
                origin="protected_k:+",
                sl_top=sl_top,
                destabilizable=False,
                merge_sl=sl_top - 2 * (pair_upper - pair_center),
            )
        )
    return TransverseClassification(
        cable=cable,
        max_sl=top,
        branches=tuple(branches),
        simple=len(branches) == 1,
    )


def count_transverse(tcls: TransverseClassification, sl: int) -> int:
    """Number of transverse classes with the given self-linking number."""
    if (tcls.max_sl - sl) % 2:
        return 0
    count = 1 if sl <= tcls.max_sl else 0
    for b in tcls.side_branches:
        if b.merge_sl + 2 <= sl <= b.sl_top and (b.sl_top - sl) % 2 == 0:
            count += 1
    return count


# -- verifiers for the qualitative statements --------------------------------

@dataclass(frozen=True)
class Claim:
    description: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class QualReport:
    suite: str
    knot: TorusKnotSpec
    k: int
    m: int
    n: int
    cable: CableSpec
    claims: tuple

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.claims)


QUAL1 = "qual1"
QUAL2 = "qual2"
QUAL4 = "qual4"
SUITES = (QUAL1, QUAL2, QUAL4)


def _claim(claims: list, description: str, passed: bool, detail: str = "") -> None:
    claims.append(Claim(description, bool(passed), detail))


def verify_qualitative(
    knot: TorusKnotSpec, which: str, k: int, m: int, n: int
) -> QualReport:
    """Construct the advertised slope and check every claim of the statement.

    ``qual1``: trefoil cables with n Legendrian classes sharing invariants
    m below maximal tb, one non-destabilizable, separated for fewer than k
    stabilizations and merged by k.
    ``qual2``: the transverse analogue with its exact sl bookkeeping.
    ``qual4``: for a general knot, a non-destabilizable transverse class at
    least 2n below maximal sl that merges after exactly m stabilizations
    (k names the exceptional index used for the slope).
    """
    if which not in SUITES:
        raise ValueError(f"unknown suite {which!r}")
    if min(k, m, n) < 1:
        raise ValueError("k, m, n must be positive integers")
    if which in (QUAL1, QUAL2):
        if not knot.is_trefoil:
            raise ValueError(f"suite {which} concerns cables of the trefoil")
        if gcd(k, m) != 1:
            raise ValueError("k and m must be coprime")
        if which == QUAL1 and n < 2:
            raise ValueError("qual1 needs n > 1")
        if which == QUAL2 and n < 3:
            raise ValueError("qual2 needs n > 2")
        r = k + m
        s = k * n + m * (n - 1)
        cable = CableSpec(knot, r, s)
        if which == QUAL1:
            claims = _check_qual1(cable, k, m, n)
        else:
            claims = _check_qual2(cable, k, m, n)
    else:
        if knot.is_trefoil:
            raise ValueError("qual4 concerns knots other than the trefoil")
        if k < 2 or gcd(k, knot.width) != 1:
            raise ValueError("k must be an exceptional index coprime to the width")
        if gcd(m, n) != 1:
            raise ValueError("m and n must be coprime")
        iv = influence_interval(knot, k)
        slope = farey_combine(iv.center, iv.upper, m, n)
        cable = CableSpec(knot, slope.den, slope.num)
        claims = _check_qual4(cable, k, m, n)
    return QualReport(
        suite=which, knot=knot, k=k, m=m, n=n, cable=cable, claims=tuple(claims)
    )


def _word_variants(cls, classes, plus: int, minus: int):
    out = []
    for c in classes:
        for _ in range(plus):
            c = stabilize(c, cls, 1)
        for _ in range(minus):
            c = stabilize(c, cls, -1)
        out.append(c)
    return out


def _pairwise_distinct(cls, classes) -> bool:
    for i in range(len(classes)):
        for j in range(i + 1, len(classes)):
            if same_class(cls, classes[i], classes[j]):
                return False
    return True


def _check_qual1(cable: CableSpec, k: int, m: int, n: int) -> list:
    claims = []
    cls = classify(cable)
    r, s = cable.r, cable.s
    rs = r * s
    _claim(
        claims,
        "cable slope lies in (1, oo) and the cable is not Legendrian simple",
        cable.slope.value > 1 and not cls.simple,
        f"slope {cable.slope}",
    )
    rot, tb = s - r + m, rs - m
    classes = classes_at(cls, rot, tb)
    _claim(
        claims,
        f"exactly {n} Legendrian classes at (rot, tb) = ({rot}, {tb}) = (rot, tb_max - {m})",
        len(classes) == n and tb == cls.tb_max - m,
        f"found {len(classes)}",
    )
    nondestab = [c for c in classes if not destabilizes(cls, c)]
    _claim(
        claims,
        "exactly one of them does not destabilize",
        len(nondestab) == 1,
        f"found {len(nondestab)}",
    )
    separated = all(
        _pairwise_distinct(cls, _word_variants(cls, classes, a, j - a))
        for j in range(0, k)
        for a in range(0, j + 1)
    )
    _claim(
        claims,
        f"all {n} remain pairwise distinct under every word of fewer than {k} stabilizations",
        separated,
    )
    merged = _word_variants(cls, classes, k, 0)
    all_merged = all(same_class(cls, merged[0], c) for c in merged[1:])
    _claim(
        claims,
        f"{k} positive stabilizations make them all Legendrian isotopic",
        all_merged,
    )
    return claims


def _check_qual2(cable: CableSpec, k: int, m: int, n: int) -> list:
    claims = []
    cls = classify(cable)
    tcls = quotient_transverse(cls)
    p = k * (n - 1) + m * (n - 2)
    sl_1 = tcls.max_sl - 2 * p
    _claim(
        claims,
        "cable slope lies in (1, oo) and the cable is not transversely simple",
        cable.slope.value > 1 and not tcls.simple,
        f"slope {cable.slope}",
    )
    _claim(
        claims,
        f"exactly {n - 1} transverse classes at sl = max - 2*{p} = {sl_1}",
        count_transverse(tcls, sl_1) == n - 1,
        f"found {count_transverse(tcls, sl_1)}",
    )
    heads_1 = [
        b for b in tcls.side_branches if b.sl_top == sl_1 and not b.destabilizable
    ]
    _claim(
        claims,
        f"exactly {n - 2} of them are non-destabilizable",
        len(heads_1) == n - 2,
        f"found {len(heads_1)}",
    )
    sl_2 = tcls.max_sl - 2 * (p + m)
    heads_2 = [
        b for b in tcls.side_branches if b.sl_top == sl_2 and not b.destabilizable
    ]
    _claim(
        claims,
        f"one further non-destabilizable class at sl = max - 2*{p + m} = {sl_2}",
        len(heads_2) == 1,
        f"found {len(heads_2)}",
    )
    merge = tcls.max_sl - 2 * (p + m + k)
    _claim(
        claims,
        f"every branch stays distinct until sl = max - 2*{p + m + k} = {merge}",
        all(b.merge_sl == merge for b in tcls.side_branches)
        and count_transverse(tcls, merge) == 1
        and count_transverse(tcls, merge + 2) > 1,
        f"merge depths {[b.merge_sl for b in tcls.side_branches]}",
    )
    return claims


def _check_qual4(cable: CableSpec, k: int, m: int, n: int) -> list:
    claims = []
    cls = classify(cable)
    tcls = quotient_transverse(cls)
    region = cls.region
    _claim(
        claims,
        f"constructed slope {cable.slope} lies in the upper influence interval of index {k}",
        region.kind == INFLUENCE_UPPER and region.index == k,
        str(region),
    )
    side = tcls.side_branches
    _claim(claims, "exactly one non-destabilizable transverse branch", len(side) == 1
           and not side[0].destabilizable, f"found {len(side)}")
    branch = side[0]
    _claim(
        claims,
        f"its self-linking number is at least 2*{n} below the maximum",
        branch.sl_top <= tcls.max_sl - 2 * n,
        f"sl {branch.sl_top} vs max {tcls.max_sl}",
    )
    stays = all(count_transverse(tcls, branch.sl_top - 2 * j) == 2 for j in range(m))
    merges = count_transverse(tcls, branch.sl_top - 2 * m) == 1
    _claim(
        claims,
        f"it must be stabilized exactly {m} times to merge with the top chain",
        stays and merges and branch.merge_sl == branch.sl_top - 2 * m,
        f"merge at {branch.merge_sl}",
    )
    return claims
