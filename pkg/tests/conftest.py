from math import gcd

from torus_cables.farey import Slope


def S(text: str) -> Slope:
    return Slope.parse(text)


def positive_slopes(max_num: int, max_den: int):
    """All reduced positive slopes with bounded numerator and denominator."""
    for den in range(1, max_den + 1):
        for num in range(1, max_num + 1):
            if gcd(num, den) == 1:
                yield Slope(num, den)


def grid_slopes(bound: int, include_infinity: bool = True):
    """All reduced slopes with |num| <= bound and den <= bound, plus 0 and inf."""
    out = [Slope(0, 1)]
    if include_infinity:
        out.append(Slope(1, 0))
    for den in range(1, bound + 1):
        for num in range(-bound, bound + 1):
            if num != 0 and gcd(abs(num), den) == 1:
                out.append(Slope(num, den))
    return out


def reduced_pairs(bound: int):
    """Reduced (r, s) with 1 <= |r|, s <= bound and r nonzero."""
    for r in range(-bound, bound + 1):
        if r == 0:
            continue
        for s in range(1, bound + 1):
            if gcd(abs(r), s) == 1:
                yield r, s
