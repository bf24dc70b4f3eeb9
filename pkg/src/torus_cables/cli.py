"""Command-line interface.

Every engine is exposed as a one-shot query with a text report on stdout
and an optional JSON rendering (--json).  Exit status: 0 on success, 1 on
domain errors (one-line diagnostic on stderr), 2 on usage errors.  All
slopes are printed as exact "num/den" strings; no floating point anywhere.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bypass as bypass_mod
from .farey import (
    Slope,
    cf_expand,
    farey_combine,
    intersect,
    is_edge,
    mediant,
    neighbors,
    neighbors_oracle,
)
from .legendrian import (
    CableSpec,
    Classification,
    MountainRange,
    classify,
    mountain_range,
)
from .torus_knots import (
    INFLUENCE_LOWER,
    TorusKnotSpec,
    exceptional_indices,
    influence_interval,
    locate,
    nonthickenable_profile,
    tori_census,
    width,
)
from .transverse import (
    TransverseClassification,
    count_transverse,
    quotient_transverse,
    verify_qualitative,
)


def _slope(text: str) -> Slope:
    try:
        return Slope.parse(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _pair(text: str) -> tuple:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected two comma-separated integers, got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _dump(payload) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def _slope_str(s) -> object:
    return None if s is None else str(s)


def classification_payload(cls: Classification) -> dict:
    p = cls.parameters
    return {
        "cable": {
            "p": cls.cable.knot.p,
            "q": cls.cable.knot.q,
            "r": cls.cable.r,
            "s": cls.cable.s,
        },
        "case": str(cls.region),
        "parameters": {
            "w": p.w,
            "n": p.n,
            "k": p.k,
            "e_n": _slope_str(p.e_n),
            "e_n_a": _slope_str(p.e_n_a),
            "e_n_c": _slope_str(p.e_n_c),
            "c": p.c,
            "c_prime": p.c_prime,
            "tb_max": p.tb_max,
        },
        "generators": [
            {
                "id": g.id,
                "tb": g.tb,
                "rot": g.rot,
                "sign": g.sign,
                "bound": g.bound,
                "destabilizable": g.destabilizable,
            }
            for g in cls.generators
        ],
        "simple": cls.simple,
    }


def transverse_payload(cls: Classification, tcls: TransverseClassification) -> dict:
    payload = classification_payload(cls)
    payload["max_sl"] = tcls.max_sl
    payload["branches"] = [
        {
            "origin": b.origin,
            "sl_top": b.sl_top,
            "destabilizable": b.destabilizable,
            "merge_sl": b.merge_sl,
        }
        for b in tcls.branches
    ]
    return payload


def render_mountain(mr: MountainRange) -> str:
    """ASCII grid: tb rows descending, one column per rot in the populated
    span, digits (letters from ten up) at populated cells and dots elsewhere."""
    if not mr.counts:
        raise ValueError("empty mountain range")
    rots = sorted({rot for rot, _ in mr.counts})
    lo, hi = rots[0], rots[-1]
    span = list(range(lo, hi + 1))
    colw = max(len(str(r)) for r in span) + 1
    gutter = max(len(str(tb)) for tb in range(mr.tb_floor, mr.tb_max + 1))
    lines = [" " * gutter + "".join(str(r).rjust(colw) for r in span)]
    for tb in range(mr.tb_max, mr.tb_floor - 1, -1):
        cells = []
        for rot in span:
            c = mr.count(rot, tb)
            if c == 0:
                cells.append(".".rjust(colw))
            elif c < 10:
                cells.append(str(c).rjust(colw))
            elif c < 36:
                cells.append(chr(ord("a") + c - 10).rjust(colw))
            else:
                cells.append("*".rjust(colw))
        lines.append(str(tb).rjust(gutter) + "".join(cells))
    return "\n".join(lines)


def _print(out, text: str) -> None:
    out.write(text if text.endswith("\n") else text + "\n")


def _cmd_farey(args, out) -> int:
    op = args.op
    if op == "neighbors":
        if args.den_bound is not None:
            upper, lower = neighbors_oracle(args.a, args.den_bound)
        else:
            upper, lower = neighbors(args.a)
        if args.json:
            _print(out, _dump({"slope": str(args.a), "upper": str(upper), "lower": str(lower)}))
        else:
            _print(out, f"upper {upper}, lower {lower}")
    elif op == "cf":
        cf = cf_expand(args.a)
        if args.json:
            _print(out, _dump({"slope": str(args.a), "coefficients": list(cf.coeffs)}))
        else:
            _print(out, str(cf))
    elif op == "mediant":
        m = mediant(args.a, args.b)
        if args.json:
            _print(out, _dump({"a": str(args.a), "b": str(args.b), "mediant": str(m)}))
        else:
            _print(out, str(m))
    elif op == "combine":
        c = farey_combine(args.a, args.b, args.m, args.n)
        if args.json:
            _print(out, _dump({"a": str(args.a), "b": str(args.b), "m": args.m, "n": args.n, "result": str(c)}))
        else:
            _print(out, str(c))
    elif op == "edge":
        res = is_edge(args.a, args.b)
        if args.json:
            _print(out, _dump({"a": str(args.a), "b": str(args.b), "edge": res}))
        else:
            _print(out, "edge" if res else "no edge")
    elif op == "intersect":
        v = intersect(args.a, args.b)
        if args.json:
            _print(out, _dump({"a": str(args.a), "b": str(args.b), "intersection": v}))
        else:
            _print(out, str(v))
    return 0


def _cmd_bypass(args, out) -> int:
    state = bypass_mod.TorusState(dividing=args.dividing, ruling=args.ruling)
    if args.den_bound is not None:
        result = bypass_mod.attach_bypass_oracle(state, args.side, args.den_bound)
    else:
        result = bypass_mod.attach_bypass(state, args.side)
    if args.json:
        _print(out, _dump({
            "dividing": str(args.dividing),
            "ruling": str(args.ruling),
            "side": args.side,
            "new_dividing": str(result),
        }))
    else:
        _print(out, f"new dividing slope {result}")
    return 0


def _cmd_tori(args, out) -> int:
    spec = TorusKnotSpec(*args.pq)
    action = args.action
    if action == "census":
        rec = tori_census(spec, args.slope)
        if args.json:
            _print(out, _dump({
                "knot": {"p": spec.p, "q": spec.q},
                "slope": str(args.slope),
                "torus_count": rec.torus_count,
                "standard_count": rec.standard_count,
                "dividing_curve_pairs": rec.dividing_curve_pairs,
                "note": rec.note,
            }))
        else:
            _print(out, f"{rec.torus_count} tori, {rec.standard_count} standard; {rec.note}")
    elif action == "profile":
        prof = nonthickenable_profile(spec, args.k)
        if args.json:
            _print(out, _dump({
                "knot": {"p": spec.p, "q": spec.q},
                "k": prof.index,
                "n_k": prof.n_k,
                "dividing_curves": prof.dividing_curves,
                "torus_count": prof.torus_count,
            }))
        else:
            _print(out, f"{prof.torus_count} non-thickenable tori with "
                   f"{prof.dividing_curves} dividing curves (n_k = {prof.n_k})")
    elif action == "locate":
        region = locate(spec, args.slope)
        if args.json:
            _print(out, _dump({
                "knot": {"p": spec.p, "q": spec.q},
                "slope": str(args.slope),
                "region": region.kind,
                "index": region.index,
            }))
        else:
            _print(out, str(region))
    elif action == "interval":
        iv = influence_interval(spec, args.n)
        if args.json:
            _print(out, _dump({
                "knot": {"p": spec.p, "q": spec.q},
                "n": iv.index,
                "e_n": str(iv.center),
                "e_n_a": str(iv.upper),
                "e_n_c": str(iv.lower),
            }))
        else:
            _print(out, f"e = {iv.center}, upper {iv.upper}, lower {iv.lower}")
    elif action == "width":
        w = width(spec)
        if args.json:
            _print(out, _dump({"knot": {"p": spec.p, "q": spec.q}, "width": w}))
        else:
            _print(out, str(w))
    elif action == "indices":
        idx = sorted(exceptional_indices(spec, args.bound))
        if args.json:
            _print(out, _dump({"knot": {"p": spec.p, "q": spec.q}, "bound": args.bound, "indices": idx}))
        else:
            _print(out, " ".join(str(i) for i in idx))
    return 0


def _cable(args) -> CableSpec:
    spec = TorusKnotSpec(*args.pq)
    return CableSpec(spec, *args.rs)


def _cmd_classify(args, out) -> int:
    cls = classify(_cable(args))
    if args.json:
        _print(out, _dump(classification_payload(cls)))
        return 0
    p = cls.parameters
    _print(out, f"cable {cls.cable} (slope {cls.cable.slope}), case {cls.region}")
    _print(out, f"tb_max {p.tb_max}, simple {str(cls.simple).lower()}")
    if p.e_n is not None:
        _print(out, f"exceptional slope {p.e_n}, interval ({p.e_n_c}, {p.e_n_a})")
    for g in cls.generators:
        extra = ""
        if g.protected:
            extra = f", bound {g.bound}, " + (
                "destabilizable" if g.destabilizable else "non-destabilizable"
            )
        _print(out, f"  {g.id}: tb {g.tb}, rot {g.rot}{extra}")
    return 0


def _cmd_mountain(args, out) -> int:
    cls = classify(_cable(args))
    mr = mountain_range(cls, args.tb_floor)
    if args.json:
        payload = {
            "cable": classification_payload(cls)["cable"],
            "tb_floor": mr.tb_floor,
            "tb_max": mr.tb_max,
            "counts": [
                {"rot": rot, "tb": tb, "count": mr.counts[(rot, tb)]}
                for rot, tb in sorted(mr.counts, key=lambda pt: (-pt[1], pt[0]))
            ],
        }
        _print(out, _dump(payload))
    else:
        _print(out, render_mountain(mr))
    return 0


def _cmd_transverse(args, out) -> int:
    cable = _cable(args)
    cls = classify(cable)
    tcls = quotient_transverse(cls)
    if args.json:
        _print(out, _dump(transverse_payload(cls, tcls)))
        return 0
    _print(out, f"cable {cable} (slope {cable.slope}), case {cls.region}")
    _print(out, f"max sl {tcls.max_sl}, transversely simple {str(tcls.simple).lower()}")
    for b in tcls.branches:
        if b.origin == "top":
            _print(out, f"  top chain from sl {b.sl_top}")
        else:
            kind = "destabilizable" if b.destabilizable else "non-destabilizable"
            _print(out, f"  branch {b.origin}: sl {b.sl_top}, {kind}, merges at sl {b.merge_sl}")
    if cls.region.kind == INFLUENCE_LOWER:
        _print(out, "  note: branch sl follows tb - rot of its generator; the uniform "
               f"closed form r*s + r - s*w would sit 2*{intersect(cable.slope, cls.parameters.e_n)} higher")
    if args.sl_floor is not None:
        sl = tcls.max_sl
        while sl >= args.sl_floor:
            _print(out, f"  sl {sl}: {count_transverse(tcls, sl)} classes")
            sl -= 2
    return 0


def _cmd_verify(args, out) -> int:
    spec = TorusKnotSpec(*args.pq)
    report = verify_qualitative(spec, args.suite, args.k, args.m, args.n)
    if args.json:
        _print(out, _dump({
            "suite": report.suite,
            "knot": {"p": spec.p, "q": spec.q},
            "k": report.k,
            "m": report.m,
            "n": report.n,
            "cable": {"r": report.cable.r, "s": report.cable.s},
            "claims": [
                {"description": c.description, "passed": c.passed, "detail": c.detail}
                for c in report.claims
            ],
            "passed": report.passed,
        }))
    else:
        _print(out, f"suite {report.suite} on {spec} with k={report.k} m={report.m} "
               f"n={report.n}: cable ({report.cable.r},{report.cable.s})")
        for c in report.claims:
            mark = "PASS" if c.passed else "FAIL"
            detail = f" [{c.detail}]" if c.detail else ""
            _print(out, f"  {mark}  {c.description}{detail}")
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="torus-cables",
        description="Exact Legendrian and transverse classification data for "
        "cables of positive torus knots.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_farey = sub.add_parser("farey", help="slope arithmetic and tessellation queries")
    p_farey.add_argument("op", choices=["neighbors", "cf", "mediant", "combine", "edge", "intersect"])
    p_farey.add_argument("a", type=_slope)
    p_farey.add_argument("b", type=_slope, nargs="?")
    p_farey.add_argument("m", type=int, nargs="?")
    p_farey.add_argument("n", type=int, nargs="?")
    p_farey.add_argument("--den-bound", type=int, default=None)
    p_farey.add_argument("--json", action="store_true")

    p_byp = sub.add_parser("bypass", help="dividing slope after a bypass attachment")
    p_byp.add_argument("side", choices=list(bypass_mod.SIDES))
    p_byp.add_argument("dividing", type=_slope)
    p_byp.add_argument("ruling", type=_slope)
    p_byp.add_argument("--den-bound", type=int, default=None,
                       help="run the brute-force search instead of the closed form")
    p_byp.add_argument("--json", action="store_true")

    p_tori = sub.add_parser("tori", help="solid-torus census and geometry queries")
    p_tori.add_argument("action", choices=["census", "profile", "locate", "interval", "width", "indices"])
    p_tori.add_argument("--pq", type=_pair, required=True)
    p_tori.add_argument("--slope", type=_slope)
    p_tori.add_argument("--k", type=int)
    p_tori.add_argument("--n", type=int)
    p_tori.add_argument("--bound", type=int)
    p_tori.add_argument("--json", action="store_true")

    for name in ("classify", "mountain", "transverse"):
        pc = sub.add_parser(name)
        pc.add_argument("--pq", type=_pair, required=True)
        pc.add_argument("--rs", type=_pair, required=True)
        pc.add_argument("--json", action="store_true")
        if name == "mountain":
            pc.add_argument("--tb-floor", type=int, required=True)
        if name == "transverse":
            pc.add_argument("--sl-floor", type=int, default=None)

    p_ver = sub.add_parser("verify", help="check a qualitative statement end to end")
    p_ver.add_argument("--suite", choices=["qual1", "qual2", "qual4"], required=True)
    p_ver.add_argument("--pq", type=_pair, default=(2, 3))
    p_ver.add_argument("--k", type=int, required=True)
    p_ver.add_argument("--m", type=int, required=True)
    p_ver.add_argument("--n", type=int, required=True)
    p_ver.add_argument("--json", action="store_true")
    return parser


_MISSING_ARG = {
    "mediant": ("b",),
    "combine": ("b", "m", "n"),
    "edge": ("b",),
    "intersect": ("b",),
}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        if args.command == "farey":
            for needed in _MISSING_ARG.get(args.op, ()):
                if getattr(args, needed) is None:
                    err.write(f"farey {args.op}: missing argument {needed!r}\n")
                    return 2
            return _cmd_farey(args, out)
        if args.command == "bypass":
            return _cmd_bypass(args, out)
        if args.command == "tori":
            needed = {"census": "slope", "locate": "slope", "profile": "k",
                      "interval": "n", "indices": "bound"}.get(args.action)
            if needed and getattr(args, needed) is None:
                err.write(f"tori {args.action}: missing --{needed}\n")
                return 2
            return _cmd_tori(args, out)
        if args.command == "classify":
            return _cmd_classify(args, out)
        if args.command == "mountain":
            return _cmd_mountain(args, out)
        if args.command == "transverse":
            return _cmd_transverse(args, out)
        if args.command == "verify":
            return _cmd_verify(args, out)
        raise AssertionError(f"unhandled command {args.command}")
    except ValueError as exc:
        err.write(f"error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
