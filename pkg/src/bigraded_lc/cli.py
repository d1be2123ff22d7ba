"""Batch front end: compute single components, run theorem-verification
sweeps, and compare against the independent dimension oracle.

Exit codes: 0 success / all checks pass, 1 a checked row failed,
2 parse error, 3 precondition violation, 4 hypothesis violation,
5 a search or stabilization limit was hit.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from .cohomology import (
    BigradedIdeal,
    annihilation_exponent,
    bigraded_resolution,
    cohomology_component,
    content_ideal,
    default_annihilation_cap,
    dual_basis_count,
    least_power_of_max_ideal_inside,
    load_ideal,
    monomial_top_predictor,
    predicted_reg_regular_sequence,
    predicted_reg_two_summands,
    regsum_check,
    top_component_presentation,
)
from .errors import (
    BigradedError,
    HypothesisViolated,
    NotFound,
    NotStabilized,
    ParseError,
    ZeroModule,
)
from .families import (
    DEFAULT_SEED,
    corpus_bigraded,
    corpus_monomial,
    corpus_monomial_presentations,
    corpus_regsum_pairs,
    regular_sequence_hypersurface,
    two_summands_ideal,
)
from .groebner import pair_gcd
from .hilbert import krull_dimension
from .oracle import KoszulOracle
from .presentations import quotient_presentation
from .report import SweepReport, bounding_line, least_squares_line, render_sweep_figure
from .resolutions import (
    betti_numbers,
    check_lcm_bound,
    minimal_resolution,
    multigraded_shifts,
    regularity,
)
from .rings import Field, PolyRing, parse_poly, x_degree_of


def _parse_window(text):
    """Parse 'A..B' (either order, unicode minus tolerated) into a range."""
    clean = text.replace("−", "-")
    lo, sep, hi = clean.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError(f"window {text!r} is not of the form A..B")
    a, b = int(lo), int(hi)
    if a > b:
        a, b = b, a
    return list(range(a, b + 1))


def _thread_count():
    raw = os.environ.get("BIGRADEDLC_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _map_rows(fn, items):
    threads = _thread_count()
    items = list(items)
    if threads == 1 or len(items) <= 1:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def _emit(report, args, suffix=""):
    for line in report.summary_lines():
        print(line)
    if getattr(args, "out", None):
        stem, ext = os.path.splitext(args.out)
        path = f"{stem}{suffix}{ext or '.csv'}"
        report.write_csv(path)
        print(f"csv written: {path}")
    if getattr(args, "plot", None):
        stem, ext = os.path.splitext(args.plot)
        path = f"{stem}{suffix}{ext or '.png'}"
        render_sweep_figure(report, path, title=report.metadata.get("theorem"))
        print(f"figure written: {path}")


def _ideal_metadata(I, extra=None):
    ring = I.ring
    meta = {
        "ring": f"m={ring.m} n={ring.n}",
        "field": ring.field.characteristic,
        "ideal_hash": I.content_hash(),
    }
    if extra:
        meta.update(extra)
    return meta


def _reg_or_none(pres):
    if pres.is_zero_module():
        return None
    return regularity(pres)


# ---------------------------------------------------------------------------
# compute

def cmd_compute(args):
    I = load_ideal(args.ideal)
    ring = I.ring
    if not 0 <= args.s <= ring.n:
        print(f"s must lie in [0, {ring.n}]", file=sys.stderr)
        return 3
    comp = cohomology_component(I, args.s, args.j)
    pres = comp.presentation
    print(f"ring m={ring.m} n={ring.n} p={ring.field.characteristic}")
    print(f"ideal hash: {I.content_hash()}")
    print(f"component s={args.s} j={args.j}")
    if pres.is_zero_module():
        print("zero module")
        return 0
    print(f"generator degrees: {list(pres.row_degrees)}")
    print(f"relation degrees: {list(pres.col_degrees)}")
    print("presentation matrix:")
    for row in pres.entry_strings():
        print("  [" + ", ".join(row) + "]")
    betti = betti_numbers(pres)
    print("betti table:")
    sys.stdout.write(betti.to_csv())
    print(f"regularity: {regularity(pres)}")
    print(f"dimension: {pres.dimension()}")
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(betti.to_csv())
        print(f"csv written: {args.out}")
    return 0


# ---------------------------------------------------------------------------
# verify subcommands, one per theorem

def _verify_regular(args, window):
    if args.n is None or args.d is None:
        raise HypothesisViolated("verify regular needs --n and --d")
    I = regular_sequence_hypersurface(args.d, args.n, p=args.field)
    n = args.n
    js = [j for j in window if j <= -n]
    if not js:
        raise HypothesisViolated("window contains no j <= -n")
    report = SweepReport(
        metadata=_ideal_metadata(I, {"theorem": "regular", "d": args.d, "n": n})
    )

    def row(j):
        pres = top_component_presentation(I, j).presentation
        reg = _reg_or_none(pres)
        predicted = predicted_reg_regular_sequence(args.d, n, j)
        return dict(
            s=n, j=j, reg=reg, dim=pres.dimension(),
            predicted=predicted, passed=(reg == predicted),
        )

    for cells in _map_rows(row, js):
        report.add(**cells)
    return [report]


def _verify_twosummands(args, window):
    if not args.f1 or not args.f2:
        raise HypothesisViolated("verify twosummands needs --f1 and --f2")
    ring = PolyRing(args.m, 2, Field(args.field))
    f1 = parse_poly(args.f1, ring)
    f2 = parse_poly(args.f2, ring)
    for f in (f1, f2):
        if f.is_zero() or not f.is_x_only():
            raise HypothesisViolated("--f1/--f2 must be nonzero forms in the x variables")
    d = x_degree_of(f1)
    if x_degree_of(f2) != d:
        raise HypothesisViolated("--f1 and --f2 must have equal degree")
    g = pair_gcd(f1, f2)
    degg = x_degree_of(g)
    I = two_summands_ideal(ring, f1, f2)
    js = [j for j in window if j <= -2]
    if not js:
        raise HypothesisViolated("window contains no j <= -2")
    report = SweepReport(
        metadata=_ideal_metadata(
            I, {"theorem": "twosummands", "d": d, "deg_gcd": degg, "gcd": str(g)}
        )
    )

    def row(j):
        pres = top_component_presentation(I, j).presentation
        reg = _reg_or_none(pres)
        predicted = predicted_reg_two_summands(d, degg, j)
        return dict(
            s=2, j=j, reg=reg, dim=pres.dimension(),
            predicted=predicted, passed=(reg == predicted),
        )

    for cells in _map_rows(row, js):
        report.add(**cells)
    return [report]


def _verify_regsum(args, window):
    pairs = corpus_regsum_pairs(seed=args.seed, count=args.count or 10)
    reports = []
    for g, h in pairs:
        ring = h.ring
        n = ring.n
        I_base = BigradedIdeal(ring, [h])
        report = SweepReport(
            metadata=_ideal_metadata(
                I_base, {"theorem": "regsum", "g": str(g), "h": str(h)}
            )
        )
        js = [j for j in window if j <= -n]
        for j in js:
            base = top_component_presentation(I_base, j).presentation
            if base.is_zero_module():
                report.add(s=n, j=j)
                continue
            ok = regsum_check(g, h, j)
            scaled = top_component_presentation(
                BigradedIdeal(ring, [g * h]), j
            ).presentation
            predicted = regularity(base) + x_degree_of(g)
            report.add(
                s=n, j=j, reg=regularity(scaled), predicted=predicted, passed=ok
            )
        reports.append(report)
    return reports


def _corpus_or_single(args):
    if args.ideal:
        return [load_ideal(args.ideal)]
    return corpus_bigraded(seed=args.seed, count=args.count)


def _verify_dim(args, window):
    reports = []
    for I in _corpus_or_single(args):
        n = I.ring.n
        content_dim = krull_dimension(content_ideal(I))
        report = SweepReport(
            metadata=_ideal_metadata(
                I, {"theorem": "dim", "content_dim": content_dim}
            )
        )
        for j in [j for j in window if j <= -n]:
            pres = top_component_presentation(I, j).presentation
            if pres.is_zero_module():
                report.add(s=n, j=j, dim=-1)
                continue
            d = pres.dimension()
            report.add(s=n, j=j, dim=d, predicted=content_dim, passed=(d == content_dim))
        reports.append(report)
    return reports


def _verify_annihilate(args, window):
    reports = []
    for I in _corpus_or_single(args):
        n = I.ring.n
        report = SweepReport(
            metadata=_ideal_metadata(I, {"theorem": "annihilate"})
        )
        js = [j for j in window if j <= 0]
        points = []
        for j in js:
            cap = default_annihilation_cap(I, j)
            t = annihilation_exponent(I, j, cap=cap)
            points.append((j, t))
            report.add(s=n, j=j, ann_exp=t, predicted=cap, passed=(t <= cap))
        if points:
            slope, intercept, shift = bounding_line(points)
            report.metadata["fit_slope"] = f"{slope:.6g}"
            report.metadata["fit_intercept"] = f"{intercept:.6g}"
            report.metadata["fit_shift"] = f"{shift:.6g}"
        reports.append(report)
    return reports


def _verify_primary(args, window):
    reports = []
    for I in _corpus_or_single(args):
        n = I.ring.n
        content = content_ideal(I)
        if krull_dimension(content) != 0:
            continue
        k = least_power_of_max_ideal_inside(content)
        report = SweepReport(
            metadata=_ideal_metadata(I, {"theorem": "primary", "k": k})
        )
        for j in [j for j in window if j <= -n]:
            pres = top_component_presentation(I, j).presentation
            if pres.is_zero_module():
                report.add(s=n, j=j)
                continue
            reg = regularity(pres)
            t = annihilation_exponent(I, j)
            bound = k * t - 1
            report.add(
                s=n, j=j, reg=reg, ann_exp=t, predicted=bound,
                passed=(0 <= reg <= bound),
            )
        reports.append(report)
    if not reports:
        raise HypothesisViolated(
            "no input has a zero-dimensional content ideal"
        )
    return reports


def _verify_monomial(args, window):
    if args.ideal:
        ideals = [load_ideal(args.ideal)]
    else:
        ideals = corpus_monomial(seed=args.seed)
    reports = []
    for I in ideals:
        n = I.ring.n
        J, _ = monomial_top_predictor(I, -n)
        quotient = quotient_presentation(I.ring, J.gens)
        ref_betti = betti_numbers(quotient)
        ref_reg = regularity(quotient)
        report = SweepReport(
            metadata=_ideal_metadata(
                I, {"theorem": "monomial", "x_ideal_reg": ref_reg}
            )
        )
        for j in [j for j in window if j <= -n]:
            mult = dual_basis_count(j, n, 0)
            pres = top_component_presentation(I, j).presentation
            if mult == 0:
                report.add(s=n, j=j, passed=pres.is_zero_module())
                continue
            betti = betti_numbers(pres)
            ok = betti == ref_betti.scaled(mult) and regularity(pres) == ref_reg
            report.add(
                s=n, j=j, reg=regularity(pres), predicted=ref_reg, passed=ok
            )
        reports.append(report)
    return reports


def _verify_bh(args, window):
    presentations = corpus_monomial_presentations(
        seed=args.seed, count=args.count or 20
    )
    report = SweepReport(metadata={"theorem": "bh", "seed": args.seed})
    for idx, pres in enumerate(presentations):
        shifts = multigraded_shifts(pres)
        ok = check_lcm_bound(shifts)
        bound = ""
        if len(shifts) > 1 and shifts[1]:
            width = len(shifts[1][0])
            lcm = tuple(max(v[k] for v in shifts[1]) for k in range(width))
            bound = sum(lcm)
        report.add(s=idx, reg=_reg_or_none(pres), predicted=bound, passed=ok)
    return [report]


def _x_shift_vectors(res):
    """Fine x-degree shift vectors along a bigraded resolution of terms."""
    from .errors import NotMultigraded

    ring = res.ring
    m = ring.m
    shifts = [[(0,) * m for _ in res.shifts[0]]]
    for level, cols in enumerate(res.differentials):
        prev = shifts[level]
        cur = []
        for col in cols:
            candidates = set()
            for pos, f in col.entries.items():
                if not f.is_term():
                    raise NotMultigraded("resolution entry mixes monomials")
                mono = f.lead_mono()
                candidates.add(
                    tuple(a + b for a, b in zip(mono[:m], prev[pos]))
                )
            if len(candidates) != 1:
                raise NotMultigraded("column not multihomogeneous")
            cur.append(candidates.pop())
        shifts.append(cur)
    return shifts


def _verify_bounded(args, window):
    if args.ideal:
        ideals = [load_ideal(args.ideal)]
    else:
        ideals = corpus_monomial(seed=args.seed)
    reports = []
    for I in ideals:
        n = I.ring.n
        res = bigraded_resolution(I)
        xshifts = _x_shift_vectors(res)
        cs = []
        for i in range(len(xshifts) - 1):
            gen_max = max((sum(v) for v in xshifts[i]), default=0)
            nxt = xshifts[i + 1]
            if nxt:
                width = len(nxt[0])
                lcm = tuple(max(v[k] for v in nxt) for k in range(width))
                cs.append(max(gen_max, sum(lcm) - 1))
            else:
                cs.append(gen_max)
        if xshifts[-1]:
            cs.append(max(sum(v) for v in xshifts[-1]))
        bound = max(cs, default=0) + 2
        js = sorted([j for j in window if j <= -n], reverse=True)
        report = SweepReport(
            metadata=_ideal_metadata(
                I, {"theorem": "bounded", "shift_bound": bound}
            )
        )
        observed = {}
        for s in range(n + 1):
            for j in js:
                pres = cohomology_component(I, s, j).presentation
                reg = _reg_or_none(pres)
                if reg is None:
                    report.add(s=s, j=j)
                    continue
                observed[(s, j)] = reg
                report.add(
                    s=s, j=j, reg=reg, predicted=bound, passed=(abs(reg) <= bound)
                )
        def window_max(count):
            sel = [v for (s, j), v in observed.items() if j in js[:count]]
            return max((abs(v) for v in sel), default=0)

        m3, m6 = window_max(3), window_max(6)
        report.metadata["max_first3"] = m3
        report.metadata["max_first6"] = m6
        if m6 > m3:
            report.add(s="window", passed=False)
        reports.append(report)
    return reports


def _verify_top(args, window):
    if not args.ideal:
        raise HypothesisViolated("verify top needs --ideal with one generator")
    I = load_ideal(args.ideal)
    if len(I.gens) != 1:
        raise HypothesisViolated("verify top needs a hypersurface ideal")
    n = I.ring.n
    cdim = krull_dimension(content_ideal(I))
    report = SweepReport(
        metadata=_ideal_metadata(
            I, {"theorem": "top", "content_dim": cdim, "exploratory": cdim > 1}
        )
    )
    for s in (n - 1, n):
        points = []
        for j in [j for j in window if j <= -n]:
            pres = cohomology_component(I, s, j).presentation
            reg = _reg_or_none(pres)
            report.add(s=s, j=j, reg=reg)
            if reg is not None:
                points.append((j, reg))
        if points:
            slope, intercept = least_squares_line(points)
            report.metadata[f"fit_slope_s{s}"] = f"{slope:.6g}"
            report.metadata[f"fit_intercept_s{s}"] = f"{intercept:.6g}"
    return [report]


_THEOREMS = {
    "regular": _verify_regular,
    "twosummands": _verify_twosummands,
    "regsum": _verify_regsum,
    "dim": _verify_dim,
    "annihilate": _verify_annihilate,
    "primary": _verify_primary,
    "monomial": _verify_monomial,
    "bh": _verify_bh,
    "bounded": _verify_bounded,
    "top": _verify_top,
}


def cmd_verify(args):
    handler = _THEOREMS[args.theorem]
    if args.j_window:
        window = args.j_window
    else:
        window = list(range(-2, -10, -1))  # handlers drop j above their -n
    t0 = time.time()
    reports = handler(args, window)
    elapsed = time.time() - t0
    many = len(reports) > 1
    ok = True
    for idx, report in enumerate(reports):
        report.wall_time = elapsed if not many else 0.0
        report.metadata.setdefault("seed", args.seed)
        _emit(report, args, suffix=f"-{idx:02d}" if many else "")
        ok = ok and report.all_pass()
        print()
    print(f"verify {args.theorem}: {'pass' if ok else 'FAIL'} ({elapsed:.2f}s)")
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# oracle

def cmd_oracle(args):
    I = load_ideal(args.ideal)
    ring = I.ring
    if not 0 <= args.s <= ring.n:
        print(f"s must lie in [0, {ring.n}]", file=sys.stderr)
        return 3
    iwin = args.i_window or list(range(0, 5))
    jwin = args.j_window or list(range(-ring.n - 4, -ring.n + 1))
    oracle = KoszulOracle(I)
    lines = ["s,i,j,oracle,main,match"]
    all_match = True
    for j in sorted(jwin, reverse=True):
        comp = cohomology_component(I, args.s, j).presentation
        hf = comp.hilbert_function(sorted(iwin))
        for i, main_dim in zip(sorted(iwin), hf):
            dim = oracle.stabilized_dimension(args.s, i, j, args.t_max)
            match = dim == main_dim
            all_match = all_match and match
            lines.append(
                f"{args.s},{i},{j},{dim},{main_dim},{'yes' if match else 'NO'}"
            )
    text = "\n".join(lines) + "\n"
    sys.stdout.write(text)
    if args.out:
        tmp = args.out + ".part"
        with open(tmp, "w", encoding="ascii") as fh:
            fh.write(text)
        os.replace(tmp, args.out)
        print(f"csv written: {args.out}")
    return 0 if all_match else 1


# ---------------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="bigraded-lc",
        description="graded components of local cohomology over the x-subring",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("compute", help="one component: presentation, Betti, reg, dim")
    pc.add_argument("--ideal", required=True)
    pc.add_argument("--s", type=int, required=True)
    pc.add_argument("--j", type=int, required=True)
    pc.add_argument("--out")
    pc.set_defaults(func=cmd_compute)

    pv = sub.add_parser("verify", help="theorem verification sweeps")
    pv.add_argument("theorem", choices=sorted(_THEOREMS))
    pv.add_argument("--ideal")
    pv.add_argument("--j-window", type=_parse_window, dest="j_window")
    pv.add_argument("--n", type=int)
    pv.add_argument("--d", type=int)
    pv.add_argument("--m", type=int, default=2)
    pv.add_argument("--f1")
    pv.add_argument("--f2")
    pv.add_argument("--count", type=int)
    pv.add_argument("--seed", type=int, default=DEFAULT_SEED)
    pv.add_argument("--field", type=int, default=32003)
    pv.add_argument("--out")
    pv.add_argument("--plot")
    pv.set_defaults(func=cmd_verify)

    po = sub.add_parser("oracle", help="cross-check dimensions against the Koszul limit")
    po.add_argument("--ideal", required=True)
    po.add_argument("--s", type=int, required=True)
    po.add_argument("--i-window", type=_parse_window, dest="i_window")
    po.add_argument("--j-window", type=_parse_window, dest="j_window")
    po.add_argument("--t-max", type=int, default=14, dest="t_max")
    po.add_argument("--out")
    po.set_defaults(func=cmd_oracle)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ZeroModule) as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return 3
    except HypothesisViolated as exc:
        print(f"hypothesis violated: {exc}", file=sys.stderr)
        return 4
    except (NotFound, NotStabilized) as exc:
        print(f"limit exceeded: {exc}", file=sys.stderr)
        return 5
    except BigradedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
