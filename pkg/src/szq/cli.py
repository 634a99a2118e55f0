"""Command-line front end: recognize, membership, census, bench.

Every command emits CSV (stdout or --out) preceded by a comment line
recording the tool version, field moduli, RNG identifier and seed, so any
run can be reproduced exactly.
"""

import argparse
import random
import sys
import time

from . import __version__
from .census import census_matches_conjecture
from .field import build_field
from .mat4 import conj, random_invertible
from .member import express, precompute_tables
from .randgen import RNG_ID
from .recog import GroupHandle, conjugator, verify_recognition
from .slp import eval_matrices, length
from .szstd import random_sigma_element, standard_generators


def _parse_m_list(args, parser):
    ms = []
    if args.m is not None:
        for part in str(args.m).split(","):
            ms.append(int(part))
    if args.m_range is not None:
        lo, _, hi = args.m_range.partition(":")
        if not hi:
            lo, _, hi = args.m_range.partition("-")
        ms.extend(range(int(lo), int(hi) + 1))
    if not ms:
        parser.error("give --m or --m-range")
    for m in ms:
        if m < 1:
            parser.error("m must be >= 1")
    return ms


def _open_out(args):
    return open(args.out, "w") if args.out else sys.stdout


def _metadata_line(ms, fields, args):
    moduli = ";".join(f"{m}:{fields[m].modulus:x}" for m in ms)
    extra = ""
    if getattr(args, "strategy", None):
        extra = f" strategy={args.strategy}"
    return (f"# szq={__version__} rng={RNG_ID} seed={args.seed}"
            f" moduli={moduli}{extra}")


def _conjugated_generators(F, rng, two_gens=False):
    """A random GL(4, q)-conjugate of the standard generating set."""
    c = random_invertible(F, rng)
    gens = [conj(F, x, c) for x in standard_generators(F)]
    if two_gens:
        # replace by two random elements of the conjugate (still generating
        # with overwhelming probability; recognition verifies anyway)
        from .randgen import PrOracle
        oracle = PrOracle(gens, F, rng.randrange(1 << 30))
        gens = [oracle.next()[0], oracle.next()[0]]
    return gens


def cmd_recognize(args, parser):
    ms = _parse_m_list(args, parser)
    fields = {m: build_field(m) for m in ms}
    ok_all = True
    with _open_out(args) as out:
        print(_metadata_line(ms, fields, args), file=out)
        print("m,q,trial,ok,total_ms,dlog_ms,draws", file=out)
        for m in ms:
            F = fields[m]
            for trial in range(args.trials):
                rng = random.Random(f"{args.seed}:{m}:{trial}:recognize")
                gens = _conjugated_generators(F, rng, args.two_gens)
                G = GroupHandle(gens, F, seed=rng.randrange(1 << 62))
                t0 = time.perf_counter()
                try:
                    R = conjugator(G, strategy=args.strategy)
                    ok = verify_recognition(F, gens, R)
                except Exception:
                    ok = False
                    R = None
                total_ms = (time.perf_counter() - t0) * 1e3
                dlog_ms = R.stats.dlog_time * 1e3 if R else 0.0
                draws = R.stats.draws if R else 0
                ok_all &= ok
                print(f"{m},{F.q},{trial},{int(ok)},{total_ms:.3f},"
                      f"{dlog_ms:.3f},{draws}", file=out)
    return 0 if ok_all else 1


def cmd_membership(args, parser):
    ms = _parse_m_list(args, parser)
    fields = {m: build_field(m) for m in ms}
    ok_all = True
    with _open_out(args) as out:
        print(_metadata_line(ms, fields, args), file=out)
        print("m,q,trial,ok,express_us,slp_len", file=out)
        for m in ms:
            F = fields[m]
            rng = random.Random(f"{args.seed}:{m}:membership")
            gens = _conjugated_generators(F, rng, args.two_gens)
            G = GroupHandle(gens, F, seed=rng.randrange(1 << 62))
            R = conjugator(G, strategy=args.strategy)
            tables = precompute_tables(R)
            ginv = tables.ginv
            for trial in range(args.trials):
                sig = random_sigma_element(F, rng)
                h = conj(F, sig, ginv)  # pull back into the recognized copy
                t0 = time.perf_counter()
                slp = express(tables, h)
                us = (time.perf_counter() - t0) * 1e6
                ok = slp is not None and eval_matrices(slp, gens, F) == h
                ok_all &= ok
                slen = length(slp) if slp is not None else -1
                print(f"{m},{F.q},{trial},{int(ok)},{us:.1f},{slen}", file=out)
    return 0 if ok_all else 1


def cmd_census(args, parser):
    ms = _parse_m_list(args, parser)
    rc = 0
    with _open_out(args) as out:
        fields = {}
        for m in ms:
            F = build_field(m)
            if F.q != 8 and not args.long:
                parser.error(f"census at q={F.q} needs --long")
            if F.q == 16:
                parser.error("q = 16 is not a Suzuki field (even exponent)")
            fields[m] = F
        print(_metadata_line(ms, fields, args), file=out)
        print("m,q,v1,v2,v4,observed,conjectured,match", file=out)
        for m in ms:
            F = fields[m]
            observed, conjectured, match = census_matches_conjecture(
                F, force=(F.q not in (8, 32)))
            keys = sorted(set(observed) | set(conjectured))
            for key in keys:
                o = observed.get(key, 0)
                c = conjectured.get(key, 0)
                print(f"{m},{F.q},{key[0]},{key[1]},{key[2]},{o},{c},"
                      f"{int(o == c)}", file=out)
                if o != c:
                    rc = 1
            if not match:
                rc = 1
    return rc


GNUPLOT_TEMPLATE = """\
set datafile separator ','
set terminal pngcairo size 900,600
set logscale x 2
set xlabel 'q'
set output 'bench_recognition.png'
set ylabel 'mean time (ms)'
plot '{csv}' using 2:3 skip 2 with linespoints title 'recognition', \\
     '{csv}' using 2:4 skip 2 with linespoints title 'discrete log part'
set output 'bench_membership.png'
set ylabel 'mean time (us)'
plot '{csv}' using 2:5 skip 2 with linespoints title 'rewriting'
"""


def cmd_bench(args, parser):
    ms = _parse_m_list(args, parser)
    fields = {m: build_field(m) for m in ms}
    with _open_out(args) as out:
        print(_metadata_line(ms, fields, args), file=out)
        print("m,q,recog_mean_ms,dlog_mean_ms,express_mean_us", file=out)
        for m in ms:
            F = fields[m]
            recog_ms = []
            dlog_ms = []
            express_us = []
            for trial in range(args.trials):
                rng = random.Random(f"{args.seed}:{m}:{trial}:bench")
                gens = _conjugated_generators(F, rng, args.two_gens)
                G = GroupHandle(gens, F, seed=rng.randrange(1 << 62))
                t0 = time.perf_counter()
                R = conjugator(G, strategy=args.strategy)
                recog_ms.append((time.perf_counter() - t0) * 1e3)
                dlog_ms.append(R.stats.dlog_time * 1e3)
                tables = precompute_tables(R)
                sig = random_sigma_element(F, rng)
                h = conj(F, sig, tables.ginv)
                t0 = time.perf_counter()
                express(tables, h)
                express_us.append((time.perf_counter() - t0) * 1e6)
            k = len(recog_ms)
            print(f"{m},{F.q},{sum(recog_ms) / k:.3f},{sum(dlog_ms) / k:.3f},"
                  f"{sum(express_us) / k:.1f}", file=out)
    if args.out:
        script = args.out + ".gnuplot"
        with open(script, "w") as fh:
            fh.write(GNUPLOT_TEMPLATE.format(csv=args.out))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="szq",
        description="Constructive recognition of conjugated Suzuki groups "
                    "Sz(q) in GL(4, q).")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, strategy=True):
        p.add_argument("--m", help="field parameter m (q = 2^(2m+1)); "
                                   "comma-separated list allowed")
        p.add_argument("--m-range", help="inclusive range lo:hi of m values")
        p.add_argument("--trials", type=int, default=10)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out", help="write CSV here instead of stdout")
        p.add_argument("--two-gens", action="store_true",
                       help="recognize from two random elements instead of "
                            "the conjugated standard triple")
        p.add_argument("--long", action="store_true",
                       help="allow long-running parameter choices")
        if strategy:
            p.add_argument("--strategy", choices=["default", "factored"],
                           default="default")

    p = sub.add_parser("recognize", help="time and verify recognitions")
    common(p)
    p.set_defaults(func=cmd_recognize)
    p = sub.add_parser("membership", help="time membership rewriting")
    common(p)
    p.set_defaults(func=cmd_membership)
    p = sub.add_parser("census", help="coset census of small-order elements")
    common(p, strategy=False)
    p.set_defaults(func=cmd_census)
    p = sub.add_parser("bench", help="aggregate timings with a gnuplot script")
    common(p)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())
