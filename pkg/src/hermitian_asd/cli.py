"""Command line interface: encode, qpoly, decode, simulate."""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .code import HermitianCode
from .decoder import decode, decode_from_M
from .interp import interpolate
from .sim import emit_tables, run_simulation
from .softinfo import read_matrix_csv


def _vector(F, text):
    return [F.parse(tok) for tok in text.replace(" ", "").split(",") if tok]


def _fmt_vector(F, v):
    return ",".join(F.format(a) for a in v)


def parse_snr(text):
    """'2:6:1' (inclusive) or a comma-separated list."""
    if ":" in text:
        parts = [float(x) for x in text.split(":")]
        start, stop = parts[0], parts[1]
        step = parts[2] if len(parts) > 2 else 1.0
        count = int(round((stop - start) / step)) + 1
        return [round(start + i * step, 10) for i in range(count)]
    return [float(x) for x in text.split(",") if x]


def _code_args(p):
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--u", type=int, default=4)


def cmd_encode(args):
    code = HermitianCode(args.q, args.u)
    msg = _vector(code.F, args.message)
    print(_fmt_vector(code.F, code.encode(msg)))


def cmd_qpoly(args):
    code = HermitianCode(args.q, args.u)
    M = read_matrix_csv(args.mult_matrix, dtype=int)
    res = interpolate(code.curve, M, code.u, args.L)
    curve = code.curve
    print(curve.format_z(res.Q, code.u))
    b = res.bounds
    print(f"N={b.N} w={b.w} l={res.l} deg_u(Q)={curve.weighted_degree(res.Q, code.u)} "
          f"zdeg(Q)={curve.z_degree(res.Q)}")


def cmd_decode(args):
    code = HermitianCode(args.q, args.u)
    F = code.F
    if args.mult_matrix:
        M = read_matrix_csv(args.mult_matrix, dtype=int)
        res = decode_from_M(M, code, args.L)
    elif args.reliability:
        pi = read_matrix_csv(args.reliability, dtype=float)
        res = decode(pi, code, args.L, kv_budget=args.kv_budget)
    else:
        raise SystemExit("one of --reliability or --mult-matrix is required")
    print(_fmt_vector(F, res.message))
    print(res.status)
    if args.verbose:
        for mu, cw, sc in zip(res.candidates.roots, res.candidates.codewords, res.candidates.scores):
            print(f"root {code.curve.format(mu)}  codeword {_fmt_vector(F, cw)}  score {sc}")


def cmd_simulate(args):
    code = HermitianCode(args.q, args.u)
    snrs = parse_snr(args.snr)
    records = run_simulation(code, snrs, args.L, args.mod, args.frames, args.seed, args.workers)
    name = args.name or f"awgn-{args.mod}-Hermitian[{code.n},{code.k}]-ASD-L{args.L}"
    paths = emit_tables(records, args.out, name)
    for r in records:
        print(f"{r.ebn0_db:g} dB  FER {r.fer:.4e}  BER {r.ber:.4e}  ({r.frame_errors}/{r.frames})")
    print(json.dumps(paths))


def build_parser():
    ap = argparse.ArgumentParser(prog="hermitian-asd",
                                 description="Algebraic soft-decision decoding of Hermitian codes")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", help="encode a message")
    _code_args(p)
    p.add_argument("--message", required=True, help='comma-separated symbols, e.g. "1,a^2,0,a"')
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("qpoly", help="compute the Q-polynomial of a multiplicity matrix")
    _code_args(p)
    p.add_argument("--L", type=int, default=None, help="cap on the z-degree")
    p.add_argument("--mult-matrix", required=True)
    p.set_defaults(func=cmd_qpoly)

    p = sub.add_parser("decode", help="decode a reliability or multiplicity matrix")
    _code_args(p)
    p.add_argument("--L", type=int, default=1)
    p.add_argument("--reliability")
    p.add_argument("--mult-matrix")
    p.add_argument("--kv-budget", type=int, default=None,
                   help="stop the multiplicity assignment after this many increments")
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("simulate", help="AWGN Monte-Carlo simulation")
    _code_args(p)
    p.add_argument("--L", type=int, default=1)
    p.add_argument("--mod", default="qpsk", choices=["bpsk", "qpsk", "qam16"])
    p.add_argument("--snr", default="2:6:1", help="start:stop:step in dB, or a list")
    p.add_argument("--frames", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", default=".")
    p.add_argument("--name", default=None)
    p.set_defaults(func=cmd_simulate)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    np.set_printoptions(linewidth=120)
    args.func(args)
    return 0


if __name__ == "__main__":
    sys.exit(main())
