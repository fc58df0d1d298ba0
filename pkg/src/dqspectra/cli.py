"""``dqspectra`` command line.

Exit codes: 0 success, 1 internal failure (including residual checks that do
not pass), 2 structural rejection of the input, 3 matrix is not perfect.
"""

import argparse
import sys

from . import __version__
from .config import RunConfig, default_max_sweeps
from .dqmat import format_float, parse_dqmat, read_dqmat, save_dqmat, write_dqmat
from .errors import DQError, NotPerfect, StructuralError
from .generate import KINDS, generate
from .linalg import dual_fro_norm
from .scalars import DualNumber
from .spectral import (
    EigDecomposition,
    classify_definiteness,
    eig_hermitian,
    eig_report,
    fd_oracle,
)
from .svd import low_rank_approx, psd_sqrt, standard_rank, svd, svd_report

EXIT_OK, EXIT_INTERNAL, EXIT_STRUCTURAL, EXIT_NOT_PERFECT = 0, 1, 2, 3


def _show(x, scale=1.0):
    """Display value: 12 significant digits, noise below 1e-13 * scale shown as 0."""
    x = float(x)
    if abs(x) <= 1e-13 * max(1.0, scale):
        x = 0.0
    return format(x + 0.0, ".12g")


def _dual_lines(values):
    scale = max([abs(v.st) for v in values] + [abs(v.inf) for v in values] + [1.0])
    return [f"{_show(v.st, scale)} {_show(v.inf, scale)}" for v in values]


def _sci(x):
    return format(float(x), ".3e")


def _read_input(args):
    if args.input in (None, "-"):
        return parse_dqmat(sys.stdin.read())
    return read_dqmat(args.input)


def _config(args):
    return RunConfig(
        residual_tol=args.tol,
        zero_tol=args.zero_tol,
        cluster_tol=args.cluster_tol,
        gap_tol=args.gap_tol,
        seed=args.seed,
        max_sweeps=default_max_sweeps(),
    )


def _scale(A):
    st, inf = dual_fro_norm(A)
    return 1.0 + st + inf


def _eig_status(A, report, cfg):
    n = max(A.rows, 1)
    ok = (max(report.residual_st, report.residual_inf) <= cfg.residual_tol * n * _scale(A)
          and max(report.unitarity_st, report.unitarity_inf) <= cfg.residual_tol * n)
    return ok


def _print_eig_report(report, ok, out):
    print(f"residual_st={_sci(report.residual_st)} residual_inf={_sci(report.residual_inf)}", file=out)
    print(f"unitarity_st={_sci(report.unitarity_st)} unitarity_inf={_sci(report.unitarity_inf)}", file=out)
    print(f"status={'PASS' if ok else 'FAIL'}", file=out)


def cmd_eig(args, out):
    cfg = _config(args)
    A = _read_input(args)
    eig = eig_hermitian(A, cfg)
    report = eig_report(A, eig)
    for line in _dual_lines(eig.eigenvalues):
        print(line, file=out)
    st, inf = dual_fro_norm(A)
    kind = classify_definiteness(eig, cfg.zero_tol * max(st, 1e-300))
    print(f"definiteness={kind.value}", file=out)
    ok = _eig_status(A, report, cfg)
    _print_eig_report(report, ok, out)
    if args.out:
        comments = [f"eigenvalue {format_float(v.st)} {format_float(v.inf)}" for v in eig.eigenvalues]
        save_dqmat(eig.U, args.out, comments)
    return EXIT_OK if ok else EXIT_INTERNAL


def cmd_verify(args, out):
    """Recompute the eigen-residuals of a stored factor ``U`` against ``A``."""
    cfg = _config(args)
    if not args.factor:
        raise StructuralError("verify needs --factor FILE (the U written by 'eig --out')")
    A = _read_input(args)
    comments = []
    U = read_dqmat(args.factor, comments)
    values = []
    for c in comments:
        fields = c.split()
        if len(fields) == 3 and fields[0] == "eigenvalue":
            values.append(DualNumber(float(fields[1]), float(fields[2])))
    if not values:
        D = U.H @ A @ U
        values = [DualNumber(D.st[i, i, 0], D.inf[i, i, 0]) for i in range(U.cols)]
    if len(values) != U.cols or U.rows != A.rows or A.rows != A.cols:
        raise StructuralError("factor and matrix dimensions do not match")
    eig = EigDecomposition(U, tuple(values), ())
    report = eig_report(A, eig)
    ok = _eig_status(A, report, cfg)
    _print_eig_report(report, ok, out)
    return EXIT_OK if ok else EXIT_INTERNAL


def cmd_svd(args, out):
    cfg = _config(args)
    B = _read_input(args)
    dec = svd(B, cfg)
    for line in _dual_lines(dec.sigma):
        print(line, file=out)
    print(f"rank={dec.rank_t} appreciable_rank={dec.app_rank_r}", file=out)
    res_st, res_inf, uv, uu = svd_report(B, dec)
    m, n = B.shape
    ok = (max(res_st, res_inf) <= cfg.residual_tol * max(m, n, 1) * _scale(B)
          and max(uv, uu) <= cfg.residual_tol * max(m, n, 1))
    print(f"residual_st={_sci(res_st)} residual_inf={_sci(res_inf)}", file=out)
    print(f"unitarity_V={_sci(uv)} unitarity_U={_sci(uu)}", file=out)
    print(f"status={'PASS' if ok else 'FAIL'}", file=out)
    if args.out:
        k = dec.rank_t if args.k is None else args.k
        save_dqmat(low_rank_approx(B, k, cfg, dec), args.out, [f"rank-{k} approximation"])
    return EXIT_OK if ok else EXIT_INTERNAL


def cmd_rank(args, out):
    cfg = _config(args)
    B = _read_input(args)
    dec = svd(B, cfg)
    rst = standard_rank(B, cfg)
    agree = rst == dec.app_rank_r
    print(f"rank={dec.rank_t} appreciable_rank={dec.app_rank_r}", file=out)
    print(f"rank_st={rst} cross_check={'PASS' if agree else 'FAIL'}", file=out)
    return EXIT_OK if agree else EXIT_INTERNAL


def cmd_sqrt(args, out):
    cfg = _config(args)
    A = _read_input(args)
    L = psd_sqrt(A, cfg)
    st, inf = dual_fro_norm(L @ L - A)
    n = max(A.rows, 1)
    ok = max(st, inf) <= cfg.residual_tol * n * _scale(A)
    print(f"residual_st={_sci(st)} residual_inf={_sci(inf)}", file=out)
    print(f"status={'PASS' if ok else 'FAIL'}", file=out)
    if args.out:
        save_dqmat(L, args.out)
    return EXIT_OK if ok else EXIT_INTERNAL


def cmd_gen(args, out):
    rows = args.rows
    cols = args.cols if args.cols is not None else rows
    A = generate(args.kind, rows, cols, args.seed)
    comment = [f"kind={args.kind} rows={rows} cols={cols} seed={args.seed}"]
    if args.out:
        save_dqmat(A, args.out, comment)
    else:
        write_dqmat(A, out, comment)
    return EXIT_OK


def cmd_oracle(args, out):
    cfg = _config(args)
    A = _read_input(args)
    hs = tuple(float(h) for h in args.h.split(",") if h.strip())
    rep = fd_oracle(A, hs, cfg)
    for h, d in zip(rep.hs, rep.deviations):
        print(f"h={h:g} deviation={_sci(d)}", file=out)
    print(f"ratio={rep.ratio:.4g}", file=out)
    print(f"status={'PASS' if rep.passed else 'FAIL'}", file=out)
    return EXIT_OK if rep.passed else EXIT_INTERNAL


COMMANDS = {
    "eig": cmd_eig,
    "svd": cmd_svd,
    "rank": cmd_rank,
    "sqrt": cmd_sqrt,
    "gen": cmd_gen,
    "oracle": cmd_oracle,
    "verify": cmd_verify,
}


def build_parser():
    d = RunConfig(max_sweeps=1)
    p = argparse.ArgumentParser(prog="dqspectra", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("--in", dest="input", metavar="FILE", help="input DQMAT file (default: stdin)")
    p.add_argument("--out", metavar="FILE", help="output DQMAT file")
    p.add_argument("--factor", metavar="FILE", help="eigenvector file for 'verify'")
    p.add_argument("--tol", type=float, default=d.residual_tol, help="residual tolerance")
    p.add_argument("--zero-tol", type=float, default=d.zero_tol)
    p.add_argument("--cluster-tol", type=float, default=d.cluster_tol)
    p.add_argument("--gap-tol", type=float, default=d.gap_tol)
    p.add_argument("--seed", type=int, default=d.seed)
    p.add_argument("--h", default="1e-4,1e-5", help="comma-separated step sizes for 'oracle'")
    p.add_argument("--kind", choices=KINDS, default="hermitian")
    p.add_argument("--rows", type=int, default=3)
    p.add_argument("--cols", type=int)
    p.add_argument("--k", type=int, help="truncation rank for 'svd --out'")
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except NotPerfect as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_PERFECT
    except StructuralError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_STRUCTURAL
    except DQError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (OSError, ValueError) as exc:  # unreadable file, bad option value
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_STRUCTURAL


if __name__ == "__main__":
    sys.exit(main())
