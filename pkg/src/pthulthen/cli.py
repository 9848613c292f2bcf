"""Command line front end.

Examples::

    pthulthen spectrum-pt --alpha 3 --beta 3 --epsilon 0.3
    pthulthen spectrum-hulthen --A -8 --B 24 --epsilon 0.3 --format csv
    pthulthen contour --epsilon 0.5236 --x-min -5 --x-max 5 --count 101 --format csv
    pthulthen wavefunction --A -8 --B 24 --epsilon 0.3 --state 0 -o psi.csv
    pthulthen verify --alpha 3 --beta 3 --epsilon 0.3

Data goes to ``--output`` (stdout by default), logging to stderr.
Exit codes: 0 ok, 2 bad usage or parameters, 3 a verification check failed.
"""
import argparse
import csv
import io
import json
import logging
import math
import sys

from . import __version__, contour, hulthen, poschl_teller as pt, verify

log = logging.getLogger("pthulthen")

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 2, 3


class UsageError(ValueError):
    pass


def _epsilon(text):
    value = float(text)
    if not 0 < value < math.pi / 2:
        raise argparse.ArgumentTypeError(f"epsilon must lie in (0, pi/2), got {text}")
    return value


def _fmt(value):
    # repr gives the shortest string that round-trips to the same double
    if isinstance(value, float):
        return repr(value)
    return "" if value is None else str(value)


def _spectrum_rows(entries):
    return [{"sigma": e.qn.sigma, "tau": e.qn.tau, "n": e.qn.n,
             "kappa": float(e.kappa), "energy": float(e.energy),
             "beta_effective": float(e.beta_effective)} for e in entries]


def build_spectrum_pt(args):
    model = pt.PTModel(args.alpha, args.beta, args.epsilon)
    meta = {"model": "poschl-teller", "alpha": args.alpha, "beta": args.beta,
            "epsilon": args.epsilon}
    return meta, _spectrum_rows(pt.enumerate_pt_spectrum(model))


def _hulthen_model(args):
    if args.A > 1:
        raise UsageError(f"--A {args.A}: A must not exceed 1 (alpha = sqrt(1 - A) must be real)")
    return hulthen.HulthenModel(args.A, args.B, args.epsilon)


def _hulthen_meta(model):
    return {"model": "hulthen", "A": model.A, "B": model.B, "epsilon": model.epsilon,
            "alpha": model.alpha, "C": model.C}


def build_spectrum_hulthen(args):
    model = _hulthen_model(args)
    rows = _spectrum_rows(hulthen.enumerate_hulthen_spectrum(model, args.n_cap))
    for row in rows:
        # tau is canonical; the sign lives in beta_effective = tau*beta
        row["tau"] = "canonical"
    return _hulthen_meta(model), rows


def _check_grid(args):
    if args.count < 2:
        raise UsageError(f"--count {args.count}: need at least 2 points")
    if not args.x_min < args.x_max:
        raise UsageError(f"--x-min {args.x_min} must be below --x-max {args.x_max}")


def build_contour(args):
    _check_grid(args)
    points = contour.sample_arch(args.epsilon, args.x_min, args.x_max, args.count)
    rows = [{"x": p.x, "v": p.v, "u": p.u, "re_r": p.r.real, "im_r": p.r.imag}
            for p in points]
    meta = {"epsilon": args.epsilon,
            "grid": {"x_min": args.x_min, "x_max": args.x_max, "count": args.count}}
    return meta, rows


def build_wavefunction(args):
    _check_grid(args)
    model = _hulthen_model(args)
    spectrum = hulthen.enumerate_hulthen_spectrum(model, args.n_cap)
    if not spectrum:
        raise UsageError("--A/--B: the model has no admissible bound state")
    if not 0 <= args.state < len(spectrum):
        raise UsageError(f"--state {args.state}: choose 0..{len(spectrum) - 1}")
    entry = spectrum[args.state]
    points = contour.sample_arch(args.epsilon, args.x_min, args.x_max, args.count)
    values = hulthen.psi_along(model, entry, points)
    rows = [{"x": p.x, "re_xi": p.xi.real, "im_xi": p.xi.imag,
             "re_psi": float(z.real), "im_psi": float(z.imag), "abs_psi": float(abs(z))}
            for p, z in zip(points, values)]
    meta = _hulthen_meta(model)
    meta["state"] = _spectrum_rows([entry])[0]
    meta["grid"] = {"x_min": args.x_min, "x_max": args.x_max, "count": args.count}
    return meta, rows


def build_verify(args):
    checks = verify.run_checks(args.alpha, args.beta, args.epsilon, args.L, args.N)
    meta = {"model": "poschl-teller", "alpha": args.alpha, "beta": args.beta,
            "epsilon": args.epsilon, "grid": {"L": args.L, "N": args.N}}
    return meta, [c.as_dict() for c in checks]


BUILDERS = {
    "spectrum-pt": build_spectrum_pt,
    "spectrum-hulthen": build_spectrum_hulthen,
    "contour": build_contour,
    "wavefunction": build_wavefunction,
    "verify": build_verify,
}

CSV_HEADERS = {
    "spectrum-pt": ["sigma", "tau", "n", "kappa", "energy", "beta_effective"],
    "spectrum-hulthen": ["sigma", "tau", "n", "kappa", "energy", "beta_effective"],
    "contour": ["x", "v", "u", "re_r", "im_r"],
    "wavefunction": ["x", "re_xi", "im_xi", "re_psi", "im_psi", "abs_psi"],
    "verify": ["name", "target", "found", "error", "tolerance", "passed"],
}


def render(command, meta, rows, fmt):
    meta = dict(meta, command=command, version=__version__)
    if fmt == "json":
        return json.dumps({"metadata": meta, "records": rows}, indent=2) + "\n"
    buf = io.StringIO()
    # single metadata line, then a plain CSV table
    buf.write("# " + json.dumps(meta, sort_keys=True) + "\n")
    writer = csv.writer(buf, lineterminator="\n")
    header = CSV_HEADERS[command]
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt(row[key]) for key in header])
    return buf.getvalue()


def read_csv(text):
    """Parse a CSV produced by ``render``: (metadata dict, list of row dicts)."""
    lines = text.splitlines()
    meta = json.loads(lines[0][2:]) if lines and lines[0].startswith("# ") else {}
    body = lines[1:] if meta else lines
    return meta, list(csv.DictReader(body))


def build_parser():
    parser = argparse.ArgumentParser(prog="pthulthen", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--epsilon", type=_epsilon, default=contour.DEFAULT_EPSILON)
        p.add_argument("--format", choices=["json", "csv"], default="json")
        p.add_argument("-o", "--output", help="output file (default: stdout)")

    def pt_params(p):
        p.add_argument("--alpha", type=float, required=True)
        p.add_argument("--beta", type=float, required=True)

    def hulthen_params(p):
        p.add_argument("--A", type=float, required=True)
        p.add_argument("--B", type=float, required=True)
        p.add_argument("--n-cap", type=int, default=hulthen.DEFAULT_N_CAP)

    def grid(p, lo=-5.0, hi=5.0, count=101):
        p.add_argument("--x-min", type=float, default=lo)
        p.add_argument("--x-max", type=float, default=hi)
        p.add_argument("--count", type=int, default=count)

    p = sub.add_parser("spectrum-pt", help="Poschl-Teller bound states")
    pt_params(p)
    common(p)
    p = sub.add_parser("spectrum-hulthen", help="Hulthen bound states")
    hulthen_params(p)
    common(p)
    p = sub.add_parser("contour", help="sample the arch")
    grid(p)
    common(p)
    p = sub.add_parser("wavefunction", help="pulled-back Hulthen eigenfunction on the arch")
    hulthen_params(p)
    p.add_argument("--state", type=int, default=0, help="index into the sorted spectrum")
    grid(p)
    common(p)
    p = sub.add_parser("verify", help="run the numerical oracle suite")
    pt_params(p)
    p.add_argument("--L", type=float, default=12.0)
    p.add_argument("--N", type=int, default=2000)
    common(p)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s",
                        force=True)
    try:
        meta, rows = BUILDERS[args.command](args)
    except (UsageError, ValueError) as exc:
        log.error("%s", exc)
        return EXIT_USAGE
    text = render(args.command, meta, rows, args.format)
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            log.error("cannot write %s: %s", args.output, exc)
            return EXIT_USAGE
    else:
        sys.stdout.write(text)
    if args.command == "verify":
        failed = [r["name"] for r in rows if not r["passed"]]
        if failed:
            log.error("%d check(s) failed: %s", len(failed), ", ".join(failed))
            return EXIT_VERIFY
        log.info("all %d checks passed", len(rows))
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
