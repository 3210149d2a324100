"""Command-line driver: ``qagt verify <target> ...`` and ``qagt nekrasov ...``."""

from __future__ import annotations

import argparse
import json
import sys

from .campaign import BadConfig, VerifyConfig, build_report, dumps, profile_specs, run_specs, spec

TARGETS = (
    "macdonald", "k-basis", "relations", "level1-factorization", "level1-intertwine", "two-point",
    "levelm-triangularity", "levelm-norm-conjecture", "levelm-phi", "four-point", "whittaker",
    "gg-pairing", "qseries", "all",
)


def parse_modes(text):
    """'a..b' -> (a, b)."""
    try:
        lo, hi = text.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}") from exc
    if lo > hi:
        raise argparse.ArgumentTypeError("empty mode range")
    return lo, hi


def _bound(cfg, default):
    v = cfg.deg if cfg.deg is not None else cfg.order
    return default if v is None else v


def specs_for(cfg: VerifyConfig):
    s = cfg.seed
    t = cfg.target
    if t == "all":
        return profile_specs(cfg.profile, cfg.seed)
    if t == "macdonald":
        d = _bound(cfg, 4)
        return [spec("macdonald-norms", s, deg=d), spec("x0-eigen", s, deg=d)]
    if t == "k-basis":
        return [spec("k-examples", s), spec("k-props", s, deg=_bound(cfg, 3))]
    if t == "relations":
        lo, hi = cfg.modes or (-3, 3)
        return [spec("level1-relations", s, window=_bound(cfg, 2), lo=lo, hi=hi)]
    if t == "level1-factorization":
        return [spec("level1-factorization", s, deg=_bound(cfg, 3)), spec("worked-examples", s)]
    if t == "level1-intertwine":
        lo, hi = cfg.modes or (-3, 3)
        return [spec("level1-intertwine", s, window=_bound(cfg, 2), lo=lo, hi=hi)]
    if t == "two-point":
        return [spec("two-point", s, order=_bound(cfg, 3))]
    if t == "levelm-triangularity":
        out = [spec("levelm-triangularity", s, m=cfg.m, deg=_bound(cfg, 3))]
        if cfg.m == 2:
            out.append(spec("levelm-p-examples", s))
        return out
    if t == "levelm-norm-conjecture":
        return [spec("levelm-norm-conjecture", s, m=cfg.m, deg=_bound(cfg, 2))]
    if t == "levelm-phi":
        return [spec("levelm-phi", s, m=cfg.m, deg=_bound(cfg, 2))]
    if t == "four-point":
        return [spec("four-point", s, m=cfg.m, order=_bound(cfg, 1))]
    if t == "whittaker":
        d = _bound(cfg, 4 if cfg.level == "1" else 2)
        if cfg.level == "1":
            return [spec("whittaker-level1", s, deg=d, cond_deg=min(d, 3), window=2),
                    spec("whittaker-m1-reduction", s, deg=min(d, 3))]
        return [spec("whittaker-levelm", s, m=cfg.m, deg=d, side="ket"),
                spec("whittaker-levelm", s, m=cfg.m, deg=d, side="bra")]
    if t == "gg-pairing":
        return [spec("gg-pairing", s, m=cfg.m, order=_bound(cfg, 1))]
    if t == "qseries":
        k = _bound(cfg, 3)
        return [spec("saalschutz", s, kmax=max(k, 4)), spec("q-binomial", s, order=6),
                spec("closed-forms", s, jk=k), spec("phi-psi", s, deg=k), spec("generic-psi", s, jk=min(k, 2)),
                spec("compat-constraint", s)]
    raise BadConfig(f"unknown target {t!r}")


def run(cfg: VerifyConfig):
    """Run a configuration; returns the report dict."""
    records, timing = run_specs(specs_for(cfg), cfg.jobs)
    return build_report(cfg, records, timing)


def summary_text(report):
    lines = []
    for c in report["checks"]:
        lines.append(f"{c['verdict'].upper():5s} {c['id']}")
    s = report["summary"]
    lines.append(f"{s['pass']} passed, {s['fail']} failed of {s['total']} "
                 f"({report['timing']['total_seconds']} s)")
    return "\n".join(lines)


def _nekrasov(args):
    from .exactfield import Specialized, symbolic, to_text
    from .nekrasov import z_5d_Um, z_su2_K

    order = args.order if args.order is not None else 3
    if args.series == "su2K":
        F = symbolic("Q") if args.seed is None else Specialized(args.seed)
        coeffs = z_su2_K(F, order)
        label = "Lambda^4 t/q"
    else:
        m = args.m
        names = [f"{p}{i}" for p in "uvw" for i in range(1, m + 1)]
        F = symbolic(*names) if args.seed is None else Specialized(args.seed)
        vec = {p: tuple(F.var(f"{p}{i}") for i in range(1, m + 1)) for p in "uvw"}
        coeffs = z_5d_Um(F, m, order, vec["u"], vec["v"], vec["w"])
        label = "e(u) z1 / e(w) z2"
    out = {"series": args.series, "order": order, "m": args.m if args.series == "u5d" else None,
           "field": "symbolic" if args.seed is None else f"seed={args.seed}", "variable": label,
           "coefficients": [to_text(c) for c in coeffs]}
    text = json.dumps(out, indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    for k, c in enumerate(out["coefficients"]):
        print(f"[{k}] {c}")
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="qagt", description="Exact verification of Ding-Iohara intertwiner identities.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run checks and write a JSON report")
    v.add_argument("target", choices=TARGETS)
    v.add_argument("--deg", type=int)
    v.add_argument("--order", type=int)
    v.add_argument("--m", type=int, default=2)
    v.add_argument("--seed", type=int, help="specialized exact mode; absent means symbolic")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--out", help="JSON report path")
    v.add_argument("--profile", choices=("smoke", "desk", "deep"), default="desk")
    v.add_argument("--level", choices=("1", "m"), default="1")
    v.add_argument("--modes", type=parse_modes, help="inclusive mode range a..b")
    v.add_argument("--quiet", action="store_true")

    n = sub.add_parser("nekrasov", help="print instanton-series coefficients")
    n.add_argument("--series", choices=("su2K", "u5d"), required=True)
    n.add_argument("--order", type=int)
    n.add_argument("--m", type=int, default=2)
    n.add_argument("--seed", type=int)
    n.add_argument("--out")
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.command == "nekrasov":
        return _nekrasov(args)
    cfg = VerifyConfig(target=args.target, deg=args.deg, order=args.order, m=args.m, seed=args.seed,
                       jobs=args.jobs, out=args.out, profile=args.profile, level=args.level, modes=args.modes)
    if cfg.m < 1 or cfg.jobs < 1 or min(x for x in (cfg.deg, cfg.order, 0) if x is not None) < 0:
        print("bad configuration: m, jobs must be positive and bounds non-negative", file=sys.stderr)
        return 2
    try:
        report = run(cfg)
    except BadConfig as exc:
        print(f"bad configuration: {exc}", file=sys.stderr)
        return 2
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(dumps(report))
    if not args.quiet:
        print(summary_text(report))
    return 1 if report["summary"]["fail"] else 0


if __name__ == "__main__":
    sys.exit(main())
