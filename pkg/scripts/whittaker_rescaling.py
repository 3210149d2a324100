"""Print the ratios behind the Whittaker findings.

For each seed: the solved dual coefficient over the conjectured product, per
partition tuple, and the pairing <G|G> over the instanton sum, per order.
"""

import argparse

from qagt.exactfield import Specialized, symbolic, to_text
from qagt.whittaker import g_levelm, gg_pairing


def vectors(F, m):
    g = lambda p: tuple(F.var(f"{p}{i}") for i in range(1, m + 1))  # noqa: E731
    return g("u"), g("alpha"), g("beta"), F.var("Lambda")


def report(F, m, deg, order):
    q, t = F.q, F.t
    u, a, b, L = vectors(F, m)
    _, rows = g_levelm(F, u, L, b, deg, "bra")
    for e in rows:
        r = e["diagnostic"]["computed_over_formula"]
        print(f"  dual {e['lam']}: computed/formula = {to_text(r)}  t-rescaled match: "
              f"{e['diagnostic']['matches_t_rescaled']}")
    res, _ = gg_pairing(F, u, L, a, b, order)
    for r in res:
        d = r["order"]
        print(f"  gg order {d}: lhs/rhs == (t/q)^{d}: {r['lhs_over_rhs'] == (t / q) ** d}, "
              f"via/rhs == q^-{d}: {r['via_over_rhs'] == q ** (-d)}")


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--deg", type=int, default=2)
    p.add_argument("--order", type=int, default=1)
    p.add_argument("--seeds", type=int, nargs="*", default=[7, 8, 9])
    p.add_argument("--symbolic", action="store_true", help="exact symbolic run (practical for m = 1)")
    args = p.parse_args()
    if args.symbolic:
        names = [f"{x}{i}" for x in ("u", "alpha", "beta") for i in range(1, args.m + 1)] + ["Lambda"]
        print("symbolic")
        report(symbolic(*names), args.m, args.deg, args.order)
        return
    for s in args.seeds:
        print(f"seed {s}")
        report(Specialized(s), args.m, args.deg, args.order)


if __name__ == "__main__":
    main()
