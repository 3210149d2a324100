"""Verification campaign: check registry, profiles, runner and the JSON report.

Every check is a plain function ``fn(F, **inputs) -> (ok, detail)`` evaluated in
a fresh field.  The runner owns everything else: field construction, retries of
specialized points, error capture, ordering and timing.
"""

from __future__ import annotations

import hashlib
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from . import __version__
from .exactfield import PoleAtPoint, Specialized, ZeroDenominator, symbolic, to_text
from .fock import EigenvalueCollision, LevelOne, from_symfunc, k_basis, k_norm_formula, k_to_j_scalar, pairing
from .fock import RELATIONS, relation_check
from .partitions import partition_text, partition_tuples, partitions, partitions_upto, tuple_text

REPORT_VERSION = 1
RETRIES = 5  # fresh draws after the first attempt


class BadConfig(ValueError):
    pass


@dataclass
class VerifyConfig:
    target: str
    deg: int | None = None
    order: int | None = None
    m: int = 2
    seed: int | None = None
    jobs: int = 1
    out: str | None = None
    profile: str = "desk"
    level: str = "1"
    modes: tuple | None = None

    def field_mode(self):
        return "symbolic" if self.seed is None else f"seed={self.seed}"


@dataclass
class CheckSpec:
    id: str
    anchor: str
    family: str
    inputs: dict
    seed: int | None = None  # None: symbolic
    names: tuple = ()


@dataclass
class Record:
    id: str
    anchor: str
    inputs: dict
    verdict: str
    detail: dict = field(default_factory=dict)


def _h(x):
    """Short stable digest of a scalar's canonical text."""
    return hashlib.sha256(to_text(x).encode()).hexdigest()[:16]


def _txt(x, limit=400):
    s = to_text(x)
    return s if len(s) <= limit else s[:limit] + f"...(+{len(s) - limit} chars)"


def _witness(**kw):
    return {k: (_txt(v) if not isinstance(v, (str, int, bool, list, dict, type(None))) else v)
            for k, v in kw.items()}


# ---------------------------------------------------------------------------
# check families
# ---------------------------------------------------------------------------


def chk_macdonald_norms(F, deg):
    from .symfunc import c_lambda, c_prime_lambda, inner, macdonald

    n = 0
    for lam in partitions_upto(deg):
        md = macdonald(F, lam)
        c, cp = c_lambda(F, lam), c_prime_lambda(F, lam)
        pp, jj = inner(md.P, md.P), inner(md.J, md.J)
        n += 1
        if pp != cp / c or jj != c * cp:
            return False, {"checked": n, "witness": _witness(lam=partition_text(lam), PP=pp, JJ=jj)}
    return True, {"checked": n}


def chk_x0_eigen(F, deg):
    from .fock import vscale, vsub
    from .symfunc import epsilon, macdonald

    u = F.var("u")
    rep = LevelOne(F, u)
    n = 0
    for lam in partitions_upto(deg):
        P = from_symfunc(macdonald(F, lam).P)
        n += 1
        if vsub(rep.x_plus(0, P), vscale(P, u * epsilon(F, lam))):
            return False, {"checked": n, "witness": partition_text(lam)}
    return True, {"checked": n}


def chk_k_examples(F):
    from .oracles import level1_k_examples, level1_k_examples_printed

    u = F.var("u")
    rep = LevelOne(F, u)
    got = {}
    for n in (1, 2):
        for lam, _, xc in k_basis(rep, n):
            got[lam] = xc
    want = level1_k_examples(F, u)
    printed = level1_k_examples_printed(F, u)
    same = {partition_text(l): got[l] == want[l] for l in want}
    scalars = {(1,): -u / F.t, (2,): u**2 / F.t**2, (1, 1): u**2 / F.t**3}
    prop = {partition_text(l): k_to_j_scalar(F, l, u) == s for l, s in scalars.items()}
    printed_ok = got[(1, 1)] == printed[(1, 1)]
    ok = all(same.values()) and all(prop.values()) and not printed_ok
    return ok, {"x_coefficients": same, "j_scalars": prop, "printed_(1,1)_sign_reproduces": printed_ok}


def chk_k_props(F, deg):
    """K = scalar J for kets and bras and the norm formula, |lam| <= deg."""
    from .fock import vscale, vsub
    from .symfunc import macdonald

    u = F.var("u")
    rep = LevelOne(F, u)
    n = 0
    for d in range(1, deg + 1):
        kets = {lam: v for lam, v, _ in k_basis(rep, d, "ket")}
        bras = {lam: v for lam, v, _ in k_basis(rep, d, "bra")}
        for lam in partitions(d):
            J = from_symfunc(macdonald(F, lam).J)
            n += 1
            if vsub(kets[lam], vscale(J, k_to_j_scalar(F, lam, u, "ket"))):
                return False, {"checked": n, "witness": {"lam": partition_text(lam), "what": "ket scalar"}}
            if vsub(bras[lam], vscale(J, k_to_j_scalar(F, lam, u, "bra"))):
                return False, {"checked": n, "witness": {"lam": partition_text(lam), "what": "bra scalar"}}
            nrm = pairing(F, bras[lam], kets[lam])
            if nrm != k_norm_formula(F, lam, u):
                return False, {"checked": n, "witness": _witness(lam=partition_text(lam), norm=nrm)}
    return True, {"checked": n}


def chk_level1_relations(F, window, lo, hi):
    rep = LevelOne(F, F.var("u"))
    out, ok = {}, True
    for rel in RELATIONS:
        r = relation_check(rep, rel, window, (lo, hi))
        out[rel] = {"verdict": r.verdict, "checked": r.checked, "witness": r.witness}
        ok = ok and r.verdict == "pass"
    return ok, out


def chk_factorization(F, deg):
    from .vertex1 import verify_factorization, verify_k_factorization

    u, v, w = F.var("u"), F.var("v"), F.var("w")
    lams = list(partitions_upto(deg))
    pairs = fails = 0
    kfails = 0
    witness = None
    for lam in lams:
        for mu in lams:
            lhs, rhs, ok = verify_factorization(F, lam, mu, u, v, w)
            pairs += 1
            if not ok:
                fails += 1
                witness = witness or _witness(lam=partition_text(lam), mu=partition_text(mu), lhs=lhs, rhs=rhs)
            if not verify_k_factorization(F, lam, mu, u, v, w)[2]:
                kfails += 1
                witness = witness or {"K": True, "lam": partition_text(lam), "mu": partition_text(mu)}
    return fails == 0 and kfails == 0, {"pairs": pairs, "failures": fails, "k_failures": kfails,
                                        "witness": witness}


def chk_worked_examples(F):
    from .vertex1 import worked_examples

    u, v, w = F.var("u"), F.var("v"), F.var("w")
    out = {}
    for label, got, want in worked_examples(F, u, v, w):
        out[label] = got == want
    return all(out.values()), out


def chk_intertwine(F, window, lo, hi):
    from .vertex1 import intertwine_check

    u, v, w = F.var("u"), F.var("v"), F.var("w")
    out, ok = {}, True
    for tag in ("eta", "xi", "phi_plus", "phi_minus"):
        r = intertwine_check(F, tag, (lo, hi), window, u, v, w)
        out[tag] = {"verdict": r.verdict, "checked": r.checked, "witness": r.witness}
        ok = ok and r.verdict == "pass"
    return ok, out


def chk_two_point(F, order):
    from .vertex1 import two_point_series

    lhs, rhs, oks = two_point_series(F, order, F.var("u"), F.var("v"), F.var("w"))
    detail = {"orders": oks, "rhs_digest": [_h(x) for x in rhs]}
    if not all(oks):
        k = oks.index(False)
        detail["witness"] = _witness(order=k, lhs=lhs[k], rhs=rhs[k])
    return all(oks), detail


def chk_nekrasov_forms(F, deg):
    from .nekrasov import nekrasov_factor, nekrasov_factor_armleg

    x = F.var("x")
    n = 0
    for lam in partitions_upto(deg):
        for mu in partitions_upto(deg):
            n += 1
            if nekrasov_factor(F, lam, mu, x) != nekrasov_factor_armleg(F, lam, mu, x):
                return False, {"checked": n, "witness": [partition_text(lam), partition_text(mu)]}
    return True, {"checked": n}


def chk_triangularity(F, m, deg):
    from .levelm import LevelM, x0_matrix

    rep = LevelM(F, tuple(F.var(f"u{i}") for i in range(1, m + 1)))
    out, ok = {}, True
    for side in ("ket", "bra"):
        for n in range(deg + 1):
            _, r = x0_matrix(rep, n, side)
            out[f"{side}:{n}"] = {"entries": r.entries, "violations": [[tuple_text(a), tuple_text(b)]
                                                                      for a, b in r.violations[:3]]}
            ok = ok and r.verdict == "pass"
    return ok, out


def chk_p_examples(F):
    from .levelm import LevelM, eig_P, pp_expansion
    from .oracles import levelm_p_expansions

    u1, u2 = F.var("u1"), F.var("u2")
    rep = LevelM(F, (u1, u2))
    table = levelm_p_expansions(F, u1, u2)
    out, ok = {}, True
    for (side, lam), want in table.items():
        got = pp_expansion(F, eig_P(rep, lam, side), 2, sum(map(sum, lam)))
        good = got == {k: v for k, v in want.items() if v}
        out[f"{side}:{tuple_text(lam)}"] = good
        ok = ok and good
    return ok, {"vectors": len(table), "results": out}


def _uvec(F, m, name="u"):
    return tuple(F.var(f"{name}{i}") for i in range(1, m + 1))


def chk_norm_conjecture(F, m, deg):
    from .levelm import LevelM, norm_check

    rep = LevelM(F, _uvec(F, m))
    n, bad = 0, []
    for d in range(deg + 1):
        for lam in partition_tuples(m, d):
            n += 1
            lhs, rhs, ok = norm_check(F, rep, lam)
            if not ok:
                bad.append(_witness(lam=tuple_text(lam), lhs=lhs, rhs=rhs))
    return not bad, {"checked": n, "failures": len(bad), "witness": bad[:1]}


def chk_levelm_phi(F, m, deg):
    from .levelm import matrix_check

    phi, results = matrix_check(F, _uvec(F, m), _uvec(F, m, "v"), deg)
    bad = [r for r in results if not r[4]]
    val = phi.validation or {}
    detail = {"pairs": len(results), "failures": len(bad), "equations": phi.equations,
              "solution_space_dims": {f"{b},{k}": v for (b, k), v in sorted(phi.dims.items())},
              "inconsistent": None if phi.inconsistent is None else repr(phi.inconsistent),
              "validation": {name: {"checked": r["checked"], "failures": r["failures"]} for name, r in val.items()}}
    if bad:
        lam, mu, lhs, rhs, _ = bad[0]
        detail["witness"] = _witness(lam=tuple_text(lam), mu=tuple_text(mu), lhs=lhs, rhs=rhs)
    ok = (not bad and phi.inconsistent is None and not any(phi.dims.values())
          and bool(val) and all(r["failures"] == 0 for r in val.values()))
    return ok, detail


def chk_four_point(F, m, order):
    from .levelm import four_point_check

    res, norms = four_point_check(F, order, _uvec(F, m), _uvec(F, m, "v"), _uvec(F, m, "w"))
    oks = [r[2] for r in res]
    detail = {"orders": oks, "norms_agree": norms}
    if not all(oks):
        k = oks.index(False)
        detail["witness"] = _witness(order=k, lhs=res[k][0], rhs=res[k][1])
    return all(oks) and norms, detail


def chk_whittaker_level1(F, deg, cond_deg, window):
    from .whittaker import g_level1, permutation_identity_check, whittaker_equals_phi

    a, b = F.var("alpha"), F.var("beta")
    _, conds, coeffs = g_level1(F, a, b, deg)
    _, conds3, _ = g_level1(F, a, b, cond_deg)
    fact = {partition_text(l): c[2] for l, c in coeffs.items()}
    checked, failures = permutation_identity_check(F, a, b, window, (-window - 1, window + 1))
    phi = whittaker_equals_phi(F, F.var("u"), F.var("v"), cond_deg)
    detail = {"factorized": fact, "conditions": [c["ok"] for c in conds3],
              "permutation_identity": {"checked": checked, "failures": len(failures)},
              "equals_phi_vacuum": phi}
    ok = all(fact.values()) and all(c["ok"] for c in conds3) and not failures and phi
    return ok, detail


def chk_whittaker_levelm(F, m, deg, side):
    from .whittaker import g_levelm

    u = _uvec(F, m)
    Lam = F.var("Lambda")
    params = _uvec(F, m, "alpha" if side == "ket" else "beta")
    wv, rep = g_levelm(F, u, Lam, params, deg, side)
    out, ok, witness = {}, True, None
    for e in rep:
        verd = e["verdicts"]
        good = all(verd.values())
        out[tuple_text(e["lam"])] = verd
        ok = ok and good
        if not good and witness is None:
            witness = _witness(lam=tuple_text(e["lam"]), computed=e["computed"], formula=e["formula"])
            if "diagnostic" in e:
                witness["computed_over_formula"] = _txt(e["diagnostic"]["computed_over_formula"])
                witness["matches_t_rescaled"] = e["diagnostic"]["matches_t_rescaled"]
    dims = {str(k): v for k, v in sorted(wv.dims.items())}
    ok = ok and not any(wv.dims.values()) and not wv.inconsistent
    return ok, {"solution_space_dims": dims, "coefficients": out, "witness": witness}


def chk_gg(F, m, order):
    from .whittaker import gg_pairing

    res, info = gg_pairing(F, _uvec(F, m), F.var("Lambda"), _uvec(F, m, "alpha"), _uvec(F, m, "beta"), order)
    detail = {"orders": [r["ok"] for r in res],
              "conjectured_coefficients_sum_matches": [r["coefficients_ok"] for r in res],
              "matches_with_t_over_q_rescaling": [r["rescaled_ok"] for r in res],
              "ket_dims": {str(k): v for k, v in sorted(info["ket_dims"].items())},
              "bra_dims": {str(k): v for k, v in sorted(info["bra_dims"].items())}}
    bad = [r for r in res if not r["ok"]]
    if bad:
        r = bad[0]
        detail["witness"] = _witness(order=r["order"], lhs_over_rhs=r["lhs_over_rhs"],
                                     via_coefficients_over_rhs=r["via_over_rhs"])
    return not bad, detail


def chk_m1_reduction(F, deg):
    from .whittaker import level1_as_levelm, m1_reduction_check

    u, L, a = F.var("u"), F.var("Lambda"), F.var("alpha")
    red = m1_reduction_check(F, u, L, a, deg)
    same, dims = level1_as_levelm(F, u, L, a, deg)
    ok = all(x[1] for x in red) and same and not any(dims.values())
    return ok, {"C_reduces": {partition_text(l): x for l, x in red}, "solved_equals_exponential": same}


def chk_saalschutz(F, kmax):
    from .qhyper import saalschutz_check

    a, b, c = F.var("a"), F.var("b"), F.var("c")
    out = {str(k): saalschutz_check(F, a, b, c, k)[2] for k in range(kmax + 1)}
    return all(out.values()), out


def chk_q_binomial(F, order):
    from .qhyper import q_binomial_check

    ok = q_binomial_check(F, F.var("a"), order)
    return ok, {"order": order}


def chk_families(F, jk):
    from .qhyper import FAMILIES, section6_closed_forms

    u, v, w = F.var("u"), F.var("v"), F.var("w")
    out, ok = {}, True
    for fam in FAMILIES:
        bad = []
        for j in range(jk + 1):
            for k in range(jk + 1):
                r = section6_closed_forms(F, fam, j, k, u, v, w)
                if not (r["gen_eq_direct"] and r["direct_eq_closed"]):
                    bad.append([j, k, r["gen_eq_direct"], r["direct_eq_closed"]])
        out[fam] = {"failures": bad}
        ok = ok and not bad
    return ok, out


def chk_phi_psi(F, deg):
    from .vertex1 import phi_psi_agreement

    ok, info = phi_psi_agreement(F, F.var("u"), F.var("v"), deg)
    return ok, info


def chk_generic_psi(F, jk):
    from .qhyper import psi_generating_vs_direct

    names = ("alpha", "beta", "kappa", "delta")
    ps = [F.var(x) for x in names]
    w = F.var("w")
    bad = []
    for j in range(jk + 1):
        for k in range(jk + 1):
            d, g, p = psi_generating_vs_direct(F, j, k, *ps, w)
            if not (d == g == p):
                bad.append([j, k])
    return not bad, {"failures": bad}


def chk_compat(F):
    from .qhyper import compat_constraint_check

    r = compat_constraint_check(F, F.var("u"), F.var("v"))
    return r["verdict"], {"constraint_holds": r["constraint_holds"], "residual_phi_zero": not r["residual_phi"],
                          "residual_perturbed_nonzero": bool(r["residual_perturbed"])}


FAMILIES = {
    "macdonald-norms": chk_macdonald_norms,
    "x0-eigen": chk_x0_eigen,
    "k-examples": chk_k_examples,
    "k-props": chk_k_props,
    "level1-relations": chk_level1_relations,
    "level1-factorization": chk_factorization,
    "worked-examples": chk_worked_examples,
    "level1-intertwine": chk_intertwine,
    "two-point": chk_two_point,
    "nekrasov-forms": chk_nekrasov_forms,
    "levelm-triangularity": chk_triangularity,
    "levelm-p-examples": chk_p_examples,
    "levelm-norm-conjecture": chk_norm_conjecture,
    "levelm-phi": chk_levelm_phi,
    "four-point": chk_four_point,
    "whittaker-level1": chk_whittaker_level1,
    "whittaker-levelm": chk_whittaker_levelm,
    "whittaker-m1-reduction": chk_m1_reduction,
    "gg-pairing": chk_gg,
    "saalschutz": chk_saalschutz,
    "q-binomial": chk_q_binomial,
    "closed-forms": chk_families,
    "phi-psi": chk_phi_psi,
    "generic-psi": chk_generic_psi,
    "compat-constraint": chk_compat,
}

ANCHORS = {
    "macdonald-norms": "macdonald-norm",
    "x0-eigen": "x0-eigenvalue",
    "k-examples": "k-basis-examples",
    "k-props": "k-basis-proposition",
    "level1-relations": "ding-iohara-relations",
    "level1-factorization": "phi-factorization",
    "worked-examples": "phi-worked-examples",
    "level1-intertwine": "phi-intertwining",
    "two-point": "two-point-function",
    "nekrasov-forms": "nekrasov-factor",
    "levelm-triangularity": "levelm-triangularity",
    "levelm-p-examples": "levelm-p-examples",
    "levelm-norm-conjecture": "levelm-norm-conjecture",
    "levelm-phi": "levelm-matrix-conjecture",
    "four-point": "four-point-function",
    "whittaker-level1": "whittaker-level1",
    "whittaker-levelm": "whittaker-levelm-conjecture",
    "whittaker-m1-reduction": "whittaker-m1-reduction",
    "gg-pairing": "whittaker-pairing",
    "saalschutz": "q-saalschutz",
    "q-binomial": "q-binomial",
    "closed-forms": "closed-form-families",
    "phi-psi": "phi-equals-psi",
    "generic-psi": "generic-psi",
    "compat-constraint": "compatibility-constraint",
}

# variables of each family in symbolic mode (one flint context per set)
_UVW = ("u", "v", "w")
NAMES = {
    "macdonald-norms": (), "x0-eigen": ("u",), "k-examples": ("u",), "k-props": ("u",),
    "level1-relations": ("u",), "level1-factorization": _UVW, "worked-examples": _UVW,
    "level1-intertwine": _UVW, "two-point": _UVW, "nekrasov-forms": ("x",),
    "levelm-triangularity": ("u1", "u2", "u3"), "levelm-p-examples": ("u1", "u2"),
    "whittaker-level1": ("alpha", "beta", "u", "v"), "whittaker-m1-reduction": ("u", "Lambda", "alpha"),
    "saalschutz": ("a", "b", "c"), "q-binomial": ("a",),
    "closed-forms": _UVW, "phi-psi": ("u", "v"), "generic-psi": ("alpha", "beta", "kappa", "delta", "w"),
    "compat-constraint": ("u", "v"),
}


def _levelm_names(inputs):
    m = inputs.get("m", 2)
    return tuple(f"{p}{i}" for p in ("u", "v", "w", "alpha", "beta") for i in range(1, m + 1)) + ("Lambda",)


for _fam in ("levelm-norm-conjecture", "levelm-phi", "four-point", "whittaker-levelm", "gg-pairing"):
    NAMES[_fam] = _levelm_names


def spec(family, seed=None, **inputs):
    parts = [family] + [f"{k}={inputs[k]}" for k in sorted(inputs)]
    if seed is not None:
        parts.append(f"seed={seed}")
    return CheckSpec(id="/".join(parts), anchor=ANCHORS[family], family=family, inputs=inputs, seed=seed)


# ---------------------------------------------------------------------------
# profiles
# ---------------------------------------------------------------------------

DEFAULT_SEEDS = (7, 8, 9)


def profile_specs(profile, seed=None):
    """The check list of ``verify all``; level-m checks use ``seed`` or the three default seeds."""
    seeds = (seed,) if seed is not None else DEFAULT_SEEDS
    if profile == "smoke":
        L1 = [
            spec("macdonald-norms", deg=3), spec("x0-eigen", deg=3), spec("k-examples"),
            spec("k-props", deg=2), spec("level1-factorization", deg=1), spec("worked-examples"),
            spec("level1-intertwine", window=1, lo=-2, hi=2), spec("two-point", order=2),
            spec("nekrasov-forms", deg=2), spec("levelm-triangularity", m=2, deg=2),
            spec("whittaker-level1", deg=3, cond_deg=2, window=1), spec("whittaker-m1-reduction", deg=2),
            spec("gg-pairing", m=1, order=2), spec("saalschutz", kmax=2), spec("q-binomial", order=4),
            spec("closed-forms", jk=1), spec("phi-psi", deg=2), spec("compat-constraint"),
        ]
        LM = [spec("levelm-norm-conjecture", seeds[0], m=2, deg=1), spec("levelm-phi", seeds[0], m=2, deg=1),
              spec("four-point", seeds[0], m=2, order=1),
              spec("whittaker-levelm", seeds[0], m=2, deg=1, side="ket"),
              spec("whittaker-levelm", seeds[0], m=2, deg=1, side="bra"),
              spec("gg-pairing", seeds[0], m=2, order=1)]
        return L1 + LM
    if profile in ("desk", "deep"):
        deep = profile == "deep"
        L1 = [
            spec("macdonald-norms", deg=6 if deep else 5), spec("x0-eigen", deg=5 if deep else 4),
            spec("k-examples"), spec("k-props", deg=4 if deep else 3),
            spec("level1-relations", window=2, lo=-3, hi=3),
            spec("level1-factorization", deg=3), spec("worked-examples"),
            spec("level1-intertwine", window=2, lo=-3, hi=3), spec("two-point", order=4 if deep else 3),
            spec("nekrasov-forms", deg=4), spec("levelm-triangularity", m=2, deg=3), spec("levelm-p-examples"),
            spec("whittaker-level1", deg=5 if deep else 4, cond_deg=3, window=2),
            spec("whittaker-m1-reduction", deg=3), spec("gg-pairing", m=1, order=3),
            spec("saalschutz", kmax=4), spec("q-binomial", order=6), spec("closed-forms", jk=3),
            spec("phi-psi", deg=3), spec("generic-psi", jk=2), spec("compat-constraint"),
        ]
        LM = []
        for s in seeds:
            LM += [spec("levelm-norm-conjecture", s, m=2, deg=2), spec("levelm-phi", s, m=2, deg=2),
                   spec("four-point", s, m=2, order=2 if deep else 1),
                   spec("whittaker-levelm", s, m=2, deg=2, side="ket"),
                   spec("whittaker-levelm", s, m=2, deg=2, side="bra"),
                   spec("gg-pairing", s, m=2, order=2 if deep else 1)]
            if deep:
                LM.append(spec("levelm-norm-conjecture", s, m=3, deg=1))
        return L1 + LM
    raise BadConfig(f"unknown profile {profile!r}")


# ---------------------------------------------------------------------------
# running
# ---------------------------------------------------------------------------


def _field_for(cs: CheckSpec, attempt=0):
    if cs.seed is None:
        names = NAMES[cs.family]
        return symbolic(*(names(cs.inputs) if callable(names) else names))
    return Specialized(cs.seed, attempt)


def run_spec(cs: CheckSpec):
    """Evaluate one check; returns (Record, seconds).  Errors become failed records."""
    t0 = time.perf_counter()
    fn = FAMILIES[cs.family]
    attempt = 0
    detail = {}
    while True:
        F = _field_for(cs, attempt)
        try:
            ok, detail = fn(F, **cs.inputs)
            verdict = "pass" if ok else "fail"
            break
        except (EigenvalueCollision, PoleAtPoint, ZeroDenominator) as exc:
            if cs.seed is None or attempt >= RETRIES:
                verdict, detail = "fail", {"error": f"{type(exc).__name__}: {exc}"}
                break
            attempt += 1
        except Exception as exc:  # noqa: BLE001 - reported, never raised
            verdict, detail = "fail", {"error": f"{type(exc).__name__}: {exc}"}
            break
    if cs.seed is not None:
        detail = dict(detail, field={"seed": cs.seed, "attempt": attempt})
    inputs = dict(cs.inputs, field="symbolic" if cs.seed is None else f"seed={cs.seed}")
    return Record(cs.id, cs.anchor, inputs, verdict, detail), time.perf_counter() - t0


def run_specs(specs, jobs=1):
    if jobs > 1 and len(specs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(run_spec, specs))
    else:
        results = [run_spec(s) for s in specs]
    # merge in check-list order, independent of completion order
    return [r for r, _ in results], {r.id: round(dt, 3) for r, dt in results}


def build_report(config: VerifyConfig, records, timing):
    counts = {"pass": 0, "fail": 0, "skipped": 0}
    for r in records:
        counts[r.verdict.split("(")[0]] = counts.get(r.verdict.split("(")[0], 0) + 1
    cfg = asdict(config)
    cfg.pop("out", None)
    cfg.pop("jobs", None)
    cfg["field_mode"] = config.field_mode()
    return {
        "version": {"report": REPORT_VERSION, "library": __version__},
        "config": cfg,
        "checks": [asdict(r) for r in records],
        "summary": {"total": len(records), **counts,
                    "failed": [r.id for r in records if r.verdict == "fail"]},
        "timing": {"per_check_seconds": timing, "total_seconds": round(sum(timing.values()), 3)},
    }


def dumps(report):
    return json.dumps(report, indent=2, sort_keys=False, default=str) + "\n"


def strip_timing(report):
    return {k: v for k, v in report.items() if k != "timing"}
