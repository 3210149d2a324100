"""Frozen reference expansions used by the test-suite and the verification campaign.

Every entry is a literal transcription of a published closed form; nothing here
is computed by the library's own routines.
"""

from __future__ import annotations

E = ()


def levelm_p_expansions(F, u1, u2):
    """m = 2 eigenvectors on the P (x) P basis: {(side, lamvec): {muvec: coefficient}}."""
    q, t = F.q, F.t
    sq = F.tq(-2)  # (q/t)^{1/2}
    one = F.one
    ket = {
        (E, E): {(E, E): one},
        ((1,), E): {((1,), E): one},
        (E, (1,)): {(E, (1,)): one, ((1,), E): sq * (t - q) * u2 / (q * (u1 - u2))},
        ((1, 1), E): {((1, 1), E): one},
        ((2,), E): {((2,), E): one},
        ((1,), (1,)): {
            ((1,), (1,)): one,
            ((1, 1), E): sq * (1 - q) * (t + 1) * t * (t - q) * u2 / (q * (1 - q * t) * (u1 - t * u2)),
            ((2,), E): sq * (t - q) * u2 / (q * (q * u1 - u2)),
        },
        (E, (1, 1)): {
            (E, (1, 1)): one,
            ((1,), (1,)): sq * (t - q) * u2 / (q * (t * u1 - u2)),
            ((1, 1), E): (t - q) * ((q**2 * t - q * t - q + t**2) * u2 - q * t * (t**2 - 1) * u1) * u2
            / (q * t * (u1 - u2) * (1 - q * t) * (t * u1 - u2)),
            ((2,), E): -(t - q) * u2 / (q * (t * u1 - u2)),
        },
        (E, (2,)): {
            (E, (2,)): one,
            ((1,), (1,)): -sq * (t - 1) * (1 + q) * (t - q) * u2 / ((1 - q * t) * (u1 - q * u2)),
            ((2,), E): (q - t) * (q * (q**2 * t - q + q * t - t**2) * u2 + (1 - q**2) * t * u1) * u2
            / (q * t * (1 - q * t) * (u1 - u2) * (q * u2 - u1)),
            ((1, 1), E): -(t**2 - 1) * (1 - q**2) * (t - q) * u2 / ((q * u2 - u1) * (1 - q * t) ** 2),
        },
        ((1, 1, 1), E): {((1, 1, 1), E): one},
        ((2, 1), E): {((2, 1), E): one},
        ((3,), E): {((3,), E): one},
        ((1, 1), (1,)): {
            ((1, 1), (1,)): one,
            ((2, 1), E): sq * (t - q) * u2 / (q * (q * u1 - u2)),
            ((1, 1, 1), E): sq * (1 - q) * (t - q) * (1 - t**3) * t**2 * u2
            / (q * (1 - q * t**2) * (1 - t) * (u1 - t**2 * u2)),
        },
        ((2,), (1,)): {
            ((2,), (1,)): one,
            ((3,), E): sq * (t - q) * u2 / (q * (q**2 * u1 - u2)),
            ((2, 1), E): sq * (1 - q**2) * (t - q) * (1 - q * t**2) * t * u2
            / (q * (1 - q * t) * (1 - q**2 * t) * (u1 - t * u2)),
        },
    }
    bra = {
        (E, E): {(E, E): one},
        ((1,), E): {((1,), E): one, (E, (1,)): -sq * (t - q) * u2 / (q * (u1 - u2))},
        (E, (1,)): {(E, (1,)): one},
    }
    out = {("ket", k): v for k, v in ket.items()}
    out.update({("bra", k): v for k, v in bra.items()})
    return out


def level1_k_examples(F, u):
    """Level-one K vectors in the PBW family: {lam: {mu: coefficient of X_mu}}.

    The (1,1) entry carries the sign that makes K an eigenvector; the printed
    form has the opposite sign, see ``level1_k_examples_printed``.
    """
    q, t = F.q, F.t
    return {
        (1,): {(1,): F.one},
        (2,): {(1, 1): F.one, (2,): (q - 1) * u / t},
        (1, 1): {(1, 1): F.one, (2,): -q * (t - 1) * u / t},
    }


def level1_k_examples_printed(F, u):
    q, t = F.q, F.t
    d = level1_k_examples(F, u)
    d[(1, 1)] = {(1, 1): F.one, (2,): q * (t - 1) * u / t}
    return d
