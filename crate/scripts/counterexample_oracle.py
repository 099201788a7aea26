#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
"""High-precision oracle for the Ha-Kye counterexample pipeline.

Evaluates the construction from closed forms only (circulant eigenvalues of
P(a, theta) and P(a, theta) - P, coefficient sums of the 9x9 Choi matrix), so
it shares no code path with the Rust implementation.

    python3 scripts/counterexample_oracle.py 0.01 0.05 0.1 0.2 0.25
"""
import sys

from mpmath import mp, mpf, cos, sin, pi, sqrt

mp.dps = 40


def p_theta(theta):
    return max(2 * cos(theta + 2 * pi * k / 3) for k in range(3))


def deviation_norm(a, theta):
    # P(a, theta) and the all-ones P are both circulant; eigenvalues of the
    # difference are (a - 1) + 2 Re((-e^{i theta} - 1) w^k).
    return max(abs((a - 1) - 2 * cos(theta + 2 * pi * k / 3) - 2 * cos(2 * pi * k / 3))
               for k in range(3))


def conditions(eps, delta, slack=mpf("1e-12")):
    theta = pi - delta
    p = p_theta(theta)
    a = p - eps
    return (1 < p < 1 + eps) and (-cos(theta) > 1 - eps) and (deviation_norm(a, theta) <= eps + slack)


def select_delta(eps):
    lo, hi = mpf("1e-9"), pi / 3
    assert conditions(eps, lo)
    while hi - lo > mpf("1e-6"):
        mid = (lo + hi) / 2
        if conditions(eps, mid):
            lo = mid
        else:
            hi = mid
    return lo / 2


def report(eps):
    eps = mpf(eps)
    delta = select_delta(eps)
    theta = pi - delta
    p = p_theta(theta)
    a = p - eps
    b = eps
    c = (1 - a) ** 2 / b
    k = 1 / (a + b + c)
    s_psi = k * (3 * a + 6 * (-cos(theta)))
    t_psi = k * 3 * a
    neg_psi = k * (p - a)
    bound = 3 + 6 * neg_psi
    return dict(eps=eps, delta=delta, p_theta=p, a=a, b=b, c=c, k=k,
                S_psi=s_psi, T_psi=t_psi, neg_norm_psi=neg_psi, bound=bound,
                margin=max(s_psi, t_psi) - bound)


if __name__ == "__main__":
    for arg in sys.argv[1:] or ["0.1"]:
        r = report(arg)
        print(" ".join(f"{key}={mp.nstr(val, 15)}" for key, val in r.items()))
