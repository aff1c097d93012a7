"""Brute-force trapezoid oracle for the half-space g integral and the
decay-rate factor alpha.

Deliberately shares no code with ``slabtherm``: complex square roots with
an explicit branch flip, the substitutions x = sin(t) / x = cosh(t) instead
of the library's u/v variables, and a uniform trapezoid rule with 2**20 + 1
nodes per range.  Run once; results are frozen in ``golden_oracle.json``.

    python tests/oracles/make_golden.py
"""
import json
import pathlib

import numpy as np

NODES = 2**20 + 1

G_POINTS = [
    # (re_eps, im_eps, zeta = omega z / c)
    (2.0, 0.1, 1.0),
    (2.0, 0.1, 0.3),
    (4.0, 0.5, 0.5),
    (10.0, 1.0, 1.0),
    (10.0, 5.0, 2.0),
    (1.5, 0.01, 1.0),
    (3.0, 2.0, 0.2),
    (6.0, 0.2, 3.0),
    (12.0, 10.0, 0.5),
    (2.25, 0.05, 1.5),
]

ALPHA_POINTS = [
    # (re_eps, im_eps, zeta, delta = omega d / c; inf = half-space)
    (2.0, 0.1, 1.0, 5.0),
    (2.0, 0.1, 1.0, np.inf),
    (4.0, 0.5, 0.5, 1.0),
    (10.0, 1.0, 1.0, 0.5),
    (3.0, 2.0, 0.2, np.inf),
    (6.0, 0.2, 3.0, 10.0),
    (1.5, 0.05, 2.0, 2.0),
    (2.0, 0.1, 10.0, 5.0),
    (12.0, 10.0, 0.5, 0.2),
    (2.25, 0.3, 0.7, 3.0),
]


def kz(eps, x):
    w = np.sqrt(eps - x.astype(complex) ** 2)
    return np.where(w.imag < 0, -w, w)


def trapz(y, t):
    h = t[1] - t[0]
    return h * (np.sum(y) - 0.5 * (y[0] + y[-1]))


def g_halfspace_hat(re, im, zeta, n=NODES, bare_s=False):
    """Dimensionless g c / (mu0 omega^3): (1/8pi^2) int dx x/|b0|^2 e^{-2 Im b0 zeta} Re b1 (A+ + A).

    The s-wave weight is |1 - r_s|^2; ``bare_s`` divides it by |eps|
    (t_s = sqrt(1/eps)(1 - r_s) taken literally).
    """
    eps = complex(re, im)
    umax = 45.0 / (2 * zeta)
    t = np.linspace(0.0, np.arcsinh(umax), n)
    x = np.cosh(t)
    b0 = kz(1.0, x)
    b1 = kz(eps, x)
    rs = (b1 - b0) / (b1 + b0)
    rp = (b1 - eps * b0) / (b1 + eps * b0)
    ts2 = abs(1 - rs) ** 2 / (abs(eps) if bare_s else 1.0)
    tp2 = abs(1 - rp) ** 2 / abs(eps)
    ap = tp2 * (x**2 + abs(b1) ** 2) * (x**2 + abs(b0) ** 2) / abs(eps)
    with np.errstate(invalid="ignore", divide="ignore"):
        # dx = sinh t dt, |b0|^2 = sinh^2 t
        f = x * np.sinh(t) / abs(b0) ** 2 * np.exp(-2 * b0.imag * zeta) * b1.real * (ap + ts2)
    f[0] = 0.0
    return trapz(f, t) / (8 * np.pi**2)


def slab_r(eps, b0, b1, delta):
    rs = (b0 - b1) / (b0 + b1)
    rp = (eps * b0 - b1) / (eps * b0 + b1)
    if np.isinf(delta):
        return rs, rp
    e = np.exp(2j * b1 * delta)
    return (rs * (1 - e) / (1 - rs**2 * e), rp * (1 - e) / (1 - rp**2 * e))


def alpha(re, im, zeta, delta, n=NODES):
    eps = complex(re, im)
    # propagating: x = sin th, (x/b0) dx = sin th dth
    th = np.linspace(0.0, np.pi / 2, n)
    x = np.sin(th)
    b0 = kz(1.0, x)
    b1 = kz(eps, x)
    rs, rp = slab_r(eps, b0, b1, delta)
    f = np.sin(th) * (rs + (2 * x**2 - 1) * rp) * np.exp(2j * b0 * zeta)
    prop = trapz(f, th).real
    return 1.0 + 0.5 * prop + alpha_evanescent(re, im, zeta, delta, n)


def alpha_evanescent(re, im, zeta, delta, n=NODES):
    eps = complex(re, im)
    # evanescent: x = cosh t, (x/b0) dx = -i cosh t dt
    umax = 45.0 / (2 * zeta)
    t = np.linspace(0.0, np.arcsinh(umax), n)
    x = np.cosh(t)
    b0 = kz(1.0, x)
    b1 = kz(eps, x)
    rs, rp = slab_r(eps, b0, b1, delta)
    f = -1j * np.cosh(t) * (rs + (2 * x**2 - 1) * rp) * np.exp(2j * b0 * zeta)
    return 0.5 * trapz(f, t).real


def main():
    out = {"nodes": NODES, "g_halfspace_hat": [], "alpha": []}
    for re, im, zeta in G_POINTS:
        v = g_halfspace_hat(re, im, zeta)
        v2 = g_halfspace_hat(re, im, zeta, n=(NODES - 1) // 2 + 1)
        vp = g_halfspace_hat(re, im, zeta, bare_s=True)
        # closure check: evanescent part of alpha carries the same integral
        ev = 4 * alpha_evanescent(re, im, zeta, np.inf) / (8 * np.pi**2)
        out["g_halfspace_hat"].append(
            {
                "re": re,
                "im": im,
                "zeta": zeta,
                "value": v,
                "value_bare_s": vp,
                "self_check": abs(v - v2) / abs(v),
                "closure_check": abs(v - ev) / abs(v),
            }
        )
    for re, im, zeta, delta in ALPHA_POINTS:
        v = alpha(re, im, zeta, delta)
        v2 = alpha(re, im, zeta, delta, n=(NODES - 1) // 2 + 1)
        out["alpha"].append(
            {
                "re": re,
                "im": im,
                "zeta": zeta,
                "delta": None if np.isinf(delta) else delta,
                "value": v,
                "self_check": abs(v - v2) / abs(v),
            }
        )
    path = pathlib.Path(__file__).resolve().parents[1] / "data" / "golden_oracle.json"
    path.write_text(json.dumps(out, indent=2) + "\n")
    for key in ("g_halfspace_hat", "alpha"):
        for row in out[key]:
            print(key, row)


if __name__ == "__main__":
    main()
