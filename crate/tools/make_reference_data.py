#!/usr/bin/env python3
"""Generate high-precision reference data for the critline test suite.

Uses mpmath (30 significant digits) as an independent oracle:
  * crates/critline/tests/data/zeros.csv : heights of the first nontrivial
    zeta zeros on the critical line (mpmath.zetazero)
  * crates/critline/tests/data/gram.csv  : Gram points in the convention
    theta(g(n)) = (n-1)*pi, their Lambert-W approximations, gaps, and the
    sign of Re zeta(1/2 + i g(n))
  * stdout: spot values that are frozen by hand into unit tests, plus a
    cross-check table for the argument-formula verifier.

Run from the repository root:  python3 tools/make_reference_data.py
"""

import os
import time

from mpmath import (mp, mpf, pi, e, exp, log, sqrt, floor, ceil, re, im,
                    arg, zeta, zetazero, grampoint, siegeltheta, lambertw,
                    loggamma, mpc)

mp.dps = 30

HERE = os.path.dirname(os.path.abspath(__file__))
DATA = os.path.join(HERE, "..", "crates", "critline", "tests", "data")

N_ZEROS = 285
N_GRAM = 515


def fmt(x):
    return mp.nstr(mpf(x), 19)


def frac_signed(x):
    x = mpf(x)
    return x - floor(x) if x >= 0 else x - ceil(x)


def theta_tilde(t):
    t = mpf(t)
    return t / 2 * log(t / (2 * pi * e)) - pi / 8


def theta_tilde_inv(x):
    x = mpf(x)
    u = pi + 8 * x
    if u == 0:
        return 2 * pi * e
    return u / (4 * lambertw(u / (8 * pi * e)))


def gram_inverse_approx(t):
    t = mpf(t)
    return t * log(t / (2 * pi * e)) / (2 * pi) + mpf(7) / 8


def gram_approx(n):
    k = mpf(8 * n - 7)
    return k * pi / (4 * lambertw(k / (8 * e)))


def main():
    os.makedirs(DATA, exist_ok=True)
    t0 = time.time()

    # ---- zeros table ------------------------------------------------
    zeros = []
    zpath = os.path.join(DATA, "zeros.csv")
    with open(zpath, "w") as f:
        f.write("n,t\n")
        for n in range(1, N_ZEROS + 1):
            t = im(zetazero(n))
            zeros.append(t)
            f.write("%d,%s\n" % (n, fmt(t)))
    print("wrote %s (%d zeros, %.1fs)" % (zpath, len(zeros), time.time() - t0))

    # ---- gram table (1-based convention: theta(g(n)) = (n-1) pi) -----
    gpath = os.path.join(DATA, "gram.csv")
    grams = []
    n_bad = []
    with open(gpath, "w") as f:
        f.write("n,exact,approx,delta,is_bad\n")
        for n in range(1, N_GRAM + 1):
            g = grampoint(n - 1)          # mpmath: theta(g_k) = k pi
            ga = gram_approx(n)
            delta = abs(g - ga)
            rez = re(zeta(mpc(0.5, 0) + mpc(0, 1) * g))
            bad = rez < 0
            if bad:
                n_bad.append(n)
            grams.append((g, ga, delta, bad))
            f.write("%d,%s,%s,%s,%s\n" %
                    (n, fmt(g), fmt(ga), fmt(delta), "true" if bad else "false"))
    print("wrote %s (%d gram points)" % (gpath, len(grams)))
    print("bad gram indices (n<=%d): %s" % (N_GRAM, n_bad))

    # sanity: mpmath convention really is theta(grampoint(k)) = k*pi
    assert abs(siegeltheta(grampoint(0))) < mpf("1e-24")
    assert abs(grampoint(0) - mpf("17.8455995404108608")) < mpf("1e-15")

    # ---- spot values -------------------------------------------------
    t1 = zeros[0]
    t2 = zeros[1]
    print("\n--- special_fn spots ---")
    print("ln_gamma(1/4)              =", fmt(loggamma(mpf(1) / 4)))
    lg = loggamma(mpc(0.25, 0) + mpc(0, 1) * t1 / 2)
    print("loggamma(1/4 + i t1/2)     = %s + %s i" % (fmt(re(lg)), fmt(im(lg))))
    print("lambertw(1)                =", fmt(lambertw(1)))
    print("lambertw(1e-6)             =", fmt(lambertw(mpf("1e-6"))))
    print("lambertw(1e12)             =", fmt(lambertw(mpf("1e12"))))

    print("\n--- theta spots ---")
    print("t1                         =", fmt(t1))
    print("t2                         =", fmt(t2))
    print("theta(t1)                  =", fmt(siegeltheta(t1)))
    print("theta(10)                  =", fmt(siegeltheta(10)))
    print("theta(30)                  =", fmt(siegeltheta(30)))
    print("theta(100)                 =", fmt(siegeltheta(100)))
    print("theta(1000)                =", fmt(siegeltheta(1000)))
    print("theta(9999.5)              =", fmt(siegeltheta(mpf("9999.5"))))
    print("theta_tilde(100)           =", fmt(theta_tilde(100)))
    print("theta_tilde(2 pi e)        =", fmt(theta_tilde(2 * pi * e)), " (-pi/8 =", fmt(-pi / 8), ")")
    print("2 pi e                     =", fmt(2 * pi * e))
    print("theta_tilde_inv(0)         =", fmt(theta_tilde_inv(0)))
    print("theta_tilde_inv(-pi/8)     =", fmt(theta_tilde_inv(-pi / 8)))
    print("theta_tilde(theta_tilde_inv(7.7)) =", fmt(theta_tilde(theta_tilde_inv(mpf("7.7")))))
    print("|theta-theta_tilde|(20)    =", fmt(abs(siegeltheta(20) - theta_tilde(20))))
    print("|theta-theta_tilde|(1e4)   =", fmt(abs(siegeltheta(10000) - theta_tilde(10000))))

    print("\n--- zline spots ---")
    print("zeta(1/2)                  =", fmt(re(zeta(mpf("0.5")))))
    z100 = zeta(mpc(0.5, 100))
    print("zeta(1/2+100i)             = %s + %s i" % (fmt(re(z100)), fmt(im(z100))))
    th100 = siegeltheta(100)
    Z100 = exp(mpc(0, 1) * th100) * z100
    print("Z(100)                     = %s + %s i" % (fmt(re(Z100)), fmt(im(Z100))))
    g1 = grams[0][0]
    zg1 = zeta(mpc(0.5, 0) + mpc(0, 1) * g1)
    print("zeta(1/2 + i g(1))         = %s + %s i" % (fmt(re(zg1)), fmt(im(zg1))))
    g127 = grams[126][0]
    zg127 = zeta(mpc(0.5, 0) + mpc(0, 1) * g127)
    print("zeta(1/2 + i g(127))       = %s + %s i  (arg = %s)"
          % (fmt(re(zg127)), fmt(im(zg127)), fmt(arg(zg127))))

    # S at t1 via the eps ladder (half-sum of principal args)
    print("\n--- s_arg ladder at t1 ---")
    for k in (3, 4, 5, 6, 8):
        epsk = mpf(10) ** (-k)
        sp = arg(zeta(mpc(0.5, 0) + mpc(0, 1) * (t1 + epsk)))
        sm = arg(zeta(mpc(0.5, 0) + mpc(0, 1) * (t1 - epsk)))
        print("eps=1e-%d: S+ = %s  S- = %s  half-sum = %s  half-diff = %s"
              % (k, fmt(sp), fmt(sm), fmt((sp + sm) / 2), fmt((sp - sm) / 2)))
    print("(1-3/2)pi - theta(t1)      =", fmt((1 - mpf(3) / 2) * pi - siegeltheta(t1)))

    print("\n--- gram spots ---")
    print("g(1)  exact                =", fmt(grams[0][0]))
    print("g(1)  approx               =", fmt(grams[0][1]))
    print("delta_1                    =", fmt(grams[0][2]))
    print("g(2)  exact                =", fmt(grams[1][0]))
    print("delta_2                    =", fmt(grams[1][2]))
    print("g(500) exact               =", fmt(grams[499][0]))
    print("gram_inverse_approx(20)    =", fmt(gram_inverse_approx(20)))
    print("gram_inverse_approx(100)   =", fmt(gram_inverse_approx(100)))
    print("gram_inverse_approx(t1)    =", fmt(gram_inverse_approx(t1)))

    print("\n--- counting ---")
    for T in (50, 100, 200, 500):
        cnt = sum(1 for t in zeros if t < T)
        ST = arg(zeta(mpc(0.5, T)))
        n0 = mpf(T) / (2 * pi) * log(mpf(T) / (2 * pi * e)) + mpf(7) / 8 + ST / pi
        print("T=%-4d zeros below = %-3d  count_n0(T,S) = %s" % (T, cnt, fmt(n0)))

    # ---- argument-formula cross-check table --------------------------
    # For each zero: S_bar = (n-3/2)pi - theta(t_n)  (the half-sum identity),
    # the three S_n variants at t_n, and whether |S_bar - s_theta*S_n| <= 1e-3.
    print("\n--- arg formula table (n, theta, S_bar, s_theta, abs+, pass, margin) ---")
    fails = []
    for n in range(1, 146):
        t = zeros[n - 1]
        th = siegeltheta(t)
        sbar = (n - mpf(3) / 2) * pi - th
        sth = 1 if th > 0 else -1
        f = frac_signed(th / pi)
        G = int(floor(gram_inverse_approx(t)))
        abs_plus = pi * (mpf(3) / 2 - f + (G - n))
        line2 = pi * (mpf(1) / 2 - f - (G - n + 1))
        line3 = pi * (mpf(3) / 2 - f - (G - n))
        resid = abs(sbar - sth * abs_plus)
        ok = resid <= mpf("1e-3")
        if not ok:
            fails.append(n)
        # margin of the floor against theta/pi (flip risk when tiny)
        margin = min(abs(f), abs(1 - abs(f)))
        if n <= 8 or not ok or (120 <= n <= 140):
            print("n=%-3d t=%-12s th=%-12s Sbar=%-12s sth=%+d abs+=%-12s l2=%-12s l3=%-12s resid=%-10s %s margin=%s"
                  % (n, mp.nstr(t, 10), mp.nstr(th, 8), mp.nstr(sbar, 8), sth,
                     mp.nstr(abs_plus, 8), mp.nstr(line2, 8), mp.nstr(line3, 8),
                     mp.nstr(resid, 4), "PASS" if ok else "FAIL", mp.nstr(margin, 4)))
    print("failing n in [1,145]:", fails)

    # smallest floor margins over n<=145 (flip-risk report)
    print("\nsmallest frac margins (zero nearly on a gram point):")
    margins = []
    for n in range(1, 146):
        t = zeros[n - 1]
        f = frac_signed(siegeltheta(t) / pi)
        margins.append((min(abs(f), abs(1 - abs(f))), n))
    for m, n in sorted(margins)[:8]:
        print("  n=%-3d margin=%s" % (n, mp.nstr(m, 6)))

    # ---- solve_asymptotic sanity -------------------------------------
    print("\n--- asymptotic equation spot (n=1) ---")
    print("seed theta_tilde_inv(-pi/2) =", fmt(theta_tilde_inv(-pi / 2)))

    print("\ntotal %.1fs" % (time.time() - t0))


if __name__ == "__main__":
    main()
