#!/usr/bin/env python3
"""Independent reference values for the C++ test suites.

Nothing here shares code with the library: lattices are taken in their standard
coordinate models, SL(2,Z) reduction is a brute-force word search and the
parabolic action is evaluated with plain Fractions. Run it and compare with the
constants frozen in tests/.
"""

from fractions import Fraction as F
from itertools import product


def shell_counts_integer(dim, norms, parity_even):
    """Counts of integer vectors in Z^dim by squared length, optionally with even coordinate sum."""
    counts = {n: 0 for n in norms}
    top = max(norms)

    def rec(i, acc, parity):
        if i == dim:
            if acc in counts and (not parity_even or parity % 2 == 0):
                counts[acc] += 1
            return
        for x in range(-2, 3):
            s = acc + x * x
            if s <= top:
                rec(i + 1, s, parity + x)

    rec(0, 0, 0)
    return counts


def shell_counts_half(dim, norms):
    """Vectors in (Z + 1/2)^dim with even coordinate sum, by squared length (entries +-1/2, +-3/2)."""
    counts = {n: 0 for n in norms}
    top = max(norms)
    vals = [F(-3, 2), F(-1, 2), F(1, 2), F(3, 2)]

    def rec(i, acc, total):
        if i == dim:
            if acc in counts and total.denominator == 1 and total.numerator % 2 == 0:
                counts[acc] += 1
            return
        for x in vals:
            s = acc + x * x
            if s <= top:
                rec(i + 1, s, total + x)

    rec(0, F(0), F(0))
    return counts


def e8_shells():
    a = shell_counts_integer(8, [2, 4], True)
    b = shell_counts_half(8, [2, 4])
    return {n: a[n] + b[n] for n in (2, 4)}


def d16plus_shells():
    a = shell_counts_integer(16, [2, 4], True)
    b = shell_counts_half(16, [2, 4])
    return {n: a[n] + b[n] for n in (2, 4)}


def mobius(m, tau):
    a, b, c, d = m
    re, im = tau
    # (a tau + b) / (c tau + d)
    nr, ni = a * re + b, a * im
    dr, di = c * re + d, c * im
    den = dr * dr + di * di
    return ((nr * dr + ni * di) / den, (ni * dr - nr * di) / den)


def best_im_by_words(tau, length):
    gens = [(0, -1, 1, 0), (1, 1, 0, 1), (1, -1, 0, 1)]
    best = tau[1]
    frontier = [tau]
    for _ in range(length):
        nxt = []
        for t in frontier:
            for g in gens:
                s = mobius(g, t)
                best = max(best, s[1])
                nxt.append(s)
        frontier = nxt
    return best


def heisenberg_on_origin():
    """gamma(I, Q, R, I) with c1 a root of norm -2, c2 = 0, r12 = 0, acting on tau = i, z = 0, u = u0.

    In a rank-1 model Lambda = Z c1 with (c1, c1) = -2: omega = (tau, 1)(u, -tau u)(0).
    The element acts by a' = a, b' = R a + b - Q c, c' = a1 c1 + a2 c2 + c (coefficient of c1).
    """
    n11 = -2
    r = ((F(-n11, 2), F(0)), (F(0) - F(0), F(0)))  # r11 = -(c1,c1)/2, r21 = -(c1,c2) - r12 = 0
    tau = (F(0), F(1))
    u0 = (F(0), F(3))

    def mul(x, y):
        return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])

    a = [tau, (F(1), F(0))]
    b = [u0, tuple(-v for v in mul(tau, u0))]
    c = (F(0), F(0))  # coefficient of c1
    # b' = R a + b - Q c, where Q c = ((c, c1), (c, c2)) = (n11 * c, 0)
    b1 = tuple(r[0][0] * a[0][k] + r[0][1] * a[1][k] + b[0][k] - n11 * c[k] for k in range(2))
    c_new = tuple(a[0][k] + c[k] for k in range(2))  # a1 c1
    # Narain: u_tilde = u + (z, z2) / (2 tau2), z = c_new * c1
    u = b1
    zz2 = (n11 * c_new[0] * c_new[1], n11 * c_new[1] * c_new[1])
    ut = (u[0] + zz2[0] / (2 * tau[1]), u[1] + zz2[1] / (2 * tau[1]))
    return {"u_tilde": ut, "z_coeff": c_new, "u_tilde_before": u0}


def main():
    print("E8 shells (norm 2, norm 4):", e8_shells())
    e8 = e8_shells()
    print("E8+E8 norm 4:", 2 * e8[4] + e8[2] * e8[2])
    print("D16+ shells (norm 2, norm 4):", d16plus_shells())
    for tau in [(F(0), F(1)), (F(0), F(1, 2)), (F(1, 2), F(1, 2))]:
        print("rho by words of length <= 6 at", tau, "=", best_im_by_words(tau, 6))
    print("Heisenberg action at tau = i, z = 0, u = 3i:", heisenberg_on_origin())


if __name__ == "__main__":
    main()
