"""Recomputes the frozen reference values used by the C++ unit tests.

Everything here is evaluated in 40-digit arithmetic with mpmath and sympy,
without touching the C++ code, so the tests compare two independent
implementations. Run: python3 tools/derive_reference_values.py
"""

from mpmath import mp, mpf, mpc, pi, exp, log, sqrt, sin, cos, cbrt, quad, inf, fabs, floor, ceil
from sympy.integrals.quadrature import gauss_laguerre

mp.dps = 40

C = 3 * mpf(2) ** (mpf(-2) / 3)


def s_of(lam, a, h):
    return h ** (1 / a) * lam


def f1(x, lam, a, h):
    s = s_of(lam, a, h)
    return 1 / ((1 + exp(-x / a) * s) * (exp(-2 * x) + 2 * exp(-x) * cos(a * pi) + 1))


def f2(x, lam, a, h):
    s = s_of(lam, a, h)
    y = a * x / (a + 1)
    return (a / (a + 1)) / ((exp(-x / (a + 1)) + s) * (1 + 2 * cos(a * pi) * exp(-y) + exp(-2 * y)))


def gammas(lam, a, h):
    l = log(s_of(lam, a, h))
    r = sqrt(l * l + pi * pi)
    return sqrt(r + l), sqrt(r - l)


def nbar(n):
    return 4 * n + 2


def q_all(lam, n, a, h):
    gp, gm = gammas(lam, a, h)
    u = h * lam ** a
    nb = nbar(n)
    neg1a = exp(1j * a * pi)
    q1 = 4 * pi * a * u * exp(-sqrt(2 * a * nb) * gm) / abs(
        exp(-2j * a * pi) + 2 * u * cos(a * pi) * exp(-1j * a * pi) + u * u)
    q2 = 2 * pi * exp(-sqrt(2 * (1 - a) * pi * nb)) / (
        sin(a * pi) * abs(1 - exp(-1j * pi / a) * s_of(lam, a, h)))
    q3 = 4 * pi * a * u * exp(-sqrt(2 * (a + 1) * nb) * gp) / abs(
        1 + 2 * cos(a * pi) * neg1a * u + neg1a ** 2 * u * u)
    q4 = 2 * pi * exp(-sqrt(2 * (1 - a) * (a + 1) * pi * nb / a)) / (
        sin(a * pi) * abs(exp(1j * (1 - a) * pi / a) + s_of(lam, a, h)))
    return q1, q2, q3, q4


def g_all(n, a):
    nb = nbar(n)
    return (4 * pi * a * exp(-C * cbrt(nb * a * a * pi * pi)),
            2 * pi / sin(a * pi) * exp(-sqrt(2 * (1 - a) * pi * nb)),
            4 * pi * a * exp(-C * cbrt(a * (a + 1) * pi * pi * nb)),
            2 * pi / sin(a * pi) * exp(-sqrt(2 * nb * (1 - a) * (a + 1) * pi / a)))


def n_star(a):
    return C ** 6 / 32 * a ** 4 / (1 - a) ** 3 * pi - mpf(1) / 2


def n_star_star(a):
    return C ** 6 / 32 * a ** 5 / ((1 - a) ** 3 * (1 + a)) * pi - mpf(1) / 2


def eps1(n, a):
    g = g_all(n, a)
    return g[0] if n >= n_star(a) else g[1]


def eps2(m, a):
    g = g_all(m, a)
    return g[2] if m >= n_star_star(a) else g[3]


def show(label, value):
    if isinstance(value, mpc):
        print(f"{label} = {mp.nstr(value.real, 20)} + {mp.nstr(value.imag, 20)}i")
    else:
        print(f"{label} = {mp.nstr(value, 20)}")


def main():
    for n in (5, 20):
        x, w = gauss_laguerre(n, 30)
        for j in (0, n - 1):
            show(f"laguerre n={n} node[{j}]", mpf(str(x[j])))
            show(f"laguerre n={n} weight[{j}]", mpf(str(w[j])))

    show("f1(1, 10; 0.3, 0.01)", f1(mpf(1), mpf(10), mpf("0.3"), mpf("0.01")))
    show("f2(2, 100; 0.75, 0.001)", f2(mpf(2), mpf(100), mpf("0.75"), mpf("0.001")))

    a, h = mpf("0.3"), mpf("0.01")
    l = log(s_of(mpf(10) ** 6, a, h))
    show("pole I (1e6; 0.3, 0.01)", mpc(a * l, a * pi))
    show("pole III (1e6; 0.3, 0.01)", mpc(-(a + 1) * l, (a + 1) * pi))
    show("pole IV (0.3)", (1 - a) * (a + 1) * pi / a)
    gp, gm = gammas(mpf(10) ** 6, a, h)
    show("gamma+ (1e6; 0.3, 0.01)", gp)
    show("gamma- (1e6; 0.3, 0.01)", gm)
    gp, gm = gammas(mpf(1), mpf("0.75"), mpf("0.001"))
    show("gamma+ (1; 0.75, 1e-3)", gp)
    show("gamma- (1; 0.75, 1e-3)", gm)

    for a, h in ((mpf("0.75"), mpf("0.001")), (mpf("0.3"), mpf("0.01")), (mpf("0.5"), mpf("0.1"))):
        e = (2 * a - 1) * pi / (2 * a * (1 - a))
        show(f"lambda_bar({a}, {h})", exp(e) * h ** (-1 / a))
        show(f"lambda_bbar({a}, {h})", max(mpf(1), exp(-e) * h ** (-1 / a)))

    for lam, n, a, h in ((mpf(10) ** 8, 30, mpf("0.3"), mpf("0.01")),
                         (mpf(10), 20, mpf("0.75"), mpf("0.001")),
                         (mpf(10) ** 12, 20, mpf(2) / 3, mpf("0.01"))):
        for name, q in zip(("q_I", "q_II", "q_III", "q_IV"), q_all(lam, n, a, h)):
            show(f"{name}({mp.nstr(lam, 3)}, n={n}; {mp.nstr(a, 6)}, {h})", q)

    for name, g in zip(("g_I", "g_II", "g_III", "g_IV"), g_all(50, mpf("0.5"))):
        show(f"{name}(50; 0.5)", g)
    show("n_star(0.6)", n_star(mpf("0.6")))
    show("n_star_star(0.6)", n_star_star(mpf("0.6")))
    show("n_star(0.75)", n_star(mpf("0.75")))
    show("n_star_star(0.75)", n_star_star(mpf("0.75")))

    a = mpf("0.5")
    show("standard_estimate(50; 0.5)", sin(a * pi) / (a * pi) * eps1(50, a))
    show("truncated_estimate(50; 0.5)", 4 * sin(a * pi) / (a * pi) * eps1(50, a))

    a = mpf("0.6")
    show("balance raw branch1 (50; 0.6)", a * (2 * 50 + 1) / (2 * (a + 1)) - mpf(1) / 2)
    a = mpf("0.75")
    n = 50
    base = 2 * sqrt((2 * n + 1) * (1 - a) * pi) + log(2 * a * sin(a * pi))
    show("balance raw branch2 (50; 0.75)", base ** 3 / (27 * (a + 1) * a * pi * pi) - mpf(1) / 2)

    show("s1(5; 0.75)", -log(eps1(5, a)))
    k2 = a / (a + 1) * mpf("0.01") ** (-1 / a)
    show("s2(m=2; 0.75, 0.01)", -log(eps2(2, a) / k2))
    show("j_n raw (5; 0.75)", 2 * (1 - a) ** (mpf(1) / 4) * (2 * 5 / pi) ** (mpf(3) / 4))
    show("j_n raw (100; 0.75)", 2 * sqrt(3) * cbrt(a * 100 ** 2 / pi ** 2))
    m = 11
    bracket = log(k2) + sqrt(8 * m * (1 - a) * (a + 1) * pi / a)
    show("j_m raw (m=11; 0.75, 0.01)", sqrt(4 * m / pi ** 2 * bracket))

    a, q = mpf("0.5"), 60
    show("asymptotic balanced (q=60; 0.5)",
         8 * sin(a * pi) * exp(-3 * cbrt(q * (a + 1) / (2 * a + 1) * a * a * pi * pi)))
    show("asymptotic truncated (q=60; 0.5)",
         16 * sin(a * pi) * exp(-mpf(3) ** (mpf(3) / 4) * mpf(2) ** (-mpf(1) / 2) * pi * sqrt(a)
                                * (1 + sqrt(a / (a + 1))) ** (-mpf(1) / 2) * sqrt(q)))

    for lam, a, h in ((mpf(10) ** 4, mpf("0.3"), mpf("0.01")), (mpf(10) ** 10, mpf("0.75"), mpf("0.001"))):
        i1 = quad(lambda x: exp(-x) * f1(x, lam, a, h), [0, 1, 5, 20, 60, inf])
        brk = (a + 1) * log(1 / s_of(lam, a, h))
        pts = sorted({mpf(0), mpf(1), mpf(5), mpf(20), mpf(60)} | ({brk} if brk > 0 else set()))
        i2 = quad(lambda x: exp(-x) * f2(x, lam, a, h), pts + [inf])
        show(f"I1({mp.nstr(lam, 3)}; {a}, {h})", i1)
        show(f"I2({mp.nstr(lam, 3)}; {a}, {h})", i2)
        show(f"prefactor*(I1+I2) ({mp.nstr(lam, 3)})", sin(a * pi) / (a * pi) * (i1 + i2))
        show(f"exact resolvent ({mp.nstr(lam, 3)})", 1 / (1 + h * lam ** a))

    # Standard 30-point approximation at the alpha = 1/2 double pole (lambda = h = 1).
    a, h, lam = mpf("0.5"), mpf(1), mpf(1)
    xs, ws = gauss_laguerre(30, 45)
    total = sum(mpf(str(w)) * (f1(mpf(str(x)), lam, a, h) + f2(mpf(str(x)), lam, a, h))
                for x, w in zip(xs, ws))
    show("scalar_approx(1; 0.5, 1, n=30)", sin(a * pi) / (a * pi) * total)


if __name__ == "__main__":
    main()
