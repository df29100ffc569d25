#!/usr/bin/env python3
"""Independent coverage reference for the cell-edge model.

Avoids the k-integral recursion entirely. Conditional coverage at distance R
is sum_{n<M} (-s)^n / n! * L^(n)(s) at s = tau R^eta1, with L the Laplace
transform of NLoS interference outside R. Derivatives of log L are integrated
directly in r; L^(n) follows from Faa di Bruno's recursion for exp(g).
Used to freeze golden values for the C++ tests.

usage: reference_coverage.py TAU_DB LAMBDA M D [ETA1 ETA2]
"""
import math
import sys

from scipy import integrate


def coverage(tau_db, lam, m, d, eta1=2.0, eta2=4.0):
    tau = 10.0 ** (tau_db / 10.0)
    big = d ** (eta2 - eta1)

    def log_laplace_derivative(k, s, r):
        # d^k/ds^k of log L(s) = -2 pi lam int_r^inf s c / (1 + s c) x dx, c = big x^-eta2
        def f(x):
            c = big * x ** (-eta2)
            if k == 0:
                return s * c / (1 + s * c) * x
            return (-1) ** (k + 1) * math.factorial(k) * c ** k / (1 + s * c) ** (k + 1) * x

        val, _ = integrate.quad(f, r, math.inf, epsabs=0, epsrel=1e-12, limit=400)
        return -2 * math.pi * lam * val

    def conditional(r):
        s0 = tau * r ** eta1
        g = [log_laplace_derivative(k, s0, r) for k in range(m)]
        lder = [math.exp(g[0])]
        for n in range(1, m):
            lder.append(sum(math.comb(n - 1, k) * g[k + 1] * lder[n - 1 - k] for k in range(n)))
        return sum((-s0) ** n / math.factorial(n) * lder[n] for n in range(m))

    if m >= 2:
        pdf = lambda r: 2 * (math.pi * lam) ** 2 * r ** 3 * math.exp(-math.pi * lam * r * r)
    else:
        pdf = lambda r: 2 * math.pi * lam * r * math.exp(-math.pi * lam * r * r)
    rmax = 2 * math.sqrt(-math.log(1e-10) / (math.pi * lam))
    val, _ = integrate.quad(lambda r: pdf(r) * conditional(r), 0, rmax,
                            epsabs=1e-13, epsrel=1e-11, limit=400)
    return val


if __name__ == "__main__":
    args = [float(a) for a in sys.argv[1:]]
    tau_db, lam, m, d = args[:4]
    print("%.12g" % coverage(tau_db, lam, int(m), d, *args[4:]))
