"""High-precision reference values frozen into the C++ tests.

Run with `python3 oracles.py [--sweep]`; needs mpmath. The sweep part builds
the density-2 Gram sections at 40-60 digits and takes a few minutes.
"""
import sys

import mpmath as mp

mp.mp.dps = 40


def ambiguity(x, xi):
    # <phi, pi(x, xi) phi> by adaptive quadrature on the real line.
    f = lambda t: mp.e ** (-mp.pi * t**2) * mp.e ** (-2j * mp.pi * xi * t) * mp.e ** (-mp.pi * (t - x) ** 2)
    return mp.quad(f, [-mp.inf, x / 2, mp.inf])


def lattice_sum(f, n, R):
    # sum of f(|lambda|) over Z^2 with n < |lambda| <= R
    s = mp.mpf(0)
    K = int(R) + 1
    for j in range(-K, K + 1):
        for k in range(-K, K + 1):
            r = mp.sqrt(j * j + k * k)
            if n < r <= R:
                s += f(r)
    return s


def density2_points(R, scale):
    K = int(R / scale) + 2
    out = [(j, k) for j in range(-K, K + 1) for k in range(-K, K + 1) if (j * j + k * k) * scale**2 <= R * R + 1e-12]
    out.sort(key=lambda p: (p[0] ** 2 + p[1] ** 2, p[0], p[1]))
    return out


def gram(points, scale):
    n = len(points)
    M = mp.matrix(n, n)
    for a, (j, k) in enumerate(points):
        l1, l2 = j * scale, k * scale
        for b, (p, q) in enumerate(points):
            x, xi = p * scale - l1, q * scale - l2
            A = mp.e ** (-mp.pi * (x * x + xi * xi) / 2) / mp.sqrt(2) * mp.expjpi(-x * xi)
            M[a, b] = mp.expjpi(2 * l1 * xi) * mp.conj(A)
    return M


def main():
    print("A(1,0)", mp.nstr(ambiguity(1, 0), 20))
    print("A(1,1)", mp.nstr(ambiguity(1, 1), 20))
    print("A(0.7,-1.3)", mp.nstr(ambiguity(0.7, -1.3), 20))
    a = mp.e ** (-mp.pi / 4) / mp.sqrt(2)
    print("2x2 eigenvalues", mp.nstr(1 / mp.sqrt(2) - a, 20), mp.nstr(1 / mp.sqrt(2) + a, 20))
    print("box stft", mp.nstr(mp.quad(lambda t: mp.e ** (-mp.pi * t * t), [0, 1]), 20))
    print("subexp bound_sup n=3", mp.nstr(mp.e ** (-2 * mp.mpf(10) ** 0.25), 20))
    print("poly bound_sup", mp.nstr((1 + mp.sqrt(2)) ** -2, 20))
    print("poly3 sum n=2 R=40", mp.nstr(lattice_sum(lambda r: (1 + r) ** -6, 2, 40), 20))
    print("subexp sum n=2 R=20", mp.nstr(lattice_sum(lambda r: mp.e ** (-2 * mp.sqrt(r)), 2, 20), 20))
    print("m1v Gaussian", mp.nstr(mp.sqrt(2), 20))
    if "--sweep" in sys.argv:
        s = mp.sqrt(mp.mpf(1) / 2)
        for R, dps in [(0.5, 40), (1.0, 40), (1.5, 40), (2.0, 40), (2.5, 40), (3.0, 60), (3.5, 60)]:
            mp.mp.dps = dps
            P = density2_points(R, float(s))
            ev = sorted(mp.re(e) for e in mp.eighe(gram(P, s), eigvals_only=True))
            print("density2 radius", R, "N", len(P), "a_n", mp.nstr(ev[0], 20), "b_n", mp.nstr(ev[-1], 20))


if __name__ == "__main__":
    main()
