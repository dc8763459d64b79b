"""Independent reference values for the C++ test suites.

Everything here is computed by direct enumeration or exact rational
arithmetic, never through the library. Run it to regenerate the frozen
constants in tests/*.cpp.
"""
import itertools
import math
from fractions import Fraction

import mpmath
import sympy


def eis_primes(coeffs):
    a0 = coeffs[0]
    if a0 == 0:
        return []
    g = 0
    for c in coeffs:
        g = math.gcd(g, c)
    return [p for p in sympy.primefactors(g) if a0 % (p * p) != 0]


def congruence(coeffs, d):
    m = d * d
    if any(coeffs[i] % m for i in range(1, d - 1)):
        return False
    return (coeffs[0] + coeffs[d - 1]) % m == 0


def census(d, H):
    t = dict(E=0, E1=0, E2=0, A=0, B=0, star=0)
    rng = range(-H, H + 1)
    for coeffs in itertools.product(rng, repeat=d):
        P = eis_primes(coeffs)
        if not P:
            continue
        t["E"] += 1
        U = [p for p in P if p % d == 1]
        V = [p for p in P if p % d != 1 and p != d]
        hasd = d in P
        cong = congruence(coeffs, d)
        if U:
            t["E1"] += 1
        elif hasd and cong:
            t["E2"] += 1
        else:
            t["star"] += 1
        if U and not V and not hasd:
            t["A"] += 1
        if hasd and cong and V:
            t["B"] += 1
    return t


def brute_gprime(d, s, H):
    n = 0
    for coeffs in itertools.product(range(-H, H + 1), repeat=d):
        if any(c % s for c in coeffs):
            continue
        if math.gcd(coeffs[0] // s, s) != 1:
            continue
        if d not in eis_primes(coeffs):
            continue
        if congruence(coeffs, d):
            n += 1
    return n


def classes(d, P):
    q = r = mpmath.mpf(1)
    for p in sympy.primerange(2, P + 1):
        f = 1 - mpmath.mpf(p - 1) / mpmath.mpf(p) ** (d + 1)
        if p == d:
            continue
        if p % d == 1:
            q *= f
        else:
            r *= f
    return q, r


def constants(d, P):
    q, r = classes(d, P)
    loc = 1 - mpmath.mpf(d - 1) / mpmath.mpf(d) ** (d + 1)
    c = mpmath.mpf(d - 1) / mpmath.mpf(d) ** (2 * d)
    theta = 1 - loc * q * r
    alpha = loc * r * (1 - q)
    beta = c * (1 - r)
    star = 1 - c - (1 - mpmath.mpf((d - 1) * (d ** (d - 1) + 1)) / mpmath.mpf(d) ** (2 * d)) * r
    prose = q * (1 - c - loc * r)
    return dict(theta=theta, alpha=alpha, beta=beta, theta_star=star,
                ratio=star / theta, prose_ratio=prose / theta)


if __name__ == "__main__":
    mpmath.mp.dps = 30
    print("count_in_class(-10,10,9,3) =", sum(1 for n in range(-10, 11) if n % 9 == 3))
    print("brute Gprime(3,1,9) =", brute_gprime(3, 1, 9))
    print("brute Gprime(3,1,3) =", brute_gprime(3, 1, 3))
    for d, H in [(3, 1), (3, 2), (3, 7), (3, 10), (3, 14), (5, 3), (5, 6)]:
        print("census", d, H, census(d, H))
    print("alpha(3,7) =", Fraction(79, 81) * Fraction(15, 16) * Fraction(621, 625) * Fraction(6, 2401))
    for d in (3, 5, 7, 11, 13):
        print("constants", d, {k: mpmath.nstr(v, 20) for k, v in constants(d, 10**6).items()})
