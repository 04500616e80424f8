"""Independent oracle values for the C++ tests.

Uses only Python fractions, integer arithmetic and mpmath; nothing is shared
with the C++ code. Run: python3 derive_goldens.py
"""
from fractions import Fraction as Fr
from math import comb, gcd

import mpmath as mp

mp.mp.dps = 60


def bracket(x, q):
    return sum(q**k for k in range(x))


def euler_poly(n, x_num, x_den, q_root, h, F):
    """E_{n,1,Q}(x) at Q = q_root**F, x = x_num/x_den with x_den | F."""
    Q = q_root**F
    s = Fr(0)
    for j in range(n + 1):
        qxj = q_root ** (F * x_num * j // x_den)
        s += comb(n, j) * (-1) ** j * qxj / (1 + Q ** (h + j))
    return (1 + Q) / (1 - Q) ** n * s


def teich(a, p, K):
    x = a % p**K
    for _ in range(K + 2):
        x = pow(x, p, p**K)
    return x


def jacobi(a, n):
    a %= n
    r = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                r = -r
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            r = -r
        a %= n
    return r if n == 1 else 0


def mod_pk(x, p, k):
    num, den = x.numerator, x.denominator
    v = 0
    while den % p == 0:
        den //= p
        v -= 1
    assert v >= 0, "not p-integral"
    return num * pow(den, -1, p**k) % p**k


def generalized_padic(n, psi, f, q, h, p, K):
    """E_{n,1,psi,q} with psi(a) given as integers mod p^K."""
    qf = q**f
    total = Fr(0)
    for a in range(f):
        pa = psi(a)
        if pa == 0:
            continue
        Ea = Fr(0)
        for j in range(n + 1):
            Ea += comb(n, j) * (-1) ** j * q ** (a * j) / (1 + qf ** (h + j))
        Ea *= (1 + qf) / (1 - qf) ** n
        total += pa * (-1) ** a * q ** (h * a) * Ea
    return bracket(f, q) ** n * (1 + q) / (1 + qf) * total


def theorem_rhs(n, chi_mod, p, q, h, N):
    """E_{n,psi,q} - psi(p)[p]^n [2]_q/[2]_{q^p} E_{n,psi,q^p}, psi = (./chi_mod) omega^{-n} primitive."""
    K = 40
    m = p * chi_mod if chi_mod > 1 else p
    def psi(a):
        if gcd(a, m) > 1:
            return 0
        chi = jacobi(a, chi_mod) if chi_mod > 1 else 1
        return chi * pow(teich(a, p, K), -n, p**K) % p**K
    f = m
    if n % (p - 1) == 0:
        f = chi_mod
        def psi(a):
            if gcd(a, chi_mod) > 1:
                return 0
            return jacobi(a, chi_mod) if chi_mod > 1 else 1
    first = generalized_padic(n, psi, f, Fr(q), h, p, K)
    psi_p = psi(p % f) if f > 1 else 1
    second = Fr(0)
    if psi_p:
        second = psi_p * bracket(p, Fr(q)) ** n * (1 + Fr(q)) / (1 + Fr(q) ** p) * generalized_padic(n, psi, f, Fr(q) ** p, h, p, K)
    return mod_pk(first - second, p, N)


def main():
    print("E_1(0), q=1/2:", euler_poly(1, 0, 1, Fr(1, 2), 1, 1))
    print("E_0..4, q=1/2:", [str(euler_poly(n, 0, 1, Fr(1, 2), 1, 1)) for n in range(5)])
    q = mp.mpf("0.99")
    E1 = (1 + q) * mp.nsum(lambda k: (-1) ** k * q**k * (1 - q**k) / (1 - q), [0, mp.inf])
    print("E_1 series at q=0.99:", mp.nstr(E1, 30))
    q = mp.mpf("0.5")
    z = (1 + q) * mp.nsum(lambda k: q**k / ((1 - q**k) / (1 - q)) ** 2, [1, mp.inf])
    print("zeta_E(2), xi=-1, q=0.5:", mp.nstr(z, 40))
    hz = (1 + q) * mp.nsum(lambda k: (-1) ** k * q**k / ((1 - q ** (k + mp.mpf(1) / 3)) / (1 - q)) ** mp.mpf("0.5"), [0, mp.inf])
    print("zeta_E(1/2, 1/3), q=0.5:", mp.nstr(hz, 40))
    print("zeta_3:", mp.nstr(mp.cos(2 * mp.pi / 3), 30), mp.nstr(mp.sin(2 * mp.pi / 3), 30))
    qh = Fr(1, 2)
    gen0 = (1 + qh) / (1 + qh**3) * (jacobi(1, 3) * (-1) * qh + jacobi(2, 3) * qh**2)
    print("E_{0,chi_3}, q=1/2:", gen0)
    print("omega(2) mod 25:", teich(2, 5, 2))
    print("<2> mod 5^4, q=6:", 7 * pow(teich(2, 5, 4), -1, 5**4) % 5**4)
    print("6^-1 mod 125:", pow(6, -1, 125))
    # Partial value at s = -1: ([5]_q/[2]_{q^5}) (-1) q E_{1,1,q^5}(1/5), q = 6.
    qq = Fr(6)
    H = bracket(5, qq) / (1 + qq**5) * (-1) * qq * euler_poly(1, 1, 5, qq, 1, 5)
    print("H(-1, 1 | 5) mod 5^6:", mod_pk(H, 5, 6))
    for n in range(5):
        print(f"theorem rhs p=5 chi=(./3) n={n} mod 5^6:", theorem_rhs(n, 3, 5, 6, 1, 6))
    for n in range(3):
        print(f"theorem rhs p=3 trivial n={n} mod 3^6:", theorem_rhs(n, 1, 3, 4, 1, 6))


if __name__ == "__main__":
    main()
