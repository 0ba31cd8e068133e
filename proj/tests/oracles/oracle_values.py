#!/usr/bin/env python3
"""Independent reference values for the C++ test suites.

Everything here is computed with mpmath at 60+ digits and with plain
Python integers, never through the library under test.  The printed
numbers are frozen into tests/*.cpp; rerun this script to regenerate them.
"""
from math import gcd
import mpmath as mp

mp.mp.dps = 60


def section(name):
    print(f"\n== {name}")


section("special functions")
print("gamma(1/2+14.134725141i) =", mp.gamma(mp.mpc(0.5, "14.134725141")))
print("zeta'(-1)                =", mp.zeta(-1, derivative=1))
print("zeta'(-2)                =", mp.zeta(-2, derivative=1))
print("-zeta(3)/(4 pi^2)        =", -mp.zeta(3) / (4 * mp.pi**2))
print("zeta(2+3i)               =", mp.zeta(mp.mpc(2, 3)))
print("zeta'(2+3i)              =", mp.zeta(mp.mpc(2, 3), derivative=1))
print("gamma(-2.5+7i)           =", mp.gamma(mp.mpc(-2.5, 7)))
C = 2 * mp.zeta(3) / mp.zeta(2)
K = mp.exp(-2 * mp.zeta(-1, derivative=1) - mp.log(2 * mp.pi) / 6)
print("C =", C)
print("K =", K)

section("zeros and residue coefficients")
zeros = [mp.zetazero(j) for j in range(1, 4)]
for z in zeros:
    c = mp.gamma(z) * mp.zeta(z + 1) * mp.zeta(z - 1) / mp.zeta(z, derivative=1)
    print("t =", mp.nstr(z.imag, 30), " c =", mp.nstr(c, 15))


def log_p(n):
    n = mp.mpf(n)
    return (mp.log(C) / 9 + mp.log(K) - mp.log(6 * mp.pi) / 2
            - mp.mpf(11) / 18 * mp.log(n) + mp.mpf(3) / 2 * mp.cbrt(C) * n ** (mp.mpf(2) / 3))


section("P(n) as mantissa x 10^e")
for n in list(range(1, 11)) + [100, 1000, 10**4, 10**5]:
    l10 = log_p(n) / mp.log(10)
    e = int(mp.floor(l10))
    print(n, mp.nstr(mp.power(10, l10 - e), 12), "e", e)


def totients(n):
    phi = list(range(n + 1))
    for p in range(2, n + 1):
        if phi[p] == p:
            for k in range(p, n + 1, p):
                phi[k] -= phi[k] // p
    return phi


def series(exps, n):
    # product of (1-x^m)^{-e(m)} by repeated multiplication with 1/(1-x^m)
    a = [1] + [0] * n
    for m in range(1, n + 1):
        for _ in range(exps[m]):
            for i in range(m, n + 1):
                a[i] += a[i - m]
    return a


section("exact counts (direct product)")
N = 200
phi = totients(N)
half_open = series([0] + phi[1:], N)
closed = series([0, 2] + phi[2:], N)
jexp = [0, 1, 1] + [phi[m] // 2 for m in range(3, N + 1)]
jser = series(jexp, N)
print("halfopen[0..10] =", half_open[:11])
print("halfopen[100]   =", half_open[100])
print("closed[0..5]    =", closed[:6])
print("J[0..6]         =", jser[:7])
print("sym[1..6]       =", [jser[g] + jser[g - 1] for g in range(1, 7)])


def sym_bruteforce(g):
    # multisets of coprime segments with slopes in [0,1] and total height 2g
    # whose slope sequence is symmetric: slope multiset invariant under s -> 1-s
    # with matched lengths (segment (m,n) pairs with (m,m-n)).
    segs = [(m, n) for m in range(1, 2 * g + 1) for n in range(0, m + 1) if gcd(m, n) == 1]
    count = 0

    def rec(i, h, chosen):
        nonlocal count
        if h == 0:
            ms = sorted(chosen)
            mirrored = sorted((m, m - n) for m, n in chosen)
            if ms == mirrored:
                count += 1
            return
        if i == len(segs):
            return
        m, n = segs[i]
        rec(i + 1, h, chosen)
        k = 1
        while k * m <= h:
            rec(i + 1, h - k * m, chosen + [(m, n)] * k)
            k += 1

    rec(0, 2 * g, [])
    return count


print("sym brute force g=1..4 =", [sym_bruteforce(g) for g in range(1, 5)])

section("variant estimates at k=0")
big = 10**4
phi = totients(big)


def euler_series(exps, n):
    b = [0] * (n + 1)
    for d in range(1, n + 1):
        if exps[d]:
            for k in range(d, n + 1, d):
                b[k] += d * exps[d]
    a = [1] + [0] * n
    for i in range(1, n + 1):
        s = sum(b[k] * a[i - k] for k in range(1, i + 1))
        assert s % i == 0
        a[i] = s // i
    return a


half_big = euler_series([0] + phi[1:], big)
closed_big = euler_series([0, 2] + phi[2:], big)
j_big = euler_series([0, 1, 1] + [phi[m] // 2 for m in range(3, big + 1)], big)
for n in (100, 1000, 10**4):
    ln = mp.log(half_big[n])
    lp = log_p(n)
    print(f"n={n}  log N = {mp.nstr(ln, 20)}  log P = {mp.nstr(lp, 20)}  diff = {mp.nstr(ln - lp, 10)}")
for n in (100, 1000, 10**4):
    n_ = mp.mpf(n)
    lc = (mp.log(K) - mp.log(6 * mp.pi) / 2 - mp.mpf(2) / 9 * mp.log(C)
          - mp.mpf(5) / 18 * mp.log(n_) + mp.mpf(3) / 2 * mp.cbrt(C) * n_ ** (mp.mpf(2) / 3))
    ex = mp.log(closed_big[n])
    lj = (mp.log(K) / 2 - mp.log(6 * mp.pi) / 2 - mp.mpf(7) / 36 * mp.log(C)
          - mp.mpf(11) / 36 * mp.log(2 * n_) + mp.mpf(3) / 4 * mp.cbrt(C) * (2 * n_) ** (mp.mpf(2) / 3))
    ej = mp.log(j_big[n])
    print(f"n={n} closed01: est-exact = {mp.nstr(lc - ex, 8)} rel = {mp.nstr((lc - ex) / ex, 8)};"
          f"  J: est-exact = {mp.nstr(lj - ej, 8)} rel = {mp.nstr((lj - ej) / ej, 8)}")
print("log10 N(1000)  =", mp.nstr(mp.log10(half_big[1000]), 20))
print("log10 N(10000) =", mp.nstr(mp.log10(half_big[10000]), 20))

section("log f expansion residuals")
cs = []
for z in [mp.zetazero(j) for j in range(1, 11)]:
    cs.append((z, mp.gamma(z) * mp.zeta(z + 1) * mp.zeta(z - 1) / mp.zeta(z, derivative=1)))
for tau in ("1.0", "0.5", "0.25", "0.125", "0.1"):
    tau = mp.mpf(tau)
    direct = mp.mpf(0)
    n = 1
    phis = totients(5000)
    while True:
        term = phis[n] * -mp.log1p(-mp.exp(-n * tau))
        direct += term
        if term < mp.mpf(10) ** -70:
            break
        n += 1
    expansion = (mp.zeta(3) / mp.zeta(2)) / tau**2 - mp.log(tau) / 6 \
        - 2 * mp.zeta(-1, derivative=1) - mp.log(2 * mp.pi) / 6
    osc = sum(2 * mp.re(c * mp.exp(-z * mp.log(tau))) for z, c in cs)
    print(f"tau={tau} direct={mp.nstr(direct, 25)} residual={mp.nstr(direct - expansion - osc, 15)}"
          f" osc={mp.nstr(osc, 6)}")
tau = mp.mpf(1)
print("log sum N(n) e^-n =", mp.nstr(mp.log(sum(mp.mpf(half_big[n]) * mp.exp(-n) for n in range(0, 400))), 25))

section("wave")
t1 = zeros[0].imag
z1 = zeros[0]
c1 = mp.gamma(z1) * mp.zeta(z1 + 1) * mp.zeta(z1 - 1) / mp.zeta(z1, derivative=1)
amp = 2 * abs(c1) * abs(mp.exp(-z1 / 3 * mp.log(C)))
print("amplitude coefficient 2|c1||C^{-g1/3}| =", mp.nstr(amp, 15))
print("spacing 6 pi / t1 =", mp.nstr(6 * mp.pi / t1, 15))
tau5 = mp.cbrt(C) * mp.mpf(10) ** (-mp.mpf(5) / 3)
print("tau(1e5) =", mp.nstr(tau5, 10), " 2|c1| tau^-1/2 =", mp.nstr(2 * abs(c1) / mp.sqrt(tau5), 10))
print("osc(1e5, k=1) =", mp.nstr(2 * mp.re(c1 * mp.exp(-z1 * mp.log(tau5))), 15))
