#!/usr/bin/env python3
"""Generate frozen oracle data and the Riemann-Siegel correction tables.

Everything the Rust test suite treats as ground truth is produced here,
ahead of the main build, from mpmath (an independent arbitrary-precision
implementation):

  * crates/core/src/zeta/rs_tables.rs  -- Chebyshev coefficients of the
    Riemann-Siegel remainder functions C0..C4 on the fractional part p in [0,1]
  * crates/core/tests/data/z_oracle.tsv      -- Z(t) at 100 log-spaced heights
  * crates/core/tests/data/theta_oracle.tsv  -- theta(t) at assorted heights
  * crates/core/tests/data/zeros.tsv         -- first 20 zero ordinates
  * crates/core/tests/data/j_oracle.tsv      -- int_0^T Z(t)^2 dt at T = 1e3, 1e4

Run from anywhere; paths are resolved relative to this file.
"""

import os
import sys
import time

from mpmath import mp, fp

HERE = os.path.dirname(os.path.abspath(__file__))
CORE = os.path.join(HERE, "..", "crates", "core")
DATA = os.path.join(CORE, "tests", "data")

CHEB_NODES = 48  # nodes per coefficient function
FIT_A = list(range(48, 128, 10))  # main-sum lengths used in the remainder fit
FIT_POWERS = 5  # fit C1..C5, keep C1..C4


def psi0(p):
    """Closed form of the leading remainder coefficient."""
    return mp.cos(2 * mp.pi * (p * p - p - mp.mpf(1) / 16)) / mp.cos(2 * mp.pi * p)


def main_sum(t, n_terms):
    th = mp.siegeltheta(t)
    return 2 * mp.fsum(
        mp.cos(th - t * mp.log(n)) / mp.sqrt(n) for n in range(1, n_terms + 1)
    )


def fit_remainder_coeffs():
    """For each Chebyshev node p, extract C1..C5 from high-precision residuals.

    With a = A + p and t = 2*pi*a^2 the main sum has exactly A terms and the
    remainder is (-1)^(A-1) a^(-1/2) [C0(p) + C1(p)/a + C2(p)/a^2 + ...].
    C0 is known in closed form; the rest come from a least-squares fit in 1/a
    over several A.
    """
    mp.dps = 40
    nodes = []
    c_vals = [[] for _ in range(FIT_POWERS)]
    c0_vals = []
    for j in range(CHEB_NODES):
        x = mp.cos(mp.pi * (2 * j + 1) / (2 * CHEB_NODES))
        p = (x + 1) / 2
        nodes.append(p)
        rows = []
        rhs = []
        for A in FIT_A:
            a = A + p
            t = 2 * mp.pi * a * a
            s = (-1) ** (A - 1) * mp.sqrt(a) * (mp.siegelz(t) - main_sum(t, A))
            rows.append([a ** (-m) for m in range(1, FIT_POWERS + 1)])
            rhs.append(s - psi0(p))
        sol = mp.qr_solve(mp.matrix(rows), mp.matrix(rhs))[0]
        for m in range(FIT_POWERS):
            c_vals[m].append(sol[m])
        c0_vals.append(psi0(p))
        sys.stderr.write(f"\r  remainder fit node {j + 1}/{CHEB_NODES}")
    sys.stderr.write("\n")
    return nodes, c0_vals, c_vals


def cheb_coeffs(vals):
    """Chebyshev coefficients from values at the standard nodes (p = (x+1)/2)."""
    m = len(vals)
    out = []
    for k in range(m):
        s = mp.fsum(
            vals[j] * mp.cos(k * mp.pi * (2 * j + 1) / (2 * m)) for j in range(m)
        )
        out.append(s * 2 / m)
    out[0] /= 2
    return out


def trim(coeffs, tol=mp.mpf("1e-17")):
    n = len(coeffs)
    while n > 1 and abs(coeffs[n - 1]) < tol:
        n -= 1
    return coeffs[:n]


def cheb_eval(coeffs, p):
    x = 2 * p - 1
    b0 = b1 = mp.mpf(0)
    for c in reversed(coeffs):
        b0, b1 = 2 * x * b0 - b1 + c, b0
    return b0 - x * b1


def write_rs_tables(tables):
    path = os.path.join(CORE, "src", "zeta", "rs_tables.rs")
    with open(path, "w") as f:
        f.write(
            "// Chebyshev coefficients (on the fractional part p in [0,1], argument\n"
            "// x = 2p - 1) of the Riemann-Siegel remainder coefficient functions.\n"
            "// Generated by tools/gen_oracles.py from an arbitrary-precision fit;\n"
            "// do not edit by hand.\n\n"
        )
        for i, coeffs in enumerate(tables):
            f.write(f"pub const C{i}_CHEB: [f64; {len(coeffs)}] = [\n")
            for c in coeffs:
                f.write(f"    {mp.nstr(c, 17, strip_zeros=False)},\n")
            f.write("];\n\n")
    print(f"wrote {path} (degrees: {[len(t) - 1 for t in tables]})")


def validate_tables(tables):
    """Reconstruct Z(t) from the tables in double precision and compare."""
    import math
    import random

    def z_double(t):
        a = math.sqrt(t / (2 * math.pi))
        n = int(a)
        p = a - n
        th = float(mp.siegeltheta(t))  # oracle theta; Rust has its own path
        s = 0.0
        for i in range(1, n + 1):
            s += math.cos(th - t * math.log(i)) / math.sqrt(i)
        s *= 2
        corr = 0.0
        for m, coeffs in enumerate(tables):
            cf = [float(c) for c in coeffs]
            x = 2 * p - 1
            b0 = b1 = 0.0
            for c in reversed(cf):
                b0, b1 = 2 * x * b0 - b1 + c, b0
            corr += (b0 - x * b1) * a ** (-m)
        return s + (-1) ** (n - 1) * a ** (-0.5) * corr

    mp.dps = 30
    random.seed(7)
    worst = 0.0
    for _ in range(25):
        t = math.exp(random.uniform(math.log(220.0), math.log(1.5e6)))
        err = abs(z_double(t) - float(mp.siegelz(t)))
        worst = max(worst, err)
    print(f"table validation: max |Z_double - siegelz| over 25 samples = {worst:.3e}")
    assert worst < 5e-8, "remainder tables failed validation"


def write_z_oracle():
    mp.dps = 30
    path = os.path.join(DATA, "z_oracle.tsv")
    with open(path, "w") as f:
        f.write("# t\tZ(t)  (mpmath siegelz, 30 digits)\n")
        for i in range(100):
            t = mp.mpf(10) * (mp.mpf(10) ** 5) ** (mp.mpf(i) / 99)
            z = mp.siegelz(t)
            f.write(f"{mp.nstr(t, 17)}\t{mp.nstr(z, 17)}\n")
            sys.stderr.write(f"\r  z oracle {i + 1}/100")
    sys.stderr.write("\n")
    print(f"wrote {path}")


def write_theta_oracle():
    mp.dps = 30
    heights = [10, 14.1347, 25, 50, 100, 500, 1000, 1e4, 1e5, 1e6, 1e7]
    path = os.path.join(DATA, "theta_oracle.tsv")
    with open(path, "w") as f:
        f.write("# t\ttheta(t)  (mpmath siegeltheta, 30 digits)\n")
        for t in heights:
            f.write(f"{mp.nstr(mp.mpf(t), 17)}\t{mp.nstr(mp.siegeltheta(t), 22)}\n")
    print(f"wrote {path}")


def write_zeros():
    mp.dps = 25
    path = os.path.join(DATA, "zeros.tsv")
    with open(path, "w") as f:
        f.write("# ordinates of the first 20 nontrivial zeros (mpmath zetazero)\n")
        for n in range(1, 21):
            f.write(f"{mp.nstr(mp.zetazero(n).imag, 20)}\n")
    print(f"wrote {path}")


def j_quad(T, h=1.0, order=20):
    """Composite Gauss-Legendre quadrature of siegelz^2 via mpmath's fp context.

    fp.siegelz is accurate to ~1e-12 relative; panels of width <= 1 with 20
    nodes resolve the ~1.7-unit oscillation scale with large margin.
    """
    import numpy as np

    x, w = np.polynomial.legendre.leggauss(order)
    total = 0.0
    a = 0.0
    npanels = int(math.ceil(T / h))
    for i in range(npanels):
        b = min(T, a + h)
        mid = 0.5 * (a + b)
        half = 0.5 * (b - a)
        total += half * sum(
            wi * fp.siegelz(mid + half * xi) ** 2 for xi, wi in zip(x, w)
        )
        a = b
        if i % 500 == 0:
            sys.stderr.write(f"\r  J({T:g}) panel {i}/{npanels}")
    sys.stderr.write("\n")
    return total


import math


def write_j_oracle():
    path = os.path.join(DATA, "j_oracle.tsv")
    t0 = time.time()
    j3 = j_quad(1e3)
    j3b = j_quad(1e3, h=0.5)
    print(f"J(1e3) = {j3:.12f}, refinement delta = {abs(j3 - j3b):.3e}")
    j4 = j_quad(1e4)
    j4b = j_quad(1e4, h=0.5)
    print(f"J(1e4) = {j4:.12f}, refinement delta = {abs(j4 - j4b):.3e}")
    assert abs(j3 - j3b) < 1e-7 and abs(j4 - j4b) < 1e-7
    with open(path, "w") as f:
        f.write("# T\tJ(T) = int_0^T Z(t)^2 dt  (composite GL20 over fp.siegelz)\n")
        f.write(f"{1e3:.17e}\t{j3b:.17e}\n")
        f.write(f"{1e4:.17e}\t{j4b:.17e}\n")
    print(f"wrote {path} in {time.time() - t0:.0f}s")


def main():
    os.makedirs(DATA, exist_ok=True)
    os.makedirs(os.path.join(CORE, "src", "zeta"), exist_ok=True)

    print("fitting Riemann-Siegel remainder coefficients...")
    nodes, c0_vals, c_vals = fit_remainder_coeffs()
    tables = [trim(cheb_coeffs(c0_vals))]
    for m in range(4):  # keep C1..C4; C5 absorbs truncation error in the fit
        tables.append(trim(cheb_coeffs(c_vals[m])))
    write_rs_tables(tables)
    validate_tables(tables)

    write_theta_oracle()
    write_zeros()
    write_z_oracle()
    write_j_oracle()


if __name__ == "__main__":
    main()
