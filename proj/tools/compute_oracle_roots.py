#!/usr/bin/env python3
"""Compute high-precision reference roots for a job file's polynomial.

Usage:
    python3 tools/compute_oracle_roots.py data/fixtures/example1_p16.json > data/oracle_roots/example1.txt

The coefficients are read exactly (decimal strings become Fractions) and the
roots are found with mpmath.polyroots at 200 decimal digits, then polished
with Newton steps and printed with 60 significant digits, one complex number
per line in the job-file syntax (``re+imi``). Components whose magnitude is
below 1e-150 are printed as 0.
"""
import json
import sys
from fractions import Fraction

import mpmath as mp

DIGITS_OUT = 60
mp.mp.dps = 200


def exact(text):
    return Fraction(str(text))


def fmt(x):
    if abs(x) < mp.mpf("1e-150"):
        return "0"
    return mp.nstr(x, DIGITS_OUT, strip_zeros=False, min_fixed=-5, max_fixed=5)


def main():
    with open(sys.argv[1]) as fh:
        job = json.load(fh)
    coeffs = [exact(c) for c in job["poly"]]  # descending powers
    mpc = [mp.mpf(c.numerator) / c.denominator for c in coeffs]
    roots = mp.polyroots(mpc, maxsteps=2000, extraprec=2000)
    deriv = [c * (len(mpc) - 1 - k) for k, c in enumerate(mpc[:-1])]
    polished = []
    for z in roots:
        for _ in range(20):
            z = z - mp.polyval(mpc, z) / mp.polyval(deriv, z)
        polished.append(z)
    polished.sort(key=lambda z: (float(z.real), float(z.imag)))
    print(f"# reference roots of degree-{len(mpc) - 1} polynomial from {sys.argv[1].split('/')[-1]}")
    print(f"# mpmath.polyroots at {mp.mp.dps} digits, {DIGITS_OUT} significant digits shown")
    for z in polished:
        re, im = fmt(z.real), fmt(z.imag)
        if im == "0":
            print(re)
        elif im.startswith("-"):
            print(f"{re}{im}i")
        else:
            print(f"{re}+{im}i")


if __name__ == "__main__":
    main()
