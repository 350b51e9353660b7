"""Regenerate tests/fixtures/convergence_table.json by brute force.

Deliberately independent of the package: Bernoulli numbers come from the
Akiyama-Tanigawa algorithm, Euler numbers E_n(0) from
E_n(0) = -2 (2^(n+1) - 1) B_(n+1) / (n+1), and valuations from repeated
division. Run from the repository root:

    python3 scripts/calibrate_convergence.py
"""
import json
from fractions import Fraction
from pathlib import Path

N_MAX = 5
N_VALUES = range(0, 6)
VOLKENBORN_PRIMES = (2, 3, 5, 7)
FERMIONIC_PRIMES = (3, 5, 7)
OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "convergence_table.json"


def bernoulli_at(n):
    a = [Fraction(0)] * (n + 1)
    out = []
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out.append(a[0])  # B_1 = +1/2 in this algorithm
    if n >= 1:
        out[1] = -out[1]
    return out


def euler_zero(n, B):
    return -2 * (2 ** (n + 1) - 1) * B[n + 1] / (n + 1)


def v(r, p):
    if r == 0:
        return None
    r = Fraction(r)
    k, num, den = 0, r.numerator, r.denominator
    while num % p == 0:
        num //= p
        k += 1
    while den % p == 0:
        den //= p
        k -= 1
    return k


def main():
    B = bernoulli_at(max(N_VALUES) + 2)
    rows = []
    for p in VOLKENBORN_PRIMES:
        for n in N_VALUES:
            vals = [v(Fraction(sum(x**n for x in range(p**N)), p**N) - B[n], p) for N in range(1, N_MAX + 1)]
            rows.append({"kind": "volkenborn", "n": n, "p": p, "valuations": vals})
    for p in FERMIONIC_PRIMES:
        for n in N_VALUES:
            vals = [v(sum((-1) ** x * x**n for x in range(p**N)) - euler_zero(n, B), p) for N in range(1, N_MAX + 1)]
            rows.append({"kind": "fermionic", "n": n, "p": p, "valuations": vals})
    for row in rows:
        vals = row["valuations"]
        # None encodes an exact hit (infinite valuation)
        row["slack"] = 0 if vals[0] is None else max(0, (N_MAX - 1) - (vals[-1] - vals[0]))
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps({"N_max": N_MAX, "rows": rows}, indent=1) + "\n")
    print(f"wrote {len(rows)} rows to {OUT}")


if __name__ == "__main__":
    main()
