#!/usr/bin/env python3
"""Independent sympy checks of the fibfull command-line tool.

usage: oracle_check.py FIBFULL_BINARY DATA_DIR
"""
import itertools
import json
import math
import os
import subprocess
import sys
import tempfile

import sympy as sp
from sympy.matrices.normalforms import invariant_factors

BIN, DATA = sys.argv[1], sys.argv[2]
T = sp.Symbol("t")
failures = []
checked = [0]


def check(ok, what):
    checked[0] += 1
    if not ok:
        failures.append(what)
        print("MISMATCH", what)


def run(*args):
    out = subprocess.run([BIN, *args, "--json"], capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def xs(n):
    return sp.symbols(f"x0:{n}")


def parse_file(path):
    field, n, order, blocks = 0, None, None, [[]]
    for raw in open(path):
        line = raw.split("#")[0].strip()
        if not line:
            continue
        if line.startswith("field"):
            rest = line.split()[1:]
            field = 0 if rest == ["Q"] else int(rest[-1])
        elif line.startswith("ring"):
            n = int(line.split("..x")[1]) + 1
        elif line.startswith("order"):
            order = line.split()[1]
        elif line == "intersect":
            blocks.append([])
        else:
            syms = {f"x{i}": s for i, s in enumerate(xs(n))}
            syms["t"] = T
            blocks[-1].append(sp.sympify(line.replace("^", "**"), locals=syms))
    return field, n, order, blocks


def gb(polys, gens, order, field):
    kw = {"modulus": field} if field else {}
    return sp.groebner(polys, *gens, order=order, **kw)


def intersect(a, b, gens, field):
    s = sp.Symbol("s")
    G = gb([s * f for f in a] + [(1 - s) * g for g in b], (s, *gens), "lex", field)
    return [g for g in G.exprs if not g.has(s)]


def load_ideal(path):
    field, n, _, blocks = parse_file(path)
    gens = xs(n)
    I = blocks[0]
    for b in blocks[1:]:
        I = intersect(I, b, gens, field)
    return field, gens, I


def lead_exponents(I, gens, order, field):
    G = gb(I, gens, order, field)
    return [sp.Poly(g, *gens).monoms(order=order)[0] for g in G.exprs], G


def standard_count(leads, n, d):
    if d < 0:
        return 0
    c = 0
    for combo in itertools.combinations_with_replacement(range(n), d):
        e = [0] * n
        for k in combo:
            e[k] += 1
        if not any(all(e[k] >= l[k] for k in range(n)) for l in leads):
            c += 1
    return c


def cnt(x, k):
    return math.comb(x, k) if 0 <= k <= x else 0


def h_proj(n, i, nu):
    if i == 0:
        return cnt(nu + n, n)
    if i == n:
        return cnt(-nu - 1, n)
    return 0


def window_values(sig):
    lo, hi = sig["window"]
    return list(range(lo, hi + 1))


# Hilbert functions against standard monomial counts of a sympy Groebner basis.
for name in ["twisted_cubic.ideal", "plane_cubic_point.ideal", "conic_point.ideal", "skew_lines.ideal",
             "complete_intersection.ideal", "plane_line.ideal", "minors_2x3.ideal", "twisted_cubic_f101.ideal"]:
    field, gens, I = load_ideal(os.path.join(DATA, name))
    leads, _ = lead_exponents(I, gens, "grevlex", field)
    sig = run("table", os.path.join(DATA, name))["signature"]
    for nu, v in zip(window_values(sig), sig["hilbert_function"]):
        check(v == standard_count(leads, len(gens), nu), f"{name}: HF({nu}) = {v}")
    for nu, row in zip(window_values(sig), zip(*sig["h"])):
        chi = sum((-1) ** i * h for i, h in enumerate(row))
        P = sp.sympify(sig["P_h"]).subs(sp.Symbol("m"), nu)
        check(chi == P, f"{name}: Euler characteristic at {nu}")

# Closed formulas: two skew lines, plane and line, Segre P1 x P2.
sig = run("table", os.path.join(DATA, "skew_lines.ideal"), "--window", "-6", "6")["signature"]
for nu, row in zip(window_values(sig), zip(*sig["h"])):
    check(list(row) == [2 * h_proj(1, 0, nu), 2 * h_proj(1, 1, nu), 0, 0], f"skew lines at {nu}")

sig = run("table", os.path.join(DATA, "plane_line.ideal"), "--window", "-6", "6")["signature"]
for nu, row in zip(window_values(sig), zip(*sig["h"])):
    if nu >= 0:
        want = [h_proj(2, 0, nu) + h_proj(1, 0, nu) - 1, 0, 0, 0]
    else:
        want = [0, 1 + h_proj(1, 1, nu), h_proj(2, 2, nu), 0]
    check(list(row) == want, f"plane and line at {nu}: {row} vs {want}")

sig = run("table", os.path.join(DATA, "minors_2x3.ideal"), "--window", "-6", "6")["signature"]
for nu, row in zip(window_values(sig), zip(*sig["h"])):
    want = [sum(h_proj(1, a, nu) * h_proj(2, i - a, nu) for a in range(0, i + 1)) for i in range(6)]
    check(list(row) == want, f"Segre P1 x P2 at {nu}: {row} vs {want}")

# Lex ideals against the closed form, written out from the partition.
def partitions(total, largest):
    if total == 0:
        yield ()
        return
    for p in range(min(total, largest), 0, -1):
        for rest in partitions(total - p, p):
            yield (p,) + rest


def lex_closed(lam, r, i, nu):
    a = [sum(1 for p in lam if p == j) for j in range(1, r + 1)]
    A = lambda k: sum(a[k - 1:])
    if i >= r:
        return 0
    if i > 0:
        return cnt(A(i + 1) - nu - 1, i + 1) - cnt(A(i + 2) - nu - 1, i + 1)
    s = 0
    for k, part in enumerate(lam, start=1):
        if nu - k + 1 >= 0:
            s += math.comb(nu + part - k, nu - k + 1)
    return s + cnt(A(1) - nu - 1, 1) - cnt(A(2) - nu - 1, 1)


for size in range(1, 6):
    for lam in partitions(size, 3):
        j = run("lex", "--partition", ",".join(map(str, lam)), "--r", "3", "--engine", "--window", "-6", "6")
        sig = j["engine"]
        for nu, row in zip(window_values(sig), zip(*sig["h"])):
            want = [lex_closed(lam, 3, i, nu) for i in range(4)]
            check(list(row) == want, f"L{lam} at {nu}: {row} vs {want}")

# Degenerations: t = 0 fibers against sympy leading terms, weights against the Groebner basis.
for name, order in [("twisted_cubic.ideal", "lex"), ("twisted_cubic.ideal", "grevlex"), ("minors_2x3.ideal", "lex"),
                    ("conic_point.ideal", "lex")]:
    field, gens, I = load_ideal(os.path.join(DATA, name))
    leads, G = lead_exponents(I, gens, order, field)
    j = run("degenerate", os.path.join(DATA, name), "--order", order)
    zero = [f for f in j["fibers"] if f["t"] == "0"][0]
    syms = {str(s): s for s in gens}
    fiber = [sp.Poly(sp.sympify(p.replace("^", "**"), locals=syms), *gens).monoms()[0] for p in zero["ideal"]]
    check(sorted(fiber) == sorted(leads), f"{name} {order}: t=0 fiber {fiber} vs {leads}")
    w = j["weight"]
    for g in G.exprs:
        ms = sp.Poly(g, *gens).monoms(order=order)
        dot = lambda e: sum(a * b for a, b in zip(w, e))
        check(all(dot(ms[0]) > dot(m) for m in ms[1:]), f"{name} {order}: weight {w} misses {g}")


# Stratification: fiber dimensions at sample points, Smith invariants of an explicit presentation.
def family_fiber_dims(gens_x, polys, alpha, degrees):
    specialized = [sp.expand(p.subs(T, alpha)) for p in polys]
    specialized = [p for p in specialized if p != 0]
    if not specialized:
        return {d: cnt(d + len(gens_x) - 1, len(gens_x) - 1) for d in degrees}
    leads, _ = lead_exponents(specialized, gens_x, "grevlex", 0)
    return {d: standard_count(leads, len(gens_x), d) for d in degrees}


def presentation(gens_x, polys, nu):
    n = len(gens_x)
    cols = [m for m in itertools.combinations_with_replacement(range(n), nu)]
    index = {}
    for k, combo in enumerate(cols):
        e = [0] * n
        for v in combo:
            e[v] += 1
        index[tuple(e)] = k
    rows = []
    for p in polys:
        P = sp.Poly(p, *gens_x)
        d = P.total_degree()
        if d > nu:
            continue
        for combo in itertools.combinations_with_replacement(range(n), nu - d):
            shift = [0] * n
            for v in combo:
                shift[v] += 1
            row = [0] * len(cols)
            for mon, coef in P.terms():
                row[index[tuple(a + b for a, b in zip(mon, shift))]] += coef
            rows.append(row)
    return sp.Matrix(rows) if rows else sp.zeros(0, len(cols))


def monic(f):
    return sp.Poly(f, T).monic().as_expr()


tmp = tempfile.mkdtemp()
two_roots = os.path.join(tmp, "two_roots.family")
with open(two_roots, "w") as fh:
    fh.write("ring x0..x1\nt*x0\n(t^2 - t)*x1\n")

for path in [os.path.join(DATA, "torsion_family.family"), os.path.join(DATA, "rotating_point.family"), two_roots]:
    field, n, _, blocks = parse_file(path)
    gens_x = xs(n)
    polys = blocks[0]
    j = run("stratify", path)
    lo, hi = j["window"]
    for nu in range(max(lo, 0), hi + 1):
        M = presentation(gens_x, polys, nu)
        want = [] if M.rows == 0 else [monic(f) for f in invariant_factors(M, domain=sp.QQ[T]) if f != 0]
        got = [sp.sympify(f.replace("^", "**"), locals={"t": T}) for f in j["invariant_factors"][str(nu)]]
        check([sp.expand(a - b) for a, b in zip(got, want)] == [0] * len(want) and len(got) == len(want),
              f"{os.path.basename(path)} nu={nu}: invariant factors {got} vs {want}")
    for s in j["strata"]:
        degrees = [int(k) for k in s["h"]]
        if s["locus"] == "generic":
            excluded = sp.sympify(s["excluded"].replace("^", "**"), locals={"t": T})
            alpha = next(a for a in range(2, 50) if excluded.subs(T, a) != 0)
            points = [alpha]
        else:
            locus = sp.sympify(s["locus"].replace("^", "**"), locals={"t": T})
            points = [r for r in sp.roots(locus, T) if r.is_rational]
        for alpha in points:
            dims = family_fiber_dims(gens_x, polys, alpha, degrees)
            check(all(dims[d] == s["h"][str(d)] for d in degrees),
                  f"{os.path.basename(path)} t={alpha}: {dims} vs {s['h']}")

if failures:
    print(f"{len(failures)} oracle mismatches")
    sys.exit(1)
print(f"oracle: all {checked[0]} checks agree")
