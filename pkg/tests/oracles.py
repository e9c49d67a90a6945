"""Brute-force reference implementations used only by the tests.

Nothing here imports the code under test beyond plain data types; each
routine recomputes its quantity from first principles and slowly.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from fractions import Fraction
from math import factorial


def partitions_brute(n):
    """All partitions of n by sorting every composition; slow but obvious."""
    if n == 0:
        return {()}
    out = set()
    for mask in range(2 ** (n - 1)):
        parts, run = [], 1
        for i in range(n - 1):
            if mask >> i & 1:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        out.add(tuple(sorted(parts, reverse=True)))
    return out


def partition_count_dp(n):
    ways = [1] + [0] * n
    for k in range(1, n + 1):
        for m in range(k, n + 1):
            ways[m] += ways[m - k]
    return ways[n]


def standard_tableaux_count(shape):
    """Count SYT by removing corners recursively."""
    shape = tuple(x for x in shape if x)
    if not shape:
        return 1
    total = 0
    for i in range(len(shape)):
        nxt = shape[i + 1] if i + 1 < len(shape) else 0
        if shape[i] > nxt:
            total += standard_tableaux_count(shape[:i] + (shape[i] - 1,) + shape[i + 1:])
    return total


def cycle_type(perm):
    n = len(perm)
    seen, lens = set(), []
    for s in range(n):
        if s in seen:
            continue
        k, i = 0, s
        while i not in seen:
            seen.add(i)
            i = perm[i]
            k += 1
        lens.append(k)
    return tuple(sorted(lens, reverse=True))


def standard_rep_trace(perm):
    """Trace on the standard representation: permutation matrix trace minus 1."""
    n = len(perm)
    matrix = [[1 if perm[j] == i else 0 for j in range(n)] for i in range(n)]
    return sum(matrix[i][i] for i in range(n)) - 1


# --- Frobenius formula: chi_lam(mu) = [x^{lam + delta}] a_delta * p_mu ----------

def _poly_mul(a, b):
    out = defaultdict(int)
    for ea, ca in a.items():
        for eb, cb in b.items():
            out[tuple(x + y for x, y in zip(ea, eb))] += ca * cb
    return {k: v for k, v in out.items() if v}


def frobenius_character(lam, mu):
    lam = tuple(lam)
    ell = len(lam)
    # Vandermonde a_delta = sum_w sign(w) x^{w(delta)}
    delta = tuple(range(ell - 1, -1, -1))
    vdm = {}
    for w in itertools.permutations(range(ell)):
        sign = (-1) ** sum(1 for i in range(ell) for j in range(i + 1, ell) if w[i] > w[j])
        vdm[tuple(delta[w[i]] for i in range(ell))] = sign
    poly = vdm
    for k in mu:
        pk = {}
        for i in range(ell):
            e = [0] * ell
            e[i] = k
            pk[tuple(e)] = 1
        poly = _poly_mul(poly, pk)
    target = tuple(l + d for l, d in zip(lam, delta))
    return poly.get(target, 0)


# --- group algebra on plain dicts keyed by 0-based image tuples ------------------

def naive_multiply(x, y):
    out = defaultdict(Fraction)
    for s, a in x.items():
        for t, b in y.items():
            st = tuple(s[t[i]] for i in range(len(t)))
            out[st] += a * b
    return {k: v for k, v in out.items() if v}


def naive_idempotent(lam, n, chi):
    """e_lam from a character function chi(lam, cycle_type)."""
    dim = chi(lam, (1,) * n)
    return {p: Fraction(dim * chi(lam, cycle_type(p)), factorial(n))
            for p in itertools.permutations(range(n))}


# --- LR coefficients via induced characters -------------------------------------

def z(mu):
    out = 1
    for k in set(mu):
        m = mu.count(k)
        out *= k ** m * factorial(m)
    return out


def lr_by_characters(lam, mu, nu, chi):
    """<chi_lam, Ind(chi_mu x chi_nu)> by summing over class pairs."""
    a, b = sum(mu), sum(nu)
    parts_a = partitions_brute(a) if a else {()}
    parts_b = partitions_brute(b) if b else {()}
    total = Fraction(0)
    for alpha in parts_a:
        ca = chi(mu, alpha) if a else 1
        for beta in parts_b:
            cb = chi(nu, beta) if b else 1
            joint = tuple(sorted(alpha + beta, reverse=True))
            total += Fraction(ca * cb * chi(lam, joint), z(alpha) * z(beta))
    assert total.denominator == 1
    return int(total)


# --- hook tableaux by exhaustive filling -----------------------------------------

def hook_tableaux_brute(lam, p, q):
    """(even, odd) counts by checking every filling in letters 0..p+q-1."""
    cells = [(r, c) for r, length in enumerate(lam) for c in range(length)]
    even = odd = 0
    for fill in itertools.product(range(p + q), repeat=len(cells)):
        T = dict(zip(cells, fill))
        ok = True
        for (r, c), v in T.items():
            right = T.get((r, c + 1))
            if right is not None and (right < v or (right == v and v >= p)):
                ok = False
                break
            below = T.get((r + 1, c))
            if below is not None and (below < v or (below == v and v < p)):
                ok = False
                break
        if ok:
            primed = sum(1 for v in fill if v >= p)
            if primed % 2:
                odd += 1
            else:
                even += 1
    return even, odd


# --- orbit composition over an explicit index window ------------------------------

def naive_orbit_compose(g, f, window=12):
    """dict-of-matrices convolution by a double loop over all index pairs."""
    out = {}
    for i in range(-window, window + 1):
        acc = None
        for n in range(-window, window + 1):
            gm = g.get(i - n)
            fn = f.get(n)
            if gm is None or fn is None:
                continue
            term = [[sum(gm[r][k] * fn[k][c] for k in range(len(fn))) for c in range(len(fn[0]))]
                    for r in range(len(gm))]
            acc = term if acc is None else [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(acc, term)]
        if acc is not None and any(v != 0 for row in acc for v in row):
            out[i] = acc
    return out
