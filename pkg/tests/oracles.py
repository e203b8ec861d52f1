"""Slow, independent reference implementations used to cross-check the library.

Everything here works on plain nested lists with explicit loops and shares no
code with ``brace_forge`` beyond receiving its tables as input.
"""

from __future__ import annotations

import itertools


def as_lists(table) -> list[list[int]]:
    return [[int(v) for v in row] for row in table]


def is_group(t: list[list[int]]) -> bool:
    n = len(t)
    if any(len(row) != n or any(not 0 <= v < n for v in row) for row in t):
        return False
    if any(t[0][a] != a or t[a][0] != a for a in range(n)):
        return False
    if any(0 not in row for row in t):
        return False
    return all(t[t[a][b]][c] == t[a][t[b][c]] for a in range(n) for b in range(n) for c in range(n))


def inverses(t) -> list[int]:
    n = len(t)
    return [next(b for b in range(n) if t[a][b] == 0) for a in range(n)]


def automorphisms(t) -> set[tuple[int, ...]]:
    """All bijections preserving the product; feasible up to order 8."""
    n = len(t)
    out = set()
    for rest in itertools.permutations(range(1, n)):
        f = (0,) + rest
        if all(f[t[a][b]] == t[f[a]][f[b]] for a in range(n) for b in range(n)):
            out.add(f)
    return out


def rb_identity(t, B, weight: int = 1) -> bool:
    n = len(t)
    inv = inverses(t)
    for g in range(n):
        bg = B[g]
        for h in range(n):
            lhs = t[bg][B[h]]
            if weight == 1:
                arg = t[t[t[g][bg]][h]][inv[bg]]
            else:
                arg = t[t[t[bg][h]][inv[bg]]][g]
            if lhs != B[arg]:
                return False
    return True


def rb_operators(t) -> set[tuple[int, ...]]:
    """Every map G -> G checked against the weight-1 identity (n^n candidates)."""
    n = len(t)
    return {B for B in itertools.product(range(n), repeat=n) if rb_identity(t, B)}


def circle(t, B) -> list[list[int]]:
    n = len(t)
    inv = inverses(t)
    return [[t[t[t[g][B[g]]][h]][inv[B[g]]] for h in range(n)] for g in range(n)]


def left_brace(add, circ) -> bool:
    n = len(add)
    inv = inverses(add)
    return all(circ[a][add[b][c]] == add[add[circ[a][b]][inv[a]]][circ[a][c]]
               for a in range(n) for b in range(n) for c in range(n))


def subgroup_closure(t, gens) -> frozenset:
    members = {0}
    frontier = set(gens)
    while frontier:
        members |= frontier
        frontier = {t[a][b] for a in members for b in members} - members
    return frozenset(members)


def regular_subgroups_by_scan(G_table, autos: list[tuple[int, ...]]) -> set[frozenset]:
    """Regular subgroups of Hol(G) as sets of (f, a) pairs.

    Generates every subgroup reachable from at most two generators of Hol(G),
    then keeps those of order |G| acting freely and transitively.  Every group
    of order at most 7 is two-generated, so the scan is complete there.
    """
    n = len(G_table)
    comp = {}
    for f in autos:
        for g in autos:
            comp[f, g] = tuple(f[g[x]] for x in range(n))
    elems = [(f, a) for f in autos for a in range(n)]
    code = {e: i for i, e in enumerate(elems)}

    def mul(x, y):
        (f, a), (g, b) = x, y
        return (comp[f, g], G_table[a][f[b]])

    table = [[code[mul(x, y)] for y in elems] for x in elems]
    ident = code[(tuple(range(n)), 0)]
    found = set()
    seen = set()
    for i, j in itertools.combinations_with_replacement(range(len(elems)), 2):
        S = _closure_generic(table, ident, (i, j))
        if S in seen:
            continue
        seen.add(S)
        if len(S) != n:
            continue
        orbit = {elems[k][1] for k in S}     # (f, a) sends e to a f(e) = a
        if len(orbit) == n:
            found.add(frozenset(elems[k] for k in S))
    return found


def _closure_generic(table, ident, gens) -> frozenset:
    members = {ident}
    frontier = set(gens)
    while frontier:
        members |= frontier
        frontier = {table[a][b] for a in members for b in members} - members
    return frozenset(members)


def braid_relation(pairs) -> bool:
    """pairs[x][y] = (u, v) meaning S(x, y) = (u, v)."""
    n = len(pairs)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                # (S x id)(id x S)(S x id)
                a, b = pairs[x][y]
                b, c = pairs[b][z]
                a, b = pairs[a][b]
                lhs = (a, b, c)
                # (id x S)(S x id)(id x S)
                b, c = pairs[y][z]
                a, b = pairs[x][b]
                b, c = pairs[b][c]
                if lhs != (a, b, c):
                    return False
    return True


def is_rack(t) -> bool:
    """x*y with right translations bijective and (x*y)*z = (x*z)*(y*z)."""
    n = len(t)
    for y in range(n):
        if sorted(t[x][y] for x in range(n)) != list(range(n)):
            return False
    return all(t[t[x][y]][z] == t[t[x][z]][t[y][z]]
               for x in range(n) for y in range(n) for z in range(n))


def algebra_rb_identity(r) -> bool:
    """R(x)R(y) = R(R(x)y + xR(y) + xy) on k^n with basis idempotents, integer arithmetic."""
    n = len(r)

    def R(v):
        return [sum(v[i] * r[i][k] for i in range(n)) for k in range(n)]

    def mul(u, v):
        return [u[k] * v[k] for k in range(n)]

    basis = [[int(i == k) for k in range(n)] for i in range(n)]
    for x in basis:
        for y in basis:
            lhs = mul(R(x), R(y))
            s = [p + q + w for p, q, w in zip(mul(R(x), y), mul(x, R(y)), mul(x, y))]
            if lhs != R(s):
                return False
    return True


def brace_isomorphic_bruteforce(add1, circ1, add2, circ2) -> bool:
    n = len(add1)
    for rest in itertools.permutations(range(1, n)):
        f = (0,) + rest
        if all(f[add1[a][b]] == add2[f[a]][f[b]] and f[circ1[a][b]] == circ2[f[a]][f[b]]
               for a in range(n) for b in range(n)):
            return True
    return False
