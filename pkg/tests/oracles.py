"""Independent brute-force oracles shared by the tests."""

from fractions import Fraction
from itertools import combinations


def odd_circuit_sets(g):
    """Vertex sets (as bitmasks) of odd size >= 3 inducing a Hamiltonian cycle.

    Held-Karp style: ends[mask] is the set of vertices v with a Hamiltonian
    path of g[mask] from min(mask) to v.
    """
    n, adj = g.n, g.masks
    out = []
    for s in range(n):
        ends = {1 << s: 1 << s}
        order = [1 << s]
        for mask in order:
            e = ends[mask]
            for v in range(n):
                if not e >> v & 1:
                    continue
                nxt = adj[v] & ~mask & ~((1 << (s + 1)) - 1)
                while nxt:
                    low = nxt & -nxt
                    nxt ^= low
                    m2 = mask | low
                    if m2 not in ends:
                        ends[m2] = 0
                        order.append(m2)
                    ends[m2] |= low
        for mask, e in ends.items():
            k = bin(mask).count("1")
            if k >= 3 and k % 2 == 1 and e & adj[s]:
                out.append(mask)
    return out


def naive_constraints(g):
    """(mask, rhs) for every clique and odd circuit, found without the package."""
    rows = []
    for k in range(1, g.n + 1):
        for s in combinations(range(g.n), k):
            if all(g.has_edge(a, b) for a, b in combinations(s, 2)):
                rows.append((sum(1 << v for v in s), Fraction(1)))
    for mask in odd_circuit_sets(g):
        rows.append((mask, Fraction(bin(mask).count("1") - 1, 2)))
    return rows


def naive_member(g, x, rows=None):
    if any(v < 0 for v in x):
        return False
    for mask, rhs in rows if rows is not None else naive_constraints(g):
        if sum((x[v] for v in range(g.n) if mask >> v & 1), Fraction(0)) > rhs:
            return False
    return True


def gauss_rank(rows):
    """Rank by plain Fraction Gaussian elimination."""
    m = [[Fraction(v) for v in r] for r in rows]
    rank = 0
    width = len(m[0]) if m else 0
    for c in range(width):
        p = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[rank], m[p] = m[p], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][c] != 0:
                f = m[i][c] / m[rank][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank
