"""Independent brute-force oracle used to freeze expected values in the C++ tests.

Everything here is deliberately naive: direct enumeration, ghost recursion over
Python integers, closure by breadth-first search.  Nothing is shared with the
C++ implementation.
"""
from itertools import product
from math import gcd


def lattice_count(a, b, m):
    return sum(1 for i in range(1, m + 1) for j in range(1, m + 1) if a * i + b * j == m)


def truncation_set(a, b, r, bound=400):
    return [m for m in range(1, bound) if lattice_count(a, b, m) <= r]


def s_value(a, b, r, p, mp):
    if r < 0:
        return 0
    s = 1
    # l(m) >= m/(ab) - 1, so past (r + 2)ab no s can satisfy the window
    while mp * p ** (s - 1) <= (r + 2) * a * b:
        if lattice_count(a, b, mp * p ** (s - 1)) <= r < lattice_count(a, b, mp * p ** s):
            return s
        s += 1
    return 0


def vp(n, p):
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def h_value(a, b, r, p, mp):
    if r < 0:
        return 0
    ap = a // p ** vp(a, p)
    s = s_value(a, b, r, p, mp)
    if mp % b == 0:
        return 0
    if mp % ap == 0:
        return min(s, vp(a, p))
    return s


def product_form(a, b, r, p):
    out = []
    for mp in range(1, 400):
        if mp % p == 0:
            continue
        h = h_value(a, b, r, p, mp)
        if h:
            out.append((mp, h))
    return out


# --- p-typical Witt vectors over Z/n via integer ghost recursion -----------

def ghost(x, p):
    return [sum(p ** i * x[i] ** (p ** (k - i)) for i in range(k + 1)) for k in range(len(x))]


def from_ghost(g, p):
    s = []
    for k in range(len(g)):
        t = g[k] - sum(p ** i * s[i] ** (p ** (k - i)) for i in range(k))
        assert t % p ** k == 0
        s.append(t // p ** k)
    return s


def witt_add(x, y, p, n):
    gx, gy = ghost(x, p), ghost(y, p)
    return [c % n for c in from_ghost([u + v for u, v in zip(gx, gy)], p)]


# --- big Witt vectors over Z/n ----------------------------------------------

def big_ghost(x, S):
    return {m: sum(d * x[d] ** (m // d) for d in S if m % d == 0) for m in S}


def big_from_ghost(g, S):
    s = {}
    for m in S:
        t = g[m] - sum(d * s[d] ** (m // d) for d in S if d < m and m % d == 0)
        assert t % m == 0
        s[m] = t // m
    return s


def big_add(x, y, S, n):
    gx, gy = big_ghost(x, S), big_ghost(y, S)
    s = big_from_ghost({m: gx[m] + gy[m] for m in S}, S)
    return {m: s[m] % n for m in S}


def quotient_structure(a, b, r, q):
    """Brute-force W_S(F_q)/(V_a + V_b) for prime q: BFS closure, then torsion counts."""
    S = truncation_set(a, b, r)
    zero = tuple(0 for _ in S)
    idx = {m: i for i, m in enumerate(S)}
    gens = []
    for m in S:
        if m % a == 0 or m % b == 0:
            for c in range(1, q):
                v = [0] * len(S)
                v[idx[m]] = c
                gens.append(tuple(v))

    def add(u, v):
        xs = dict(zip(S, u)); ys = dict(zip(S, v))
        z = big_add(xs, ys, S, q)
        return tuple(z[m] for m in S)

    H = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                k = add(h, g)
                if k not in H:
                    H.add(k)
                    nxt.append(k)
        frontier = nxt
    counts = []
    elems = list(product(range(q), repeat=len(S)))
    j = 0
    while True:
        c = 0
        for e in elems:
            y = zero
            for _ in range(q ** j):
                y = add(y, e)
            if y in H:
                c += 1
        counts.append(c // len(H))
        if c == len(elems):
            break
        j += 1
    return len(S), len(H), counts


if __name__ == "__main__":
    print("l(2,3,5)", lattice_count(2, 3, 5), "l(2,3,25)", lattice_count(2, 3, 25))
    print("S(2,3,0)", truncation_set(2, 3, 0))
    print("S(2,3,1)", truncation_set(2, 3, 1))
    print("S(2,3,2)", truncation_set(2, 3, 2))
    print("S(3,4,0)", truncation_set(3, 4, 0))
    print("S(3,4,1)", truncation_set(3, 4, 1))
    print("S(3,4,2)", truncation_set(3, 4, 2))
    print("s(2,3,0,5,1)", s_value(2, 3, 0, 5, 1), "s(2,3,0,5,7)", s_value(2, 3, 0, 5, 7),
          "s(2,3,1,5,1)", s_value(2, 3, 1, 5, 1))
    print("h(2,3,0,5,1)", h_value(2, 3, 0, 5, 1), "h(2,3,0,5,3)", h_value(2, 3, 0, 5, 3),
          "h(4,3,2,2,1)", h_value(4, 3, 2, 2, 1), "s(4,3,2,2,1)", s_value(4, 3, 2, 2, 1))
    for (a, b, p) in [(2, 3, 5), (2, 3, 2), (3, 4, 3)]:
        for r in [0, 1, 2]:
            print("product", (a, b, p, r), product_form(a, b, r, p))
    print("W2(F3) (1,0)+(1,0)", witt_add([1, 0], [1, 0], 3, 3))
    print("W2(F2) (1,0)+(1,0)", witt_add([1, 0], [1, 0], 2, 2))
    print("bigW{1,2}(Z/4) (1,0)+(1,0)", big_add({1: 1, 2: 0}, {1: 1, 2: 0}, [1, 2], 4))
    print("quotient (2,3,r=0,F5)", quotient_structure(2, 3, 0, 5))
    print("quotient (2,3,r=0,F2)", quotient_structure(2, 3, 0, 2))
    print("quotient (2,3,r=1,F2)", quotient_structure(2, 3, 1, 2))
    print("quotient (3,4,r=0,F3)", quotient_structure(3, 4, 0, 3))
