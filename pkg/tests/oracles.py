"""Brute-force reference implementations used only by the tests.

Everything here works on a plain Python multiplication table (list of
lists) with loops over sets, sharing no code with the package beyond
reading ``G.mult``.
"""

from __future__ import annotations

from itertools import product


class Naive:
    def __init__(self, G):
        self.t = G.mult.tolist() if hasattr(G, "mult") else [list(r) for r in G]
        self.n = len(self.t)
        self.e = next(x for x in range(self.n) if all(self.t[x][y] == y for y in range(self.n)))
        self.inv = [next(y for y in range(self.n) if self.t[x][y] == self.e) for x in range(self.n)]

    # elements and sets ---------------------------------------------------
    def mul(self, x, y):
        return self.t[x][y]

    def conj(self, a, g):
        return self.mul(self.mul(self.inv[g], a), g)

    def comm(self, a, g):
        return self.mul(self.mul(self.inv[a], self.inv[g]), self.mul(a, g))

    def prod(self, X, Y):
        return frozenset(self.mul(x, y) for x in X for y in Y)

    def inverse(self, X):
        return frozenset(self.inv[x] for x in X)

    @property
    def G(self):
        return frozenset(range(self.n))

    def cls(self, a):
        return frozenset(self.conj(a, g) for g in range(self.n))

    def classes(self):
        seen, out = set(), []
        for x in range(self.n):
            if x not in seen:
                c = self.cls(x)
                seen |= c
                out.append(c)
        return out

    def eta(self, X):
        return sum(1 for c in self.classes() if c <= X)

    def is_invariant(self, X):
        return all(self.cls(x) <= X for x in X)

    # subgroups -----------------------------------------------------------
    def generate(self, gens):
        H = {self.e}
        frontier = [self.e]
        gens = list(gens)
        while frontier:
            nxt = []
            for h in frontier:
                for g in gens:
                    y = self.mul(h, g)
                    if y not in H:
                        H.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(H)

    def centralizer(self, X, within=None):
        within = self.G if within is None else within
        return frozenset(g for g in within if all(self.mul(g, x) == self.mul(x, g) for x in X))

    def center(self):
        return self.centralizer(self.G)

    def second_center(self):
        Z = self.center()
        return frozenset(x for x in range(self.n) if all(self.comm(x, g) in Z for g in range(self.n)))

    def normal_closure(self, S, within=None):
        within = self.G if within is None else within
        return self.generate({self.conj(s, g) for s in S for g in within})

    def is_normal(self, H, within=None):
        within = self.G if within is None else within
        return all(self.conj(h, g) in H for h in H for g in within)

    def core(self, H, within=None):
        within = self.G if within is None else within
        out = set(H)
        for g in within:
            out &= {self.conj(h, g) for h in H}
        return frozenset(out)

    def derived(self, H):
        return self.generate({self.comm(x, y) for x in H for y in H})

    def derived_length_mod(self, N, top=None):
        """Least i with the i-th derived term of top inside N, or None."""
        term = self.G if top is None else frozenset(top)
        i = 0
        while not term <= N:
            nxt = self.derived(term)
            if nxt == term:
                return None
            term, i = nxt, i + 1
        return i

    def derived_length(self):
        return self.derived_length_mod(frozenset({self.e}))

    def normal_subgroups(self):
        """Joins of normal closures of single elements: every normal subgroup."""
        found = {self.normal_closure({x}) for x in range(self.n)}
        changed = True
        while changed:
            changed = False
            for A in list(found):
                for B in list(found):
                    J = self.generate(A | B)
                    if J not in found:
                        found.add(J)
                        changed = True
        return sorted(found, key=lambda h: (len(h), sorted(h)))

    def subgroups(self):
        cyc = {self.generate({x}) for x in range(self.n)}
        found = set(cyc)
        frontier = set(cyc)
        while frontier:
            nxt = set()
            for A in frontier:
                for C in cyc:
                    J = self.generate(A | C)
                    if J not in found:
                        found.add(J)
                        nxt.add(J)
            frontier = nxt
        return sorted(found, key=lambda h: (len(h), sorted(h)))

    def is_supersolvable(self):
        """A chain of normal subgroups of G with prime-order steps from G down to 1."""
        normals = self.normal_subgroups()

        def descend(top):
            if len(top) == 1:
                return True
            for M in normals:
                if M < top and _is_prime(len(top) // len(M)):
                    if descend(M):
                        return True
            return False
        return descend(self.G)

    def quotient_table(self, N):
        cosets = []
        index = {}
        for x in range(self.n):
            if x not in index:
                c = frozenset(self.mul(x, m) for m in N)
                for y in c:
                    index[y] = len(cosets)
                cosets.append(min(c))
        table = [[index[self.mul(a, b)] for b in cosets] for a in cosets]
        return table, index

    def element_order(self, x):
        k, y = 1, x
        while y != self.e:
            y, k = self.mul(y, x), k + 1
        return k


def _is_prime(n):
    return n > 1 and all(n % d for d in range(2, int(n ** 0.5) + 1))


def perm_group(gens):
    """All products of the generating permutations (tuples), by closure."""
    degree = len(gens[0])
    ident = tuple(range(degree))
    elems = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(g[p[i]] for i in range(degree))
                if q not in elems:
                    elems.add(q)
                    nxt.append(q)
        frontier = nxt
    return elems


def signature(naive: Naive):
    """Isomorphism invariants: order, sorted class sizes, element order counts, center size."""
    orders = sorted(naive.element_order(x) for x in range(naive.n))
    return (naive.n, sorted(len(c) for c in naive.classes()), orders, len(naive.center()))


def table_signature(elems, mul):
    """The same invariants computed from an element list and a multiplication function."""
    elems = list(elems)
    idx = {e: i for i, e in enumerate(elems)}
    return signature(Naive([[idx[mul(a, b)] for b in elems] for a in elems]))


def heisenberg_matrices(p):
    """Upper unitriangular 3x3 matrices over F_p with ordinary matrix multiplication."""
    def mul(A, B):
        return tuple(tuple(sum(A[r][k] * B[k][c] for k in range(3)) % p for c in range(3))
                     for r in range(3))
    elems = [((1, a, c), (0, 1, b), (0, 0, 1)) for a, b, c in product(range(p), repeat=3)]
    return elems, mul


def quaternion_matrices():
    """Q8 as 2x2 matrices over Z[i], entries as (re, im) pairs."""
    def cm(x, y):
        return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])

    def ca(x, y):
        return (x[0] + y[0], x[1] + y[1])

    def mmul(A, B):
        return tuple(tuple(ca(cm(A[r][0], B[0][c]), cm(A[r][1], B[1][c])) for c in range(2))
                     for r in range(2))
    one = ((1, 0), (0, 0)), ((0, 0), (1, 0))
    i = ((0, 1), (0, 0)), ((0, 0), (0, -1))
    j = ((0, 0), (1, 0)), ((-1, 0), (0, 0))
    elems = {one}
    frontier = [one]
    while frontier:
        nxt = []
        for x in frontier:
            for g in (i, j):
                y = mmul(x, g)
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return elems, mmul
