"""Subgroup machinery: centralizers, cores, derived and chief series, quotients.

Functions that need to work inside a subgroup rather than the whole group
take a ``within`` (or ``top``) argument; subgroups are always stored as
subsets of the ambient group's elements.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .classes import all_classes, class_ids
from .constructions import is_prime
from .errors import EmptySet, NotASubgroup, NotNormal, NotSolvable, NotSolvableModN
from .group import (
    ElementSet,
    Group,
    Subgroup,
    build_group,
    cached,
    closure_mask,
    mask_to_bits,
)


@dataclass
class SeriesReport:
    """A subgroup series.

    ``derived`` series are descending from the top; ``chief`` and
    ``upper_central`` series ascend from the trivial subgroup.  For a
    derived series that stalls above the trivial subgroup ``solvable`` is
    False and the last term is the perfect core where it stabilized.
    """

    kind: str
    terms: list[Subgroup]
    factor_orders: list[int] = field(default_factory=list)
    solvable: bool = True

    @property
    def length(self) -> int:
        return len(self.factor_orders)


def _sub(G: Group, mask: np.ndarray) -> Subgroup:
    return Subgroup._trusted(G, mask_to_bits(mask))


def _as_subgroup(G: Group, H) -> Subgroup:
    if H is None:
        return G.whole()
    if isinstance(H, Subgroup):
        if H.ambient is not G:
            raise NotASubgroup("subgroup belongs to another group")
        return H
    return Subgroup(G, H)


# -- centralizers and centers ------------------------------------------------

def element_centralizer(G: Group, a: int) -> Subgroup:
    return cached(G, ("cent", a), lambda: _sub(G, G.commute_table[a]))


def centralizer_of_set(G: Group, X: ElementSet) -> Subgroup:
    """All g with x^g = x for every x in X."""
    if not X:
        raise EmptySet("X must be nonempty")
    return _sub(G, G.commute_table[X.indices].all(axis=0))


def center(G: Group) -> Subgroup:
    return cached(G, "center", lambda: _sub(G, G.commute_table.all(axis=1)))


def second_center(G: Group) -> Subgroup:
    """Elements a with [a, g] central for every g."""
    def compute():
        zmask = center(G).mask
        return _sub(G, zmask[G.comm_table].all(axis=1))
    return cached(G, "second_center", compute)


def subgroup_center(G: Group, N: Subgroup) -> Subgroup:
    """Z(N), for N a subgroup of G."""
    idx = N.indices
    inner = G.commute_table[np.ix_(idx, idx)].all(axis=1)
    mask = np.zeros(G.order, dtype=bool)
    mask[idx[inner]] = True
    return _sub(G, mask)


def centralizer_of_subgroup(G: Group, N: Subgroup) -> Subgroup:
    """C_G(N)."""
    return centralizer_of_set(G, N.elements)


# -- normality, closures, cores --------------------------------------------

def is_normal(G: Group, H: Subgroup, within: Subgroup | None = None) -> bool:
    """Is H normalized by every element of ``within`` (default: all of G)."""
    H = _as_subgroup(G, H)
    cols = slice(None) if within is None else within.indices
    return bool(H.mask[G.conj_table[H.indices][:, cols]].all())


def normal_closure(G: Group, S, within: Subgroup | None = None) -> Subgroup:
    """Smallest subgroup containing S that ``within`` (default G) normalizes."""
    if isinstance(S, (ElementSet, Subgroup)):
        S = S.indices
    S = np.asarray(list(S) if not isinstance(S, np.ndarray) else S, dtype=np.int64)
    if S.size == 0:
        return G.trivial_subgroup()
    cols = slice(None) if within is None else within.indices
    conjugates = np.unique(G.conj_table[S][:, cols])
    return _sub(G, closure_mask(G, conjugates))


def core(G: Group, H: Subgroup, within: Subgroup | None = None) -> Subgroup:
    """Intersection of the conjugates H^g for g in ``within`` (default G).

    x lies in every H^g exactly when every conjugate x^g (g in ``within``,
    which is closed under inverses) lies in H, so the intersection is taken
    one element at a time.
    """
    H = _as_subgroup(G, H)
    key = ("core", H.bits, None if within is None else within.bits)

    def compute():
        cols = slice(None) if within is None else within.indices
        return _sub(G, H.mask[G.conj_table[:, cols]].all(axis=1))
    return cached(G, key, compute)


# -- derived series ------------------------------------------------------------

def derived_subgroup(G: Group, H: Subgroup | None = None) -> Subgroup:
    """[H, H], generated by all commutators of pairs from H."""
    H = _as_subgroup(G, H)

    def compute():
        idx = H.indices
        comms = np.unique(G.comm_table[np.ix_(idx, idx)])
        return _sub(G, closure_mask(G, comms))
    return cached(G, ("derived", H.bits), compute)


def derived_series(G: Group, H: Subgroup | None = None) -> SeriesReport:
    """H >= [H,H] >= ... until it reaches {e} or stabilizes."""
    H = _as_subgroup(G, H)
    terms = [H]
    while terms[-1].order > 1:
        nxt = derived_subgroup(G, terms[-1])
        if nxt == terms[-1]:
            return SeriesReport("derived", terms, _factors(terms), solvable=False)
        terms.append(nxt)
    return SeriesReport("derived", terms, _factors(terms))


def _factors(terms: list[Subgroup]) -> list[int]:
    orders = [t.order for t in terms]
    return [max(a, b) // min(a, b) for a, b in zip(orders, orders[1:])]


def derived_length(G: Group, H: Subgroup | None = None) -> int:
    """Derived length of H (default G); 0 for the trivial group.

    Raises :class:`NotSolvable`, carrying the stabilized series, when the
    derived series never reaches the trivial subgroup.
    """
    series = derived_series(G, H)
    if not series.solvable:
        raise NotSolvable(f"derived series of {G.label} stabilizes at order {series.terms[-1].order}",
                          series)
    return series.length


def relative_derived_length(G: Group, N: Subgroup, top: Subgroup | None = None) -> int:
    """dl(top/N): least i whose i-th derived subgroup of ``top`` lies in N.

    ``top`` defaults to G and must normalize N.
    """
    top = _as_subgroup(G, top)
    N = _as_subgroup(G, N)

    def compute():
        if not N <= top or not is_normal(G, N, within=top):
            return NotNormal("N must be a normal subgroup of top")
        term = top
        i = 0
        while not term <= N:
            nxt = derived_subgroup(G, term)
            if nxt == term:
                return NotSolvableModN(f"derived series stabilizes at order {term.order} outside N")
            term = nxt
            i += 1
        return i
    result = cached(G, ("rdl", N.bits, top.bits), compute)
    if isinstance(result, Exception):
        raise type(result)(str(result))
    return result


def is_solvable(G: Group) -> bool:
    return cached(G, "solvable", lambda: derived_series(G).solvable)


# -- quotients -------------------------------------------------------------

class Quotient(NamedTuple):
    group: Group
    projection: np.ndarray   # element of G -> element of G/N


def coset_ids(G: Group, N: Subgroup) -> np.ndarray:
    """Left-coset labels gN, numbered by least element (so eN gets 0)."""
    def compute():
        cosets = G.mult[:, N.indices]       # row g: the coset gN
        first = cosets.min(axis=1)
        _, ids = np.unique(first, return_inverse=True)
        return ids.astype(np.int64)
    return cached(G, ("cosets", N.bits), compute)


def quotient(G: Group, N: Subgroup) -> Quotient:
    """G/N as a group on coset indices plus the natural projection."""
    N = _as_subgroup(G, N)
    if not is_normal(G, N):
        raise NotNormal("can only form quotients by normal subgroups")

    def compute():
        ids = coset_ids(G, N)
        reps = np.unique(ids, return_index=True)[1]
        table = ids[G.mult[np.ix_(reps, reps)]]
        return Quotient(build_group(table, f"{G.label}/N{N.order}", max_order=G.order), ids)
    return cached(G, ("quotient", N.bits), compute)


def cn_subgroup(G: Group, a: int, N: Subgroup) -> Subgroup:
    """C_N = {g : [a, g] in N}, the preimage of the centralizer of aN."""
    N = _as_subgroup(G, N)
    if not is_normal(G, N):
        raise NotNormal("N must be normal in G")
    return cached(G, ("cn", a, N.bits), lambda: _sub(G, N.mask[G.comm_table[a]]))


# -- chief series and supersolvability --------------------------------------

def power_table(G: Group) -> np.ndarray:
    """``power_table(G)[x, k] == x**k`` for 0 <= k <= exponent of G."""
    def compute():
        exp = int(np.lcm.reduce(G.element_orders))
        P = np.empty((G.order, exp + 1), dtype=np.int64)
        P[:, 0] = 0
        ar = np.arange(G.order)
        for k in range(exp):
            P[:, k + 1] = G.mult[P[:, k], ar]
        return P
    return cached(G, "power_table", compute)


def chief_series(G: Group) -> SeriesReport:
    """Ascending chief series {e} = N0 < N1 < ... < Nk = G.

    Each step takes the smallest normal closure of the current term and one
    element outside it; ties go to the closure holding the least such element.
    Only elements of prime order modulo the current term are tried: every
    minimal normal subgroup of the quotient contains one, and its closure is
    that subgroup, so the outcome is the same as trying every element.
    """
    def compute():
        reps = np.array([c.representative for c in all_classes(G)])
        P = power_table(G)
        current = G.trivial_subgroup()
        terms = [current]
        while current.order < G.order:
            cmask = current.mask
            inside = cmask[P[:, 1:]]
            rel_order = 1 + inside.argmax(axis=1)
            cands = [int(r) for r in reps if not cmask[r] and is_prime(int(rel_order[r]))]
            closures = [_sub(G, closure_mask(G, np.unique(G.conj_table[r]), start=cmask)) for r in cands]
            smallest = min(h.order for h in closures)
            best = min((h for h in closures if h.order == smallest),
                       key=lambda h: int(np.flatnonzero(h.mask & ~cmask)[0]))
            current = best
            terms.append(current)
        return SeriesReport("chief", terms, _factors(terms))
    return cached(G, "chief_series", compute)


def minimal_normal_subgroups(G: Group) -> list[Subgroup]:
    """All minimal normal subgroups, ordered by (order, least nonidentity element)."""
    def compute():
        cands = {}
        for c in all_classes(G)[1:]:
            cand = normal_closure(G, [c.representative])
            cands.setdefault(cand.bits, cand)
        found = [h for h in cands.values()
                 if not any(o.bits != h.bits and o <= h for o in cands.values())]
        return sorted(found, key=lambda h: (h.order, int(h.indices[1])))
    return cached(G, "minimal_normal", compute)


def is_supersolvable(G: Group) -> bool:
    """Every chief factor has prime order."""
    return cached(G, "supersolvable",
                  lambda: all(is_prime(f) for f in chief_series(G).factor_orders))


def upper_central_series(G: Group) -> SeriesReport:
    terms = [G.trivial_subgroup()]
    while True:
        zmask = terms[-1].mask
        nxt = _sub(G, zmask[G.comm_table].all(axis=1))
        if nxt == terms[-1]:
            break
        terms.append(nxt)
    return SeriesReport("upper_central", terms, _factors(terms), solvable=terms[-1].order == G.order)


# -- small-group enumeration -------------------------------------------------

def is_cyclic(G: Group, H: Subgroup) -> bool:
    return bool((G.element_orders[H.indices] == H.order).any())


def is_abelian_subgroup(G: Group, H: Subgroup) -> bool:
    idx = H.indices
    return bool(G.commute_table[np.ix_(idx, idx)].all())


def cyclic_subgroups(G: Group) -> list[Subgroup]:
    seen = {}
    for x in range(G.order):
        h = _sub(G, closure_mask(G, [x]))
        seen.setdefault(h.bits, h)
    return sorted(seen.values(), key=lambda h: (h.order, h.bits))


def all_subgroups(G: Group, limit: int = 5000) -> list[Subgroup]:
    """Every subgroup, by joining cyclic subgroups until nothing new appears.

    Meant for small groups; raises RuntimeError past ``limit`` subgroups.
    """
    def compute():
        cyc = cyclic_subgroups(G)
        found = {h.bits: h for h in cyc}
        frontier = list(found.values())
        while frontier:
            nxt = []
            for h in frontier:
                hmask = h.mask
                for c in cyc:
                    if c.bits & ~h.bits == 0:
                        continue
                    j = _sub(G, closure_mask(G, c.indices, start=hmask))
                    if j.bits not in found:
                        found[j.bits] = j
                        nxt.append(j)
                        if len(found) > limit:
                            raise RuntimeError(f"more than {limit} subgroups")
            frontier = nxt
        return sorted(found.values(), key=lambda h: (h.order, h.bits))
    return cached(G, "all_subgroups", compute)


def normal_subgroups_exhaustive(G: Group) -> list[Subgroup]:
    return [h for h in all_subgroups(G) if is_normal(G, h)]
