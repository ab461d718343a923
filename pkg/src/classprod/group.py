"""Finite groups as multiplication tables over dense element indices.

Element ``0`` is always the identity.  Subsets of a group are stored as
Python integers used as bit vectors (bit ``i`` set means element ``i`` is in
the set), which keeps set algebra cheap and makes sets hashable.

Conventions used everywhere in the package:

* conjugation is a right action, ``a^g = g^-1 a g``;
* the commutator is ``[a, g] = a^-1 g^-1 a g``, so that ``a * [a, g] == a^g``
  and the conjugacy class of ``a`` is ``a * [a, G]`` elementwise.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import AmbientMismatch, EmptySet, NotAGroup, NotASubgroup, OrderCapExceeded

DEFAULT_MAX_ORDER = 5000
FULL_ASSOCIATIVITY_LIMIT = 512

_rng_seed = 20061


def mask_to_bits(mask: np.ndarray) -> int:
    return int.from_bytes(np.packbits(mask, bitorder="little").tobytes(), "little")


def bits_to_mask(bits: int, n: int) -> np.ndarray:
    nbytes = (n + 7) // 8
    raw = np.frombuffer(bits.to_bytes(nbytes, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:n].astype(bool)


def indices_to_bits(indices: Iterable[int]) -> int:
    bits = 0
    for i in indices:
        bits |= 1 << int(i)
    return bits


class Group:
    """A validated finite group given by its multiplication table.

    Use :func:`build_group` rather than calling the constructor directly; the
    constructor trusts its arguments.
    """

    def __init__(self, mult: np.ndarray, inv: np.ndarray, label: str, names: Sequence[str] | None = None):
        self.mult = mult
        self.inv = inv
        self.order = int(mult.shape[0])
        self.identity = 0
        self.label = label
        self.names = tuple(names) if names is not None else None
        self.cache: dict = {}
        self.mult.setflags(write=False)
        self.inv.setflags(write=False)

    def __repr__(self) -> str:
        return f"Group({self.label!r}, order={self.order})"

    def __len__(self) -> int:
        return self.order

    def name(self, x: int) -> str:
        return self.names[x] if self.names is not None else str(x)

    # Derived tables.  They are deterministic functions of ``mult``, so a
    # duplicated computation under concurrent first access is harmless.

    @cached_property
    def conj_table(self) -> np.ndarray:
        """``conj_table[a, g] == g^-1 a g``."""
        t = self.mult[self.inv[None, :], self.mult]
        t.setflags(write=False)
        return t

    @cached_property
    def comm_table(self) -> np.ndarray:
        """``comm_table[a, g] == [a, g] == a^-1 g^-1 a g``."""
        t = self.mult[self.inv[:, None], self.conj_table]
        t.setflags(write=False)
        return t

    @cached_property
    def commute_table(self) -> np.ndarray:
        """Boolean ``commute_table[a, g]``: do ``a`` and ``g`` commute."""
        t = self.mult == self.mult.T
        t.setflags(write=False)
        return t

    @cached_property
    def element_orders(self) -> np.ndarray:
        orders = np.ones(self.order, dtype=np.int64)
        power = np.arange(self.order)
        done = power == 0
        k = 1
        while not done.all():
            power = self.mult[power, np.arange(self.order)]
            k += 1
            newly = (power == 0) & ~done
            orders[newly] = k
            done |= newly
        orders[0] = 1
        return orders

    @cached_property
    def full_bits(self) -> int:
        return (1 << self.order) - 1

    @cached_property
    def is_abelian(self) -> bool:
        return bool(self.commute_table.all())

    def element_set(self, indices: Iterable[int]) -> "ElementSet":
        return ElementSet.from_indices(self, indices)

    def all_elements(self) -> "ElementSet":
        return ElementSet(self, self.full_bits)

    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup._trusted(self, 1)

    def whole(self) -> "Subgroup":
        return Subgroup._trusted(self, self.full_bits)


def cached(G: Group, key, compute):
    """Per-group memo for derived data.

    Values are deterministic functions of the table, so two threads racing on
    the same key store equal values and either one may win.
    """
    try:
        return G.cache[key]
    except KeyError:
        value = compute()
        return G.cache.setdefault(key, value)


class ElementSet:
    """A subset of a group's elements, stored as a bit vector."""

    __slots__ = ("ambient", "bits", "_indices")

    def __init__(self, ambient: Group, bits: int):
        if bits < 0 or bits >> ambient.order:
            raise ValueError("bit vector longer than the ambient order")
        self.ambient = ambient
        self.bits = bits
        self._indices = None

    @classmethod
    def from_indices(cls, ambient: Group, indices: Iterable[int]) -> "ElementSet":
        idx = np.asarray(list(indices) if not isinstance(indices, np.ndarray) else indices, dtype=np.int64)
        if idx.size and (idx.min() < 0 or idx.max() >= ambient.order):
            raise IndexError("element index out of range")
        mask = np.zeros(ambient.order, dtype=bool)
        mask[idx] = True
        return cls(ambient, mask_to_bits(mask))

    @classmethod
    def from_mask(cls, ambient: Group, mask: np.ndarray) -> "ElementSet":
        return cls(ambient, mask_to_bits(mask))

    @property
    def indices(self) -> np.ndarray:
        if self._indices is None:
            idx = np.flatnonzero(self.mask)
            idx.setflags(write=False)
            self._indices = idx
        return self._indices

    @property
    def mask(self) -> np.ndarray:
        return bits_to_mask(self.bits, self.ambient.order)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __iter__(self) -> Iterator[int]:
        return (int(i) for i in self.indices)

    def __contains__(self, x: int) -> bool:
        return bool((self.bits >> int(x)) & 1)

    def _check(self, other: "ElementSet") -> None:
        if other.ambient is not self.ambient:
            raise AmbientMismatch("element sets live in different groups")

    def __eq__(self, other) -> bool:
        if not isinstance(other, ElementSet):
            return NotImplemented
        return other.ambient is self.ambient and other.bits == self.bits

    def __hash__(self) -> int:
        return hash((id(self.ambient), self.bits))

    def __or__(self, other: "ElementSet") -> "ElementSet":
        self._check(other)
        return ElementSet(self.ambient, self.bits | other.bits)

    def __and__(self, other: "ElementSet") -> "ElementSet":
        self._check(other)
        return ElementSet(self.ambient, self.bits & other.bits)

    def __sub__(self, other: "ElementSet") -> "ElementSet":
        self._check(other)
        return ElementSet(self.ambient, self.bits & ~other.bits)

    def issubset(self, other: "ElementSet") -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def __le__(self, other: "ElementSet") -> bool:
        return self.issubset(other)

    def __repr__(self) -> str:
        shown = [self.ambient.name(i) for i in self.indices[:12]]
        more = ", ..." if len(self) > 12 else ""
        return f"ElementSet({{{', '.join(shown)}{more}}})"


class Subgroup:
    """A subset of a group closed under multiplication and inversion."""

    __slots__ = ("ambient", "elements")

    def __init__(self, ambient: Group, elements: ElementSet | Iterable[int]):
        if not isinstance(elements, ElementSet):
            elements = ElementSet.from_indices(ambient, elements)
        if elements.ambient is not ambient:
            raise AmbientMismatch("elements belong to another group")
        _validate_subgroup(ambient, elements)
        self.ambient = ambient
        self.elements = elements

    @classmethod
    def _trusted(cls, ambient: Group, bits: int) -> "Subgroup":
        # for sets that are subgroups by construction (closures, intersections)
        self = object.__new__(cls)
        self.ambient = ambient
        self.elements = ElementSet(ambient, bits)
        return self

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def bits(self) -> int:
        return self.elements.bits

    @property
    def indices(self) -> np.ndarray:
        return self.elements.indices

    @property
    def mask(self) -> np.ndarray:
        return self.elements.mask

    def __len__(self) -> int:
        return self.order

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, x: int) -> bool:
        return x in self.elements

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return other.ambient is self.ambient and other.bits == self.bits

    def __hash__(self) -> int:
        return hash((id(self.ambient), self.bits))

    def __le__(self, other: "Subgroup") -> bool:
        return self.elements.issubset(other.elements)

    def __and__(self, other: "Subgroup") -> "Subgroup":
        if other.ambient is not self.ambient:
            raise AmbientMismatch("subgroups live in different groups")
        return Subgroup._trusted(self.ambient, self.bits & other.bits)

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order} in {self.ambient.label})"

    def as_group(self, label: str | None = None) -> tuple[Group, np.ndarray]:
        """Regard the subgroup as a group in its own right.

        Returns the new group and the array mapping its element indices back
        to indices of the ambient group (index 0 maps to the identity).
        """
        idx = self.indices
        back = np.full(self.ambient.order, -1, dtype=np.int64)
        back[idx] = np.arange(idx.size)
        table = back[self.ambient.mult[np.ix_(idx, idx)]]
        inv = back[self.ambient.inv[idx]]
        names = None
        if self.ambient.names is not None:
            names = [self.ambient.names[i] for i in idx]
        g = Group(table, inv, label or f"subgroup of {self.ambient.label}", names)
        return g, np.asarray(idx)


def _validate_subgroup(G: Group, elements: ElementSet) -> None:
    if 0 not in elements:
        raise NotASubgroup("subset does not contain the identity")
    idx = elements.indices
    mask = elements.mask
    if not mask[G.inv[idx]].all():
        raise NotASubgroup("subset not closed under inversion")
    if not mask[G.mult[np.ix_(idx, idx)]].all():
        raise NotASubgroup("subset not closed under multiplication")
    if G.order % idx.size:
        raise NotASubgroup("subset order does not divide the group order")


def build_group(table, label: str = "G", names: Sequence[str] | None = None,
                max_order: int = DEFAULT_MAX_ORDER) -> Group:
    """Validate a Cayley table and return a :class:`Group`.

    The identity is moved to index 0 if necessary (swapping it with the
    element that was there).  Raises :class:`NotAGroup` naming the first
    violation found.
    """
    try:
        arr = np.array(table, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise NotAGroup(f"table is not an integer array: {exc}") from None
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise NotAGroup(f"table must be a nonempty square array, got shape {arr.shape}")
    n = arr.shape[0]
    if n > max_order:
        raise OrderCapExceeded(f"order {n} exceeds cap {max_order}")
    if arr.min() < 0 or arr.max() >= n:
        raise NotAGroup("table entries must lie in 0..n-1")
    ref = np.arange(n)
    bad_rows = np.flatnonzero((np.sort(arr, axis=1) != ref).any(axis=1))
    if bad_rows.size:
        raise NotAGroup(f"row {bad_rows[0]} is not a permutation (Latin-square check)")
    bad_cols = np.flatnonzero((np.sort(arr, axis=0) != ref[:, None]).any(axis=0))
    if bad_cols.size:
        raise NotAGroup(f"column {bad_cols[0]} is not a permutation (Latin-square check)")
    ids = np.flatnonzero((arr == ref).all(axis=1) & (arr == ref[:, None]).all(axis=0))
    if ids.size == 0:
        raise NotAGroup("no two-sided identity")
    e = int(ids[0])
    if e != 0:
        perm = np.arange(n)
        perm[0], perm[e] = e, 0  # perm is its own inverse
        arr = perm[arr[np.ix_(perm, perm)]]
        if names is not None:
            names = [names[i] for i in perm]
    inv = np.argmax(arr == 0, axis=1)
    if (arr[inv, ref] != 0).any():
        x = int(np.flatnonzero(arr[inv, ref] != 0)[0])
        raise NotAGroup(f"element {x} has no two-sided inverse")
    _check_associative(arr)
    dtype = np.int32 if n < 2**31 else np.int64
    return Group(arr.astype(dtype), inv.astype(dtype), label, names)


def _check_associative(arr: np.ndarray) -> None:
    n = arr.shape[0]
    if n <= FULL_ASSOCIATIVITY_LIMIT:
        for a in range(n):
            lhs = arr[arr[a]]          # lhs[b, c] = (ab)c
            rhs = arr[a][arr]          # rhs[b, c] = a(bc)
            if not np.array_equal(lhs, rhs):
                b, c = np.argwhere(lhs != rhs)[0]
                raise NotAGroup(f"associativity fails at triple ({a}, {b}, {c})")
        return
    rng = np.random.default_rng(_rng_seed)
    a, b, c = rng.integers(0, n, size=(3, 10 * n))
    bad = np.flatnonzero(arr[arr[a, b], c] != arr[a, arr[b, c]])
    if bad.size:
        i = bad[0]
        raise NotAGroup(f"associativity fails at triple ({a[i]}, {b[i]}, {c[i]})")


def conjugate(G: Group, a: int, g: int) -> int:
    """``a^g = g^-1 a g``."""
    return int(G.mult[G.inv[g], G.mult[a, g]])


def commutator(G: Group, a: int, g: int) -> int:
    """``[a, g] = a^-1 g^-1 a g``; satisfies ``a * [a, g] == a^g``."""
    return int(G.mult[G.inv[a], conjugate(G, a, g)])


def _nonempty(X: ElementSet) -> None:
    if not X:
        raise EmptySet("operation requires a nonempty set")


def commutator_set(G: Group, a: int, S: ElementSet) -> ElementSet:
    _nonempty(S)
    return ElementSet.from_indices(G, G.comm_table[a, S.indices])


def product_set(X: ElementSet, Y: ElementSet) -> ElementSet:
    X._check(Y)
    _nonempty(X)
    _nonempty(Y)
    G = X.ambient
    return ElementSet.from_indices(G, G.mult[np.ix_(X.indices, Y.indices)].ravel())


def inverse_set(X: ElementSet) -> ElementSet:
    _nonempty(X)
    G = X.ambient
    return ElementSet.from_indices(G, G.inv[X.indices])


def conjugate_set(X: ElementSet, g: int) -> ElementSet:
    """``X^g``, elementwise."""
    G = X.ambient
    return ElementSet.from_indices(G, G.conj_table[X.indices, g])


def translate(X: ElementSet, z: int) -> ElementSet:
    """Right translate ``Xz``."""
    G = X.ambient
    return ElementSet.from_indices(G, G.mult[X.indices, z])


SQUARING_LIMIT = 1 << 22


def closure_mask(G: Group, gens: Iterable[int], start: np.ndarray | None = None) -> np.ndarray:
    """Boolean mask of the subgroup generated by ``gens`` (and ``start``, a subgroup mask).

    Each new generator is absorbed by squaring the current set (S <- S S)
    until it stops growing, which takes O(log |G|) rounds; very large sets
    fall back to multiplying a frontier by the generators.
    """
    if start is None:
        mask = np.zeros(G.order, dtype=bool)
        mask[0] = True
    else:
        mask = start.copy()
    eff: list[int] = [] if start is None else [int(x) for x in np.flatnonzero(start)[1:]]
    for g in gens:
        g = int(g)
        if mask[g]:
            continue
        eff.append(g)
        mask[g] = True
        idx = np.flatnonzero(mask)
        while idx.size * idx.size <= SQUARING_LIMIT:
            mask[G.mult[np.ix_(idx, idx)].ravel()] = True
            grown = np.flatnonzero(mask)
            if grown.size == idx.size:
                break
            idx = grown
        else:
            gen_arr = np.asarray(eff)
            frontier = idx
            while frontier.size:
                prod = G.mult[np.ix_(frontier, gen_arr)].ravel()
                new = np.unique(prod[~mask[prod]])
                mask[new] = True
                frontier = new
    return mask


def closure(G: Group, gens: Iterable[int]) -> Subgroup:
    """Smallest subgroup containing ``gens``."""
    return Subgroup._trusted(G, mask_to_bits(closure_mask(G, gens)))
