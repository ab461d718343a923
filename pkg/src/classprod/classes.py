"""Conjugacy classes, G-invariant sets and the class-counting function eta."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EmptySet, NotInvariant
from .group import ElementSet, Group, cached, mask_to_bits, product_set


@dataclass(frozen=True, eq=False)
class ConjugacyClass:
    ambient: Group
    members: ElementSet
    representative: int

    @property
    def size(self) -> int:
        return len(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def __eq__(self, other) -> bool:
        if not isinstance(other, ConjugacyClass):
            return NotImplemented
        return self.members == other.members

    def __hash__(self) -> int:
        return hash(self.members)

    def __repr__(self) -> str:
        return f"ConjugacyClass(rep={self.ambient.name(self.representative)}, size={self.size})"


def _partition(G: Group) -> tuple[np.ndarray, list[ConjugacyClass]]:
    ids = np.full(G.order, -1, dtype=np.int64)
    classes = []
    for x in range(G.order):
        if ids[x] >= 0:
            continue
        orbit = np.unique(G.conj_table[x])
        ids[orbit] = len(classes)
        mask = np.zeros(G.order, dtype=bool)
        mask[orbit] = True
        classes.append(ConjugacyClass(G, ElementSet.from_mask(G, mask), x))
    ids.setflags(write=False)
    return ids, classes


def class_ids(G: Group) -> np.ndarray:
    """``class_ids(G)[x]`` is the position of x's class in :func:`all_classes`."""
    return cached(G, "class_partition", lambda: _partition(G))[0]


def all_classes(G: Group) -> list[ConjugacyClass]:
    """Classes ordered by representative (the least index in each class)."""
    return cached(G, "class_partition", lambda: _partition(G))[1]


def class_sizes(G: Group) -> np.ndarray:
    return cached(G, "class_sizes", lambda: np.array([c.size for c in all_classes(G)]))


def conjugacy_class(G: Group, a: int) -> ConjugacyClass:
    return all_classes(G)[class_ids(G)[a]]


def is_g_invariant(G: Group, X: ElementSet) -> bool:
    if not X:
        raise EmptySet("X must be nonempty")
    return bool(X.mask[G.conj_table[X.indices]].all())


def _class_ids_of(G: Group, X: ElementSet) -> np.ndarray:
    if not X:
        raise EmptySet("X must be nonempty")
    ids = np.unique(class_ids(G)[X.indices])
    if class_sizes(G)[ids].sum() != len(X):
        raise NotInvariant("set is not a union of conjugacy classes")
    return ids


def eta(G: Group, X: ElementSet) -> int:
    """Number of conjugacy classes whose union is the G-invariant set X."""
    return int(_class_ids_of(G, X).size)


def decompose(G: Group, X: ElementSet) -> list[ConjugacyClass]:
    classes = all_classes(G)
    return [classes[i] for i in _class_ids_of(G, X)]


def union_of_classes(G: Group, ids) -> ElementSet:
    return ElementSet.from_mask(G, np.isin(class_ids(G), ids))


def invariant_closure(G: Group, X: ElementSet) -> ElementSet:
    """Smallest G-invariant set containing X (``X^G``)."""
    return union_of_classes(G, np.unique(class_ids(G)[X.indices]))


def class_product_ids(G: Group, a: int, b: int) -> np.ndarray:
    """Class positions making up ``a^G b^G``.

    Every product of the two classes is conjugate to ``a' b`` for some
    ``a'`` in the class of ``a``, so only ``|a^G|`` products are formed.
    """
    A = conjugacy_class(G, a).members.indices
    return np.unique(class_ids(G)[G.mult[A, b]])


def class_product(G: Group, a: int, b: int) -> ElementSet:
    return union_of_classes(G, class_product_ids(G, a, b))


def class_product_eta(G: Group, a: int, b: int) -> tuple[ElementSet, int]:
    ids = class_product_ids(G, a, b)
    return union_of_classes(G, ids), int(ids.size)


def naive_class_product(G: Group, a: int, b: int) -> ElementSet:
    """``a^G b^G`` by forming all ``|a^G| * |b^G|`` products."""
    return product_set(conjugacy_class(G, a).members, conjugacy_class(G, b).members)


def eta_aa(G: Group, a: int) -> int:
    """eta(A A^-1) for the class A of a."""
    return int(class_product_ids(G, a, int(G.inv[a])).size)


def aa_inverse(G: Group, a: int) -> ElementSet:
    """The set ``A A^-1`` for the class A of a."""
    return class_product(G, a, int(G.inv[a]))


def eta_aa_table(G: Group) -> np.ndarray:
    """eta(A A^-1) for every class, in class order."""
    return cached(G, "eta_aa", lambda: np.array([eta_aa(G, c.representative) for c in all_classes(G)]))


def class_members_bits(G: Group) -> list[int]:
    return cached(G, "class_bits", lambda: [c.members.bits for c in all_classes(G)])


def central_mask(G: Group) -> np.ndarray:
    return cached(G, "central_mask", lambda: G.commute_table.all(axis=1))


def bits_of_ids(G: Group, ids) -> int:
    return mask_to_bits(np.isin(class_ids(G), ids))
