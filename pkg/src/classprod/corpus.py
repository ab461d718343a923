"""The built-in corpus of concrete groups used by the verification suites."""

from __future__ import annotations

from .constructions import GroupSpec, named

PRODUCT_ORDER_LIMIT = 200

# (spec, order) for the supersolvable base families
def base_entries() -> list[tuple[GroupSpec, int]]:
    entries = [(named("cyclic", n=n), n) for n in range(2, 31)]
    entries += [(named("dihedral", n=n), 2 * n) for n in range(3, 16)]
    entries += [
        (named("quaternion8"), 8),
        (named("extraspecial_p3", p=3), 27),
        (named("symmetric", n=3), 6),
        (named("frobenius", p=5), 20),
    ]
    return entries


def default_corpus(product_limit: int = PRODUCT_ORDER_LIMIT) -> list[GroupSpec]:
    """Base families plus every two-factor direct product of them up to ``product_limit``.

    All members are supersolvable.
    """
    base = base_entries()
    specs = [s for s, _ in base]
    for i, (s1, n1) in enumerate(base):
        for s2, n2 in base[i:]:
            if n1 * n2 <= product_limit:
                specs.append(GroupSpec("direct", {"factors": (s1, s2)}))
    return specs


def extended_corpus(product_limit: int = PRODUCT_ORDER_LIMIT) -> list[GroupSpec]:
    """The default corpus plus the solvable, non-supersolvable S4 and A4."""
    return default_corpus(product_limit) + [named("symmetric", n=4), named("alternating", n=4)]


CORPORA = {
    "default": default_corpus,
    "extended": extended_corpus,
}
