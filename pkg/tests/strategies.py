"""Hypothesis strategies producing small concrete groups."""

from functools import lru_cache

from hypothesis import strategies as st

from classprod import constructions as c


@lru_cache(maxsize=None)
def fixed_groups():
    return (
        c.cyclic(1), c.cyclic(2), c.cyclic(6), c.cyclic(8),
        c.dihedral(3), c.dihedral(4), c.dihedral(5), c.dihedral(6),
        c.quaternion8(), c.symmetric(3), c.symmetric(4), c.alternating(4),
        c.extraspecial_p3(3), c.affine_group(5),
        c.direct_product(c.symmetric(3), c.cyclic(2)),
        c.direct_product(c.quaternion8(), c.cyclic(3)),
    )


@lru_cache(maxsize=None)
def _perm_group(gens: tuple) -> "c.Group":
    return c.from_permutations(len(gens[0]), [list(g) for g in gens])


def permutations(degree):
    return st.permutations(list(range(degree))).map(tuple)


@st.composite
def perm_groups(draw, max_degree=4):
    degree = draw(st.integers(2, max_degree))
    gens = draw(st.lists(permutations(degree), min_size=1, max_size=2))
    return _perm_group(tuple(sorted(gens)))


def small_groups(max_degree=4):
    return st.one_of(st.sampled_from(fixed_groups()), perm_groups(max_degree))


@st.composite
def groups_and_elements(draw, k=1, groups=None):
    G = draw(groups if groups is not None else small_groups())
    xs = tuple(draw(st.integers(0, G.order - 1)) for _ in range(k))
    return G, xs
