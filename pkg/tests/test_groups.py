import pytest

from nichols.groups import (
    FiniteGroup,
    centralizer,
    conjugacy_class,
    conjugacy_classes,
    coset_representatives,
    cyclic,
    cyclic_character,
    dihedral,
    f_g_map,
    induced_datum,
    orbit_factorization,
    symmetric,
)
from nichols.scalars import integer, one, root_of_unity


def test_builtins_are_groups():
    for g in (cyclic(1), cyclic(6), dihedral(3), dihedral(4), symmetric(3),
              symmetric(4)):
        assert g.mul(g.identity, 2 % g.order) == 2 % g.order
        for x in g.elements():
            assert g.mul(x, g.inv(x)) == g.identity
    assert dihedral(4).order == 8
    assert symmetric(4).order == 24


def test_validation_rejects_bad_tables():
    with pytest.raises(ValueError):
        FiniteGroup([[0, 1], [1, 1]])  # 1 has no inverse / not a group
    with pytest.raises(ValueError):
        FiniteGroup([[1, 0], [1, 0]])


def brute_centralizer(g, x):
    return [y for y in g.elements() if g.mul(y, x) == g.mul(x, y)]


def test_centralizer_and_classes():
    c6 = cyclic(6)
    for x in c6.elements():
        assert centralizer(c6, x) == list(c6.elements())
    assert conjugacy_classes(c6) == [[x] for x in c6.elements()]

    s3 = symmetric(3)
    for x in s3.elements():
        assert centralizer(s3, x) == brute_centralizer(s3, x)
    sizes = sorted(len(c) for c in conjugacy_classes(s3))
    assert sizes == [1, 2, 3]
    transposition = next(x for x in s3.elements()
                         if x != s3.identity and s3.mul(x, x) == s3.identity)
    assert len(centralizer(s3, transposition)) == 2
    assert len(conjugacy_class(s3, transposition)) == 3

    d4 = dihedral(4)
    sizes = sorted(len(c) for c in conjugacy_classes(d4))
    assert sizes == [1, 1, 2, 2, 2]  # center of order two


def test_f_g_map_examples():
    s3 = symmetric(3)
    transposition = next(x for x in s3.elements()
                         if x != s3.identity and s3.mul(x, x) == s3.identity)
    ts, perms = f_g_map(s3, transposition)
    assert sorted(ts) == conjugacy_class(s3, transposition)
    # each t fixes its own index
    for i, t in enumerate(ts):
        assert perms[t][i] == i
    # a central element acts trivially on every class
    d4 = dihedral(4)
    center = [x for x in d4.elements()
              if all(d4.mul(x, y) == d4.mul(y, x) for y in d4.elements())]
    nontrivial = next(x for x in center if x != d4.identity)
    for g in d4.elements():
        ts, perms = f_g_map(d4, g)
        assert perms[nontrivial] == tuple(range(len(ts)))


def test_orbit_factorization():
    s3 = symmetric(3)
    transposition = next(x for x in s3.elements()
                         if x != s3.identity and s3.mul(x, x) == s3.identity)
    ident_map = list(s3.elements())
    n, m = orbit_factorization(s3, s3, ident_map, transposition)
    assert (n, m) == (3, 1)
    trivial = cyclic(1)
    n, m = orbit_factorization(s3, trivial, [0] * 6, transposition)
    assert (n, m) == (1, 3)
    with pytest.raises(ValueError):
        orbit_factorization(s3, s3, [s3.identity] * 5 + [transposition],
                            transposition)


def test_induced_datum():
    s3 = symmetric(3)
    three = next(g for g in s3.elements()
                 if g != s3.identity and s3.mul(g, s3.mul(g, g)) == s3.identity
                 and s3.mul(g, g) != s3.identity)
    w = root_of_unity(3, 1)
    datum = induced_datum(s3, three, cyclic_character(s3, three, w))
    assert datum.class_size == 2
    assert datum.degree == 1
    assert sorted(datum.ts) == conjugacy_class(s3, three)
    # abelian group: a single coset
    c4 = cyclic(4)
    datum = induced_datum(c4, 1, cyclic_character(c4, 1, root_of_unity(4, 1)))
    assert datum.class_size == 1
    # non-multiplicative data is rejected
    bad = {x: one() for x in c4.elements()}
    bad[1] = integer(-1)
    bad[2] = one()
    with pytest.raises(ValueError):
        induced_datum(c4, 1, bad)


def test_coset_representatives_are_minimal():
    s3 = symmetric(3)
    transposition = next(x for x in s3.elements()
                         if x != s3.identity and s3.mul(x, x) == s3.identity)
    cent = centralizer(s3, transposition)
    reps = coset_representatives(s3, cent)
    assert len(reps) == 3
    assert reps[0] == s3.identity
    assert reps == sorted(reps)


def test_matrix_representation_accepted():
    # an explicit two-dimensional representation of the cyclic group of
    # order two inside its own induced datum
    c2 = cyclic(2)
    minus = integer(-1)
    z = integer(0)
    rho = {0: ((one(), z), (z, one())), 1: ((z, one()), (one(), z))}
    datum = induced_datum(c2, 1, rho)
    assert datum.degree == 2
    bad = {0: ((one(), z), (z, one())), 1: ((z, one()), (minus, z))}
    with pytest.raises(ValueError):
        induced_datum(c2, 1, bad)
