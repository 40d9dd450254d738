import itertools

import pytest

from gelfand_wreath import classes as cl
from gelfand_wreath import group as grp
from gelfand_wreath.classes import SymmetricClassLabel
from gelfand_wreath.tableaux import shape_of

B6_EXAMPLE = [-6, 4, 3, 2, -5, -1]


def absolute_orbits(r, n):
    """Orbits of I(r, n) under absolute conjugation, by brute force."""
    perms = [grp.ColoredPermutation(r, p, (0,) * n) for p in itertools.permutations(range(n))]
    remaining = set(grp.enumerate_absolute_involutions(r, n))
    orbits = []
    while remaining:
        v = remaining.pop()
        orbit = {grp.absolute_conjugate(s, v) for s in perms}
        remaining -= orbit
        orbits.append(orbit)
    return orbits


def conjugacy_orbits(r, n):
    elems = list(grp.enumerate_group(r, n))
    remaining = set(elems)
    orbits = []
    while remaining:
        g = remaining.pop()
        orbit = {grp.multiply(grp.multiply(x, g), grp.inverse(x)) for x in elems}
        remaining -= orbit
        orbits.append(orbit)
    return orbits


def test_label_parsing():
    c = SymmetricClassLabel.parse(2, 6, "f=1,1;p=1,1")
    assert c.f == (1, 1) and c.p == (1, 1)
    assert str(c) == "f=1,1;p=1,1"
    assert c.to_json() == {"f": [1, 1], "p": [1, 1]}
    for bad in ["f=1,1", "f=1;p=1", "x=1,1;p=1,1", "f=1,1;p=2,2"]:
        with pytest.raises(ValueError):
            SymmetricClassLabel.parse(2, 6, bad)


def test_worked_class():
    c = cl.symmetric_class_of(grp.parse_window(2, B6_EXAMPLE))
    assert c == SymmetricClassLabel(2, 6, (1, 1), (1, 1))
    assert cl.class_size(c) == 180
    assert sum(1 for _ in cl.members(c)) == 180


def test_identity_class():
    c = SymmetricClassLabel(3, 4, (4, 0, 0), (0, 0, 0))
    assert cl.class_size(c) == 1
    assert list(cl.members(c)) == [grp.identity(3, 4)]
    assert cl.canonical_representative(c) == grp.identity(3, 4)


@pytest.mark.parametrize("r, n", [(1, 4), (2, 4), (2, 5), (3, 3), (3, 4)])
def test_orbits_match_labels(r, n):
    orbits = absolute_orbits(r, n)
    labels = list(cl.enumerate_symmetric_classes(r, n))
    assert len(orbits) == len(labels) == len(set(labels))
    for orbit in orbits:
        found = {cl.symmetric_class_of(v) for v in orbit}
        assert len(found) == 1
        (c,) = found
        assert cl.class_size(c) == len(orbit)
        assert set(cl.members(c)) == orbit
    assert sum(cl.class_size(c) for c in labels) == sum(1 for _ in grp.enumerate_absolute_involutions(r, n))


def test_zero_rank():
    assert [str(c) for c in cl.enumerate_symmetric_classes(3, 0)] == ["f=0,0,0;p=0,0,0"]


def test_canonical_representative():
    c = SymmetricClassLabel(2, 6, (1, 1), (1, 1))
    u = cl.canonical_representative(c)
    assert u.images == (2, 1, 4, 3, 5, 6) and u.colors == (0, 0, 1, 1, 0, 1)
    for c in cl.enumerate_symmetric_classes(3, 4):
        assert cl.symmetric_class_of(cl.canonical_representative(c)) == c


def test_absolute_stabilizer_against_brute_force():
    for r, n in [(2, 4), (3, 3), (2, 3)]:
        for c in cl.enumerate_symmetric_classes(r, n):
            v = cl.canonical_representative(c)
            brute = {g for g in grp.enumerate_group(r, n) if grp.absolute_conjugate(g, v) == v}
            built = list(cl.absolute_stabilizer(v))
            assert len(built) == len(set(built)) == cl.absolute_stabilizer_order(v)
            assert set(built) == brute
            # orbit-stabilizer
            assert len(brute) * cl.class_size(c) == grp.group_order(r, n)
    assert len(list(cl.absolute_stabilizer(grp.identity(2, 3)))) == 48


def test_stabilizer_closed_form():
    # for u = (1,2)(3,4)...: |g|(i+1) = |g|(i) +- 1 for every odd i, and colors of u preserved
    for p in [(2, 0), (1, 1), (0, 2)]:
        u = cl.canonical_representative(SymmetricClassLabel(2, 4, (0, 0), p))
        closed = {
            g
            for g in grp.enumerate_group(2, 4)
            if all(abs(g.images[i + 1] - g.images[i]) == 1 for i in (0, 2))
            and all(u.colors[g.perm[i]] == u.colors[i] for i in range(4))
        }
        assert set(cl.absolute_stabilizer(u)) == closed


def test_stabilizer_limit():
    v = cl.canonical_representative(SymmetricClassLabel(2, 8, (0, 0), (4, 0)))
    with pytest.raises(grp.EnumerationLimitError):
        next(cl.absolute_stabilizer(v, limit=1000))


def test_shapes_of_class_closed_form():
    c = SymmetricClassLabel(2, 6, (1, 1), (1, 1))
    assert cl.shapes_of_class(c) == set(itertools.product([(2, 1), (1, 1, 1)], repeat=2))
    for f0 in range(6):
        c = SymmetricClassLabel(2, 5, (f0, 5 - f0), (0, 0))
        assert cl.shapes_of_class(c) == {((f0,) if f0 else (), (5 - f0,) if 5 - f0 else ())}
    for r, n in [(2, 4), (3, 3), (2, 5)]:
        for c in cl.enumerate_symmetric_classes(r, n):
            assert cl.shapes_of_class(c) == {shape_of(v) for v in cl.members(c)}


def test_conjugacy_classes_b2():
    classes = cl.enumerate_conj_classes(2, 2)
    assert len(classes) == 5
    assert sorted(c.size for c in classes) == [1, 1, 2, 2, 2]
    assert cl.conj_class_of(grp.identity(2, 2)) == ((1, 1), ())


@pytest.mark.parametrize("r, n", [(2, 2), (2, 3), (3, 2), (1, 4), (4, 2)])
def test_conjugacy_classes_against_orbits(r, n):
    orbits = conjugacy_orbits(r, n)
    by_label = {c.label: c for c in cl.enumerate_conj_classes(r, n)}
    assert len(orbits) == len(by_label)
    for orbit in orbits:
        labels = {cl.conj_class_of(g) for g in orbit}
        assert len(labels) == 1
        c = by_label[labels.pop()]
        assert c.size == len(orbit)
        assert c.representative in orbit


def test_label_helpers():
    lab = ((2, 1), (1,), ())
    assert cl.conj_label_from_json(3, cl.conj_label_to_json(lab)) == lab
    assert cl.merge_labels(((1,), ()), ((2,), (1,))) == ((2, 1), (1,))
    assert cl.label_color_sum(((1,), (1, 1))) == 0
    assert cl.sign_of_label(((2,), ())) == -1
