"""
Unit tests for the dihedral action on schemes and canonical forms.
"""

import itertools
import random

import pytest

from glue_core.exceptions import SymmetryError
from glue_core.scheme import format_scheme, parse_scheme, relabel
from glue_core.symmetry import (
    IDENTITY,
    Symmetry,
    SymmetryGroup,
    apply_symmetry,
    canonical_form,
    compose,
    full_dihedral,
    inverse,
    orbit,
    schemes_equivalent,
    trivial_group,
)
from tests.test_utils import random_scheme


@pytest.mark.unit
class TestSymmetryElements:
    def test_identity_fixes_every_corner(self):
        for c in range(6):
            assert IDENTITY.corner_image(c, 6) == c

    def test_compose_matches_sequential_corner_maps(self):
        m = 6
        group = full_dihedral(m)
        for g1, g2 in itertools.product(group, repeat=2):
            g = compose(g2, g1, m)
            for c in range(m):
                assert g.corner_image(c, m) == g2.corner_image(g1.corner_image(c, m), m)

    def test_inverse(self):
        m = 8
        for g in full_dihedral(m):
            assert compose(inverse(g, m), g, m) == IDENTITY
            assert compose(g, inverse(g, m), m) == IDENTITY


@pytest.mark.unit
class TestSymmetryGroup:
    @pytest.mark.parametrize("m", [1, 2, 4, 6, 8])
    def test_full_dihedral_order(self, m):
        assert full_dihedral(m).order == 2 * m

    def test_trivial_group(self):
        g = trivial_group(5)
        assert g.order == 1 and IDENTITY in g

    def test_subgroup_is_accepted(self):
        group = SymmetryGroup.from_elements(
            6, [IDENTITY, Symmetry(3), Symmetry(0, True), Symmetry(3, True)]
        )
        assert group.order == 4

    def test_missing_identity_is_rejected(self):
        with pytest.raises(SymmetryError, match="identity"):
            SymmetryGroup.from_elements(4, [Symmetry(2)])

    def test_non_closed_set_is_rejected(self):
        with pytest.raises(SymmetryError, match="do not form a group"):
            SymmetryGroup.from_elements(6, [IDENTITY, Symmetry(1)])

    def test_rotation_out_of_range(self):
        with pytest.raises(SymmetryError):
            SymmetryGroup.from_elements(4, [IDENTITY, Symmetry(4)])


@pytest.mark.unit
class TestApplySymmetry:
    def test_examples(self):
        w = parse_scheme("a b a^-1 b^-1")
        assert apply_symmetry(w, IDENTITY) == w
        assert format_scheme(apply_symmetry(w, Symmetry(1))) == "b a^-1 b^-1 a"
        assert format_scheme(apply_symmetry(w, Symmetry(0, True))) == "b a b^-1 a^-1"

    def test_composition_law(self):
        rng = random.Random(17)
        for m in (3, 4, 6, 8):
            group = full_dihedral(m)
            for _ in range(20):
                w = random_scheme(rng, m)
                for g1, g2 in itertools.product(group, repeat=2):
                    lhs = apply_symmetry(apply_symmetry(w, g1), g2)
                    assert lhs == apply_symmetry(w, compose(g2, g1, m))

    def test_size_mismatch(self):
        with pytest.raises(SymmetryError):
            apply_symmetry(parse_scheme("a b c"), IDENTITY, 4)
        with pytest.raises(SymmetryError):
            canonical_form(parse_scheme("a b c"), full_dihedral(4))


@pytest.mark.unit
class TestCanonicalForm:
    def test_full_dihedral_example(self):
        canon = canonical_form(parse_scheme("b c a a^-1"), full_dihedral(4))
        assert format_scheme(canon) == "a a^-1 b c"

    def test_trivial_group_is_relabel(self):
        rng = random.Random(2)
        for _ in range(100):
            w = random_scheme(rng, 6)
            assert canonical_form(w, trivial_group(6)) == relabel(w)

    def test_constant_on_orbits(self):
        rng = random.Random(23)
        group = full_dihedral(6)
        for _ in range(100):
            w = random_scheme(rng, 6)
            canon = canonical_form(w, group)
            for g in group:
                assert canonical_form(apply_symmetry(w, g), group) == canon
            assert canon in orbit(w, group)

    def test_orbit_size_divides_group_order(self):
        rng = random.Random(31)
        group = full_dihedral(8)
        for _ in range(100):
            assert group.order % len(orbit(random_scheme(rng, 8), group)) == 0

    @pytest.mark.parametrize(
        "w1, w2, expected",
        [
            ("a a b c", "b c a a", True),
            ("a b a b", "a b a^-1 b^-1", False),
            ("a b c a^-1", "a b c a^-1", True),
        ],
    )
    def test_schemes_equivalent(self, w1, w2, expected):
        group = full_dihedral(4)
        assert schemes_equivalent(parse_scheme(w1), parse_scheme(w2), group) is expected

    def test_equivalence_relation_on_random_hexagons(self):
        rng = random.Random(61)
        group = full_dihedral(6)
        pool = []
        for _ in range(10):
            w = random_scheme(rng, 6)
            pool.append(w)
            pool += [apply_symmetry(w, rng.choice(group.elements)) for _ in range(2)]
        n = len(pool)
        eq = [[schemes_equivalent(pool[i], pool[j], group) for j in range(n)] for i in range(n)]
        for i in range(n):
            assert eq[i][i]
            for j in range(n):
                assert eq[i][j] == eq[j][i]
                if not eq[i][j]:
                    continue
                for k in range(n):
                    if eq[j][k]:
                        assert eq[i][k]
        # every scheme shares a class with its own images
        for base in range(0, n, 3):
            assert eq[base][base + 1] and eq[base][base + 2]
