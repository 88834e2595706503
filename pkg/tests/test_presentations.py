"""Presentation parsing, rendering, the family generator, abelianization."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from knotgroups.errors import (
    DuplicateGeneratorError,
    InvalidParameterError,
    PresentationSyntaxError,
    UnknownGeneratorError,
)
from knotgroups.presentations import (
    Presentation,
    abelianize,
    parse,
    parse_word,
    rbg_family,
    smith_normal_form,
)
from knotgroups.words import Word

THREE_GEN_TEXT = (
    "< x,y,a | x^-1*y*x*y*x^-1*y^-1, x^-1*a*x*a^-1*x^-1*y*a*y^-1 >"
)


class TestParse:
    def test_free_group_rank_one(self):
        pres = parse("< x | >")
        assert pres.generators == ("x",)
        assert pres.relators == ()
        assert pres.markers == {}

    def test_three_generator_two_relator(self):
        pres = parse(THREE_GEN_TEXT)
        assert pres.generators == ("x", "y", "a")
        assert len(pres.relators) == 2
        assert pres.relators[1] == parse_word(
            "x^-1*a*x*a^-1*x^-1*y*a*y^-1", ("x", "y", "a")
        )

    def test_parenthesized_powers(self):
        pres = parse("< x,y | (y*x)^-3 >")
        yx = Word((("y", 1), ("x", 1)))
        assert pres.relators[0] == yx**-3

    def test_markers(self):
        pres = parse("< x,a | >\nmeridian mu: x^-1*a*x\nmeridian nu: a\n")
        assert list(pres.markers) == ["mu", "nu"]
        assert pres.markers["mu"] == parse_word("x^-1*a*x", ("x", "a"))

    def test_whitespace_insensitive(self):
        a = parse("<x,y|x*y^2>")
        b = parse("  < x , y |\n   x * y ^ 2 >  ")
        assert a == b

    def test_unknown_generator(self):
        with pytest.raises(UnknownGeneratorError):
            parse("< x | x*y >")

    def test_duplicate_generator(self):
        with pytest.raises(DuplicateGeneratorError):
            parse("< x,x | >")

    def test_duplicate_marker(self):
        with pytest.raises(DuplicateGeneratorError):
            parse("< x | >\nmeridian m: x\nmeridian m: x^-1\n")

    def test_empty_input(self):
        with pytest.raises(PresentationSyntaxError):
            parse("")

    def test_syntax_error_carries_position(self):
        with pytest.raises(PresentationSyntaxError) as err:
            parse("< x |\n x* >")
        assert err.value.line == 2
        assert err.value.column == 5  # points at the offending '>'

    def test_reserved_keyword(self):
        with pytest.raises(PresentationSyntaxError):
            parse("< meridian | >")

    def test_trailing_junk(self):
        with pytest.raises(PresentationSyntaxError):
            parse("< x | > nonsense")

    def test_identity_relator_dropped(self):
        pres = parse("< x,y | x*x^-1, y^2 >")
        assert pres.relators == (Word((("y", 2),)),)


class TestRender:
    def test_round_trip_values(self):
        for text in (
            "< x | >",
            THREE_GEN_TEXT,
            "< x,a | a^2 >\nmeridian mu: x^-1*a*x\n",
        ):
            pres = parse(text)
            assert parse(pres.render()) == pres

    def test_round_trip_canonical_text(self):
        canonical = rbg_family(2).render()
        assert parse(canonical).render() == canonical

    def test_marker_lines_in_order(self):
        lines = rbg_family(1).render().splitlines()
        assert lines[1] == "meridian meridian_B: x"
        assert lines[2] == "meridian meridian_G: a"


class TestFamily:
    def test_relator1_is_rotation_of_conventional_form(self):
        # (yx) y (yx)^-1 x^-1 and the conventional x^-1 y x y x^-1 y^-1
        # are the same relator up to cyclic rotation
        fam = rbg_family(1)
        target = parse_word("x^-1*y*x*y*x^-1*y^-1", ("x", "y"))
        assert _cyclically_equal(fam.relators[0], target)

    def test_relator2_literal(self):
        fam = rbg_family(1)
        assert fam.relators[1] == parse_word(
            "x^-1*a*x*a^-1*x^-1*y*a*y^-1", ("x", "y", "a")
        )

    def test_construction_formula(self):
        for m in (1, 2, 5):
            fam = rbg_family(m)
            x, y = Word.generator("x"), Word.generator("y")
            yx = y * x
            assert fam.relators[0] == yx**m * y * yx**-m * ~x

    def test_exponent_sums_independent_of_m(self):
        for m in (1, 2, 3, 7):
            fam = rbg_family(m)
            assert fam.relation_matrix() == [[-1, 1, 0], [-1, 0, 1]]

    def test_relator1_exponent_sums_m3(self):
        r1 = rbg_family(3).relators[0]
        assert r1.exponent_sum("x") == -1
        assert r1.exponent_sum("y") == 1

    def test_relator1_size_linear_in_m(self):
        # the reduced relator alternates single letters: 4m + 2 syllables
        for m in (1, 4, 61):
            r1 = rbg_family(m).relators[0]
            assert len(r1.syllables) == 4 * m + 2
            assert all(abs(e) == 1 for _, e in r1.syllables)

    def test_markers(self):
        fam = rbg_family(3)
        assert fam.markers["meridian_B"] == Word.generator("x")
        assert fam.markers["meridian_G"] == Word.generator("a")

    def test_invalid_parameter(self):
        for bad in (0, -2, "3"):
            with pytest.raises(InvalidParameterError):
                rbg_family(bad)


def _cyclically_equal(u, v):
    if u.letter_length() != v.letter_length():
        return False
    letters = []
    for g, e in u.syllables:
        sign = 1 if e > 0 else -1
        letters.extend([(g, sign)] * abs(e))
    for k in range(len(letters) or 1):
        rotated = Word(letters[k:] + letters[:k])
        if rotated == v:
            return True
    return False


class TestAbelianize:
    def test_family_is_infinite_cyclic_all_weights_one(self):
        for m in range(1, 6):
            report = abelianize(rbg_family(m))
            assert report.invariant_factors == ()
            assert report.free_rank == 1
            assert report.weights == {"x": 1, "y": 1, "a": 1}

    def test_free_rank_one(self):
        report = abelianize(parse("< x | >"))
        assert report.free_rank == 1
        assert report.weights == {"x": 1}

    def test_torsion(self):
        report = abelianize(parse("< x | x^2 >"))
        assert report.invariant_factors == (2,)
        assert report.free_rank == 0
        assert report.weights is None

    def test_trefoil_weights(self):
        report = abelianize(parse("< a,b | a*b*a*b^-1*a^-1*b^-1 >"))
        assert report.is_infinite_cyclic
        assert report.weights == {"a": 1, "b": 1}

    def test_mixed_torsion_and_rank(self):
        # < x, y, z | x^2, y^6 > has H1 = Z/2 + Z/6 + Z
        report = abelianize(parse("< x,y,z | x^2, y^6 >"))
        assert report.invariant_factors == (2, 6)
        assert report.free_rank == 1
        assert report.weights is None  # torsion present

    def test_weight_sign_normalization(self):
        # the quotient map to Z is unique up to a global sign, and the
        # first generator with nonzero weight is normalized to be positive
        report = abelianize(parse("< x,y | x*y >"))
        assert report.free_rank == 1
        assert report.weights == {"x": 1, "y": -1}


def _matrix_mul(a, b):
    return [
        [sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def _det(m):
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    for i in range(n):
        minor = [row[:i] + row[i + 1 :] for row in m[1:]]
        total += (-1) ** i * m[0][i] * _det(minor)
    return total


int_matrices = st.integers(min_value=1, max_value=4).flatmap(
    lambda rows: st.integers(min_value=1, max_value=4).flatmap(
        lambda cols: st.lists(
            st.lists(st.integers(min_value=-6, max_value=6),
                     min_size=cols, max_size=cols),
            min_size=rows, max_size=rows,
        )
    )
)


@settings(max_examples=150)
@given(int_matrices)
def test_smith_normal_form_properties(matrix):
    d, u, v = smith_normal_form(matrix)
    rows, cols = len(matrix), len(matrix[0])
    # decomposition holds
    assert _matrix_mul(_matrix_mul(u, matrix), v) == d
    # u, v unimodular
    assert abs(_det(u)) == 1
    assert abs(_det(v)) == 1
    # d diagonal, nonnegative, successive divisibility
    diag = []
    for i in range(rows):
        for j in range(cols):
            if i != j:
                assert d[i][j] == 0
            else:
                diag.append(d[i][j])
    assert all(x >= 0 for x in diag)
    for a, b in zip(diag, diag[1:]):
        if a == 0:
            assert b == 0
        else:
            assert b % a == 0


def test_presentation_rejects_foreign_generators():
    with pytest.raises(UnknownGeneratorError):
        Presentation(("x",), (Word((("y", 1),)),))
    with pytest.raises(UnknownGeneratorError):
        Presentation(("x",), (), {"mu": Word((("z", 1),))})


def test_presentation_rejects_identity_marker():
    with pytest.raises(InvalidParameterError):
        Presentation(("x",), (), {"mu": Word()})


def test_random_render_parse_round_trip():
    rng = random.Random(7)
    gens = ("x", "y", "z")
    for _ in range(25):
        relators = [
            Word(
                [
                    (rng.choice(gens), rng.choice((-3, -2, -1, 1, 2, 3)))
                    for _ in range(rng.randint(1, 6))
                ]
            )
            for _ in range(rng.randint(0, 3))
        ]
        markers = {}
        if rng.random() < 0.5:
            markers["mu"] = Word([(rng.choice(gens), rng.choice((-1, 1)))])
        pres = Presentation(gens, relators, markers)
        assert parse(pres.render()) == pres
