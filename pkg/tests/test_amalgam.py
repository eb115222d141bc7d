import random

import pytest

from tamepoly.amalgam import (
    E1,
    E2,
    AmalgamForm,
    BlockForm,
    ShearWord,
    e1e2_normal_form,
    normal_form,
    parse_shear_word,
    side_of,
)
from tamepoly.automorph import (
    IDENTITY,
    AutoWord,
    Linear,
    NotAutomorphismError,
    TriangularX,
    TriangularY,
    classify,
    compose,
    parse_auto,
)
from tamepoly.polycore import UniPoly
from tamepoly.sampling import random_auto, random_block_form, random_shear_word

A = parse_auto


def _check_form(nf: AmalgamForm, phi):
    assert nf.evaluate() == phi
    assert classify(nf.affine_head) == "Affine"
    nf.check()
    for f in nf.factors:
        assert classify(f) != "Affine"
    # all factors but the last are plain triangular maps on their side
    for f, side in zip(nf.factors[:-1], nf.sides):
        assert classify(f) == side


def test_affine_swap():
    nf = normal_form(A("y; x"))
    assert nf.affine_head == A("y; x") and nf.factors == ()


def test_single_upper_factor():
    nf = normal_form(A("x + y^2; y"))
    assert nf.affine_head == IDENTITY and nf.sides == ("TUT",)
    assert nf.factors[0] == A("x + y^2; y")


def test_two_alternating_factors():
    phi = compose(A("x + y^2; y"), A("x; y + x^3"))
    nf = normal_form(phi)
    assert len(nf.factors) == 2 and nf.sides[0] != nf.sides[1]
    _check_form(nf, phi)


def test_affine_on_both_ends():
    # needs affine content on both sides of the shear
    L = A("x + y; y")
    phi = compose(L, A("x; y + x^2"), A("2*x - y + 1; x + y"))
    nf = normal_form(phi)
    _check_form(nf, phi)


def test_rejects_non_automorphism():
    with pytest.raises(NotAutomorphismError):
        normal_form(A("x; x*y"))


def test_random_recomposition():
    rng = random.Random(31)
    for _ in range(60):
        phi = random_auto(rng, 6, 3)
        _check_form(normal_form(phi), phi)


def test_same_map_same_form():
    # commuting triangular pieces composed in either order give the same map and form
    rng = random.Random(4)
    for _ in range(20):
        f, g = UniPoly([0, 0, rng.randint(1, 3)]), UniPoly([0, 0, 0, rng.randint(1, 3)])
        s = TriangularY(UniPoly([0, 0, 1]))
        w1 = AutoWord((TriangularX(f), TriangularX(g), s, Linear(1, 0, 1, 1)))
        w2 = AutoWord((TriangularX(g), TriangularX(f), s, Linear(1, 0, 1, 1)))
        assert w1.evaluate() == w2.evaluate()
        assert normal_form(w1.evaluate()) == normal_form(w2.evaluate())


def test_side_of():
    assert side_of(A("x + y^2; 2*y + x")) == "TUT"
    assert side_of(A("x - y; y + x^3")) == "TLT"
    assert side_of(A("y; x")) == "Affine"
    assert side_of(compose(A("x + y^2; y"), A("x; y + x^2"))) == "General"


def test_e1e2_examples():
    assert e1e2_normal_form([E1(1, 2), E1(-1, 2)]).is_identity()
    nf = e1e2_normal_form([E1(1, 2), E2(1, 2)])
    assert [kind for kind, _ in nf.blocks] == ["E1", "E2"]
    assert e1e2_normal_form([E2(1, 3), E2(2, 3), E2(-3, 3)]).is_identity()


def test_e1e2_remerges_after_cancellation():
    w = [E1(1, 2), E2(1, 3), E2(-1, 3), E1(2, 4)]
    nf = e1e2_normal_form(w)
    assert nf.blocks == (("E1", ((2, 1), (4, 2))),)


def test_e1e2_inverse_collapses_and_evaluates():
    rng = random.Random(41)
    for _ in range(100):
        w = random_shear_word(rng, 6, 3, 2)
        assert e1e2_normal_form(w + w.inverse()).is_identity()
        nf = e1e2_normal_form(w)
        kinds = [kind for kind, _ in nf.blocks]
        assert all(a != b for a, b in zip(kinds, kinds[1:]))
        assert all(items for _, items in nf.blocks)
        if len(w.letters) <= 4:
            assert nf.evaluate() == w.evaluate()


def test_block_forms_are_not_identity():
    rng = random.Random(43)
    for _ in range(30):
        b = random_block_form(rng, 3)
        assert b.evaluate() != IDENTITY
        assert e1e2_normal_form(b.to_word()) == b


def test_letters_validate():
    with pytest.raises(ValueError):
        E1(0, 2)
    with pytest.raises(ValueError):
        E2(1, 1)


def test_word_file_format():
    w = parse_shear_word("# a comment\nE1 1 2\n\nE2 -3/2 3  # trailing\n")
    assert w == ShearWord((E1(1, 2), E2("-3/2", 3)))
    with pytest.raises(ValueError) as info:
        parse_shear_word("E1 1 2\nE3 1 2\n")
    assert "line 2" in str(info.value)


def test_json_shape():
    rec = normal_form(compose(A("x + y^2; y"), A("x; y + x^3"))).to_json()
    assert set(rec) == {"head", "factors"}
    assert [f["side"] for f in rec["factors"]] == ["TUT", "TLT"]
    assert BlockForm().to_json() == []
