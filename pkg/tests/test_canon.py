import random

import pytest

from shear_oracle import brute_force_reducing_shear, lowered
from tamepoly.automorph import apply, compose, parse_auto
from tamepoly.canon import (
    Budget,
    Equivalent,
    Inapplicable,
    Model,
    NeedsExtension,
    No,
    NotEquivalent,
    ShearStep,
    Unknown,
    Yes,
    canonical_model,
    equivalent,
    find_reducing_shear,
    is_coordinate,
    test_nonequiv_thm11 as nonequiv_screen,
)
from tamepoly.newton import newton_shape
from tamepoly.polycore import BiPoly, parse_poly
from tamepoly.sampling import random_auto, random_poly

P = parse_poly


def test_shear_lowers_x3_plus_y():
    step = find_reducing_shear(P("x^3 + y"))
    assert isinstance(step, ShearStep)
    assert (step.orientation, step.k, step.lambda2) == ("y", 3, -1)
    assert step.apply(P("x^3 + y")) == P("y")


def test_shear_none_for_cusp():
    assert find_reducing_shear(P("x^2 - y^3")) is None


def test_shear_needs_linear_change():
    p = P("(x+y)^3 + x")
    # no bare monomial shear works
    for k in (2, 3):
        for lam in (-2, -1, 1, 2):
            assert p.shear("y", k, lam).degree >= 3 and p.shear("x", k, lam).degree >= 3
    step = find_reducing_shear(p)
    assert isinstance(step, ShearStep) and step.apply(p).degree < 3


def test_irrational_shear_reported():
    # x -> x - sqrt(2) y^2 would cancel the top form; nothing rational does
    p = P("x^2 - 2*y^4 + y")
    out = find_reducing_shear(p)
    assert isinstance(out, NeedsExtension)
    assert out.minimal_poly.degree >= 2


def test_canonical_model_examples():
    m = canonical_model(P("(x + y^2)^2 + y"))
    assert isinstance(m, Model) and m.degree == 1
    assert list(m.trace.degrees) == [4, 2, 1]
    assert m.trace.replay(P("(x + y^2)^2 + y")) == m.canonical
    m = canonical_model(P("x"))
    assert m.canonical == P("x") and not m.trace.steps
    m = canonical_model(P("x^2 - y^3"))
    assert m.canonical == P("x^2 - y^3") and not m.trace.steps


def test_trace_strictly_decreasing_on_random_images():
    rng = random.Random(8)
    for _ in range(40):
        p = apply(random_auto(rng, 4, 3), P("x^2 - y^3"))
        m = canonical_model(p)
        assert isinstance(m, Model)
        degs = list(m.trace.degrees)
        assert all(a > b for a, b in zip(degs, degs[1:]))
        assert m.trace.replay(p) == m.canonical
        if p.degree <= 12:
            assert apply(m.trace.automorphism(), p) == m.canonical


def test_shear_search_matches_brute_force_small():
    rng = random.Random(21)
    for _ in range(12):
        p = random_poly(rng, rng.randint(2, 4), 2, 0.4)
        oracle = brute_force_reducing_shear(p)
        ours = find_reducing_shear(p)
        if oracle is not None:
            assert lowered(p, oracle).degree < p.degree
        assert (oracle is not None) == isinstance(ours, ShearStep)


def test_is_coordinate_examples():
    out = is_coordinate(P("y + x^3"))
    assert isinstance(out, Yes)
    assert out.automorphism.img_x == P("y + x^3") and out.word.evaluate().img_x == P("y + x^3")
    assert isinstance(is_coordinate(P("x^2 - y^3")), No)
    assert isinstance(is_coordinate(P("5")), No)


def test_coordinates_from_random_maps():
    rng = random.Random(9)
    for _ in range(30):
        phi = random_auto(rng, 4, 3)
        out = is_coordinate(phi.img_x)
        assert isinstance(out, Yes)
        assert out.word.evaluate().img_x == phi.img_x


def test_newton_shape_examples():
    d = newton_shape(P("x^2 - y^3"))
    assert (d.n, d.m, d.mixed) == (2, 3, {})
    d = newton_shape(P("x^3 + y^2 + x*y"))
    assert (d.n, d.m, d.mixed) == (3, 2, {(1, 1): 1})
    assert newton_shape(P("x^2*y + x")) is None
    with pytest.raises(ValueError):
        newton_shape(P("4"))


def test_screen_examples():
    out = nonequiv_screen(P("x^3 + y^2 + x*y"), P("x^5 + y^3 + x*y"))
    assert isinstance(out, NotEquivalent) and out.certificate["rule"] == "thm1.1"
    assert out.certificate["max_p"] == 3 and out.certificate["max_q"] == 5
    out = nonequiv_screen(P("x^2 + y^4"), P("x"))
    assert isinstance(out, Inapplicable) and out.reason == "n-divides-m"
    out = nonequiv_screen(P("x^3 + y^2"), P("x^3 + y^2"))
    assert isinstance(out, Inapplicable) and out.reason == "max-equal"


def test_screen_never_fires_on_images():
    rng = random.Random(12)
    for base in ("x^3 + y^2 + x*y", "x^2 - y^3", "x^5 + y^3 + x*y"):
        p = P(base)
        for _ in range(20):
            q = apply(random_auto(rng, 4, 3), p)
            assert isinstance(nonequiv_screen(p, q), Inapplicable)


def test_equivalent_finds_witness():
    p = P("x^2 - y^3")
    phi = compose(parse_auto("x; y + x^2"), parse_auto("x - 2*y; y + 1"))
    q = apply(phi, p)
    out = equivalent(p, q)
    assert isinstance(out, Equivalent)
    assert apply(out.witness, p) == q


def test_equivalent_random_words():
    rng = random.Random(13)
    for base in ("x^2 - y^3", "x^3 + y^2 + x*y", "x"):
        p = P(base)
        for _ in range(6):
            q = apply(random_auto(rng, 4, 3), p)
            out = equivalent(p, q)
            assert isinstance(out, Equivalent), (base, q)
            assert apply(out.witness, p) == q


def test_equivalent_negative_certificates():
    out = equivalent(P("x^3 + y^2 + x*y"), P("x^5 + y^3 + x*y"))
    assert isinstance(out, NotEquivalent) and out.certificate["rule"] == "thm1.1"
    # x^2 - y^3 vs x^2 - y^5: the shape screen already separates them
    out = equivalent(P("x^2 - y^3"), P("x^2 - y^5"))
    assert isinstance(out, NotEquivalent)
    # x*y has no triangle shape, so only the canonical degrees (2 vs 3) decide
    out = equivalent(P("x*y"), P("x^2 - y^3"))
    assert isinstance(out, NotEquivalent) and out.certificate["rule"] == "canon-degree"


def test_equivalent_unknown_when_no_rational_map():
    # x -> x, y -> 2^(1/3) y would do it; no rational map does
    out = equivalent(P("x^2 - y^3"), P("x^2 - 2*y^3"))
    assert isinstance(out, Unknown)


def test_budget_validation():
    with pytest.raises(ValueError):
        Budget(length=0)
    with pytest.raises(ValueError):
        equivalent(P("x"), P("y"), budget="big")


def test_constants():
    assert isinstance(equivalent(BiPoly.const(3), BiPoly.const(3)), Equivalent)
    assert isinstance(equivalent(BiPoly.const(3), P("x")), NotEquivalent)
