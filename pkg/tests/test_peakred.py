import random
from fractions import Fraction
from itertools import product

from hypothesis import given
from hypothesis import strategies as st

from strategies import unipolys
from tamepoly.peakred import (
    ET1,
    ET2,
    ET3,
    SWAP,
    ETWord,
    PairsEquivalent,
    PairsUnknown,
    PolyPair,
    apply_et,
    apply_word,
    find_reducing_et,
    measure,
    move_from_json,
    pairs_equivalent,
    parse_pair,
    reduce_pair,
)
from tamepoly.polycore import UniPoly
from tamepoly.sampling import random_et_word, random_pair

t = UniPoly.t()
Q = parse_pair


def test_apply_et_examples():
    assert apply_et(ET2(-1, 2), Q("t; t^2")) == Q("t; 0")
    assert apply_et(SWAP, Q("t^2; t + 1")) == Q("t + 1; t^2")
    assert apply_et(ET1(1, 2), Q("t; t")) == Q("t + t^2; t")


def test_find_reducing_examples():
    m = find_reducing_et(Q("t^3 + t; t"))
    assert m == ET1(-1, 3)
    assert find_reducing_et(Q("t^2; t^3")) is None
    m = find_reducing_et(Q("t; t"))
    assert m(Q("t; t")) == Q("0; t")


def test_reduce_pair_examples():
    minimal, word = reduce_pair(Q("t^3 + t; t"))
    assert minimal == Q("0; t") and len(word) == 2
    minimal, word = reduce_pair(Q("t^2; t^3"))
    assert minimal == Q("t^2; t^3") and len(word) == 0


def test_coprime_monomials_are_minimal():
    for k, l in [(3, 2), (5, 2), (5, 3), (7, 4)]:
        pair = PolyPair(t**l, t**k)
        assert reduce_pair(pair) == (pair, ETWord())


def _oracle_has_reducing(pair):
    """Any ET from a generous finite family that lowers the measure."""
    u, v = pair
    base = measure(pair)
    D = max(u.degree, v.degree, 1)
    moves = []
    mus = [Fraction(c) for c in (1, -1, 2, -2, Fraction(1, 2), Fraction(-1, 3))]
    for k in range(2, int(D) + 1):
        forced = []
        if u and v:
            forced.append(-Fraction(u.lc()) / Fraction(v.lc()) ** k)
            forced.append(-Fraction(v.lc()) / Fraction(u.lc()) ** k)
        for mu in mus + forced:
            moves += [ET1(mu, k), ET2(mu, k)]
    rs = [Fraction(c) for c in range(-2, 3)]
    if u and v:
        rs += [Fraction(u.lc()) / v.lc(), Fraction(v.lc()) / u.lc()]
    for a1, a2, b1, b2 in product(rs, repeat=4):
        if a1 * b2 - a2 * b1:
            moves.append(ET3(a1, a2, b1, b2))
    return any(measure(m(pair)) < base for m in moves)


@given(st.integers(0, 10**6))
def test_find_reducing_matches_enumeration(seed):
    rng = random.Random(seed)
    pair = random_pair(rng, 3, 2)
    if rng.random() < 0.5:
        pair = apply_word(random_et_word(rng, 2, 2, 2), pair)
        if max(pair.u.degree, pair.v.degree) > 6:
            return
    found = find_reducing_et(pair)
    if found is not None:
        assert measure(found(pair)) < measure(pair)
    assert (found is not None) == _oracle_has_reducing(pair)


@given(unipolys(4), unipolys(4))
def test_reduction_trace_strict_and_replays(u, v):
    pair = PolyPair(u, v)
    minimal, word = reduce_pair(pair)
    assert word(pair) == minimal
    prev = measure(pair)
    for m in word.measures:
        assert m < prev
        prev = m
    assert reduce_pair(minimal) == (minimal, ETWord())


def test_prepended_words_keep_minimal_measure():
    rng = random.Random(11)
    for _ in range(60):
        pair = random_pair(rng)
        w = random_et_word(rng, 6, 3, 2)
        base = measure(reduce_pair(pair)[0])
        assert measure(reduce_pair(apply_word(w, pair))[0]) == base


def test_pairs_equivalent_examples():
    out = pairs_equivalent(Q("t^2; t^3"), Q("4*t^2; 8*t^3"))
    assert isinstance(out, PairsEquivalent)
    assert out.witness(out.minimal1) == out.minimal2
    same = pairs_equivalent(Q("t^2; t^3"), Q("t^2; t^3"))
    assert isinstance(same, PairsEquivalent)
    assert same.witness(Q("t^2; t^3")) == Q("t^2; t^3")
    assert isinstance(pairs_equivalent(Q("t^2; t^3"), Q("t^2; t^5")), PairsUnknown)


def test_pairs_equivalent_recovers_constructed():
    rng = random.Random(3)
    hits = 0
    for _ in range(40):
        pair = random_pair(rng, 4)
        w = random_et_word(rng, 4, 2, 2)
        shift = UniPoly([rng.randint(-2, 2), rng.choice([1, -1, 2])])
        other = apply_word(w, PolyPair(pair.u.compose(shift), pair.v.compose(shift)))
        out = pairs_equivalent(pair, other)
        if isinstance(out, PairsEquivalent):
            hits += 1
            back = apply_word([m.inverse() for m in reversed(out.trace2.moves)], out.witness(out.trace1(pair)))
            assert back == other
    assert hits >= 30


def test_move_json_round_trip():
    for m in (ET1(Fraction(-3, 2), 3), ET2(2, 2), ET3(0, 1, 1, 0)):
        assert move_from_json(m.to_json()) == m
