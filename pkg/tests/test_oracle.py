from itertools import product

import pytest

from coordcount.occurrence import Side, saturate
from coordcount.oracle import ab_derive, check_witness, coord_derive, derivable_types
from coordcount.typealg import as_seq, count_invariance_holds, parse_type

from universe import Universe


def T(*texts):
    return set(map(parse_type, texts))


def test_single_application():
    assert ab_derive(["x/y", "y"], "x")


def test_wrong_direction():
    assert not ab_derive([r"x\y", "y"], "x")


def test_count_invariant_but_underivable():
    assert count_invariance_holds(["(x/y)/z", "y", "z"], "x")
    assert not ab_derive(["(x/y)/z", "y", "z"], "x")
    # the argument order that does reduce
    assert ab_derive(["(x/z)/y", "y", "z"], "x")


def test_leftward_application():
    assert ab_derive(["x", r"z\x"], "z")
    assert ab_derive(["np", r"(s\np)/np", "np"], "s")


def test_derivable_types():
    assert derivable_types(["x/y", "y"]) == T("x")
    assert derivable_types(["x"]) == T("x")
    assert derivable_types(["x/y"]) == T("x/y")
    assert derivable_types(["x/y", "y/z", "z"]) == T("x")


def test_derivable_types_ambiguous():
    # both bracketings are tried; neither reduces the first string
    assert derivable_types(["x/y", "y", r"z\y"]) == set()
    assert derivable_types(["s/x", "x", r"s\s"]) == T("s")


def test_empty_rejected():
    with pytest.raises(ValueError):
        derivable_types([])


def test_coord_shared_argument():
    ok, w = coord_derive(["x/y", "y"], ["y", r"z\x"], "z")
    assert ok
    assert w.y_prime == as_seq(["x/y"]) and w.c1 == as_seq(["y"])
    assert w.c2 == as_seq(["y"]) and w.z_prime == as_seq([r"z\x"])
    assert w.c == parse_type("y")
    assert check_witness(w, "z")


def test_coord_identical_conjuncts():
    ok, w = coord_derive(["x"], ["x"], "x")
    assert ok and w.y_prime == () and w.z_prime == () and w.c == parse_type("x")


def test_coord_bound_to_fail():
    assert coord_derive(["x/y", "y/u"], ["y/u", "u", r"z\x\u"], "z") == (False, None)


def test_coord_with_positive_u_shared():
    ok, w = coord_derive(["x/y", "y/u"], ["y/u", "u", r"z\x"], "z")
    assert ok and w.c == parse_type("y/u")


def test_coord_witness_order_prefers_longest_conjuncts():
    ok, w = coord_derive(["s/x", "x"], ["s/x", "x"], "s")
    assert ok and len(w.c1) == 2 and len(w.c2) == 2 and w.c == parse_type("s")


SMALL = Universe("xys", 1)


def test_ab_derivable_implies_count_invariance_small():
    for n in (1, 2, 3):
        for seq in product(SMALL.types, repeat=n):
            for goal in SMALL.types[:3]:
                if ab_derive(seq, goal):
                    assert count_invariance_holds(seq, goal), seq


def test_derivable_sequences_pass_side_verdicts_small():
    for n in (1, 2, 3):
        for seq in product(SMALL.types, repeat=n):
            if any(ab_derive(seq, g) for g in SMALL.types[:3]):
                assert saturate(seq, Side.LEFT)[1].ok, seq
                assert saturate(seq, Side.RIGHT)[1].ok, seq


def test_witnesses_validate():
    seqs = [s for n in (1, 2) for s in product(SMALL.types, repeat=n)][:150]
    found = 0
    for l in seqs[:60]:
        for r in seqs:
            ok, w = coord_derive(l, r, "s")
            if ok:
                found += 1
                assert check_witness(w, "s")
                assert w.y_prime + w.c1 == l and w.c2 + w.z_prime == r
    assert found


def test_long_sequences_stay_fast():
    seq = ["s/x", "x/y", "y/x", "x/y", "y/x", "x/y", "y/x", "x"]
    assert ab_derive(seq, "s")
