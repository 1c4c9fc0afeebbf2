import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from rauzyveech.errors import (
    ClassSearchFailed,
    ForbiddenPosition,
    IllegalInsertion,
    InvalidPermutation,
    NotComposable,
    NotIrreducible,
    NotStandard,
    SizeExceeded,
)
from rauzyveech.perm import (
    Permutation,
    Walk,
    degeneracy_witness,
    extension_map_on_walk,
    format_permutation,
    hyperelliptic,
    inverse_step,
    is_degenerate,
    is_irreducible,
    is_standard,
    orbit_map,
    parse_permutation,
    rauzy_class,
    rauzy_step,
    representatives,
    simple_extension,
    simple_reduction,
    split_singularity,
    stratum_profile,
    walk_from_kinds,
)


def P(top, bottom):
    return Permutation.from_rows(top.split(), bottom.split())


TAU6 = P("1 2 3 4 5 6", "6 3 2 5 4 1")


def test_rows_must_match():
    with pytest.raises(InvalidPermutation):
        P("A B C", "A B D")
    with pytest.raises(InvalidPermutation):
        P("A B", "B A")


def test_text_round_trip():
    text = "1 2 3 4 5 6\n6 3 2 5 4 1\n"
    assert format_permutation(parse_permutation("  1 2  3 4 5 6 \n\n6 3 2 5 4 1")) == text
    with pytest.raises(InvalidPermutation):
        parse_permutation("A B C\n")


def test_irreducible():
    assert is_irreducible(TAU6)
    assert not is_irreducible(P("A B C", "A C B"))
    assert is_irreducible(P("A B C", "C B A"))


def test_degeneracy():
    # condition 3 at j=1 is met before condition 2 at j=2 in scan order
    assert is_degenerate(P("A B C", "C B A"))
    assert degeneracy_witness(P("A B C", "C B A")) == (3, 1)
    assert not is_degenerate(TAU6)
    assert not is_degenerate(representatives("tau-minimal", 3))


def test_top_and_bottom_steps():
    a = rauzy_step(TAU6, "top")
    assert a.target.rows() == (tuple("123456"), tuple("613254"))
    assert (TAU6.name(a.winner), TAU6.name(a.loser)) == ("6", "1")
    p = P("A B C", "C B A")
    b = rauzy_step(p, "bottom")
    assert b.target.rows() == (tuple("ACB"), tuple("CBA"))
    assert (p.name(b.winner), p.name(b.loser)) == ("A", "C")


def test_inverse_step_undoes_forward():
    for v in rauzy_class(TAU6):
        for kind in ("top", "bottom"):
            a = rauzy_step(v, kind)
            back = inverse_step(a.target, kind)
            assert back.target == v
            assert (back.winner, back.loser) == (a.winner, a.loser)


def test_class_sizes():
    assert len(rauzy_class(P("A B C D", "D C B A"))) == 7
    assert len(rauzy_class(P("A B C", "C B A"))) == 3
    for d in range(3, 7):
        assert len(rauzy_class(hyperelliptic(d))) == 2 ** (d - 1) - 1


def test_class_is_strongly_connected():
    assert rauzy_class(TAU6).is_strongly_connected()


def test_class_size_cap():
    with pytest.raises(SizeExceeded):
        rauzy_class(TAU6, max_size=10)


def test_path_and_failure():
    cls = rauzy_class(TAU6)
    target = cls.vertices[-1]
    w = cls.path_to(TAU6, target)
    assert w.start == TAU6 and w.end == target
    with pytest.raises(ClassSearchFailed):
        cls.path(TAU6, lambda q: False)


def test_walks_compose_and_invert():
    w = walk_from_kinds(TAU6, ["top", "bottom", "top"])
    assert len(w) == 3
    assert (w + w.inverse()).is_cycle()
    assert Walk(TAU6).end == TAU6
    with pytest.raises(NotComposable):
        w + w


def test_random_cycles_close():
    cls = rauzy_class(TAU6)
    rng = random.Random(1)
    for _ in range(20):
        assert cls.random_cycle(TAU6, 10, rng).is_cycle()


def test_standard():
    assert is_standard(TAU6)
    assert not is_standard(P("A B C", "C A B"))


def test_profiles():
    assert stratum_profile(TAU6).orders == (4,) and stratum_profile(TAU6).genus == 3
    assert stratum_profile(representatives("tau-d", 7)).orders == (2, 2)
    s8 = stratum_profile(representatives("sigma-d", 8))
    assert s8.orders == (6,) and s8.genus == 4
    assert stratum_profile(TAU6).name() == "H(4)"


def test_orbit_map_is_bijection():
    for d in range(6, 12):
        for fam in ("tau-d", "sigma-d"):
            if fam == "sigma-d" and d < 8:
                continue
            s = orbit_map(representatives(fam, d)).successor
            assert sorted(s.values()) == sorted(s)


@settings(max_examples=60, deadline=None)
@given(st.permutations(list("ABCDEFG")))
def test_profile_gauss_bonnet(bottom):
    p = Permutation.from_rows(list("ABCDEFG"), bottom)
    if not is_irreducible(p) or is_degenerate(p):
        return
    prof = stratum_profile(p)
    assert sum(prof.orders) == 2 * prof.genus - 2
    assert p.d == 2 * prof.genus + len(prof.orders) - 1


def test_representatives():
    assert representatives("tau-d", 6) == TAU6
    assert representatives("sigma-d", 8).rows()[1] == tuple("83276541")
    m = representatives("tau-minimal", 3)
    assert m.rows() == (tuple("012356"), tuple("326510"))


def test_reduction_and_extension_round_trip():
    q = simple_reduction(representatives("tau-H2n", 3), "4")
    assert q.d == 6
    back = simple_extension(q, "4", "5", "6")
    assert stratum_profile(back).orders == (2, 2)
    with pytest.raises(IllegalInsertion):
        simple_extension(TAU6, "1", "2", "3")
    with pytest.raises(ForbiddenPosition):
        simple_extension(TAU6, "X", "1", "6")


def test_reduction_reducible():
    found = None
    for bottom in itertools.permutations("ABCD"):
        p = Permutation.from_rows("ABCD", bottom)
        if not is_irreducible(p):
            continue
        bad = [a for a in "ABCD" if _reduces_badly(p, a)]
        if bad:
            found = (p, bad[0])
            break
    assert found is not None
    with pytest.raises(NotIrreducible):
        simple_reduction(*found)


def _reduces_badly(p, a):
    try:
        simple_reduction(p, a)
    except NotIrreducible:
        return True
    return False


def test_split_profiles():
    for m11, want in ((1, (1, 3)), (2, (2, 2)), (3, (1, 3))):
        q, ins = split_singularity(TAU6, m11)
        prof = stratum_profile(q)
        assert prof.orders == want and prof.genus == 3 and q.d == 7
        assert ins.apply(TAU6) == q
    with pytest.raises(NotStandard):
        split_singularity(P("A B C D", "C A D B"), 1)


def test_extension_map_tracks_walks():
    q, ins = split_singularity(TAU6, 2)
    rng = random.Random(0)
    for _ in range(50):
        w = walk_from_kinds(TAU6, [rng.choice(("top", "bottom")) for _ in range(rng.randint(0, 15))])
        ew = extension_map_on_walk(w, ins)
        assert ew.start == q and ew.end == ins.apply(w.end)
    assert len(extension_map_on_walk(Walk(TAU6), ins)) == 0
