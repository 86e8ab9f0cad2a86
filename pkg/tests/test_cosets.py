import pytest

from braidcat.cosets import (
    Enumeration,
    OverflowResult,
    Presentation,
    coset_action,
    enumerate_cosets,
    verify_table,
)
from braidcat.words import ALPHABET_ST, ALPHABET_XY, Alphabet, parse


def g0():
    return Presentation(
        ALPHABET_XY,
        (
            parse("x^4", ALPHABET_XY),
            parse("y^3", ALPHABET_XY),
            parse("x y x^2 Y X Y x^-2 y", ALPHABET_XY),
        ),
    )


def sl2():
    return Presentation(
        ALPHABET_ST,
        (parse("S^4", ALPHABET_ST), parse("S T S T S T S^-2", ALPHABET_ST)),
    )


@pytest.mark.parametrize("strategy", ["hlt", "felsch"])
def test_index_four_subgroup(strategy):
    sub = [parse("x y x^-2", ALPHABET_XY), parse("y", ALPHABET_XY)]
    res = enumerate_cosets(g0(), sub, strategy=strategy)
    assert isinstance(res, Enumeration)
    assert res.count == 4
    assert res.defined < 1000
    assert all(ok for _, ok in verify_table(res, g0(), sub))
    assert sorted(res.action["x"]) == [1, 2, 3, 4]


@pytest.mark.parametrize("strategy", ["hlt", "felsch"])
def test_whole_group_checks(strategy):
    for sub in (
        [parse("x", ALPHABET_XY), parse("y", ALPHABET_XY)],
        [parse("x y x^-2", ALPHABET_XY), parse("x", ALPHABET_XY)],
    ):
        res = enumerate_cosets(g0(), sub, strategy=strategy)
        assert res.count == 1
        assert all(ok for _, ok in verify_table(res, g0(), sub))


@pytest.mark.parametrize("strategy", ["hlt", "felsch"])
def test_matrix_group_pair_generates_everything(strategy):
    # The pair S^2 T, S^3 T generates the whole group: the quotient of
    # one by the other is S, and S together with S^3 T gives T.
    sub = [parse("S^2 T", ALPHABET_ST), parse("S^3 T", ALPHABET_ST)]
    res = enumerate_cosets(sl2(), sub, strategy=strategy)
    assert res.count == 1
    assert all(ok for _, ok in verify_table(res, sl2(), sub))


def test_strategies_agree_on_table():
    sub = [parse("x y x^-2", ALPHABET_XY), parse("y", ALPHABET_XY)]
    hlt = enumerate_cosets(g0(), sub, strategy="hlt")
    felsch = enumerate_cosets(g0(), sub, strategy="felsch")
    assert hlt.count == felsch.count
    # Tables may differ by numbering; compare cycle structures.
    def cycle_type(images):
        seen, sizes = set(), []
        for start in range(1, len(images) + 1):
            if start not in seen:
                k, size = start, 0
                while k not in seen:
                    seen.add(k)
                    size += 1
                    k = images[k - 1]
                sizes.append(size)
        return sorted(sizes)

    for gen in ("x", "y"):
        assert cycle_type(hlt.action[gen]) == cycle_type(felsch.action[gen])


def test_determinism():
    sub = [parse("x y x^-2", ALPHABET_XY), parse("y", ALPHABET_XY)]
    first = enumerate_cosets(g0(), sub)
    second = enumerate_cosets(g0(), sub)
    assert first == second


def test_coset_action_walks_words():
    sub = [parse("x y x^-2", ALPHABET_XY), parse("y", ALPHABET_XY)]
    res = enumerate_cosets(g0(), sub)
    assert coset_action(res, parse("y", ALPHABET_XY), 1) == 1
    w = parse("x^4", ALPHABET_XY)
    for start in range(1, 5):
        assert coset_action(res, w, start) == start
    assert coset_action(res, parse("X", ALPHABET_XY), coset_action(res, parse("x", ALPHABET_XY), 2)) == 2


def test_overflow_is_inconclusive():
    free = Presentation(ALPHABET_XY, ())
    res = enumerate_cosets(free, [], cap=50)
    assert isinstance(res, OverflowResult)
    assert res.defined == 50


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        Presentation(ALPHABET_XY, (parse("a"),))
    with pytest.raises(ValueError):
        enumerate_cosets(g0(), [], strategy="magic")


def test_trivial_presentation():
    pres = Presentation(Alphabet(("x",)), (parse("x", Alphabet(("x",))),))
    res = enumerate_cosets(pres, [])
    assert res.count == 1
