from __future__ import annotations

import pytest

from macweyl.affine_weyl import affine_weyl_group
from macweyl.qbg import build_qbg
from macweyl.rootdata import build
from macweyl.walks import WalkType, enumerate_walks, filter_qb, filter_reverse_qb


def _word(D, lam):
    G = affine_weyl_group(D, "Y")
    return G.reduced_word(G.minimal_rep(lam)[0])


@pytest.mark.parametrize("t, lam", [("A1", (-2,)), ("A2", (-1, -1)), ("A2", (1, -1))])
def test_counter_order_and_count(t, lam):
    D = build(t)
    word = _word(D, lam)
    walks = list(enumerate_walks(D, 0, word))
    assert len(walks) == 2 ** len(word.letters)
    assert [p.counter for p in walks] == list(range(len(walks)))
    assert walks[0].J == ()


def test_empty_walk_ends_at_sigma_m():
    D = build("A2")
    word = _word(D, (-1, 0))
    G = affine_weyl_group(D, "Y")
    for s in range(D.W.order):
        p = next(enumerate_walks(D, s, word))
        assert p.ept == G.mul(G.finite(s), G.evaluate(word))


def test_a1_qb_walks():
    D = build("A1")
    word = _word(D, (-2,))
    qb = filter_qb(D, enumerate_walks(D, 0, word))
    assert sorted(p.J for p in qb) == [(), (1,), (1, 2), (2,)]


@pytest.mark.parametrize("t, kind, lam", [
    ("A1", "u", (-3,)), ("A2", "u", (-1, -1)), ("A2", "u", (1, -2)), ("C2", "d", (-1, -1)), ("G2", "d", (-1, 0)),
])
@pytest.mark.parametrize("reverse", [False, True])
def test_pruned_equals_filter(t, kind, lam, reverse):
    D = build(t, kind)
    word = _word(D, lam)
    wt = WalkType(D, word)
    filt = filter_reverse_qb if reverse else filter_qb
    for s in range(D.W.order):
        a = {p.J for p in filt(D, enumerate_walks(D, s, word))}
        b = {p.J for p in wt.pruned(s, build_qbg(D), reverse=reverse)}
        assert a == b


def test_fold_signs_and_qwt():
    D = build("A1")
    word = _word(D, (-2,))
    for p in enumerate_walks(D, 0, word):
        assert len(p.signs) == len(p.J)
        assert set(p.Jplus) | set(p.Jminus) == set(p.J)
        fin, deg = p.qwt
        assert deg == sum(p.betas[j - 1].degree for j in p.Jminus)
        assert p.qwt_star[1] + deg == sum(p.betas[j - 1].degree for j in p.J)


def test_json_record():
    D = build("A1")
    p = next(enumerate_walks(D, 0, _word(D, (-1,))))
    assert p.to_json(D) == {"J": [], "wt": [-1], "dir": "id", "Jplus": [], "Jminus": [], "qwt_deg": 0}
