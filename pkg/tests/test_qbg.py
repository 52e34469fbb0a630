from __future__ import annotations

import pytest

from macweyl.qbg import BRUHAT, QUANTUM, build_qbg
from macweyl.rootdata import build


def _kinds(g):
    out = {BRUHAT: 0, QUANTUM: 0}
    for *_, k in g.edges():
        out[k] += 1
    return out


def test_a1():
    D = build("A1")
    g = build_qbg(D)
    s = D.W.parse("s1")
    assert g.has_edge(0, (2,)) == BRUHAT
    assert g.has_edge(s, (2,)) == QUANTUM
    assert len(g) == 2


def test_a2_counts():
    # Bruhat covers by reflections: 2 + 2 + 2 + 1 + 1; quantum: five simple
    # descents of length one elements and pairs, two at w0, plus w0 -> id by theta
    g = build_qbg(build("A2"))
    assert _kinds(g) == {BRUHAT: 8, QUANTUM: 7}


def test_a2_theta_edge():
    D = build("A2")
    g = build_qbg(D)
    theta = D.Y.theta
    assert g.has_edge(D.W.longest, theta) == QUANTUM
    assert g.target(D.W.longest, theta) == 0
    assert g.has_edge(0, theta) is None


def test_label_validation():
    g = build_qbg(build("A2"))
    with pytest.raises(ValueError):
        g.has_edge(0, (-2, 1))
    with pytest.raises(ValueError):
        g.has_edge(0, (1, 0))


@pytest.mark.parametrize("t, kind", [("C2", "u"), ("C2", "d"), ("G2", "d"), ("A3", "u")])
def test_edge_length_conditions(t, kind):
    D = build(t, kind)
    g = build_qbg(D)
    for s, a, t2, k in g.edges():
        dl = D.W.length[t2] - D.W.length[s]
        if k == BRUHAT:
            assert dl == 1
        else:
            assert dl == 1 - 2 * D.Y.height(a)
    # every simple reflection gives an edge out of every vertex
    for w in range(D.W.order):
        for a in D.Y.simple_roots:
            assert g.has_edge(w, a) is not None


def test_dot_output():
    dot = build_qbg(build("A2")).to_dot()
    assert dot.startswith("digraph QBG_A2_u {")
    assert dot.count("style=dashed") == 7
    assert dot.count("style=solid") == 8
    assert dot == build_qbg(build("A2")).to_dot()


def test_filtration_paths_a1():
    D = build("A1")
    g = build_qbg(D)
    paths = g.filtration_paths(0, [(2,)])
    assert [(p.steps, p.end) for p in paths] == [((), 0), ((0,), D.W.parse("s1"))]
