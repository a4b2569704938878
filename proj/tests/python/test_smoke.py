import json
import os
import pathlib

import pytest

import goodsemi as gs

DATA = pathlib.Path(os.environ.get("GOODSEMI_TEST_DATA", pathlib.Path(__file__).parents[1] / "data"))


def cusp():
    return gs.numerical([2, 3])


def test_numerical_cusp():
    s = cusp()
    assert s.dim == 1
    assert s.gamma == (2,)
    assert (0,) in s and (1,) not in s and (5,) in s


def test_node_from_small():
    node = gs.Semigroup(gamma=[1, 1], small=[[0, 0], [1, 1]])
    assert node.dim == 2
    assert (1, 1) in node
    assert (1, 0) not in node
    assert (2, 0) not in node  # one zero coordinate forces the other
    assert (3, 5) in node


def test_invalid_raises_validation_error():
    with pytest.raises(gs.ValidationError):
        gs.Semigroup(gamma=[1, 1], small=[[0, 0]])


def test_canonical_ideal_is_self_dual():
    s = gs.numerical([3, 4, 5])
    k = s.canonical_ideal()
    assert gs.is_canonical(s, k)
    assert k.dual() == s.whole()


def test_poincare_of_whole_numerical():
    # a symmetric numerical semigroup has a palindromic polynomial
    s = gs.numerical([3, 4])
    p = s.poincare()
    assert all(isinstance(k, tuple) for k in p)
    g = s.gamma[0]
    assert p == {(g - e[0],): c for e, c in p.items()}


def test_symmetry_theorem_on_cusp_ideals():
    s = cusp()
    ideals = gs.enumerate_ideals(s, [-1], [1])
    assert ideals
    for e in ideals:
        v = gs.check_symmetry_theorem(s, e)
        assert v["i"] and v["ii"] and v["iii"] and v["iv"]
        assert v["identity_holds"]


def test_enumerate_counts():
    assert len(gs.enumerate_good(1, [3])) == 3
    assert len(gs.enumerate_good(2, [2, 2])) == 9


def test_distances():
    s = cusp()
    whole = s.whole()
    shifted = whole.translate([2])
    assert gs.ideal_distance(whole, shifted) == 2  # S minus t^2 S = {0, 3}
    assert gs.element_distance(whole, [0], [3]) == 2


def test_json_round_trip():
    s = gs.numerical([3, 4, 5])
    again = gs.loads(s.to_json())
    assert again == s
    e = s.whole().translate([1])
    assert gs.loads(e.to_json()) == e


def test_load_data_file():
    text = (DATA / "tacnode.json").read_text()
    s = gs.loads(text)
    assert s.gamma == (2, 2)


def test_render_ascii():
    node = gs.Semigroup(gamma=[1, 1], small=[[0, 0], [1, 1]])
    art = gs.render(node, [0, 0, 2, 2])
    assert len(art.strip().splitlines()) == 3


def test_search_report():
    report = json.loads(gs.search(2, [1, 1], [-1, -1], [1, 1]))
    assert report["kind"] == "report"
    assert report["report_type"] == "hunt"
    assert report["failures"] == []
