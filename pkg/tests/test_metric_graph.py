import os
import random
from fractions import Fraction

import pytest

from braidcat.metric_graph import (
    INFINITY,
    MetricGraph,
    brady_link,
    format_length,
    parse_length,
)

SEED = int(os.environ.get("GGT_SEED", "17"))

F = Fraction


def path_graph():
    return MetricGraph(("p", "q", "r"), (("p", "q", F(1, 3)), ("q", "r", F(1, 2))))


def test_validation():
    with pytest.raises(ValueError):
        MetricGraph(("p", "p"), ())
    with pytest.raises(ValueError):
        MetricGraph(("p",), (("p", "q", F(1)),))
    with pytest.raises(ValueError):
        MetricGraph(("p",), (("p", "p", F(0)),))


def test_degrees_and_loops():
    g = MetricGraph(("p", "q"), (("p", "p", F(1)), ("p", "q", F(1, 3))))
    assert g.degree("p") == 3
    assert g.degree("q") == 1
    assert g.degree_multiset() == (1, 3)


def test_distance():
    g = path_graph()
    assert g.distance("p", "r") == F(5, 6)
    assert g.distance("p", "p") == 0
    lonely = MetricGraph(("p", "q"), ())
    assert lonely.distance("p", "q") == INFINITY


def test_distance_prefers_short_way_round():
    g = MetricGraph(
        ("p", "q"),
        (("p", "q", F(1, 3)), ("p", "q", F(2, 3))),
    )
    assert g.distance("p", "q") == F(1, 3)
    assert g.girth() == F(1)
    assert g.girth_exhaustive() == F(1)


def test_girth_loop():
    g = MetricGraph(("p",), (("p", "p", F(1, 2)),))
    assert g.girth() == F(1, 2)
    assert g.girth_exhaustive() == F(1, 2)


def test_girth_triangle_with_chord():
    g = MetricGraph(
        ("p", "q", "r", "s"),
        (
            ("p", "q", F(1)),
            ("q", "r", F(1)),
            ("r", "p", F(1)),
            ("p", "s", F(5)),
        ),
    )
    assert g.girth() == F(3)
    assert g.girth_exhaustive() == F(3)


def test_girth_forest_is_infinite():
    assert path_graph().girth() == INFINITY
    assert path_graph().girth_exhaustive() == INFINITY


def test_girth_algorithms_agree_random():
    rng = random.Random(SEED)
    for _ in range(60):
        n = rng.randint(2, 7)
        nodes = tuple(f"n{i}" for i in range(n))
        arcs = []
        for _ in range(rng.randint(1, 10)):
            u, v = rng.choice(nodes), rng.choice(nodes)
            arcs.append((u, v, F(rng.randint(1, 4), rng.randint(1, 4))))
        g = MetricGraph(nodes, tuple(arcs))
        assert g.girth() == g.girth_exhaustive()


def test_smooth_chain():
    g = path_graph()
    sm = g.smooth()
    assert sm.nodes == ("p", "r")
    assert sm.arcs == (("p", "r", F(5, 6)),)


def test_smooth_cycle_keeps_one_node():
    g = MetricGraph(
        ("p", "q", "r"),
        (("p", "q", F(1)), ("q", "r", F(1)), ("r", "p", F(1))),
    )
    sm = g.smooth()
    assert len(sm.nodes) == 1
    assert len(sm.arcs) == 1
    u, v, length = sm.arcs[0]
    assert u == v
    assert length == F(3)
    assert sm.girth() == F(3) == g.girth()


def test_smooth_leaves_cubic_graph_alone():
    g = brady_link()
    assert g.smooth().arc_census() == g.arc_census()


def test_bipartite():
    square = MetricGraph(
        ("p", "q", "r", "s"),
        (("p", "q", F(1)), ("q", "r", F(1)), ("r", "s", F(1)), ("s", "p", F(1))),
    )
    assert square.is_bipartite()
    triangle = MetricGraph(
        ("p", "q", "r"),
        (("p", "q", F(1)), ("q", "r", F(1)), ("r", "p", F(1))),
    )
    assert not triangle.is_bipartite()
    loop = MetricGraph(("p",), (("p", "p", F(1)),))
    assert not loop.is_bipartite()


def test_automorphism():
    g = brady_link()
    rotate = {f"v{i}": f"v{i % 8 + 1}" for i in range(1, 9)}
    assert g.is_automorphism(rotate)
    reflect = {f"v{i}": f"v{(10 - i - 1) % 8 + 1}" for i in range(1, 9)}
    assert g.is_automorphism(reflect)
    assert not g.is_automorphism({f"v{i}": f"v{i}" for i in range(1, 8)} | {"v8": "v1"})
    swap_two = {f"v{i}": f"v{i}" for i in range(1, 9)} | {"v1": "v2", "v2": "v1"}
    assert not g.is_automorphism(swap_two)


def test_brady_link_shape():
    g = brady_link()
    assert len(g.nodes) == 8
    assert g.degree_multiset() == (3,) * 8
    assert g.girth() == F(2)
    assert g.girth_exhaustive() == F(2)
    lengths = sorted(length for _, _, length in g.arcs)
    assert lengths == [F(1, 3)] * 8 + [F(2, 3)] * 4


def test_serialisation_round_trip():
    g = brady_link()
    again = MetricGraph.from_lines(g.to_lines())
    assert again == g
    assert parse_length("2/3") == F(2, 3)
    assert format_length(F(2, 3)) == "2/3"
    with pytest.raises(ValueError):
        parse_length("0.5")
    with pytest.raises(ValueError):
        parse_length("-1/3")
    with pytest.raises(ValueError):
        MetricGraph.from_lines(["squiggle p q"])


def test_to_dot():
    dot = path_graph().to_dot()
    assert dot.startswith("graph {")
    assert '"p" -- "q" [label="1/3"];' in dot
