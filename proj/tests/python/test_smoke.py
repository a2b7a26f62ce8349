"""Smoke tests for the python bindings."""

import pytest

import cliquecover as cc


def test_graph_and_partition():
    g = cc.turan_graph(12, 4)
    assert g.size() == 12
    assert g.edge_count() == 54
    parts = cc.greedy_partition(g)
    assert [len(p) for p in parts] == [4, 4, 4]
    ok, message = cc.verify_partition(g, parts)
    assert ok, message
    assert cc.is_turan(g, 4)
    assert cc.clique_number(g) == 4
    assert cc.count_cliques(g, 4) == 81


def test_edge_list_round_trip():
    g = cc.turan_graph(6, 4)
    text = cc.write_edge_list(g)
    back = cc.parse_edge_list(text)
    assert back.size() == g.size()
    assert back.edge_count() == g.edge_count()
    with pytest.raises(Exception):
        cc.parse_edge_list("2\n0 0\n")


def test_covers_and_validation():
    g = cc.turan_graph(12, 4)
    cert = cc.build_4cover(g)
    assert cert["t"] == 4
    assert cert["size"] == 81
    ok, message = cc.validate_cover(g, cert)
    assert ok, message

    cover3 = cc.build_3cover(g, refine=True)
    assert cover3["size"] == 39
    assert cover3["partition"] == [[0, 1, 2, 3], [4, 5, 6, 7], [8, 9, 10, 11]]
    assert cc.validate_cover(g, cover3)[0]

    exact = cc.exact_min_cover(cc.turan_graph(6, 4), 4)
    assert exact["size"] == 4

    bad = dict(cert)
    bad["cliques"] = cert["cliques"][1:]
    bad["size"] = cert["size"] - 1
    bad["provenance"] = cert["provenance"][1:]
    ok, message = cc.validate_cover(g, bad)
    assert not ok and message


def test_node_budget():
    # K4 minus an edge: the greedy packing bound is 1 but the optimum is 2,
    # so the search needs a second node and a budget of 1 must trip.
    diamond = cc.Graph(4)
    for u, v in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]:
        diamond.add_edge(u, v)
    with pytest.raises(Exception, match="budget"):
        cc.exact_min_cover(diamond, 2, node_limit=1)
    assert cc.exact_min_cover(diamond, 2)["size"] == 2


def test_sequence_calculus():
    assert cc.value_f([4, 4, 4]) == (3, 24, 12, 39)
    trace = cc.reduce_sequence([2, 2, 2, 1, 1])
    assert set(trace) >= {"steps", "final", "type"}
    assert trace["steps"][0]["op"] == 1
    assert sum(trace["final"]) == 8
    assert trace["type"] in (1, 2, 3)
    assert cc.closed_form_f(1, 12, 3) == "39"
    assert cc.key_lemma_bound(12, 3) == "370/9"


def test_bounds():
    assert cc.erdos_h(8, 5, 4) == 16
    holds, slack = cc.moon_moser_check(cc.turan_graph(9, 3), 2)
    assert holds and slack == "0"
    assert cc.peel_margin(6, 6) == "3"
    assert cc.base_case_margin(8) == "156/25"
    assert cc.chain_check(97) == (True, 19, 1)
