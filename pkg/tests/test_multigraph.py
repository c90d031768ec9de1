import pytest
from hypothesis import given
from hypothesis import strategies as st

from parkdet.exact_linalg import det, is_psd, matrix
from parkdet.multigraph import (
    GraphFormatError,
    Multigraph,
    complete_minus_root_edges,
    complete_multigraph,
    degree_outside,
    delete_root_edge,
    format_graph,
    from_edges,
    graph_to_json,
    laplacians,
    merge_into_root,
    parse_graph,
    random_multigraph,
    random_root_deletion,
    relabel_vertices,
)

K4 = complete_multigraph(3, 1, 1)


def test_complete_multigraph_examples():
    assert all(K4.adj[i][j] == (0 if i == j else 1) for i in range(4) for j in range(4))
    g = complete_multigraph(2, 2, 3)
    assert g.adj == ((0, 2, 2), (2, 0, 3), (2, 3, 0))
    g = complete_multigraph(1, 5, 1)
    assert g.adj == ((0, 5), (5, 0))
    with pytest.raises(ValueError):
        complete_multigraph(0, 1, 1)
    with pytest.raises(ValueError):
        complete_multigraph(3, 0, 1)


def test_complete_minus_root_edges():
    assert complete_minus_root_edges(3, 0) == K4
    g = complete_minus_root_edges(3, 1)
    assert g.adj[0][3] == 0 and g.adj[3][0] == 0
    assert g.adj[0][1] == 1 and g.adj[1][2] == 1
    g = complete_minus_root_edges(2, 2)
    assert g.degree(0) == 0 and g.adj[1][2] == 1
    with pytest.raises(ValueError):
        complete_minus_root_edges(3, 4)


def test_degree_outside():
    assert degree_outside(K4, {1}, 1) == 3
    assert degree_outside(K4, {1, 2}, 1) == 2  # edges from 1 to {0, 3}
    g31 = complete_minus_root_edges(3, 1)
    assert degree_outside(g31, {2, 3}, 3) == 1  # only the edge to 1
    assert degree_outside(g31, {2, 3}, 2) == 2
    with pytest.raises(ValueError):
        degree_outside(K4, {1, 2}, 3)
    with pytest.raises(ValueError):
        degree_outside(K4, set(), 1)


def test_laplacians():
    k3 = complete_multigraph(2, 1, 1)
    lap = laplacians(k3)
    assert lap.qtilde == matrix([[2, 1], [1, 2]])
    assert laplacians(K4).ltilde == matrix([[3, -1, -1], [-1, 3, -1], [-1, -1, 3]])
    for row in laplacians(K4).l.rows:
        assert sum(row) == 0
    for i, row in enumerate(laplacians(K4).q.rows):
        assert sum(row) == 2 * K4.degree(i)


def test_delete_root_edge():
    g = delete_root_edge(K4, 3)
    assert g == complete_minus_root_edges(3, 1)
    g = delete_root_edge(complete_multigraph(2, 2, 1), 1)
    assert g.adj[0][1] == 1 and g.adj[0][2] == 2
    with pytest.raises(ValueError):
        delete_root_edge(complete_minus_root_edges(3, 1), 3)


def test_merge_into_root():
    merged = merge_into_root(K4, 3)
    assert merged.n == 2
    assert merged.adj == ((0, 2, 2), (2, 0, 1), (2, 1, 0))
    assert det(laplacians(merged).qtilde) == 8  # [[3,1],[1,3]]
    k3 = complete_multigraph(2, 1, 1)
    assert merge_into_root(k3, 2).adj == ((0, 2), (2, 0))
    with pytest.raises(ValueError):
        merge_into_root(complete_multigraph(1, 1, 1), 1)


def test_merge_preserves_remaining_degrees():
    g = random_multigraph(4, 3, seed=7)
    merged = merge_into_root(g, 2)
    kept = [0, 1, 3, 4]
    for new_i, old_i in enumerate(kept):
        if old_i == 0:
            continue
        assert merged.degree(new_i) == g.degree(old_i)


def test_random_generators_deterministic():
    assert random_multigraph(4, 3, seed=5) == random_multigraph(4, 3, seed=5)
    assert random_root_deletion(4, 2, 3, seed=9) == random_root_deletion(4, 2, 3, seed=9)
    assert random_multigraph(4, 3, seed=5) != random_multigraph(4, 3, seed=6)


@given(st.integers(min_value=1, max_value=5), st.integers(min_value=0, max_value=2**63))
def test_random_multigraph_simple_when_capped(n, seed):
    g = random_multigraph(n, 1, seed)
    assert all(m <= 1 for row in g.adj for m in row)


@given(st.integers(min_value=1, max_value=5), st.integers(min_value=1, max_value=4),
       st.integers(min_value=1, max_value=4), st.integers(min_value=0, max_value=2**63))
def test_random_root_deletion_only_touches_root(n, a, b, seed):
    g = random_root_deletion(n, a, b, seed)
    for i in range(1, n + 1):
        assert 0 <= g.adj[0][i] <= a
        for j in range(i + 1, n + 1):
            assert g.adj[i][j] == b


@given(st.integers(min_value=1, max_value=6), st.integers(min_value=1, max_value=4),
       st.integers(min_value=0, max_value=2**63))
def test_generated_graphs_valid_and_laplacians_psd(n, mult, seed):
    g = random_multigraph(n, mult, seed)
    assert all(g.adj[i][i] == 0 for i in range(n + 1))
    assert all(g.adj[i][j] == g.adj[j][i] for i in range(n + 1) for j in range(n + 1))
    lap = laplacians(g)
    assert is_psd(lap.l)
    assert is_psd(lap.q)
    assert is_psd(lap.qtilde)


def test_relabel_conjugates():
    g = random_multigraph(4, 2, seed=11)
    gp = relabel_vertices(g, (3, 1, 4, 2))
    assert det(laplacians(gp).qtilde) == det(laplacians(g).qtilde)
    assert det(laplacians(gp).ltilde) == det(laplacians(g).ltilde)
    assert sorted(gp.degrees()[1:]) == sorted(g.degrees()[1:])


def test_multigraph_validation():
    with pytest.raises(ValueError):
        Multigraph(1, ((0, 1), (2, 0)))
    with pytest.raises(ValueError):
        Multigraph(1, ((1, 1), (1, 0)))
    with pytest.raises(ValueError):
        from_edges(2, [(1, 1, 1)])


def test_text_format_round_trip():
    text = format_graph(K4)
    assert parse_graph(text) == K4
    g = random_multigraph(4, 3, seed=3)
    assert parse_graph(format_graph(g)) == g
    assert parse_graph(graph_to_json(g)) == g


def test_text_format_with_comments():
    g = parse_graph("# complete graph on 3 vertices\n2\n0 1 1\n0 2 1  # root edge\n1 2 1\n")
    assert g == complete_multigraph(2, 1, 1)


@pytest.mark.parametrize("bad,fragment", [
    ("", "empty"),
    ("2\n0 1\n", "line 2"),
    ("2\n0 1 x\n", "line 2"),
    ("2\n1 0 1\n", "line 2"),
    ("2\n0 1 0\n", "line 2"),
    ("2\n0 1 1\n0 1 2\n", "line 3"),
    ("x\n", "line 1"),
])
def test_text_format_errors_name_the_line(bad, fragment):
    with pytest.raises(GraphFormatError) as err:
        parse_graph(bad)
    assert fragment in str(err.value)
