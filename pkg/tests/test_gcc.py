import json

import pytest

from ccx.diagram import parse_diagram, classify
from ccx.gcc import (
    BudgetExceeded,
    CliqueComplex,
    ColoredRoot,
    build_complex,
    colored_ground_set,
    export_complex_json,
    link_decomposition_check,
    m_compatible,
    rotate_colored,
)
from ccx.rootsys import RootSystem


def test_ground_set_sizes():
    rs = RootSystem(parse_diagram("B2"))
    assert len(colored_ground_set([rs], 3)) == 14
    assert len(colored_ground_set([rs], 0)) == 2
    rs1 = RootSystem(parse_diagram("A1"))
    for m in range(4):
        assert len(colored_ground_set([rs1], m)) == m + 1


def test_negative_simples_carry_color_one():
    cx = build_complex(parse_diagram("A2"), 3)
    for v in cx.vertices:
        if cx.systems[v.comp].is_negative(v.root):
            assert v.color == 1


def test_colored_rotation_branches():
    rs = RootSystem(parse_diagram("A2"))
    pos = rs.n  # first positive root id
    assert rotate_colored(rs, ColoredRoot(0, pos, 1), 3) == ColoredRoot(0, pos, 2)
    img = rotate_colored(rs, ColoredRoot(0, 0, 1), 3)
    assert img == ColoredRoot(0, rs.rotate(0), 1)


@pytest.mark.parametrize(
    "name,m", [("A1", 2), ("A2", 2), ("B2", 3), ("A3", 2), ("H3", 1)]
)
def test_colored_rotation_order(name, m):
    rs = RootSystem(parse_diagram(name))
    cls = classify(rs.diagram)
    h = int(cls.coxeter_number)
    expected = (m * h + 2) // 2 if cls.minus_one_longest else m * h + 2
    verts = colored_ground_set([rs], m)
    # order of the permutation over the whole colored ground set
    perm = {v: rotate_colored(rs, v, m) for v in verts}
    order = 1
    seen = set()
    from math import gcd

    for start in verts:
        if start in seen:
            continue
        cur, length = start, 0
        while True:
            seen.add(cur)
            cur = perm[cur]
            length += 1
            if cur == start:
                break
        order = order * length // gcd(order, length)
    assert order == expected


def test_support_rule_for_negative_simples():
    rs = RootSystem(parse_diagram("B2"))
    m = 3
    for i in range(rs.n):
        neg = ColoredRoot(0, i, 1)
        for rid in range(rs.n, rs.size):
            for k in range(1, m + 1):
                expected = i not in rs.support[rid]
                assert m_compatible(rs, neg, ColoredRoot(0, rid, k)) == expected
        # its own positive copy is incompatible in every color
        pos_same = rs.root_id([1.0 if t == i else 0.0 for t in range(rs.n)])
        for k in range(1, m + 1):
            assert not m_compatible(rs, neg, ColoredRoot(0, pos_same, k))


@pytest.mark.parametrize("name,m", [("A2", 3), ("A3", 3), ("B3", 2), ("I2(5)", 3)])
def test_m_compatibility_is_symmetric_and_rotation_invariant(name, m):
    rs = RootSystem(parse_diagram(name))
    verts = colored_ground_set([rs], m)
    for a in range(len(verts)):
        for b in range(a + 1, len(verts)):
            u, v = verts[a], verts[b]
            c = m_compatible(rs, u, v)
            assert c == m_compatible(rs, v, u)
            assert c == m_compatible(
                rs, rotate_colored(rs, u, m), rotate_colored(rs, v, m)
            )


def test_lower_color_complex_is_induced_subcomplex():
    rs = RootSystem(parse_diagram("B2"))
    big = CliqueComplex([rs], 3)
    small = CliqueComplex([rs], 2)
    for a, u in enumerate(small.vertices):
        for b in range(a + 1, len(small.vertices)):
            v = small.vertices[b]
            big_edge = bool(big.adj[big.pos[u]] >> big.pos[v] & 1)
            assert big_edge == bool(small.adj[a] >> b & 1)


def test_f_vectors_match_named_counts():
    assert build_complex(parse_diagram("A2"), 1).f_vector() == [1, 5, 5]
    assert build_complex(parse_diagram("A2"), 2).f_vector() == [1, 8, 12]
    cx = build_complex(parse_diagram("B2"), 3)
    assert cx.f_vector() == [1, 14, 28]
    assert {cx.degree(i) for i in range(14)} == {4}


def test_zero_colors_gives_simplex():
    cx = build_complex(parse_diagram("B3"), 0)
    assert cx.f_vector() == [1, 3, 3, 1]
    assert cx.audit_pure() and cx.audit_ridge_degree()
    assert cx.positive_facet_count() == 0


def test_facet_counts():
    assert build_complex(parse_diagram("D4"), 2).facet_count() == 336
    cx = build_complex(parse_diagram("H3"), 1)
    assert cx.facet_count() == 32
    assert cx.positive_facet_count() == 21
    assert build_complex(parse_diagram("A2"), 1).positive_facet_count() == 2


def test_purity_and_ridge_degree():
    for name, m in [("A3", 2), ("B3", 2), ("H3", 2), ("I2(7)", 3)]:
        cx = build_complex(parse_diagram(name), m)
        assert cx.audit_pure()
        assert cx.audit_ridge_degree()


def test_duality_alias():
    for m in (1, 2):
        assert (
            build_complex(parse_diagram("B3"), m).f_vector()
            == build_complex(parse_diagram("C3"), m).f_vector()
        )


def test_join_of_components():
    cx = build_complex(parse_diagram("n=3; 1-2:3"), 1)  # A2 x A1
    f_a2 = build_complex(parse_diagram("A2"), 1).f_vector()
    f_a1 = build_complex(parse_diagram("A1"), 1).f_vector()
    expect = [0] * 4
    for i, x in enumerate(f_a2):
        for j, y in enumerate(f_a1):
            expect[i + j] += x * y
    assert cx.f_vector() == expect


def test_links_decompose():
    for name in ["A3", "B3", "H3"]:
        for m in (1, 2):
            cx = build_complex(parse_diagram(name), m)
            assert all(
                link_decomposition_check(cx, i) for i in range(cx.num_vertices())
            )


def test_link_of_vertex_in_rank_one_is_empty():
    cx = build_complex(parse_diagram("A1"), 3)
    assert all(cx.adj[i] == 0 for i in range(cx.num_vertices()))


def test_link_of_negative_simple_in_a2():
    m = 3
    cx = build_complex(parse_diagram("A2"), m)
    i = cx.pos[ColoredRoot(0, 0, 1)]
    assert len(cx.link_vertices(i)) == m + 1  # a rank-one complex


@pytest.mark.parametrize("name,m", [("B3", 2), ("A4", 2), ("D4", 1)])
def test_colored_restriction_all_parabolics(name, m):
    # colored compatibility agrees with each parabolic subsystem's own,
    # for arbitrary vertex subsets, not just vertex deletions
    import itertools

    rs = RootSystem(parse_diagram(name))
    verts = list(rs.diagram.vertices)
    for size in range(1, rs.n):
        for J in itertools.combinations(verts, size):
            embs = rs.parabolic_embeddings(J)
            colored = []  # (component, sub colored root, parent colored root)
            for ci, (crs, emb) in enumerate(embs):
                for sub_rid, parent_rid in emb.items():
                    top = 1 if crs.is_negative(sub_rid) else m
                    for k in range(1, top + 1):
                        colored.append(
                            (ci, crs, ColoredRoot(0, sub_rid, k),
                             ColoredRoot(0, parent_rid, k))
                        )
            for (ci, crs, su, pu), (cj, crs2, sv, pv) in itertools.combinations(
                colored, 2
            ):
                parent_side = m_compatible(rs, pu, pv)
                if ci != cj:
                    sub_side = True  # different components of the join
                else:
                    sub_side = m_compatible(crs, su, sv)
                assert sub_side == parent_side, (name, J, su, sv)


def test_budget():
    with pytest.raises(BudgetExceeded):
        build_complex(parse_diagram("A2"), 2, budget=5)


def test_budget_env_override(monkeypatch):
    monkeypatch.setenv("CCX_BUDGET", "6")
    with pytest.raises(BudgetExceeded):
        build_complex(parse_diagram("A2"), 2)


def test_export_json_deterministic():
    cx = build_complex(parse_diagram("A2"), 1)
    blob = export_complex_json(cx, include_facets=True)
    data = json.loads(blob)
    assert len(data["vertices"]) == 5
    assert len(data["edges"]) == 5
    assert len(data["facets"]) == 5
    assert blob == export_complex_json(build_complex(parse_diagram("A2"), 1), True)
