import math
from itertools import combinations, combinations_with_replacement

import pytest

from eulerchar import (
    CapacityError,
    CnfFormula,
    Complex,
    Graph,
    InputError,
    complex_with_euler,
    count_sat_bruteforce,
    euler,
    euler_by_inclusion_exclusion,
    euler_by_subsets,
    graph_to_complex,
    make_complex,
    negate_euler,
    sat_to_complex,
    sat_to_graph,
)

WORKED_FORMULA = CnfFormula(3, ((1, -2), (1, 3), (-2, 3)))


def test_formula_validation():
    with pytest.raises(InputError):
        CnfFormula(2, ((),))
    with pytest.raises(InputError):
        CnfFormula(2, ((0,),))
    with pytest.raises(InputError):
        CnfFormula(2, ((3,),))


def test_graph_validation():
    with pytest.raises(InputError):
        Graph(3, frozenset({(1, 1)}))
    with pytest.raises(InputError):
        Graph(2, frozenset({(0, 2)}))


# --- sat_to_graph -------------------------------------------------------------


def test_sat_to_graph_worked_formula():
    g = sat_to_graph(WORKED_FORMULA)
    assert g.num_vertices == 12
    assert len(g.edges) == 15  # 9 clique edges + 6 literal occurrences


def test_sat_to_graph_single_clause():
    g = sat_to_graph(CnfFormula(1, ((1,),)))
    assert g.num_vertices == 4
    assert g.edges == frozenset({(0, 1), (0, 2), (1, 2), (0, 3)})


# --- graph_to_complex ----------------------------------------------------------


def test_graph_to_complex_triangle():
    k3 = Graph(3, frozenset({(0, 1), (0, 2), (1, 2)}))
    assert graph_to_complex(k3) == make_complex(3, [{2}, {1}, {0}])


def test_graph_to_complex_edge():
    k2 = Graph(2, frozenset({(0, 1)}))
    c = graph_to_complex(k2)
    assert c == Complex(2, (0,))
    # parity sum of independent sets of K2 is 1 - 2 = -1 = (-1)^2 * χ̃
    assert euler_by_subsets(c) == -1


def test_graph_to_complex_needs_edges():
    with pytest.raises(InputError):
        graph_to_complex(Graph(3, frozenset()))


# --- count_sat ---------------------------------------------------------------


def test_count_sat_examples():
    assert count_sat_bruteforce(WORKED_FORMULA) == 4
    assert count_sat_bruteforce(CnfFormula(1, ((1,), (-1,)))) == 0
    assert count_sat_bruteforce(CnfFormula(3, ())) == 8
    with pytest.raises(CapacityError):
        count_sat_bruteforce(CnfFormula(21, ((1,),)))


# --- sat_to_complex ------------------------------------------------------------


def test_sat_to_complex_worked_formula():
    c, sign = sat_to_complex(WORKED_FORMULA)
    assert sign * euler_by_subsets(c) == 4
    assert sign * euler(c)[0] == 4


def test_sat_to_complex_tiny():
    for clauses, expect in [(((1,),), 1), (((1, 2),), 3)]:
        formula = CnfFormula(max(abs(l) for cl in clauses for l in cl), clauses)
        c, sign = sat_to_complex(formula)
        assert sign * euler_by_subsets(c) == expect


def test_sat_to_complex_requires_all_vars_used():
    with pytest.raises(InputError):
        sat_to_complex(CnfFormula(2, ((1,),)))


def nontautological_clauses(nv):
    lits = [v for v in range(1, nv + 1)] + [-v for v in range(1, nv + 1)]
    out = []
    for r in range(1, 2 * nv + 1):
        for cl in combinations(lits, r):
            if any(-l in cl for l in cl):
                continue
            out.append(cl)
    return out


def test_pipeline_exhaustive_small():
    checked = 0
    for nv in (1, 2):
        clauses = nontautological_clauses(nv)
        for k in (1, 2, 3):
            for formula in combinations_with_replacement(clauses, k):
                if {abs(l) for cl in formula for l in cl} != set(range(1, nv + 1)):
                    continue
                f = CnfFormula(nv, formula)
                c, sign = sat_to_complex(f)
                assert sign * euler_by_subsets(c) == count_sat_bruteforce(f), f
                checked += 1
    assert checked > 100


def test_pipeline_random(rng):
    for _ in range(50):
        nv = rng.randint(1, 6)
        k = rng.randint(1, 6)
        clauses = []
        for _ in range(k):
            size = rng.randint(1, nv)
            vs = rng.sample(range(1, nv + 1), size)
            clauses.append(tuple(v if rng.random() < 0.5 else -v for v in vs))
        used = {abs(l) for cl in clauses for l in cl}
        for v in range(1, nv + 1):  # ensure full variable coverage
            if v not in used:
                clauses.append((v, -v) if rng.random() < 0.5 else (-v, v))
        clauses = [tuple(dict.fromkeys(cl)) for cl in clauses]
        f = CnfFormula(nv, tuple(clauses))
        c, sign = sat_to_complex(f)
        assert sign * euler(c)[0] == count_sat_bruteforce(f), f


# --- complex_with_euler ---------------------------------------------------------


def _bound(k):
    l = 0 if k == 0 else math.ceil(math.log2(abs(k)))
    return 2 * l * l + 3 * l + 7


def test_complex_with_euler_base_cases():
    assert complex_with_euler(0) == Complex(0, ())
    assert complex_with_euler(1) == make_complex(2, [{0}, {1}])


def test_complex_with_euler_small_range_oracle():
    for k in range(-16, 17):
        c = complex_with_euler(k)
        assert c.n <= _bound(k) and c.num_facets <= _bound(k), k
        if c.num_facets <= 20:
            assert euler_by_inclusion_exclusion(c) == k, k
        assert euler(c)[0] == k, k


def test_complex_with_euler_spot_large():
    for k in (5, 100, -513, 999, -1000):
        c = complex_with_euler(k)
        assert euler(c)[0] == k
        assert c.n <= _bound(k) and c.num_facets <= _bound(k)


def test_disjoint_union_rule_on_blocks():
    # the construction relies on χ̃(∪W) = Σχ̃ + |W| - 1 for vertex-disjoint parts
    from eulerchar.reductions import _disjoint_union, _points, _power_block

    parts = [_points(2), _power_block(1), _power_block(2)]
    got = euler_by_subsets(_disjoint_union(parts))
    want = sum(euler_by_subsets(p) for p in parts) + len(parts) - 1
    assert got == want


# --- negate_euler ---------------------------------------------------------------


def test_negate_examples():
    two_points = make_complex(2, [{0}, {1}])
    assert euler_by_subsets(negate_euler(two_points)) == -1
    omega = make_complex(3, [{0, 1}, {0, 2}, {1, 2}])
    assert euler_by_subsets(negate_euler(omega)) == 1
    pows = make_complex(3, [{0, 1, 2}])
    assert euler_by_subsets(negate_euler(pows)) == 0
    with pytest.raises(InputError):
        negate_euler(make_complex(2, []))


def test_negate_appends_fresh_vertices(rng):
    c = make_complex(4, [{0, 1}, {2, 3}])
    out = negate_euler(c)
    assert out.n == c.n + 3
