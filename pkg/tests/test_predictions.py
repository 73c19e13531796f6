import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclicsg.gamma_graph import build_gamma
from cyclicsg.graph_invariants import summarize
from cyclicsg.group_core import (
    Dicyclic,
    GeneralizedQuaternion,
    factorize,
    make_cyclic,
    make_dicyclic,
    make_dihedral,
    make_direct_product,
    make_generalized_quaternion,
    make_minimal_noncyclic,
)
from cyclicsg.predictions import (
    APPLIES,
    INCONSISTENT,
    NOT_APPLICABLE,
    Prediction,
    classify_shape,
    known_discrepancies,
    predict_degree,
    predict_degree_sequence_interval,
    predict_diameter,
    predict_diameter_bounds,
    predict_edge_count,
    predict_eulerian,
    predict_min_max_degree,
    predict_minimal_noncyclic_profile,
    predict_regular,
    predict_tree_and_pendants,
    predict_vertex_count,
    predicted_degrees,
    subgroup_profile,
)

family_groups = st.one_of(
    st.integers(1, 300).map(make_cyclic),
    st.integers(1, 100).map(make_dihedral),
    st.integers(3, 7).map(make_generalized_quaternion),
    st.integers(2, 50).map(make_dicyclic),
    st.sampled_from([(2, 2, 3), (2, 3, 3), (2, 4, 3), (3, 2, 7), (2, 2, 5)]).map(
        lambda t: make_minimal_noncyclic(*t)
    ),
)


def _resolve(pred: Prediction):
    """The value a correct implementation must produce."""
    return pred.evidence if pred.applicability == INCONSISTENT else pred.value


def zpq(p, a, q):
    return make_direct_product([make_cyclic(p**a), make_cyclic(q), make_cyclic(q)])


# --- worked values ----------------------------------------------------------

@pytest.mark.parametrize("G, v", [
    (make_cyclic(12), 6), (make_dihedral(6), 10), (make_generalized_quaternion(4), 8),
    (make_minimal_noncyclic(2, 3, 3), 9), (zpq(2, 2, 3), 15),
], ids=lambda x: getattr(x, "label", str(x)))
def test_vertex_count_values(G, v):
    assert predict_vertex_count(G.family).value == v


def test_edge_count_values():
    assert predict_edge_count(make_cyclic(12).family).value == 7
    assert predict_edge_count(make_dihedral(4).family).value == 6
    p = predict_edge_count(make_minimal_noncyclic(2, 3, 3).family)
    assert (p.applicability, p.value, p.evidence) == (INCONSISTENT, 14, 10)
    assert p.discrepancy == "minimal-noncyclic-edges"


def test_degree_values():
    D = make_dihedral(6)
    assert predict_degree(D.family, D.cyclic_subgroups[0]).value == 8
    Q = make_generalized_quaternion(3)
    z2 = Q.cyclic_subgroups[1]
    p = predict_degree(Q.family, z2)
    assert (p.value, p.evidence) == (3, 4)
    dic = make_dicyclic(3)
    z6 = next(H for H in dic.cyclic_subgroups if H.order == 6)
    assert predict_degree(dic.family, z6).value == 2
    # order p1 p2 in Z_36: adjacent to 2k = 4 subgroups
    Z = make_cyclic(36)
    h6 = next(H for H in Z.cyclic_subgroups if H.order == 6)
    assert predict_degree(Z.family, h6).value == 4


def test_subgroup_profile():
    prof = subgroup_profile(factorize(360), 6)
    assert (prof.m, prof.r) == (1, 0)
    assert subgroup_profile(factorize(12), 12).r == 2
    with pytest.raises(ValueError):
        subgroup_profile(factorize(12), 5)


@pytest.mark.parametrize("n, lo, hi", [(360, 3, 5), (30, 3, 3), (12, 2, 3)])
def test_cyclic_min_max(n, lo, hi):
    a, b = predict_min_max_degree(make_cyclic(n).family)
    assert (a.value, b.value) == (lo, hi)


def test_dihedral_min_max():
    a, b = predict_min_max_degree(make_dihedral(6).family)
    assert (a.value, b.value) == (1, 8)


def test_degree_interval_covered():
    p = predict_degree_sequence_interval(make_cyclic(360).family)
    assert p.kind == "covers" and p.value == (3, 5)
    assert p.agrees(summarize(build_gamma(make_cyclic(360))).degree_sequence)
    assert predict_degree_sequence_interval(make_dihedral(3).family).applicability == NOT_APPLICABLE


def test_diameter_values():
    assert predict_diameter(make_cyclic(12).family).value == 3
    assert predict_diameter(make_generalized_quaternion(3).family).value == 2
    assert predict_diameter(make_dicyclic(3).family).value == 3
    p = predict_diameter(make_minimal_noncyclic(2, 3, 3).family)
    assert (p.value, p.evidence) == (5, 4)


def test_diameter_bounds():
    general, nil = predict_diameter_bounds(make_direct_product([make_cyclic(6), make_cyclic(2)]))
    assert general.value == (1, 3)
    assert nil.value == (2, 4)
    assert predict_diameter_bounds(make_cyclic(1))[0].applicability == NOT_APPLICABLE
    assert predict_diameter_bounds(make_dihedral(3))[1].applicability == NOT_APPLICABLE


@pytest.mark.parametrize("G, shape", [
    (make_cyclic(16), "path_graph"), (make_cyclic(15), "cycle_graph"),
    (make_direct_product([make_cyclic(3), make_cyclic(3)]), "star_graph"),
    (make_minimal_noncyclic(2, 1, 3), "star_graph"),
    (make_generalized_quaternion(3), "star_graph"), (make_cyclic(25), "star_graph"),
    (make_cyclic(7), "complete_graph"),
], ids=lambda x: getattr(x, "label", str(x)))
def test_shape_predictions(G, shape):
    assert classify_shape(G)[shape].value is True
    assert getattr(summarize(build_gamma(G)), shape)


@pytest.mark.parametrize("G, regular", [(make_cyclic(30), True), (make_cyclic(12), False), (make_dihedral(6), False)],
                         ids=lambda x: getattr(x, "label", str(x)))
def test_regular(G, regular):
    assert predict_regular(G).value is regular


@pytest.mark.parametrize("G, eulerian", [
    (make_cyclic(6), True), (make_cyclic(30), False), (make_generalized_quaternion(4), False),
    (make_dihedral(5), False), (make_dicyclic(3), False),
], ids=lambda x: getattr(x, "label", str(x)))
def test_eulerian(G, eulerian):
    assert predict_eulerian(G).value is eulerian


def test_eulerian_outside_families_is_not_applicable():
    assert predict_eulerian(make_minimal_noncyclic(2, 2, 3)).applicability == NOT_APPLICABLE


def test_pendants_and_trees():
    pendant, tree = predict_tree_and_pendants(make_direct_product([make_cyclic(6), make_cyclic(2)]))
    assert (pendant.value, tree.value) == (False, False)
    pendant, tree = predict_tree_and_pendants(make_dihedral(6))
    assert pendant.value is True and tree.applicability == NOT_APPLICABLE
    pendant, tree = predict_tree_and_pendants(make_generalized_quaternion(4))
    assert pendant.applicability == NOT_APPLICABLE and tree.value is True


def test_minimal_noncyclic_profile_values():
    prof = predict_minimal_noncyclic_profile(2, 3, 3)
    assert prof["degree_multiset"].value == (1, 1, 1, 2, 2, 2, 3, 3, 5)
    prof = predict_minimal_noncyclic_profile(2, 2, 3)
    assert (prof["pendant_count"].value, prof["vertex_count"].value) == (3, 7)
    prof = predict_minimal_noncyclic_profile(3, 2, 7)
    assert prof["vertex_count"].value == 11
    assert prof["degree_multiset"].value == tuple([1] * 7 + [2] * 3 + [9])
    assert all(p.applicability == NOT_APPLICABLE for p in predict_minimal_noncyclic_profile(2, 1, 3).values())


def test_registry():
    keys = [d.key for d in known_discrepancies()]
    assert keys == ["quaternion-center-degree", "minimal-noncyclic-edges", "minimal-noncyclic-diameter"]


def test_agreement_kinds():
    assert Prediction("x", (1, 3), kind="interval").agrees(2)
    assert not Prediction("x", (1, 3), kind="interval").agrees("inf")
    assert Prediction("x", (2, 3), kind="covers").agrees([2, 2, 3])
    assert not Prediction("x", (2, 4), kind="covers").agrees([2, 4])
    assert Prediction("x", (4, 6), kind="superset").agrees({4, 6, 8})
    assert Prediction("x", 3, INCONSISTENT, evidence=4).agrees(4, evidence=True)


# --- brute-force agreement --------------------------------------------------

@given(family_groups)
@settings(max_examples=150, deadline=None)
def test_counts_match_brute_force(G):
    s = summarize(build_gamma(G))
    assert _resolve(predict_vertex_count(G.family)) == s.vertex_count
    assert _resolve(predict_edge_count(G.family)) == s.edge_count
    assert _resolve(predict_diameter(G.family)) == s.diameter


@given(family_groups)
@settings(max_examples=150, deadline=None)
def test_degrees_match_brute_force(G):
    gamma = build_gamma(G)
    preds = predicted_degrees(G)
    assert [_resolve(p) for p in preds] == [gamma.degree(v) for v in range(gamma.vertex_count)]


@given(family_groups)
@settings(max_examples=150, deadline=None)
def test_handshake(G):
    # resolved degrees and resolved edge count are mutually consistent
    total = sum(_resolve(p) for p in predicted_degrees(G))
    assert total == 2 * _resolve(predict_edge_count(G.family))


@pytest.mark.parametrize("p, a, q", [(2, 1, 3), (2, 2, 3), (2, 3, 3), (2, 1, 5), (2, 2, 5), (3, 1, 2), (3, 2, 2)])
def test_product_row_matches_brute_force(p, a, q):
    G = zpq(p, a, q)
    s = summarize(build_gamma(G))
    assert predict_vertex_count(G.family).value == s.vertex_count
    assert predict_edge_count(G.family).value == s.edge_count


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_dicyclic_quaternion_coherence(m):
    dic, q = Dicyclic(2**m), GeneralizedQuaternion(m + 2)
    for f in (predict_vertex_count, predict_edge_count):
        assert f(dic).value == f(q).value
    assert predict_min_max_degree(dic)[1].evidence == predict_min_max_degree(q)[1].evidence
    d1 = sorted(_resolve(p) for p in predicted_degrees(make_dicyclic(2**m)))
    d2 = sorted(_resolve(p) for p in predicted_degrees(make_generalized_quaternion(m + 2)))
    assert d1 == d2


def test_quaternion_center_resolution():
    for n in range(3, 8):
        G = make_generalized_quaternion(n)
        gamma = build_gamma(G)
        z2 = gamma.index_of(2, 0)
        p = predict_degree(G.family, gamma.vertices[z2])
        assert p.applicability == INCONSISTENT
        assert gamma.degree(z2) == p.evidence == 2 ** (n - 2) + 2 != p.value


def test_non_family_degrees_not_applicable():
    G = make_direct_product([make_cyclic(2), make_cyclic(4)])
    assert all(p.applicability == NOT_APPLICABLE for p in predicted_degrees(G))
    assert predict_vertex_count(G.family).applicability == NOT_APPLICABLE
    assert predict_vertex_count(make_cyclic(5).family).applicability == APPLIES
