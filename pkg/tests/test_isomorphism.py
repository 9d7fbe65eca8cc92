import pytest

from hopfgalois.groups import groups_of_order, regular_representation
from hopfgalois.isomorphism import (
    find_isomorphism,
    pair_isomorphic,
    permutation_pair_of_quotient,
)
from hopfgalois.permgroup import PermGroup
from hopfgalois.perms import compose, make_perm, parse_perm

from oracles import brute_pair_isomorphisms


def S3():
    return PermGroup(3, [parse_perm("(0 1 2)"), parse_perm("(0 1)")])


def test_identity_case():
    s3 = S3()
    w = find_isomorphism(s3, s3)
    assert w is not None and w.verified


def test_order_histogram_rejects():
    c4 = PermGroup(4, [parse_perm("(0 1 2 3)")])
    v4 = PermGroup(4, [parse_perm("(0 1)(2 3)"), parse_perm("(0 2)(1 3)")])
    assert find_isomorphism(c4, v4) is None


def test_metacyclic_21_copies():
    m = groups_of_order(21).groups[1]
    reg = regular_representation(m)
    w = make_perm([(5 * i + 2) % 21 for i in range(21)])
    other = reg.conjugate(w)
    assert find_isomorphism(reg, other) is not None


def _witness_is_sound(wit, G, M):
    """Re-derive the full map from the generator images and check it."""
    pairs = dict(wit.mapping)
    els = set(G.elements())
    from hopfgalois.perms import identity

    full = {identity(G.degree): identity(M.degree)}
    frontier = list(full)
    while frontier:
        new = []
        for x in frontier:
            for g, img in pairs.items():
                y = compose(g, x)
                if y not in full:
                    full[y] = compose(img, full[x])
                    new.append(y)
        frontier = new
    if len(full) != len(els):
        return False
    if len(set(full.values())) != len(els):
        return False
    return all(
        full[compose(a, b)] == compose(full[a], full[b]) for a in els for b in els
    )


def test_witness_soundness():
    m = groups_of_order(21).groups[1]
    reg = regular_representation(m)
    other = reg.conjugate(make_perm([(2 * i + 7) % 21 for i in range(21)]))
    wit = find_isomorphism(reg, other)
    assert _witness_is_sound(wit, reg, other)


def test_pair_reflexive():
    s3 = S3()
    stab = s3.point_stabilizer(0)
    w = pair_isomorphic(s3, stab, s3, stab)
    assert w is not None and w.verified


def test_pair_order_mismatch():
    s3 = S3()
    a3 = PermGroup(3, [parse_perm("(0 1 2)")])
    h = PermGroup(3, [parse_perm("(0 1)")])
    assert pair_isomorphic(s3, a3, s3, h) is None


def test_pair_rejects_non_transportable():
    d4 = PermGroup(4, [parse_perm("(0 1 2 3)"), parse_perm("(0 2)")])
    c4 = PermGroup(4, [parse_perm("(0 1 2 3)")])
    v4 = PermGroup(4, [parse_perm("(0 2)(1 3)"), parse_perm("(0 1)(2 3)")])
    assert pair_isomorphic(d4, c4, d4, v4) is None
    assert pair_isomorphic(d4, c4, d4, c4) is not None


def test_pair_symmetry():
    d4 = PermGroup(4, [parse_perm("(0 1 2 3)"), parse_perm("(0 2)")])
    h1 = PermGroup(4, [parse_perm("(0 2)(1 3)"), parse_perm("(0 1)(2 3)")])
    h2 = PermGroup(4, [parse_perm("(0 2)(1 3)"), parse_perm("(0 2)")])
    forward = pair_isomorphic(d4, h1, d4, h2)
    backward = pair_isomorphic(d4, h2, d4, h1)
    assert (forward is None) == (backward is None)


@pytest.mark.parametrize(
    "ambient_gens,sub1,sub2",
    [
        (["(0 1 2 3)", "(0 2)"], ["(0 1 2 3)"], ["(0 2)(1 3)", "(0 1)(2 3)"]),
        (["(0 1 2 3)", "(0 2)"], ["(0 2)(1 3)"], ["(0 2)"]),
        (["(0 1 2 3 4)", "(1 2 4 3)"], ["(1 2 4 3)"], ["(1 4)(2 3)"]),
        (["(0 1 2)", "(0 1)"], ["(0 1)"], ["(1 2)"]),
        (["(0 1 2)(3 4 5)", "(0 3)(1 4)(2 5)"], ["(0 1 2)(3 4 5)"], ["(0 3)(1 4)(2 5)"]),
    ],
)
def test_pair_agrees_with_bruteforce(ambient_gens, sub1, sub2):
    import re

    degree = 1 + max(int(m) for g in ambient_gens for m in re.findall(r"\d+", g))
    G = PermGroup(degree, [parse_perm(g, degree) for g in ambient_gens])
    H1 = PermGroup(degree, [parse_perm(g, degree) for g in sub1])
    H2 = PermGroup(degree, [parse_perm(g, degree) for g in sub2])
    fast = pair_isomorphic(G, H1, G, H2)
    brute = brute_pair_isomorphisms(G, H1, G, H2)
    assert (fast is not None) == bool(brute)


def test_pair_completeness_small_corpus():
    """pair_isomorphic agrees with the brute generator-image search on
    index-2 subgroup pairs across the order-8 and order-12 catalogues
    (adjacent pairs keep the brute search tractable)."""
    from hopfgalois.subgroups import index_n_subgroup_classes

    for n in [8, 12]:
        for N in groups_of_order(n).groups:
            G = regular_representation(N)
            classes = index_n_subgroup_classes(G, 2)
            pairs = [(i, i) for i in range(len(classes))]
            pairs += [(i, i + 1) for i in range(len(classes) - 1)]
            for i, j in pairs:
                fast = pair_isomorphic(
                    G, classes[i].representative, G, classes[j].representative
                )
                brute = brute_pair_isomorphisms(
                    G, classes[i].representative, G, classes[j].representative
                )
                assert (fast is not None) == bool(brute), (n, N.label, i, j)


def test_quotient_pair_trivial_core():
    s3 = S3()
    h = PermGroup(3, [parse_perm("(0 1)")])
    J, J_sub = permutation_pair_of_quotient(s3, h)
    assert J.order() == 6 and J.degree == 3
    assert J_sub.order() == 2
    assert find_isomorphism(s3, J) is not None


def test_quotient_pair_d4_center():
    d4 = PermGroup(4, [parse_perm("(0 1 2 3)"), parse_perm("(0 2)")])
    center = PermGroup(4, [parse_perm("(0 2)(1 3)")])
    J, J_sub = permutation_pair_of_quotient(d4, center)
    assert J.degree == 4 and J.order() == 4
    assert J_sub.is_trivial()


def test_quotient_pair_whole_group():
    s3 = S3()
    J, J_sub = permutation_pair_of_quotient(s3, s3)
    assert J.degree == 1 and J.order() == 1
