from math import comb

import pytest

from ramcat import (
    ResourceBound,
    ValidationError,
    chain_preorder,
    check_fragment_isomorphism,
    dram_fragment,
    dram_op_fragment,
    dramop_word_functor,
    explicit_fragment,
    fragment_equal,
    fragment_from_spec,
    gr_fragment,
    opposite,
    plain_context,
    preorder_from_pairs,
    ram_fragment,
    skeleton,
    structural_checks,
    tabulate,
    thin_from_preorder,
    validate_fragment,
    vec_fragment,
)
from conftest import stirling


def twin_fragment():
    """Two mutually isomorphic objects, each rigid."""
    morphs = {"id_a": ("a", "a"), "id_b": ("b", "b"), "f": ("a", "b"), "g": ("b", "a")}
    compose = {
        ("id_a", "id_a"): "id_a", ("id_b", "id_b"): "id_b",
        ("f", "id_a"): "f", ("id_b", "f"): "f",
        ("g", "id_b"): "g", ("id_a", "g"): "g",
        ("g", "f"): "id_a", ("f", "g"): "id_b",
    }
    return explicit_fragment(["a", "b"], morphs, {"a": "id_a", "b": "id_b"}, compose, name="twin")


def test_builders_pass_law_checks(swap_context, plain_z2_context):
    for frag in [
        ram_fragment(4),
        dram_fragment(4),
        dram_op_fragment(4),
        gr_fragment(plain_z2_context, 3),
        gr_fragment(swap_context, 3),
        vec_fragment(2, 3),
        thin_from_preorder(chain_preorder(3)),
    ]:
        assert validate_fragment(frag).ok, frag.name


def test_hom_counts():
    f = ram_fragment(8)
    for m in range(1, 9):
        for n in range(m, 9):
            assert len(f.hom(m, n)) == comb(n, m)
    d = dram_fragment(6)
    for n in range(1, 7):
        for m in range(1, n + 1):
            assert len(d.hom(n, m)) == stirling(n, m)
    g = gr_fragment(plain_context(), 6)
    for m in range(1, 7):
        for n in range(m, 7):
            assert len(g.hom(m, n)) == stirling(n, m)


def test_gr_z2_hom_count(plain_z2_context):
    g = gr_fragment(plain_z2_context, 2)
    assert len(g.hom(1, 2)) == 2


def test_gr_fragment_laws_with_non_abelian_group(s3_context):
    frag = gr_fragment(s3_context, 2)
    assert validate_fragment(frag).ok
    rep = structural_checks(frag)
    assert rep.all_mono and rep.hom_self_is_identity


def test_vec_f2_counts():
    v = vec_fragment(2, 3)
    assert len(v.hom(1, 2)) == 3
    assert len(v.hom(1, 1)) == 1
    assert len(v.hom(2, 2)) == 1  # rigidity under the vector order
    assert all(len(v.hom(n, n)) == 1 for n in (1, 2, 3))
    # one-dimensional domain: any nonzero image vector works, zero is least
    assert len(v.hom(1, 3)) == 7


def test_vec_f2_hom_count_against_function_oracle():
    """Independent oracle: enumerate maps on the four domain vectors as raw
    function tables, keep those that are additive, injective and order
    preserving, and identify them by their values on the basis."""
    from itertools import product as iproduct

    def add(u, w):
        return tuple((a + b) % 2 for a, b in zip(u, w))

    def alex_key(u):
        return tuple(reversed(u))

    dom = sorted(iproduct(range(2), repeat=2), key=alex_key)
    cod = list(iproduct(range(2), repeat=3))
    valid = set()
    for images in iproduct(cod, repeat=4):
        table = dict(zip(dom, images))
        if any(table[add(u, w)] != add(table[u], table[w]) for u in dom for w in dom):
            continue
        if len(set(images)) != 4:
            continue
        ordered = [table[u] for u in dom]
        if all(alex_key(ordered[i]) < alex_key(ordered[i + 1]) for i in range(3)):
            valid.add((table[(1, 0)], table[(0, 1)]))

    v = vec_fragment(2, 3)
    by_basis = {
        (tuple(row[0] for row in m.payload), tuple(row[1] for row in m.payload))
        for m in v.hom(2, 3)
    }
    assert by_basis == valid


def test_vec_requires_prime_size():
    with pytest.raises(ValidationError):
        vec_fragment(4, 2)


def test_vec_accepts_explicit_field_tables():
    """GF(4) as an explicit ordered field: addition is coefficient XOR and
    multiplication follows x^2 = x + 1 on {0, 1, x, x+1}."""
    from ramcat.category import OrderedField

    gf4 = OrderedField(
        4,
        tuple(tuple(a ^ b for b in range(4)) for a in range(4)),
        ((0, 0, 0, 0), (0, 1, 2, 3), (0, 2, 3, 1), (0, 3, 1, 2)),
    )
    frag = vec_fragment(gf4, 2)
    assert validate_fragment(frag).ok
    assert len(frag.hom(1, 1)) == 1  # only scaling by 1 preserves the order
    rep = structural_checks(frag)
    assert rep.all_mono and rep.hom_self_is_identity


def test_opposite_involution_and_counts():
    d = dram_fragment(4)
    op = opposite(d)
    assert len(op.hom(2, 4)) == stirling(4, 2) == 7
    assert fragment_equal(opposite(op), d)
    thin = thin_from_preorder(chain_preorder(3))
    assert structural_checks(opposite(thin)).is_thin


def test_thin_from_preorder():
    two_chain = thin_from_preorder(chain_preorder(2))
    assert two_chain.total_morphisms() == 3
    from ramcat import antichain_preorder

    anti = thin_from_preorder(antichain_preorder(2))
    assert anti.total_morphisms() == 2
    p = preorder_from_pairs(3, [(0, 1), (1, 2)])
    frag = thin_from_preorder(p)
    assert validate_fragment(frag).ok
    assert structural_checks(frag).is_thin


def test_mutated_compose_table_fails_laws():
    morphisms, identities, compose = tabulate(ram_fragment(4))
    # swap two differing 1->3 composites: later composition with any 3->4
    # morphism (mono) then separates the two association orders
    keys = [
        k for k, v in compose.items()
        if morphisms[k[1]] == (1, 2) and morphisms[k[0]] == (2, 3)
    ]
    k1, k2 = next(
        (k1, k2)
        for i, k1 in enumerate(keys) for k2 in keys[i + 1:]
        if compose[k1] != compose[k2]
    )
    compose[k1], compose[k2] = compose[k2], compose[k1]
    frag = explicit_fragment([1, 2, 3, 4], morphisms, identities, compose, name="mutated")
    report = validate_fragment(frag)
    assert not report.ok
    assert report.associativity_violations


def test_explicit_fragment_missing_composite():
    morphs = {"id_a": ("a", "a"), "f": ("a", "a")}
    compose = {("id_a", "id_a"): "id_a"}
    frag = explicit_fragment(["a"], morphs, {"a": "id_a"}, compose)
    f = next(m for m in frag.hom("a", "a") if m.payload == "f")
    with pytest.raises(ValidationError) as err:
        frag.compose(f, f)
    assert err.value.code == "not_closed"


def test_skeleton_collapses_isomorphic_objects():
    frag = twin_fragment()
    result = skeleton(frag)
    assert result.fragment.objects == ("a",)
    assert result.representative == {"a": "a", "b": "a"}
    eta_b = result.eta["b"]
    assert eta_b.dom == "b" and eta_b.cod == "a"
    # the chosen isomorphisms are two-sided inverses
    for obj in frag.objects:
        eta, inv = result.eta[obj], result.eta_inv[obj]
        assert frag.compose(inv, eta) == frag.identity(obj)
        assert frag.compose(eta, inv) == frag.identity(result.representative[obj])
    # skeleton of a skeleton is itself
    again = skeleton(result.fragment)
    assert fragment_equal(again.fragment, result.fragment)


def test_skeleton_preserves_hom_sizes():
    f = ram_fragment(4)
    result = skeleton(f)
    assert result.fragment.objects == f.objects  # chains are pairwise non-isomorphic
    for a in f.objects:
        for b in f.objects:
            assert len(result.fragment.hom(a, b)) == len(f.hom(a, b))


def test_structural_checks_on_ram():
    rep = structural_checks(ram_fragment(4))
    assert rep.all_mono
    assert not rep.is_thin
    assert rep.is_directed
    assert rep.hom_self_is_identity
    assert rep.iso_homs_match
    assert "is_directed" in rep.fragment_relative


def test_structural_checks_on_gr(swap_context):
    rep = structural_checks(gr_fragment(swap_context, 3))
    assert rep.all_mono
    assert rep.hom_self_is_identity


def test_dram_morphisms_epi_in_dram_iff_mono_in_op():
    from ramcat.category import is_mono

    d = dram_fragment(4)
    op = opposite(d)

    def is_epi(frag, f):
        for c in frag.objects:
            ms = frag.hom(f.cod, c)
            for i, g in enumerate(ms):
                for h in ms[i + 1:]:
                    if frag.compose(g, f) == frag.compose(h, f):
                        return False
        return True

    for m in d.morphisms():
        mirrored = next(x for x in op.hom(m.cod, m.dom) if x.payload == m.payload)
        assert is_epi(d, m) == is_mono(op, mirrored)


def test_words_surjections_fragment_isomorphism():
    grf, dop, on_m = dramop_word_functor(4, plain_context())
    result = check_fragment_isomorphism(grf, dop, on_m)
    assert result["ok"], result["failures"][:3]


def test_hom_cap_resource_bound(plain_z2_context):
    with pytest.raises(ResourceBound):
        gr_fragment(plain_z2_context, 8, hom_cap=100)


def test_fragment_from_spec_builders(swap_context):
    frag = fragment_from_spec({"builder": "ram", "params": {"n": 3}})
    assert frag.objects == (1, 2, 3)
    frag = fragment_from_spec({"builder": "gr", "params": {"n": 2}}, swap_context)
    assert frag.total_morphisms() > 0
    with pytest.raises(ValidationError):
        fragment_from_spec({"builder": "nope"})
    with pytest.raises(ValidationError):
        fragment_from_spec({"builder": "gr", "params": {"n": 2}})


def test_fragment_from_spec_explicit_tables():
    spec = {
        "objects": ["a"],
        "morphisms": {"id_a": {"dom": "a", "cod": "a"}},
        "identities": {"a": "id_a"},
        "compose": [["id_a", "id_a", "id_a"]],
    }
    frag = fragment_from_spec(spec)
    assert validate_fragment(frag).ok
