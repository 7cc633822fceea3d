"""Claim verifiers and the corpus runner."""
import pytest

from powertree import (CLAIM_IDS, GroupBundle, build_group, build_power_graph,
                       det_bareiss, load_manifest, ones_plus_laplacian,
                       run_verifications, verify_clique_components,
                       verify_component_count, verify_element_degree_divisor,
                       verify_factorial_cap, verify_full_degree_divisor,
                       verify_maximal_order_divisor,
                       verify_maximal_prime_divisor, verify_product_bound,
                       verify_simple_order_count)


def _subgroups_of_order(group, order, limit=None):
    found = []
    for g in range(group.n):
        if group.order_of(g) == order:
            sub = group.cyclic_subgroup(g)
            if sub not in found:
                found.append(sub)
            if limit is not None and len(found) == limit:
                break
    return found


def test_bundle_caches_and_shortcuts():
    bundle = GroupBundle("cyclic:5")
    assert bundle.label == "cyclic:5"
    assert bundle.kappa.value == 125
    assert bundle.det_jq == 5 ** 5  # complete graph, so J + Q = 5I
    direct = det_bareiss(ones_plus_laplacian(bundle.graph))
    assert direct == bundle.det_jq
    from_group = GroupBundle(build_group("cyclic:6"))
    assert from_group.kappa.value == 540
    assert from_group.det_jq == 540 * 36


def test_component_count_claim():
    assert verify_component_count("quaternion:8").holds
    d8 = verify_component_count("dihedral:8")
    assert d8.holds and "5 components; c_2 = 5" in d8.witness
    assert verify_component_count("cyclic:16").holds
    assert verify_component_count("elemabelian:2:4").holds
    with pytest.raises(ValueError):
        verify_component_count("cyclic:6")


def test_maximal_prime_divisor_claim():
    result = verify_maximal_prime_divisor("alt:5")
    assert result.holds
    assert "divide kappa" in result.witness
    assert verify_maximal_prime_divisor("sym:3").holds
    vacuous = verify_maximal_prime_divisor("cyclic:6")
    assert vacuous.holds
    assert vacuous.witness == "no maximal element order is prime"


def test_full_degree_divisor_claim():
    result = verify_full_degree_divisor("quaternion:8")
    assert result.holds
    assert "8^2" in result.witness
    assert verify_full_degree_divisor("cyclic:6").holds
    assert verify_full_degree_divisor("elemabelian:3:2").holds


def test_maximal_order_divisor_claim():
    result = verify_maximal_order_divisor("cyclic:6", 6)
    assert result.holds
    assert "6*6^2 = 216" in result.witness
    assert verify_maximal_order_divisor("quaternion:8", 4).holds
    with pytest.raises(ValueError):
        verify_maximal_order_divisor("quaternion:8", 2)  # 2 divides 4


def test_element_degree_divisor_claim():
    group = build_group("quaternion:8")
    bundle = GroupBundle(group)
    generator = next(g for g in range(8) if group.order_of(g) == 4)
    result = verify_element_degree_divisor(bundle, generator)
    assert result.holds
    assert "8*4^2 = 128" in result.witness
    with pytest.raises(ValueError):
        verify_element_degree_divisor(bundle, group.identity)


def test_element_degree_divisor_fails_off_maximal_subgroups():
    # honest report: an order-3 element of Z6 has degree 4, and
    # 6*5^2 = 150 does not divide det(J+Q) = 19440
    result = verify_element_degree_divisor("cyclic:6", 2)
    assert not result.holds
    assert "6*5^2 = 150 does not divide" in result.witness
    # the corpus row only covers maximal cyclic subgroups, where the
    # bound always holds, so the aggregate still passes
    (row,) = run_verifications(["cyclic:6"],
                               claims=["element-degree-det-divisor"])
    assert row.holds
    assert "over 1 maximal cyclic subgroup)" in row.witness


def test_clique_components_claim():
    result = verify_clique_components("cyclic:8")
    assert result.holds and result.applicable
    assert "prime support {2}" in result.witness

    threes = verify_clique_components("elemabelian:3:2")
    assert threes.holds and threes.applicable
    assert "prime support {3}" in threes.witness

    ones = verify_clique_components("elemabelian:2:3")
    assert ones.holds and ones.applicable
    assert ones.witness == "kappa = 1; empty prime support"

    quaternion = verify_clique_components("quaternion:8")
    assert quaternion.holds and not quaternion.applicable
    assert quaternion.witness.startswith("not applicable: a component of size 7")

    composite = verify_clique_components("cyclic:6")
    assert composite.holds and not composite.applicable
    assert composite.witness == "not applicable: not a p-group"


def test_product_bound_claim_strict_cases():
    z6 = build_group("cyclic:6")
    halves = _subgroups_of_order(z6, 2) + _subgroups_of_order(z6, 3)
    result = verify_product_bound(z6, halves)
    assert result.holds
    assert "kappa = 2^2*3^3*5 >" in result.witness

    a5 = build_group("alt:5")
    fives = _subgroups_of_order(a5, 5, limit=3)
    assert verify_product_bound(a5, fives).holds


def test_product_bound_claim_reports_equality_faithfully():
    s3 = build_group("sym:3")
    assert not verify_product_bound(s3, _subgroups_of_order(s3, 3)).holds
    d10 = build_group("dihedral:10")
    assert not verify_product_bound(d10, _subgroups_of_order(d10, 5)).holds


def test_product_bound_claim_validates_input():
    z12 = build_group("cyclic:12")
    with pytest.raises(ValueError):
        verify_product_bound(z12, [{0}])  # trivial
    with pytest.raises(ValueError):
        verify_product_bound(z12, [set(range(12))])  # not proper
    with pytest.raises(ValueError):
        verify_product_bound(z12, [{0, 3, 6, 9}, {0, 6}])  # shared involution


def test_factorial_cap_claim():
    s3 = verify_factorial_cap("sym:3")
    assert s3.holds and "is 5" in s3.witness
    q8 = verify_factorial_cap("quaternion:8")
    assert q8.holds and "is 7" in q8.witness
    klein = verify_factorial_cap("elemabelian:2:2")
    assert klein.holds and "is 3" in klein.witness


def test_simple_order_count_claim():
    counts = {2: 15, 3: 20, 5: 24}
    for p, count in counts.items():
        result = verify_simple_order_count("alt:5", p)
        assert result.holds
        assert result.witness == f"{count} elements of order {p} (bound {p * p - 1})"
    sevens = verify_simple_order_count("psl2:7", 7)
    assert sevens.holds and sevens.witness.startswith("48 elements")
    with pytest.raises(ValueError):
        verify_simple_order_count("sym:4", 2)
    with pytest.raises(ValueError):
        verify_simple_order_count("alt:5", 7)


def test_result_json_shape():
    result = verify_component_count("quaternion:8")
    payload = result.to_json_dict()
    assert list(payload) == ["claim_id", "group", "holds", "witness"]
    assert payload["group"] == "quaternion:8"
    assert payload["holds"] is True


def test_run_verifications_small_corpus():
    results = run_verifications(["cyclic:6", "quaternion:8", "sym:3"])
    assert results
    assert all(r.holds for r in results)
    assert {r.claim_id for r in results} <= set(CLAIM_IDS)
    # claim order is fixed within each group, groups in manifest order
    labels = [r.group_label for r in results]
    assert labels == sorted(labels, key=["cyclic:6", "quaternion:8", "sym:3"].index)


def test_run_verifications_claim_filter():
    rows = run_verifications(["quaternion:8"], claims=["element-degree-det-divisor"])
    assert len(rows) == 1
    assert "over 3 maximal cyclic subgroups" in rows[0].witness
    assert run_verifications(["cyclic:6"], claims=["pgroup-component-count"]) == []
    assert run_verifications(["sym:4"], claims=["simple-order-p-count"]) == []
    fives = run_verifications(["alt:5"], claims=["simple-order-p-count"])
    assert [r.witness.split()[0] for r in fives] == ["15", "20", "24"]
    with pytest.raises(ValueError):
        run_verifications(["cyclic:6"], claims=["made-up-claim"])


def test_run_verifications_product_bound_instances():
    for spec, phrase in [
        ("cyclic:1", "trivial group"),
        ("cyclic:7", "only nontrivial subgroup"),
        ("elemabelian:2:4", "star-shaped"),
    ]:
        (row,) = run_verifications([spec], claims=["trivial-intersection-product-bound"])
        assert row.holds and not row.applicable
        assert row.witness.startswith("not applicable:")
        assert phrase in row.witness
    for spec in ["sym:3", "dihedral:10", "cyclic:6", "quaternion:8", "alt:5"]:
        (row,) = run_verifications([spec], claims=["trivial-intersection-product-bound"])
        assert row.holds and row.applicable


def test_load_manifest(tmp_path):
    specs = load_manifest()
    assert len(specs) > 100
    for expected in ["cyclic:1", "quaternion:8", "alt:6", "psl2:11",
                     "cyclic:2 x cyclic:4", "dihedral:8"]:
        assert expected in specs
    custom = tmp_path / "corpus.txt"
    custom.write_text("# comment\ncyclic:6\n\nquaternion:8  # trailing\n")
    assert load_manifest(custom) == ["cyclic:6", "quaternion:8"]
