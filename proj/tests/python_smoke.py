"""Smoke checks for the Python bindings against independently known values."""

import crosspart as cp


def main() -> None:
    assert cp.__version__ == "1.0.0"

    # Exact counts: pinned value, and recurrence vs closed form at a size
    # where they could plausibly diverge.
    assert cp.stirling(10, 4) == 34105
    assert cp.stirling(30, 10) == cp.stirling(30, 10, closed_form=True)

    # Threshold machinery.
    assert cp.threshold_min_n(3, 1) == 10
    assert cp.threshold_min_n(3, 1, doubled=True) == 20
    assert cp.threshold_holds(10, 3, 1)
    assert not cp.threshold_holds(9, 3, 1)

    # Constructions: enumerated sizes match the closed forms.
    assert cp.construction_size("D", 6, 3, t=1) == 29
    assert len(cp.build_construction("D", 6, 3, t=1)) == 29
    a = cp.build_construction("A", 8, 3, l=3, t=1)
    b = cp.build_construction("B", 8, 3, l=3, t=1)
    assert len(a) == 2 and len(b) == 64

    # Duality: the two wide-regime families are duals of each other.
    assert sorted(cp.dual(a, 8, 3, 3, t=1)) == sorted(b)
    assert sorted(cp.dual(b, 8, 3, 3, t=1)) == sorted(a)

    # Covering number of a small hand-checked family: no block is shared by
    # two members, so three blocks are needed and three suffice.
    members = ["{1,2,3|4}", "{1,4|2,3}", "{1|2,3,4}"]
    assert cp.tau(members, 4, 2, t=1) == 3
    tau, covers = cp.tau(members, 4, 2, t=1, witnesses=True)
    assert tau == 3 and len(covers) >= 1

    # Exhaustive pair search on a desk-scale instance.
    res = cp.pair_search(6, 3, 2, t=1, mode="exhaustive")
    assert res["exhaustive"]
    assert res["best_product"] == 15
    assert "closed sets visited" in res["certificate"]

    # Closed-form pair products.
    assert cp.r1(8, 3, 3, 1) == 128
    assert cp.r2(8, 3, 3, 1) == 125
    assert cp.r_bound(8, 3, 3, 1) == 128
    assert cp.phi(2, 3, [4, 3, 3], 1, 7) == 915

    # Audit of one polynomial inequality on a reduced grid.
    rep = cp.audit_lemma("r1-swap", t_max=2, k_max=6, n_extra=4)
    assert rep["fail"] == 0
    assert rep["ok"]

    # Scenario verifier: a passing run and a refusal.
    v = cp.verify("three-three", 8, t=1, ks=[3, 3], universe_cap=1000, draws=100)
    assert not v["refused"] and v["ok"]
    statuses = {tier["name"]: tier["status"] for tier in v["tiers"]}
    assert statuses["formula"] == "pass"
    refused = cp.verify("three-three", 8, t=2, ks=[3, 3])
    assert refused["refused"]

    assert "three-three" in cp.verify_scenarios()
    assert "r1-swap" in cp.lemma_names()

    print("python smoke: all checks passed")


if __name__ == "__main__":
    main()
