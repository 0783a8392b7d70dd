import itertools

import pytest

from ionet import (
    BudgetExceeded, ConventionViolated, NonDeterministic, build_stage,
    classify, dead_at, enabled, fire, is_live_exact, parse_lba, reach_graph,
    replay, simulate_lba,
)
from ionet.lba import LbaSpec
from tests.conftest import load_lba


def _hand_run(spec, word):
    """Independent simulator used as the oracle: tracks (state, head, tape)."""
    tape = list(word)
    q, head = spec.initial, 1
    for _ in range(10_000):
        if q == spec.accept:
            return "accept", head
        if q == spec.reject:
            return "reject", head
        rule = spec.rule_for(q, tape[head - 1])
        _, _, q2, x2, m = rule
        tape[head - 1] = x2
        q, head = q2, head + m
    return "loop", head


@pytest.mark.parametrize("name,cases", [
    ("accept_all_2", {"aa": "accept", "ab": "accept", "bb": "accept"}),
    ("reject_all_2", {"aa": "reject", "ba": "reject"}),
    ("even_a_2", {"aa": "accept", "ab": "reject", "ba": "reject", "bb": "accept"}),
    ("flip_2", {"aa": "accept", "ab": "reject", "ba": "accept", "bb": "reject"}),
    ("first_a_3", {"abb": "accept", "aab": "accept", "bab": "reject"}),
])
def test_simulate_against_hand_oracle(name, cases):
    spec = load_lba(name)
    for word, want in cases.items():
        assert simulate_lba(spec, word) == want
        result, head = _hand_run(spec, word)
        assert result == want and head == 1


def test_simulate_budget_loop():
    spec = load_lba("loop_2")
    out = simulate_lba(spec, "aa", step_budget=500)
    assert isinstance(out, BudgetExceeded)


def test_simulate_validation():
    spec = load_lba("accept_all_2")
    with pytest.raises(ConventionViolated):
        simulate_lba(spec, "")
    with pytest.raises(ConventionViolated):
        simulate_lba(spec, "ac")
    dup = LbaSpec(states=("q0", "acc", "rej"), initial="q0", accept="acc",
                  reject="rej",
                  rules=(("q0", "a", "acc", "a", 1), ("q0", "a", "rej", "a", 1)))
    with pytest.raises(NonDeterministic):
        dup.validate()
    back = LbaSpec(states=("q0", "q1", "acc", "rej"), initial="q0", accept="acc",
                   reject="rej", rules=(("q1", "a", "q0", "a", 1),))
    with pytest.raises(Exception):
        back.validate()


def test_stage_counts():
    spec = load_lba("even_a_2")
    n = 2
    net, m0 = build_stage(spec, "ab", "N")
    assert len(net.places) == len(spec.states) * n + 2 * n
    valid = sum(1 for rule in spec.rules for i in range(1, n + 1)
                if 1 <= i + rule[4] <= n)
    assert len(net.transitions) == valid
    assert sum(m0) == n + 1  # head token plus one token per cell


def test_stage_n_single_deterministic_run():
    spec = load_lba("even_a_2")
    for word in ("aa", "ab", "ba", "bb"):
        net, m0 = build_stage(spec, word, "N")
        g = reach_graph(net, m0)
        # one linear execution: every marking has at most one successor
        for v in range(len(g.nodes)):
            assert len(g.succ[v]) <= 1
            assert all(x <= 1 for x in g.nodes[v])  # stays one-token-per-place
        accept_place = net.place_index[f"p_{spec.accept}_1"]
        reached = any(m[accept_place] for m in g.index)
        assert reached == (simulate_lba(spec, word) == "accept")


def test_stage_nprime_class_and_simulation():
    spec = load_lba("flip_2")  # rewrites symbols, so move transitions exist
    net, m0 = build_stage(spec, "ab", "Nprime")
    nc = classify(net)
    assert nc.io and nc.ordinary
    assert any(t.endswith("_move") for t in net.transitions)
    g = reach_graph(net, m0)
    accept_place = net.place_index[f"p_{spec.accept}_1"]
    assert any(m[accept_place] for m in g.index) == (simulate_lba(spec, "ab") == "accept")


def test_stage_nprime_omits_idle_moves():
    spec = load_lba("accept_all_2")  # never rewrites
    net, _ = build_stage(spec, "aa", "Nprime")
    assert not any(t.endswith("_move") for t in net.transitions)
    forced, _ = build_stage(spec, "aa", "Nprime", include_idle_moves=True)
    assert any(t.endswith("_move") for t in forced.transitions)


def test_stage_ndprime_free_reshuffle():
    spec = load_lba("accept_all_2")
    net, m0 = build_stage(spec, "aa", "Ndprime")
    assert classify(net).io
    g = reach_graph(net, m0)
    free = net.place_index["p_free"]
    freed = [m for m in g.index if m[free]]
    assert freed  # acceptance unlocks the control token
    # once free, any head position is installable
    heads = [net.place_index[f"p_{q}_{i}"] for q in spec.states for i in (1, 2)]
    seen = {h for m in g.index for h in heads if m[h]}
    assert len(seen) == len(heads)


def test_stage_nbar_init_chain():
    spec = load_lba("accept_all_2")
    net, m0 = build_stage(spec, "ab", "Nbar")
    assert classify(net).io and classify(net).conservative
    g = reach_graph(net, m0)
    q0_home = net.place_index[f"p_{spec.initial}_1"]
    cells = [net.place_index[f"p_{i}_{x}"] for i, x in ((1, "a"), (2, "b"))]
    reentries = [w for v, t, w in g.edges if t == "t_run"]
    assert reentries  # the machine accepts, so the control token cycles
    for v in reentries:
        # completing the whole chain certifies the initial configuration
        m = g.nodes[v]
        assert m[q0_home] == 1
        assert all(m[c] == 1 for c in cells)


def test_stage_nbar_rev_aborts_every_chain_place():
    spec = load_lba("even_a_2")
    net, _ = build_stage(spec, "ab", "Nbar")
    for i in (1, 2):
        assert f"t_rev{i}" in net.trans_index
        assert net.flow[(f"p_init{i}", f"t_rev{i}")] == 1
        assert net.flow[(f"t_rev{i}", "p_free")] == 1


def test_reduction_agreement_across_machines():
    cases = [
        ("accept_all_2", ["aa", "ab"]),
        ("reject_all_2", ["aa", "ba"]),
        ("even_a_2", ["aa", "ab", "ba", "bb"]),
        ("flip_2", ["aa", "bb"]),
        ("first_a_3", ["abb", "bab"]),
    ]
    for name, words in cases:
        spec = load_lba(name)
        for word in words:
            accepted = simulate_lba(spec, word) == "accept"
            net, m0 = build_stage(spec, word, "Nbar")
            assert classify(net).io and classify(net).ordinary
            assert is_live_exact(net, m0, node_budget=300_000) is accepted


def test_stage_validation_errors():
    spec = load_lba("accept_all_2")
    with pytest.raises(Exception):
        build_stage(spec, "aa", "Nmystery")
    with pytest.raises(ConventionViolated):
        build_stage(spec, "", "N")


def test_reduction_correctness_check_full():
    from ionet import reduction_correctness_check
    spec = load_lba("accept_all_2")
    report = reduction_correctness_check(spec, "ab", candidate_budget=2_000_000,
                                         node_budget=1_000_000)
    assert report.accepts and report.marked_live
    assert report.slp_status == "structurally_live"
    assert report.agree

    spec = load_lba("reject_all_2")
    report = reduction_correctness_check(spec, "ab", check_slp=False)
    assert not report.accepts and not report.marked_live
    assert report.slp_status == "skipped" and report.agree

    # with the structural bit requested, the rejecting side can only report
    # that its candidate budget ran out
    report = reduction_correctness_check(spec, "ab", candidate_budget=500)
    assert report.slp_status == "budget_exceeded"
