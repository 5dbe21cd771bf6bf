import itertools
import math
from fractions import Fraction

import pytest

from mis_hitter.family import (
    MaxISFamily,
    enumerate_max_independent_sets,
    fractional_transversal,
    is_shattered,
    is_transversal,
    vc_dimension,
)
from mis_hitter.graph import Graph, GeneratorSpec, all_graphs_stream, generate, random_stream
from mis_hitter import proof
from mis_hitter.proof import (
    WitnessConstructionError,
    check_final_arithmetic,
    compare_to_bound,
    epsilon_net_sample,
    final_arithmetic_sides,
    hw_bound,
    main_bound,
    ramsey_binomial_bound,
    verify_chain,
    witness_from_shattered,
)
from oracles import brute_alpha


def test_ramsey_examples():
    assert ramsey_binomial_bound(2, 2) == 3
    assert ramsey_binomial_bound(9, 1) == 1
    assert ramsey_binomial_bound(3, 3) == 10
    with pytest.raises(ValueError):
        ramsey_binomial_bound(0, 3)


def test_hw_examples():
    assert hw_bound(2, Fraction(5, 2)) == pytest.approx(4 * 2.5 * math.log(27.5), abs=1e-12)
    assert hw_bound(2, Fraction(5, 2)) == pytest.approx(33.14, abs=0.005)
    assert hw_bound(0, 7) == 0
    assert hw_bound(1, 1) == pytest.approx(4.796, abs=5e-4)
    assert hw_bound(1, 1, "binary") == pytest.approx(2 * math.log2(11))
    with pytest.raises(ValueError):
        hw_bound(1, Fraction(1, 2))


def test_main_bound_examples():
    assert main_bound(2, 2) == pytest.approx(221.81, abs=0.005)
    assert main_bound(2, 3) == pytest.approx(1186.5, abs=0.05)
    assert main_bound(3, 2) == pytest.approx(11978, abs=0.5)
    assert main_bound(2, 2, "binary") == 320
    for t, w in [(1, 3), (3, 1)]:
        with pytest.raises(ValueError):
            main_bound(t, w)
    with pytest.raises(ValueError):
        main_bound(2, 2, "decimal")


def test_final_arithmetic_examples():
    lhs, rhs = final_arithmetic_sides(2, 2)
    assert lhs == pytest.approx(90.8, abs=0.05) and rhs == pytest.approx(221.81, abs=0.005)
    for t, w in [(2, 2), (2, 10), (5, 2)]:
        assert check_final_arithmetic(t, w)


def test_compare_to_bound():
    assert compare_to_bound(3, 3.0) == (True, True)
    assert compare_to_bound(3, 33.14) == (True, False)
    assert compare_to_bound(34, 33.14) == (False, False)
    just_above = Fraction(3) + Fraction(1, 10**20)
    assert compare_to_bound(just_above, 3.0)[0]  # within one ulp


def all_partner_choices(g, fam, s, realizers):
    """Every u-list the construction may legally pick, by brute force."""
    options = []
    for v in s:
        rest = tuple(x for x in s if x != v)
        real = fam.sets[realizers[rest]]
        options.append([u for u in real if g.has_edge(u, v) and not any(g.has_edge(u, x) for x in s if x != v)])
    return list(itertools.product(*options))


def test_witness_c5(c5):
    fam = enumerate_max_independent_sets(c5)
    w = witness_from_shattered(c5, fam, {0, 2})
    assert w.d == 2 and w.s == (0, 2) and w.u == (4, 3)
    assert w.t == 2 and w.u_alpha == 1
    choices = all_partner_choices(c5, fam, w.s, w.realizers)
    assert choices == [(4, 3)]


def test_witness_empty(c5):
    fam = enumerate_max_independent_sets(c5)
    w = witness_from_shattered(c5, fam, ())
    assert w.d == 0 and w.u == ()


def test_witness_rejects_unshattered(c5):
    fam = enumerate_max_independent_sets(c5)
    with pytest.raises(ValueError):
        witness_from_shattered(c5, fam, {0, 1})


def test_witness_loud_failure(caplog):
    g = Graph(3, (0, 0, 0))
    bogus = MaxISFamily.from_sets(3, [(0,), (1,)])  # not the real family of g
    with pytest.raises(WitnessConstructionError, match="graph6=B\\?"):
        witness_from_shattered(g, bogus, {0}, t=2)
    assert "witness construction failed" in caplog.text


def test_witness_small_graphs_all_choices():
    for n in range(1, 6):
        for g in all_graphs_stream(n):
            fam = enumerate_max_independent_sets(g)
            d, s = vc_dimension(fam)
            w = witness_from_shattered(g, fam, s)
            assert w.check(g, fam) == []
            for u in all_partner_choices(g, fam, w.s, w.realizers):
                assert len(set(u)) == len(u)
            if w.d:
                sub = g.__class__.from_edges(
                    len(w.u), [(i, j) for i, j in itertools.combinations(range(len(w.u)), 2) if g.has_edge(w.u[i], w.u[j])]
                )
                assert brute_alpha(sub) == w.u_alpha < w.t


def test_sampler_c5(c5):
    fam = enumerate_max_independent_sets(c5)
    weights = fractional_transversal(fam)
    res = epsilon_net_sample(fam, weights, 2, seed=1)
    assert res.success and res.attempts == 1 and res.m == 34
    assert len(res.draws) == 34 and is_transversal(fam, res.transversal)
    assert res == epsilon_net_sample(fam, weights, 2, seed=1)


def test_sampler_point_mass():
    fam = MaxISFamily.from_sets(3, [(0, 1, 2)])
    weights = fractional_transversal(fam)
    assert weights.weights.count(1) == 1
    res = epsilon_net_sample(fam, weights, 1, seed=5)
    assert res.success and res.attempts == 1
    assert res.transversal == (weights.weights.index(1),)


def test_sampler_zero_attempts(c5):
    fam = enumerate_max_independent_sets(c5)
    res = epsilon_net_sample(fam, fractional_transversal(fam), 2, seed=0, max_attempts=0)
    assert not res.success and res.attempts == 0 and res.misses == ()


def test_sampler_failure_stats(c5, monkeypatch):
    fam = enumerate_max_independent_sets(c5)
    weights = fractional_transversal(fam)
    # a single draw can never hit all five members
    monkeypatch.setattr(proof, "net_sample_size", lambda d, tau, base="natural": 1)
    res = epsilon_net_sample(fam, weights, 1, seed=3, max_attempts=4)
    assert not res.success and res.attempts == 4 and len(res.misses) == 4
    assert all(m >= 1 for m in res.misses)


def test_sampler_rejects_bad_weights(c5):
    fam = enumerate_max_independent_sets(c5)
    w = fractional_transversal(fam)
    bad = type(w)(tuple(Fraction(1, 3) for _ in range(5)), Fraction(5, 3), w.dual)
    with pytest.raises(ValueError):
        epsilon_net_sample(fam, bad, 2, seed=0)
    with pytest.raises(ValueError):
        epsilon_net_sample(fam, w, 0, seed=0)


def test_verify_chain_c5(c5):
    r = verify_chain(c5)
    assert (r.alpha, r.omega, r.chi, r.im, r.t, r.family_size, r.h, r.vc_d) == (2, 2, 3, 1, 2, 5, 3, 2)
    assert r.tau_star == Fraction(5, 2) and r.bound_n_over_alpha == Fraction(5, 2)
    assert r.bound_wagon == 4 and r.bound_ramsey == 3
    assert r.bound_hw == pytest.approx(33.14186, abs=1e-5)
    assert r.bound_main == pytest.approx(221.80710, abs=1e-5)
    assert r.ok and set(r.links.values()) == {"pass"}
    assert r.rederive_links() == r.links


@pytest.mark.parametrize("n", range(2, 7))
def test_verify_chain_complete(n):
    r = verify_chain(generate(GeneratorSpec("complete", (n,))))
    assert (r.alpha, r.omega, r.chi, r.im, r.t, r.h, r.vc_d) == (1, n, n, 1, 2, n, 1)
    assert r.tau_star == n and r.bound_wagon == n * n and r.bound_ramsey == n + 1
    assert r.bound_hw == pytest.approx(2 * n * math.log(11 * n))
    assert r.ok


def test_verify_chain_degenerate():
    r = verify_chain(generate(GeneratorSpec("empty", (5,))))
    assert r.links["L6"].startswith("skipped") and r.links["L5"].startswith("skipped")
    assert r.ok and r.bound_main is None
    assert any("degenerate omega=1" in note for note in r.notes)


def test_verify_chain_t_override(c5):
    r = verify_chain(c5, t_override=3)
    assert r.t == 3 and r.bound_wagon == 16 and r.ok
    with pytest.raises(ValueError):
        verify_chain(c5, t_override=1)


def test_verify_chain_binary(c5):
    r = verify_chain(c5, log_base="binary")
    assert r.bound_main == 320 and r.ok


def test_verify_chain_chi_budget_skip(c5):
    r = verify_chain(c5, chi_max_n=3)
    assert r.chi is None and r.links["L2"] == r.links["L3"] == "skipped:chi-budget"
    assert r.ok


def test_verify_chain_reports_witness_failure(c5, monkeypatch):
    def broken(*a, **k):
        raise WitnessConstructionError("synthetic")

    monkeypatch.setattr(proof, "witness_from_shattered", broken)
    r = verify_chain(c5)
    assert r.links["L7"] == "fail" and not r.ok


def test_chain_small_graphs_and_l1_equality():
    for n in range(1, 6):
        for g in all_graphs_stream(n):
            r = verify_chain(g)
            assert r.ok, r
            assert r.rederive_links() == r.links
            fam = enumerate_max_independent_sets(g)
            dual_total = sum(fractional_transversal(fam).dual)
            assert (r.tau_star == r.bound_n_over_alpha) == (dual_total == Fraction(n, r.alpha))


def test_chain_random_graphs():
    for g in random_stream(12, Fraction(1, 2), 99, 40):
        r = verify_chain(g)
        assert r.ok and r.rederive_links() == r.links
