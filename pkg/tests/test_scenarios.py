import pytest

from cohext.closure import is_consistent, saturate, seed
from cohext.model import check_commutativity, scenario_to_dict
from cohext.oracle import oracle_extensions
from cohext.scenarios import (
    gen_dated_rewards,
    gen_homothetic_grid,
    gen_koopmans,
    gen_koopmans_reduced,
    gen_random,
    gen_two_track,
)
from cohext.solver import Verdict, classify_pair, complete_extension


class TestTwoTrack:
    def test_window_counts(self):
        s = gen_two_track(1)
        assert s.n == 6
        assert len(s.base_strict) == 4

    def test_degenerate_window(self):
        s = gen_two_track(0)
        assert s.n == 2
        assert s.base_strict == ()

    @pytest.mark.parametrize("N", [1, 2, 3, 5])
    def test_seed_count_formula(self, N):
        # 2*(2N+1) neighbor pairs minus the two clipped at each boundary
        assert len(gen_two_track(N).base_strict) == 2 * (2 * N + 1) - 2

    def test_center_pair_forced_at_n5(self):
        s = gen_two_track(5)
        st = saturate(seed(s), s, strong=True)
        v = classify_pair(st, s, s.id_of("a:0"), s.id_of("b:0"))
        assert v.status is Verdict.FORCED_STRICT
        assert v.winner == (s.id_of("a:0"), s.id_of("b:0"))


class TestKoopmans:
    def test_window_shape(self):
        s = gen_koopmans(1)
        assert s.n == 10
        assert len(s.generators) == 6
        assert len(s.base_strict) == 4
        assert not s.commutative

    def test_prepend_tables(self):
        s = gen_koopmans(1)
        w_a = s.generator("w_a")
        assert w_a.table == {s.id_of("sx"): s.id_of("a.sx"), s.id_of("sy"): s.id_of("a.sy")}
        # prepending x or y always leaves the window
        assert s.generator("w_x").table == {}

    def test_translates_included_at_longer_horizon(self):
        s = gen_koopmans(2)
        assert s.n == 2 + 8 + 32
        assert len(s.base_strict) == 4 + 4 * 4

    def test_seed_consistent_but_unextendable(self):
        s = gen_koopmans(1)
        assert is_consistent(saturate(seed(s), s))
        assert not complete_extension(s).sat

    def test_reduced_window_agrees_with_oracle(self):
        s = gen_koopmans_reduced()
        assert s.n == 8
        assert not complete_extension(s).sat
        assert oracle_extensions(s, cap=8) == []


class TestHomotheticGrid:
    def test_shape(self):
        s = gen_homothetic_grid(dims=1, depth=2)
        assert [e.label for e in s.elements] == ["1", "2", "4"]
        assert s.generator("double").table == {s.id_of("1"): s.id_of("2"), s.id_of("2"): s.id_of("4")}
        assert s.base_weak == () and s.base_strict == ()

    def test_forward_scaling_forced(self):
        s = gen_homothetic_grid(1, 2).with_seed(weak=[(0, 1)])
        st = saturate(seed(s), s, strong=True)
        assert st.W[s.id_of("2"), s.id_of("4")]

    def test_backward_scaling_forced_in_strong_mode(self):
        # seed doubles: 2 strictly above 4
        s = gen_homothetic_grid(1, 2).with_seed(strict=[(1, 2)])
        st = saturate(seed(s), s, strong=True)
        assert st.D[s.id_of("1"), s.id_of("2")]
        # oracle confirms: every coherent completion ranks 1 above 2
        survivors = oracle_extensions(s)
        assert survivors
        assert all(r[s.id_of("1")] < r[s.id_of("2")] for r in survivors)

    def test_two_dims(self):
        s = gen_homothetic_grid(dims=2, depth=1)
        assert s.n == 4
        assert s.generator("double").table == {s.id_of("(1,1)"): s.id_of("(2,2)")}


class TestDatedRewards:
    def test_counts(self):
        s = gen_dated_rewards(2, 2)
        assert s.n == 6
        assert len(s.generator("delay").table) == 4

    def test_stationarity_instance(self):
        s = gen_dated_rewards(2, 2).with_seed(strict=[(0, 3)])  # r0@0 > r1@1
        assert s.label_of(0) == "r0@0" and s.label_of(3) == "r1@1"
        st = saturate(seed(s), s, strong=True)
        assert st.D[s.id_of("r0@1"), s.id_of("r1@2")]

    def test_named_rewards(self):
        s = gen_dated_rewards(["apple", "pear"], 1)
        assert s.id_of("apple@0") == 0
        assert s.id_of("pear@1") == 3


class TestRandom:
    def test_reproducible(self):
        a = gen_random(n=6, k=2, density=0.4, seed=11)
        b = gen_random(n=6, k=2, density=0.4, seed=11)
        assert scenario_to_dict(a) == scenario_to_dict(b)

    def test_zero_density_gives_empty_seed(self):
        s = gen_random(n=5, k=1, density=0.0, seed=0)
        assert s.base_weak == () and s.base_strict == ()

    @pytest.mark.parametrize("seed_value", range(10))
    def test_commutative_construction_is_clean(self, seed_value):
        total = seed_value % 2 == 0
        s = gen_random(n=6, k=2, density=0.3, seed=seed_value, total=total, commutative=True)
        assert check_commutativity(s) == []
        if total:
            for g in s.generators:
                assert len(g.table) == s.n

    def test_partial_noncommutative_tables_are_partial(self):
        s = gen_random(n=8, k=2, density=0.2, seed=5, total=False, commutative=False)
        assert any(len(g.table) < s.n for g in s.generators)

    def test_bad_parameters_rejected(self):
        with pytest.raises(ValueError):
            gen_random(n=0, k=1, density=0.5, seed=1)
        with pytest.raises(ValueError):
            gen_random(n=3, k=1, density=1.5, seed=1)
