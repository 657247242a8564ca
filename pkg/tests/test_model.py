import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cohext.model import (
    ScenarioError,
    Word,
    apply_word,
    check_commutativity,
    load_scenario,
    save_scenario,
    scenario_from_dict,
    scenario_to_dict,
)
from cohext.scenarios import gen_koopmans, gen_two_track

from conftest import make_doc, make_scenario


class TestLoadValidation:
    def test_two_track_document_shape(self):
        s = gen_two_track(2)
        assert s.n == 10
        assert len(s.generators) == 1
        assert s.commutative

    def test_degenerate_minimum(self):
        s = make_scenario(1)
        assert s.n == 1
        assert s.generators == ()

    def test_contradictory_strict_pair_rejected(self):
        with pytest.raises(ScenarioError, match="contradictory strict"):
            make_scenario(2, strict=[(0, 1), (1, 0)])

    def test_strict_self_loop_rejected(self):
        with pytest.raises(ScenarioError, match="contradictory strict"):
            make_scenario(2, strict=[(0, 0)])

    def test_unknown_field_rejected(self):
        doc = make_doc(2)
        doc["extra"] = 1
        with pytest.raises(ScenarioError, match="unknown field"):
            scenario_from_dict(doc)

    def test_dangling_id_rejected(self):
        with pytest.raises(ScenarioError, match="outside"):
            make_scenario(2, weak=[(0, 5)])

    def test_noncontiguous_ids_rejected(self):
        doc = make_doc(2)
        doc["elements"][1]["id"] = 7
        with pytest.raises(ScenarioError, match="contiguous"):
            scenario_from_dict(doc)

    def test_duplicate_label_rejected(self):
        doc = make_doc(2)
        doc["elements"][1]["label"] = "e0"
        with pytest.raises(ScenarioError, match="duplicate element label"):
            scenario_from_dict(doc)

    def test_double_mapped_source_rejected(self):
        with pytest.raises(ScenarioError, match="mapped twice"):
            make_scenario(2, generators=[("g", [(0, 1), (0, 0)])])

    def test_declared_commutative_with_violation_rejected(self):
        # two constant maps never commute: g(h(x)) = 0 but h(g(x)) = 1
        with pytest.raises(ScenarioError, match="does not commute"):
            make_scenario(
                2,
                generators=[("g", [(0, 0), (1, 0)]), ("h", [(0, 1), (1, 1)])],
                commutative=True,
            )

    def test_malformed_json_file(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{nope")
        with pytest.raises(ScenarioError, match="not valid JSON"):
            load_scenario(path)


def test_round_trip_through_file(tmp_path):
    s = gen_two_track(1)
    path = tmp_path / "s.json"
    save_scenario(s, path)
    loaded = load_scenario(path)
    assert scenario_to_dict(loaded) == scenario_to_dict(s)
    assert loaded.base_strict == s.base_strict
    assert [e.coords for e in loaded.elements] == [e.coords for e in s.elements]


def test_round_trip_is_identity_on_dicts():
    s = make_scenario(3, generators=[("g", [(0, 1), (1, 2)])], weak=[(0, 2)], strict=[(1, 0)])
    doc = scenario_to_dict(s)
    assert scenario_to_dict(scenario_from_dict(doc)) == doc
    assert json.loads(json.dumps(doc)) == doc


class TestCommutativity:
    def test_single_generator_commutes_with_itself(self):
        s = gen_two_track(2)
        assert check_commutativity(s) == []

    def test_commuting_shifts_on_grid(self):
        # 3x3 grid, right-shift and up-shift
        idx = lambda r, c: 3 * r + c
        right = [(idx(r, c), idx(r, c + 1)) for r in range(3) for c in range(2)]
        up = [(idx(r, c), idx(r + 1, c)) for r in range(2) for c in range(3)]
        s = make_scenario(9, generators=[("right", right), ("up", up)], commutative=True)
        assert check_commutativity(s) == []

    def test_koopmans_short_window_is_vacuous(self):
        # at horizon 1 no two prepends compose inside the window
        assert check_commutativity(gen_koopmans(1)) == []

    def test_koopmans_longer_window_reports_violations(self):
        report = check_commutativity(gen_koopmans(2))
        assert report
        names = {frozenset((g, h)) for g, h, _ in report}
        assert frozenset(("w_a", "w_b")) in names

    def test_noncommuting_pair_reported_per_point(self):
        s = make_scenario(2, generators=[("g", [(0, 0), (1, 0)]), ("h", [(0, 1), (1, 1)])])
        assert check_commutativity(s) == [("g", "h", 0), ("g", "h", 1)]


class TestApplyWord:
    def test_empty_word_is_identity(self):
        s = gen_two_track(2)
        for x in range(s.n):
            assert apply_word(s, Word(), x) == x

    def test_square_of_shift(self):
        s = gen_two_track(2)
        w = Word(("shift", "shift"))
        assert apply_word(s, w, s.id_of("a:0")) == s.id_of("a:2")

    def test_partial_at_boundary(self):
        s = gen_two_track(2)
        assert apply_word(s, Word(("shift",)), s.id_of("a:2")) is None

    def test_single_step_matches_table(self):
        s = gen_two_track(1)
        g = s.generator("shift")
        for x in range(s.n):
            assert apply_word(s, Word(("shift",)), x) == g.table.get(x)

    def test_exponents_round_trip(self):
        w = Word.from_exponents({"b": 2, "a": 1})
        assert w.steps == ("a", "b", "b")
        assert w.exponents == {"a": 1, "b": 2}
        with pytest.raises(ValueError):
            Word.from_exponents({"a": -1})

    @given(st.lists(st.sampled_from(["right", "up"]), max_size=4), st.integers(0, 15))
    @settings(max_examples=60, deadline=None)
    def test_word_order_irrelevant_where_defined(self, steps, x):
        # commuting shifts on a 4x4 grid: any reordering acts identically
        idx = lambda r, c: 4 * r + c
        right = [(idx(r, c), idx(r, c + 1)) for r in range(4) for c in range(3)]
        up = [(idx(r, c), idx(r + 1, c)) for r in range(3) for c in range(4)]
        s = make_scenario(16, generators=[("right", right), ("up", up)], commutative=True)
        forward = apply_word(s, Word(tuple(steps)), x)
        backward = apply_word(s, Word(tuple(reversed(steps))), x)
        if forward is not None and backward is not None:
            assert forward == backward
