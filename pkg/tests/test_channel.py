import pytest
from hypothesis import given, settings, strategies as st

from pscodes.channel import (
    ErrorPlan,
    PlanError,
    corrupt,
    delete,
    insert,
    random_plan,
    replace_group,
    substitute,
)
from pscodes.compositions import CompositionMultiset, distance


def M(c):
    return CompositionMultiset.of_string(c)


class TestCorrupt:
    def test_empty_plan(self):
        x = M("0110")
        assert corrupt(x, ErrorPlan(())) == x

    def test_delete_example(self):
        x = M("01")
        y = corrupt(x, ErrorPlan((delete(1, 0),)))
        assert y.group(1) == [(0, 1)]
        assert distance(x, y) == 1

    def test_substitute_plus_insert(self):
        x = M("0110")
        plan = ErrorPlan((substitute(2, 1, 2), insert(4, (4, 0))))
        assert distance(x, corrupt(x, plan)) == 2

    def test_replace_group_can_empty(self):
        x = M("0110")
        y = corrupt(x, ErrorPlan((replace_group(2, ()),)))
        assert y.group(2) == []
        assert distance(x, y) == 1

    def test_input_not_mutated(self):
        x = M("0101")
        before = {j: list(v) for j, v in x.groups.items()}
        corrupt(x, ErrorPlan((insert(2, (0, 2)),)))
        assert {j: list(v) for j, v in x.groups.items()} == before

    def test_duplicate_size_rejected(self):
        with pytest.raises(PlanError):
            ErrorPlan((delete(1, 0), insert(1, (0, 1))))

    def test_noop_substitution_rejected(self):
        with pytest.raises(PlanError):
            corrupt(M("01"), ErrorPlan((substitute(1, 0, 0),)))

    def test_absent_mass_rejected(self):
        with pytest.raises(PlanError):
            corrupt(M("01"), ErrorPlan((delete(2, 0),)))

    def test_malformed_pair_rejected(self):
        with pytest.raises(PlanError):
            corrupt(M("01"), ErrorPlan((insert(2, (0, 1)),)))

    def test_identity_replacement_rejected(self):
        x = M("01")
        with pytest.raises(PlanError):
            corrupt(x, ErrorPlan((replace_group(1, ((1, 0), (0, 1))),)))


class TestRandomPlan:
    def test_zero_budget(self):
        assert len(random_plan(M("0110"), 0, seed=1)) == 0

    def test_deterministic(self):
        x = M("01101001")
        assert random_plan(x, 3, seed=9) == random_plan(x, 3, seed=9)

    def test_budget_exceeds_groups(self):
        with pytest.raises(PlanError):
            random_plan(M("01"), 3, seed=0)

    @settings(max_examples=60)
    @given(st.text(alphabet="01", min_size=3, max_size=16), st.integers(0, 3),
           st.integers(0, 999))
    def test_exact_distance(self, c, t, seed):
        x = M(c)
        plan = random_plan(x, min(t, x.n), seed)
        assert distance(x, corrupt(x, plan)) == len(plan) == min(t, x.n)

    def test_serialization_roundtrip(self):
        x = M("01101001")
        plan = random_plan(x, 3, seed=5)
        assert ErrorPlan.from_text(plan.to_text()) == plan

    def test_plan_file_format(self):
        plan = ErrorPlan((substitute(5, 2, 4), insert(7, (3, 4)), delete(9, 1)))
        assert plan.to_text() == "5 substitute 2 4\n7 insert 3,4\n9 delete 1\n"
