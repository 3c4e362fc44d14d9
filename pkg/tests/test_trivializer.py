import pytest

from acbench.constructions.doubling import DoublingSpec, build_Pw
from acbench.constructions.families import gen_w
from acbench.errors import PlanError
from acbench.moves.moves import Invert, Stabilize
from acbench.moves.trace import MoveTrace, replay, verify_trivialization
from acbench.presentations.presentation import Presentation
from acbench.solvers.area import AreaCaps
from acbench.solvers.certificate import certify_wn
from acbench.trivializer import (
    TrivializationPlan,
    acc_bounds,
    audit,
    eliminate_letter,
    plan_for_wn,
    trivialize_Pw,
)
from acbench.words import format_word


def test_plan_for_w2(s2_plan):
    assert len(s2_plan.cert_w) == 2
    assert s2_plan.trace_bar.moves == (Invert(1),)
    assert s2_plan.eliminations == (4,)


def test_trivialize_w2(s2_plan):
    trace = trivialize_Pw(s2_plan)
    assert trace.initial == build_Pw(s2_plan.spec)
    v = verify_trivialization(trace)
    assert v.accepted, v.reason
    assert v.dihedral_count == 16, v.dihedral_count


@pytest.mark.parametrize("n", [2, 4, 8])
def test_audit_within_bound(n):
    plan = plan_for_wn(n)
    report = audit(plan, trivialize_Pw(plan))
    assert report.accepted
    assert report.within_bound, report
    assert report.bound == 2 * 1 + 2 * (len(plan.cert_w) + 1) + 2 * 4, report.bound


def test_audit_report_of_w2(s2_plan):
    report = audit(s2_plan, trivialize_Pw(s2_plan))
    data = report.to_dict()
    assert data["bound"] == 16, data
    assert data["acc_bar"] == 1
    assert data["eliminations"] == 4
    assert data["acc_bounds"]["lower"] == 1
    assert data["acc_bounds"]["upper"] == 16


def test_plan_with_bfs_certificate():
    plan = plan_for_wn(2, method="bfs", area_caps=AreaCaps(max_len=16))
    assert len(plan.cert_w) == 2
    assert verify_trivialization(trivialize_Pw(plan)).accepted


def test_plan_unknown_method():
    with pytest.raises(ValueError):
        plan_for_wn(2, method="guess")


def test_plan_bfs_gives_up_under_tight_caps():
    assert plan_for_wn(2, method="bfs", area_caps=AreaCaps(max_len=16, max_depth=1)) is None


def test_only_k2_admits_a_plan():
    with pytest.raises(PlanError):
        plan_for_wn(2, k=3)


def test_plan_rejects_mismatched_certificate(s2, s2_plan):
    spec = DoublingSpec(s2, "t", "x", gen_w(4, s2.generators))
    with pytest.raises(PlanError):
        TrivializationPlan(spec, certify_wn(2), s2_plan.trace_bar)


def test_plan_rejects_stabilizing_trace_bar(s2_plan):
    bar = s2_plan.trace_bar.initial
    trace_bar = MoveTrace(bar, (Stabilize(1), Invert(1)))
    with pytest.raises(PlanError):
        TrivializationPlan(s2_plan.spec, s2_plan.cert_w, trace_bar)


def test_plan_rejects_wrong_trace_bar(s2_plan):
    bar = s2_plan.trace_bar.initial
    with pytest.raises(PlanError):
        TrivializationPlan(s2_plan.spec, s2_plan.cert_w, MoveTrace(bar))


def test_eliminate_letter():
    p = Presentation.parse("< a, b | a b a^-1 b, a >")
    moves = eliminate_letter(p, 1, 2, "a")
    assert len(moves) == 2, moves
    assert format_word(replay(MoveTrace(p, tuple(moves))).relators[0]) == "b^2"


def test_eliminate_letter_with_inverse_generator():
    p = Presentation.parse("< a, b | b a^2 b, a^-1 >")
    moves = eliminate_letter(p, 1, 2, "a")
    assert len(moves) == 2, moves
    assert format_word(replay(MoveTrace(p, tuple(moves))).relators[0]) == "b^2"


def test_eliminate_letter_errors():
    p = Presentation.parse("< a, b | a b a^-1 b, a b >")
    with pytest.raises(PlanError):
        eliminate_letter(p, 1, 1, "a")
    with pytest.raises(PlanError):
        eliminate_letter(p, 1, 2, "a")


def test_acc_bounds_values():
    assert acc_bounds(2).lower == 1
    assert acc_bounds(4).lower == 2
    assert acc_bounds(16).lower == 45425, acc_bounds(16)
    assert acc_bounds(16).tower_index == 4


def test_acc_bounds_corrected():
    bounds = acc_bounds(16, corrected=True)
    assert bounds.tower_index == 3
    assert bounds.lower == 10, bounds


def test_acc_bounds_symbolic_when_tower_overflows():
    bounds = acc_bounds(64)
    assert bounds.lower is None
    assert bounds.symbolic == "ceil(Delta_2(5) * ln(2) - ln(3))", bounds.symbolic


def test_acc_bounds_upper_from_trace(s2_plan):
    bounds = acc_bounds(2, trace=trivialize_Pw(s2_plan))
    assert bounds.upper == 16


def test_acc_bounds_needs_n_at_least_two():
    with pytest.raises(ValueError):
        acc_bounds(1)
