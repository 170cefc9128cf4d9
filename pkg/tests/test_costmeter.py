import pytest
from pydantic import ValidationError

from app.services import costmeter
from app.services.costmeter import (
    OPS,
    BoundForm,
    CostReport,
    Sample,
    check_bound,
    closed_form,
    measured,
    sample_steps,
    worst_case_input,
)
from app.services.errors import UsageError
from app.services.listlab import sumlist
from app.services.meter import StepMeter, tick
from app.services.unary import ZERO, u_from_int, u_plus


def test_meter_counts_through_module_tick():
    meter = StepMeter()
    tick(meter)
    tick(meter)
    tick(None)
    assert meter.count == 2
    assert not hasattr(meter, "tick")


def test_measured_examples():
    assert measured("sumlist", (list(range(1, 11)),)) == (55, costmeter.StepCount(count=11))
    assert measured("max_naive", (list(range(1, 11)),))[1].count == 1023
    assert measured("u_plus", (u_from_int(3), ZERO))[1].count == 1


def test_measured_is_transparent():
    xs = [4, -2, 9, 0]
    assert measured("sumlist", (xs,))[0] == sumlist(xs)
    x, y = u_from_int(5), u_from_int(7)
    assert measured("u_plus", (x, y))[0] == u_plus(x, y)


def test_measured_is_deterministic():
    args = worst_case_input("b_add_v2", 12)
    first = measured("b_add_v2", args)
    second = measured("b_add_v2", args)
    assert first == second


def test_unknown_operation():
    with pytest.raises(UsageError):
        measured("no_such_op", ())
    with pytest.raises(UsageError):
        sample_steps("no_such_op", [1])


@pytest.mark.parametrize("op_id", sorted(op for op, m in OPS.items() if m.closed_form is not None))
def test_closed_forms_match_measurement(op_id):
    for n, steps in sample_steps(op_id, [1, 2, 5, 10]):
        assert steps == closed_form(op_id, n), (op_id, n)


def test_closed_form_absent():
    assert closed_form("b_add_v1", 10) is None


def test_sample_steps_rows():
    assert sample_steps("sumlist", [10, 100]) == [(10, 11), (100, 101)]
    assert sample_steps("max_naive", [8, 10]) == [(8, 255), (10, 1023)]
    assert sample_steps("bs_access", [1, 1000]) == [(1, 1), (1000, 9)]


def test_check_bound_exact_filter():
    report = check_bound("filter_keep", [10, 100, 1000], BoundForm.EXACT)
    assert report.passed
    assert [s.steps for s in report.samples] == [11, 101, 1001]
    assert report.worst_ratio == pytest.approx(1.0)


def test_check_bound_linear_binary_add():
    report = check_bound("b_add_v2", [4, 8, 16, 32], BoundForm.LINEAR, k=2)
    assert report.passed
    assert report.constant == 2
    assert report.worst_ratio <= 2


def test_check_bound_logarithmic_access():
    report = check_bound("bs_access", [1, 10, 100, 1000], BoundForm.LOGARITHMIC, k=2)
    assert report.passed
    assert report.bound is BoundForm.LOGARITHMIC


def test_check_bound_exponential_max():
    assert check_bound("max_naive", [4, 8, 12], BoundForm.EXPONENTIAL).passed


def test_check_bound_detects_violation():
    report = check_bound("max_naive", [8, 12], "linear", k=1)
    assert not report.passed
    assert report.worst_ratio == pytest.approx(4095 / 13)


def test_check_bound_sorts_and_dedupes_sizes():
    report = check_bound("sumlist", [100, 10, 100], BoundForm.LINEAR)
    assert [s.size for s in report.samples] == [10, 100]


def test_check_bound_usage_errors():
    with pytest.raises(UsageError):
        check_bound("sumlist", [], BoundForm.LINEAR)
    with pytest.raises(UsageError):
        check_bound("b_add_v1", [1, 2], BoundForm.EXACT)
    with pytest.raises(UsageError):
        check_bound("no_such_op", [1], BoundForm.LINEAR)
    with pytest.raises(ValueError):
        check_bound("sumlist", [1], "quadratic")


def test_cost_report_rejects_bad_samples():
    common = dict(operation="sumlist", bound="linear", constant=1, passed=True, worst_ratio=1.0)
    with pytest.raises(ValidationError):
        CostReport(samples=[], **common)
    with pytest.raises(ValidationError):
        CostReport(samples=[Sample(size=10, steps=1), Sample(size=10, steps=1)], **common)
    report = CostReport(samples=[Sample(size=1, steps=2), Sample(size=3, steps=4)], **common)
    assert report.bound is BoundForm.LINEAR
