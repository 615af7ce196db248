import pytest

from golaysc.types.data_types import SimRecord
from golaysc.utils.logging import (
    RunMonitor,
    log_exception,
    log_message,
    log_record,
    run_monitor,
)


# other tests log plenty, start from an empty monitor
@pytest.fixture(scope="module", autouse=True)
def clear_run_monitor_once():
    run_monitor.clear()


def test_messages_are_collected():
    log_message("hello", stdout=False)
    log_message("details", level="DEBUG", timestamp=12, stdout=False)
    messages = run_monitor.messages[-2:]
    assert [m.message for m in messages] == ["hello", "details"]
    assert messages[1].timestamp == 12
    assert messages[0].timestamp > 0


def test_warnings_go_through_warnings_module():
    with pytest.warns(UserWarning, match="careful"):
        log_message("careful", level="WARN")
    assert run_monitor.messages[-1].level == "WARN"


def test_exception():
    try:
        raise ValueError("I am an error")
    except Exception as e:
        log_exception(e, "while testing", stdout=False)
    point = run_monitor.messages[-1]
    assert point.level == "ERROR"
    assert point.message == "while testing - I am an error"
    assert "ValueError" in point.stacktrace


def test_record_event():
    seen = []
    run_monitor.on("record", seen.append)
    record = SimRecord(2.0, 10, 1, 100.0, 40.0, 180, 1.0)
    log_record(record, stdout=False)
    run_monitor.off("record", seen.append)
    assert seen == [record]
    assert run_monitor.records[-1] == record


def test_levels(capsys):
    monitor = RunMonitor("warn")
    assert monitor.level == "WARN"
    assert monitor.echoes("ERROR")
    assert not monitor.echoes("INFO")
    assert RunMonitor("chatty").level == "INFO"

    run_monitor.set_level("ERROR")
    try:
        log_message("quiet")
        assert capsys.readouterr().err == ""
    finally:
        run_monitor.set_level("INFO")
    log_message("loud")
    assert "loud" in capsys.readouterr().err
