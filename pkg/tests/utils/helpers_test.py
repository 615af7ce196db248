import pytest

from golaysc.utils.event_emitter import EventEmitter
from golaysc.utils.helpers import get_now_ts, parse_snr_range


def test_parse_snr_range():
    assert parse_snr_range("1:1:4") == [1.0, 2.0, 3.0, 4.0]
    assert parse_snr_range("0:0.5:1.2") == [0.0, 0.5, 1.0]
    assert parse_snr_range("0.1:0.1:0.3") == [0.1, 0.2, 0.3]
    assert parse_snr_range("2.5") == [2.5]


@pytest.mark.parametrize("text", ["1:2", "3:1:2", "1:0:4", "a:1:2", ""])
def test_malformed_snr_range(text):
    with pytest.raises(ValueError):
        parse_snr_range(text)


def test_timestamps():
    assert get_now_ts() > 1_600_000_000_000


def test_event_emitter():
    emitter = EventEmitter()
    calls = []

    def listener(*args, **kwargs):
        calls.append((args, kwargs))

    assert emitter.on("tick", listener) is emitter
    emitter.dispatch("tick", 1, flag=True)
    emitter.dispatch("other")
    emitter.off("tick", listener)
    emitter.dispatch("tick", 2)
    assert calls == [((1,), {"flag": True})]
