from typing import Any, Callable, Dict, List

Listener = Callable[..., None]


class EventEmitter:
    def __init__(self):
        self.listeners: Dict[str, List[Listener]] = {}

    def dispatch(self, event: str, *args: Any, **kwargs: Any) -> None:
        """
        Calls every listener registered for `event`, in registration order.
        """
        for listener in self.listeners.get(event, []):
            listener(*args, **kwargs)

    def on(self, event: str, listener: Listener) -> "EventEmitter":
        if event not in self.listeners:
            self.listeners[event] = []
        self.listeners[event].append(listener)

        return self

    def off(self, event: str, listener: Listener) -> None:
        if listener in self.listeners.get(event, []):
            self.listeners[event].remove(listener)
