from __future__ import annotations

from typing import Any, Tuple


class EngineError(Exception):
    """Base class for everything the engine raises on purpose."""


class PoleError(EngineError):
    def __init__(self, kernel: str, args: Tuple[Any, ...] = (), message: str = "") -> None:
        self.kernel = kernel
        self.args_at_pole = tuple(args)
        shown = ", ".join(str(a) for a in self.args_at_pole)
        text = message or f"pole of {kernel}({shown})"
        super().__init__(text)


class UnsupportedOrderError(PoleError):
    pass


class InputError(EngineError, ValueError):
    pass


class ParseError(InputError):
    pass


class DimensionError(InputError):
    pass


class ContractError(EngineError):
    pass


class SamplingError(EngineError):
    pass
