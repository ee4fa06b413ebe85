"""Spike symbols and step event tags."""

from enum import Enum
from typing import Iterable, Tuple


class LogicSymbol(str, Enum):
    """The two spike symbols: | is logical 1, ○ is logical 0."""
    ONE = "1"
    ZERO = "0"

    @property
    def glyph(self) -> str:
        """Symbol as drawn in truth tables."""
        return "|" if self is LogicSymbol.ONE else "○"

    @property
    def bit(self) -> int:
        return 1 if self is LogicSymbol.ONE else 0

    @classmethod
    def from_bool(cls, value: bool) -> "LogicSymbol":
        return cls.ONE if value else cls.ZERO

    @classmethod
    def parse(cls, token: str) -> "LogicSymbol":
        """Parse a single token ("1", "0", "|", "○", "o").

        Raises:
            ValueError: If the token is not a known spelling
        """
        cleaned = str(token).strip().lower()
        if cleaned in ("1", "|"):
            return cls.ONE
        if cleaned in ("0", "○", "o"):
            return cls.ZERO
        raise ValueError(f"Unknown logic symbol: {token!r}")

    @classmethod
    def parse_sequence(cls, text: str) -> Tuple["LogicSymbol", ...]:
        """Parse a comma separated sequence such as "1,0,1".

        Raises:
            ValueError: On an unknown or empty token
        """
        tokens = text.split(",")
        if any(not t.strip() for t in tokens):
            raise ValueError(f"Empty symbol in sequence: {text!r}")
        return tuple(cls.parse(t) for t in tokens)


def count_ones(symbols: Iterable[LogicSymbol]) -> int:
    """Number of | symbols in a sequence."""
    return sum(1 for s in symbols if s is LogicSymbol.ONE)


class EventTag(str, Enum):
    """Tags attached to a step whose measured current departs from a_eff."""
    NONE = "NONE"
    BOUNCE_BACK = "BOUNCE_BACK"
    FRICTION = "FRICTION"
