"""Small helpers for the element grammar."""

from __future__ import annotations

from ..errors import ParseError
from ..extrat import ExtRat


def split_top_level(text: str, sep: str = ",") -> list[str]:
    """Split on ``sep`` outside brackets and parentheses."""
    parts, depth, buf = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced brackets in {text!r}")
        if ch == sep and depth == 0:
            parts.append("".join(buf).strip())
            buf = []
        else:
            buf.append(ch)
    if depth != 0:
        raise ParseError(f"unbalanced brackets in {text!r}")
    parts.append("".join(buf).strip())
    return parts


def parse_pair(text: str) -> tuple[str, str]:
    t = text.strip()
    if not (t.startswith("(") and t.endswith(")")):
        raise ParseError(f"expected a pair '(a, b)', got {text!r}")
    parts = split_top_level(t[1:-1])
    if len(parts) != 2 or not all(parts):
        raise ParseError(f"expected exactly two components in {text!r}")
    return parts[0], parts[1]


def parse_extrat(text: str) -> ExtRat:
    try:
        return ExtRat.parse(text)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
