"""Text format for weighted Mirkin instances.

::

    c optional comments
    p mirk <n> <number of string lines>
    k <budget>                 (optional)
    <bitstring> [<multiplicity>]
"""
from __future__ import annotations

from .bitcore import BitString, MirkinInstance
from .errors import ArithmeticOverflow, InvalidParameter, MirkinError, ParseError


def format_instance(inst: MirkinInstance, comments: tuple[str, ...] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p mirk {inst.n} {len(inst.strings)}")
    if inst.budget is not None:
        lines.append(f"k {inst.budget}")
    for s, w in inst.strings:
        lines.append(f"{s} {w}" if w != 1 else str(s))
    return "\n".join(lines) + "\n"


def parse_instance(text: str) -> MirkinInstance:
    n = count = budget = None
    strings: list[tuple[BitString, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError("duplicate header", lineno)
            if len(parts) != 4 or parts[1] != "mirk":
                raise ParseError(f"expected 'p mirk <n> <count>': {line!r}", lineno)
            try:
                n, count = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(f"non-integer header field: {line!r}", lineno)
            continue
        if n is None:
            raise ParseError("data before header", lineno)
        if parts[0] == "k":
            if budget is not None or strings or len(parts) != 2:
                raise ParseError(f"misplaced or malformed budget line: {line!r}",
                                 lineno)
            try:
                budget = int(parts[1])
            except ValueError:
                raise ParseError(f"non-integer budget: {line!r}", lineno)
            continue
        if len(parts) > 2:
            raise ParseError(f"expected '<bitstring> [<multiplicity>]': {line!r}",
                             lineno)
        try:
            s = BitString.from_str(parts[0])
            w = int(parts[1]) if len(parts) == 2 else 1
        except (InvalidParameter, ValueError):
            raise ParseError(f"bad string line: {line!r}", lineno)
        if s.n != n:
            raise ParseError(f"string length {s.n} != header length {n}", lineno)
        if w < 1:
            raise ParseError(f"multiplicity must be >= 1: {line!r}", lineno)
        strings.append((s, w))
    if n is None:
        raise ParseError("missing header")
    if len(strings) != count:
        raise ParseError(f"header declares {count} strings, found {len(strings)}")
    try:
        return MirkinInstance(tuple(strings), budget)
    except ArithmeticOverflow:
        raise
    except MirkinError as exc:
        raise ParseError(str(exc))
