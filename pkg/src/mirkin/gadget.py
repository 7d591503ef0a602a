"""Recursive gadget family with the half/half pair property.

``build(ell)`` returns ``2**ell`` strings of length ``2**ell`` such that, for
every pair of positions, exactly half of the strings carry equal bits there.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .bitcore import BitString, complement
from .errors import InvalidParameter
from .report import PropertyReport

MAX_ELL = 20


@dataclass(frozen=True)
class GadgetFamily:
    ell: int
    strings: tuple[BitString, ...]

    def __post_init__(self):
        size = 1 << self.ell
        if len(self.strings) != size:
            raise InvalidParameter(
                f"family for ell={self.ell} needs {size} strings, "
                f"got {len(self.strings)}")
        for s in self.strings:
            if s.n != size:
                raise InvalidParameter(
                    f"family member {s} has length {s.n}, expected {size}")

    def __len__(self) -> int:
        return len(self.strings)

    def __iter__(self):
        return iter(self.strings)

    def __getitem__(self, k: int) -> BitString:
        return self.strings[k]


def build(ell: int, max_ell: int = MAX_ELL) -> GadgetFamily:
    if not 1 <= ell <= max_ell:
        raise InvalidParameter(f"ell must be in 1..{max_ell}, got {ell}")
    strings = [BitString.from_str("00"), BitString.from_str("01")]
    for _ in range(ell - 1):
        nxt = []
        for s in strings:
            nxt.append(s + s)
            nxt.append(s + complement(s))
        strings = nxt
    return GadgetFamily(ell, tuple(strings))


def pair_split(strings: Sequence[BitString], i: int, j: int) -> tuple[int, int]:
    """Return (#strings with s[i] == s[j], #strings with s[i] != s[j])."""
    agree = sum(s[i] == s[j] for s in strings)
    return agree, len(strings) - agree


def check_half_half(fam: GadgetFamily | Sequence[BitString]) -> PropertyReport:
    """Check that every position pair splits the family exactly in half.

    Stops at the first violating pair; the report's failure lists it with
    the observed agree/differ split.
    """
    strings = list(fam)
    size = len(strings)
    n = strings[0].n
    report = PropertyReport("half_half")
    # column i as a bit mask over the members: bit k set iff strings[k][i] == 1
    cols = []
    for i in range(1, n + 1):
        mask = 0
        for k, s in enumerate(strings):
            mask |= s[i] << k
        cols.append(mask)
    for i in range(n):
        for j in range(i + 1, n):
            differ = (cols[i] ^ cols[j]).bit_count()
            agree = size - differ
            if not report.record(2 * agree == size, "pair split",
                                 f"{agree}/{differ}", f"{size // 2}/{size // 2}",
                                 pair=(i + 1, j + 1)):
                report.constants["first_violation"] = (i + 1, j + 1)
                report.constants["split"] = (agree, differ)
                return report
    return report
