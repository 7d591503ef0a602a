"""3-CNF formulas and the two hardness reductions.

``reduce_3sat_to_nae`` maps a 3-CNF formula to a not-all-equal formula that
is NAE-satisfiable iff the source is satisfiable. ``reduce_nae_to_mirkin``
maps a NAE formula to a weighted Mirkin instance plus a decision budget
``k``: some string has total distance <= k iff the formula is
NAE-satisfiable.

Variable ``i`` of the NAE formula is encoded by the bit pair at positions
``2i-1, 2i`` of a candidate string (``11`` true, ``00`` false); see
:func:`gamma`.
"""
from __future__ import annotations

import hashlib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .bitcore import (BitString, MirkinInstance, checked, complement, insert,
                      mirkin_total)
from .errors import InvalidParameter, ParseError
from .gadget import build


@dataclass(frozen=True, order=True)
class Literal:
    var: int
    positive: bool = True

    def __post_init__(self):
        if self.var < 1:
            raise InvalidParameter(f"variable index must be >= 1, got {self.var}")

    @classmethod
    def from_int(cls, lit: int) -> Literal:
        if lit == 0:
            raise InvalidParameter("0 is not a literal")
        return cls(abs(lit), lit > 0)

    def __int__(self) -> int:
        return self.var if self.positive else -self.var

    def __neg__(self) -> Literal:
        return Literal(self.var, not self.positive)

    def value(self, assignment: Sequence[int]) -> bool:
        """Truth value under ``assignment`` (``assignment[i-1]`` is variable i)."""
        return bool(assignment[self.var - 1]) == self.positive

    def __str__(self) -> str:
        return str(int(self))


Clause = tuple[Literal, Literal, Literal]


def _clause(lits) -> Clause:
    lits = tuple(Literal.from_int(l) if isinstance(l, int) else l for l in lits)
    if len(lits) != 3:
        raise InvalidParameter(f"clause must have exactly 3 literals: {lits}")
    if len({l.var for l in lits}) != 3:
        raise InvalidParameter(
            f"clause repeats a variable: {' '.join(map(str, lits))}")
    return lits


@dataclass(frozen=True)
class _Formula3:
    num_vars: int
    clauses: tuple[Clause, ...] = ()

    kind = ""

    def __post_init__(self):
        if self.num_vars < 0:
            raise InvalidParameter(f"negative variable count {self.num_vars}")
        clauses = tuple(_clause(c) for c in self.clauses)
        for c in clauses:
            for lit in c:
                if lit.var > self.num_vars:
                    raise InvalidParameter(
                        f"variable {lit.var} exceeds declared {self.num_vars}")
        object.__setattr__(self, "clauses", clauses)

    @classmethod
    def from_ints(cls, num_vars: int, clauses: Sequence[Sequence[int]]):
        return cls(num_vars, tuple(_clause(c) for c in clauses))

    @property
    def m(self) -> int:
        return len(self.clauses)

    def clause_satisfied(self, clause: Clause, assignment: Sequence[int]) -> bool:
        raise NotImplementedError

    def satisfied_by(self, assignment: Sequence[int]) -> bool:
        return all(self.clause_satisfied(c, assignment) for c in self.clauses)

    def to_dimacs(self) -> str:
        lines = [f"p {self.kind} {self.num_vars} {self.m}"]
        lines += [" ".join(map(str, c)) + " 0" for c in self.clauses]
        return "\n".join(lines) + "\n"

    def digest(self) -> str:
        return "sha256:" + hashlib.sha256(self.to_dimacs().encode()).hexdigest()


class CnfFormula(_Formula3):
    kind = "cnf"

    def clause_satisfied(self, clause, assignment):
        return any(l.value(assignment) for l in clause)


class NaeFormula(_Formula3):
    kind = "nae"

    def clause_satisfied(self, clause, assignment):
        values = {l.value(assignment) for l in clause}
        return len(values) == 2


def parse_dimacs(text: str, kind: str = "cnf") -> CnfFormula | NaeFormula:
    """Parse DIMACS text with header ``p <kind> <vars> <clauses>``.

    Clauses may span lines; each ends at a literal ``0``. Every clause must
    have exactly three literals over distinct variables.
    """
    cls = {"cnf": CnfFormula, "nae": NaeFormula}[kind]
    num_vars = num_clauses = None
    clauses: list[Clause] = []
    pending: list[int] = []
    start_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if num_vars is not None:
                raise ParseError("duplicate header", lineno)
            if len(parts) != 4 or parts[1] != kind:
                raise ParseError(f"expected 'p {kind} <vars> <clauses>': {line!r}",
                                 lineno)
            try:
                num_vars, num_clauses = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(f"non-integer header field: {line!r}", lineno)
            if num_vars < 0 or num_clauses < 0:
                raise ParseError(f"negative header field: {line!r}", lineno)
            continue
        if num_vars is None:
            raise ParseError("clause before header", lineno)
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise ParseError(f"bad literal {tok!r}", lineno)
            if not pending:
                start_line = lineno
            if lit != 0:
                if abs(lit) > num_vars:
                    raise ParseError(
                        f"variable {abs(lit)} exceeds declared {num_vars}", lineno)
                pending.append(lit)
                continue
            if len(pending) != 3:
                raise ParseError(
                    f"clause has {len(pending)} literals, expected 3", start_line)
            if len({abs(l) for l in pending}) != 3:
                raise ParseError("clause repeats a variable", start_line)
            clauses.append(_clause(pending))
            pending = []
    if num_vars is None:
        raise ParseError("missing header")
    if pending:
        raise ParseError("last clause not terminated by 0", start_line)
    if len(clauses) != num_clauses:
        raise ParseError(f"header declares {num_clauses} clauses, found {len(clauses)}")
    return cls(num_vars, tuple(clauses))


def parse_dimacs_cnf(text: str) -> CnfFormula:
    return parse_dimacs(text, "cnf")


def parse_dimacs_nae(text: str) -> NaeFormula:
    return parse_dimacs(text, "nae")


def reduce_3sat_to_nae(phi: CnfFormula) -> NaeFormula:
    """Clause ``(a|b|c)`` at index j becomes ``(a|b|y_j)`` and ``(c|z|~y_j)``.

    ``y_j`` is variable ``n + j`` and ``z`` is variable ``n + m + 1``.
    """
    n, m = phi.num_vars, phi.m
    z = Literal(n + m + 1)
    out = []
    for j, (a, b, c) in enumerate(phi.clauses, start=1):
        y = Literal(n + j)
        out.append((a, b, y))
        out.append((c, z, -y))
    return NaeFormula(n + m + 1, tuple(out))


def gamma(s: BitString) -> BitString:
    """Double every bit: ``e1 e2 ... en -> e1 e1 e2 e2 ... en en``."""
    value = 0
    for bit in s:
        value = (value << 2) | (bit * 3)
    return BitString(2 * s.n, value)


def padded_size(n: int) -> tuple[int, int]:
    """Smallest ``2**ell + 1 >= n`` with ``ell >= 2``; returns ``(ell, 2**ell + 1)``."""
    ell = 2
    while (1 << ell) + 1 < n:
        ell += 1
    return ell, (1 << ell) + 1


_ELEVEN = BitString.from_str("11")


@lru_cache(maxsize=64)
def variable_gadget(r: int, ell: int) -> tuple[BitString, ...]:
    """Group-1 strings for variable ``r`` with ``n = 2**ell + 1`` variables.

    For each member ``s`` of ``build(ell + 1)`` in order: ``11`` inserted at
    position ``2r-1`` of ``s``, then of its complement.
    """
    if ell < 1:
        raise InvalidParameter(f"ell must be >= 1, got {ell}")
    n = (1 << ell) + 1
    if not 1 <= r <= n:
        raise InvalidParameter(f"variable index {r} outside 1..{n}")
    out = []
    for s in build(ell + 1):
        out.append(insert(s, _ELEVEN, 2 * r - 1))
        out.append(insert(complement(s), _ELEVEN, 2 * r - 1))
    return tuple(out)


def clause_triple(clause: Sequence[Literal], n: int) -> tuple[BitString, BitString, BitString]:
    clause = _clause(clause)
    if any(l.var > n for l in clause):
        raise InvalidParameter(f"clause variable exceeds n={n}")
    out = []
    for z in range(3):
        blocks = [0b01] * n
        for y, lit in enumerate(clause):
            own = (y == z) == lit.positive
            blocks[lit.var - 1] = 0b11 if own else 0b00
        value = 0
        for b in blocks:
            value = (value << 2) | b
        out.append(BitString(2 * n, value))
    return tuple(out)


def clause_optimum(n: int) -> int:
    """Least distance from a doubled string to one clause triple."""
    return 3 * n * n - 11


@dataclass(frozen=True)
class ReductionCertificate:
    digest: str
    n_original: int
    n_padded: int
    ell: int
    m: int
    L: int
    B00: int
    gap: int
    k: int
    var_map: tuple[tuple[str, int], ...]

    def to_text(self) -> str:
        lines = [
            f"source {self.digest}",
            f"n {self.n_original}",
            f"n_padded {self.n_padded}",
            f"ell {self.ell}",
            f"m {self.m}",
            f"L {self.L}",
            f"B00 {self.B00}",
            f"gap {self.gap}",
            f"k {self.k}",
        ]
        lines += [f"{label} {index}" for label, index in self.var_map]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> ReductionCertificate:
        fields: dict[str, str] = {}
        var_map = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ParseError(f"expected 'key value': {line!r}", lineno)
            key, value = parts
            if key.startswith(("x", "pad")) and key not in fields:
                var_map.append((key, int(value)))
            else:
                fields[key] = value
        try:
            return cls(fields["source"], int(fields["n"]), int(fields["n_padded"]),
                       int(fields["ell"]), int(fields["m"]), int(fields["L"]),
                       int(fields["B00"]), int(fields["gap"]), int(fields["k"]),
                       tuple(var_map))
        except KeyError as exc:
            raise ParseError(f"certificate missing key {exc.args[0]}")


def reduce_nae_to_mirkin(psi: NaeFormula, threads: int = 1
                         ) -> tuple[MirkinInstance, ReductionCertificate]:
    """Weighted instance: ``L`` copies of every ``S_r`` plus each clause triple.

    Variables are padded to ``n' = 2**ell + 1``. The budget is
    ``k = L * n' * B00 + m * (3 n'^2 - 11)`` where ``B00`` is the measured
    distance from the all-zero doubled string to one copy of ``S_1``.
    """
    if psi.m == 0:
        raise InvalidParameter("formula has no clauses; budget is undefined")
    ell, n = padded_size(psi.num_vars)
    m = psi.m
    L = checked(3 * m * n * n, "copy count L")
    rs = range(1, n + 1)
    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            groups = list(pool.map(lambda r: variable_gadget(r, ell), rs))
    else:
        groups = [variable_gadget(r, ell) for r in rs]
    strings: list[tuple[BitString, int]] = []
    for group in groups:
        strings += [(s, L) for s in group]
    for c in psi.clauses:
        strings += [(t, 1) for t in clause_triple(c, n)]

    group1 = MirkinInstance(tuple((s, 1) for s in variable_gadget(1, ell)))
    b00 = mirkin_total(gamma(BitString.zeros(n)), group1)
    k = checked(L * n * b00 + m * clause_optimum(n), "budget k")
    inst = MirkinInstance(tuple(strings), k).merged()
    var_map = tuple((f"x{i}", i) for i in range(1, psi.num_vars + 1))
    var_map += tuple((f"pad{i}", i) for i in range(psi.num_vars + 1, n + 1))
    cert = ReductionCertificate(psi.digest(), psi.num_vars, n, ell, m, L, b00,
                                len(group1.strings), k, var_map)
    return inst, cert


def decode_assignment(candidate: BitString) -> tuple[list[int], bool]:
    """Read variable values from odd positions; flag whether all blocks are doubled."""
    bits = list(candidate)
    values = bits[0::2]
    doubled = all(a == b for a, b in zip(bits[0::2], bits[1::2]))
    return values, doubled
