"""Exact solvers for Mirkin distance minimization.

Three backends compute the same optimum by different routes:

``solve_brute``
    Gray-code scan of every string with first bit 0, updating each input
    string's Hamming distance by +-1 per flip.
``solve_types``
    Scan of the ``2**n'`` assignments of one bit per column type; an
    optimum that is constant on every column type always exists.
``solve_ilp``
    The same type assignments scored through the linearized 0/1 program,
    with every product ``x[j] * x[j']`` carried by a variable ``y``.

All backends return the lexicographically smallest optimal string; since
``mirk(s, t) == mirk(~s, t)`` that string always starts with 0.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import numpy as np

from . import _kernels
from .bitcore import BitString, MirkinInstance, checked
from .errors import InfeasibleBudget, InstanceTooLarge, InvalidParameter

MAX_BRUTE_N = 30
MAX_TYPES = 24
_WORD_BITS = 62


@dataclass(frozen=True)
class SolveResult:
    value: int
    argmin: BitString
    backend: str
    candidates: int
    budget: int | None = None

    @property
    def decision(self) -> bool | None:
        if self.budget is None:
            return None
        return self.value <= self.budget

    def lines(self) -> list[str]:
        out = [f"OPT {self.value}", f"ARG {self.argmin}"]
        if self.budget is not None:
            out.append(f"DECISION {'YES' if self.decision else 'NO'}")
        return out


def _check_range(inst_strings, n: int) -> None:
    # every per-candidate total is bounded by sum(w) * floor(n^2 / 4)
    bound = sum(w for _, w in inst_strings) * (n // 2) * ((n + 1) // 2)
    checked(bound, "worst-case objective")


def _scan(kernel, args: tuple, total: int, threads: int) -> list[tuple]:
    """Run ``kernel`` over contiguous chunks of ``[0, total)``."""
    threads = max(1, min(threads, total))
    bounds = [total * k // threads for k in range(threads + 1)]
    chunks = [(bounds[k], bounds[k + 1]) for k in range(threads)
              if bounds[k] < bounds[k + 1]]
    if len(chunks) == 1:
        results = [kernel(*args, *chunks[0])]
    else:
        with ThreadPoolExecutor(len(chunks)) as pool:
            results = list(pool.map(lambda c: kernel(*args, *c), chunks))
    return results


def _best(results: list[tuple]) -> tuple:
    # (value, code) order makes the merge independent of chunking
    return min(results, key=lambda r: (r[0], r[1]))


def solve_brute(inst: MirkinInstance, *, max_n: int = MAX_BRUTE_N,
                threads: int = 1) -> SolveResult:
    n = inst.n
    if n > min(max_n, _WORD_BITS):
        raise InstanceTooLarge(f"brute force limited to n <= {max_n}, got n={n}")
    _check_range(inst.strings, n)
    strings = np.array([s.value for s, _ in inst.strings], dtype=np.int64)
    weights = np.array([w for _, w in inst.strings], dtype=np.int64)
    total = 1 << (n - 1)
    best, code = _best(_scan(_kernels.brute_range, (strings, weights, n),
                             total, threads))
    return SolveResult(int(best), BitString(n, int(code)), "brute", total,
                       inst.budget)


@dataclass(frozen=True)
class ColumnTypeSummary:
    """Column-type compression of an instance.

    Rows are the distinct input strings (multiplicities in ``mult``). Type
    ``j`` is the column vector ``types[j]`` over the rows; ``e[j]`` columns
    carry it and ``column_type[p]`` is the type of column ``p`` (0-based).
    """

    n: int
    rows: tuple[BitString, ...]
    mult: tuple[int, ...]
    types: tuple[tuple[int, ...], ...]
    e: tuple[int, ...]
    column_type: tuple[int, ...]

    @property
    def n_types(self) -> int:
        return len(self.types)

    @property
    def ones(self) -> tuple[int, ...]:
        """``w_i``: number of ones in row i, via the type table."""
        return tuple(sum(e * t[i] for e, t in zip(self.e, self.types))
                     for i in range(len(self.rows)))

    def sign(self, i: int, j: int) -> int:
        """``c_i[j] = 1 - 2 * s_i[j]`` for type j."""
        return 1 - 2 * self.types[j][i]

    def decode(self, x: Sequence[int]) -> BitString:
        if len(x) != self.n_types:
            raise InvalidParameter(f"need {self.n_types} type bits, got {len(x)}")
        return BitString.from_bits(x[j] for j in self.column_type)

    def decode_code(self, code: int) -> BitString:
        t = self.n_types
        return self.decode([(code >> (t - 1 - j)) & 1 for j in range(t)])

    def is_type_constant(self, s: BitString) -> bool:
        seen: dict[int, int] = {}
        for p, j in enumerate(self.column_type):
            if seen.setdefault(j, s[p + 1]) != s[p + 1]:
                return False
        return True


def column_types(inst: MirkinInstance) -> ColumnTypeSummary:
    merged = inst.merged()
    rows = tuple(s for s, _ in merged.strings)
    index: dict[tuple[int, ...], int] = {}
    column_type = []
    for p in range(1, inst.n + 1):
        col = tuple(s[p] for s in rows)
        column_type.append(index.setdefault(col, len(index)))
    types = tuple(index)
    e = [0] * len(types)
    for j in column_type:
        e[j] += 1
    return ColumnTypeSummary(inst.n, rows, tuple(w for _, w in merged.strings),
                             types, tuple(e), tuple(column_type))


def _check_types(summary: ColumnTypeSummary, max_types: int) -> None:
    if summary.n_types > min(max_types, _WORD_BITS):
        raise InstanceTooLarge(
            f"type enumeration limited to n' <= {max_types}, got {summary.n_types}")


def solve_types(inst: MirkinInstance, *, max_types: int = MAX_TYPES,
                threads: int = 1) -> SolveResult:
    summary = column_types(inst)
    _check_types(summary, max_types)
    _check_range(inst.strings, inst.n)
    t = summary.n_types
    coef = np.array([[summary.e[j] * summary.sign(i, j)
                      for i in range(len(summary.rows))] for j in range(t)],
                    dtype=np.int64)
    ones = np.array(summary.ones, dtype=np.int64)
    weights = np.array(summary.mult, dtype=np.int64)
    total = 1 << t
    best, code = _best(_scan(_kernels.types_range, (coef, ones, weights, inst.n),
                             total, threads))
    return SolveResult(int(best), summary.decode_code(int(code)), "types", total,
                       inst.budget)


@dataclass(frozen=True)
class IlpModel:
    """Linearized 0/1 program over type bits ``x`` and pair products ``y``.

    Objective: ``constant + sum(linear[j] x[j]) + sum(quadratic[j,k] y[j,k])``
    over pairs ``j < k`` (0-based). Pair constraints force ``y = x[j] x[k]``.
    """

    summary: ColumnTypeSummary
    constant: int
    linear: tuple[int, ...]
    quadratic: dict[tuple[int, int], int]
    budget: int | None = None

    @property
    def n_types(self) -> int:
        return len(self.linear)

    @property
    def pairs(self) -> list[tuple[int, int]]:
        return list(combinations(range(self.n_types), 2))

    @property
    def num_variables(self) -> int:
        t = self.n_types
        return t + t * (t - 1) // 2

    @property
    def num_constraints(self) -> int:
        t = self.n_types
        return 3 * (t * (t - 1) // 2) + (self.budget is not None)

    def objective(self, x: Sequence[int], y: dict[tuple[int, int], int]) -> int:
        return (self.constant
                + sum(a * xj for a, xj in zip(self.linear, x))
                + sum(q * y[p] for p, q in self.quadratic.items()))

    def pair_constraints_hold(self, xj: int, xk: int, y: int) -> bool:
        return y <= xj and y <= xk and xj + xk - y <= 1

    def feasible(self, x: Sequence[int], y: dict[tuple[int, int], int]) -> bool:
        if any(v not in (0, 1) for v in list(x) + list(y.values())):
            return False
        if not all(self.pair_constraints_hold(x[j], x[k], y[(j, k)])
                   for j, k in self.pairs):
            return False
        return self.budget is None or self.objective(x, y) <= self.budget

    @staticmethod
    def forced_y(x: Sequence[int]) -> dict[tuple[int, int], int]:
        return {(j, k): x[j] * x[k]
                for j, k in combinations(range(len(x)), 2)}


def build_ilp(inst: MirkinInstance, budget: int | None = None) -> IlpModel:
    """Expand ``sum_i mult_i * d_i * (n - d_i)`` with ``d_i = w_i + sum_j e_j c_ij x_j``.

    Squares collapse because ``c_ij**2 == 1`` and ``x_j**2 == x_j``; each
    unordered product ``x_j x_k`` appears twice in the square.
    """
    if budget is None:
        budget = inst.budget
    summary = column_types(inst)
    n, t = inst.n, summary.n_types
    ones, e = summary.ones, summary.e
    rows = range(len(summary.rows))
    constant = sum(summary.mult[i] * (n * ones[i] - ones[i] ** 2) for i in rows)
    linear = []
    for j in range(t):
        linear.append(checked(sum(
            summary.mult[i]
            * (n * summary.sign(i, j) - 2 * ones[i] * summary.sign(i, j) - e[j])
            * e[j] for i in rows), "linear coefficient"))
    quadratic = {}
    for j, k in combinations(range(t), 2):
        quadratic[(j, k)] = checked(-2 * sum(
            summary.mult[i] * e[j] * e[k] * summary.sign(i, j) * summary.sign(i, k)
            for i in rows), "pair coefficient")
    return IlpModel(summary, checked(constant, "objective constant"),
                    tuple(linear), quadratic, budget)


def solve_ilp(model: IlpModel, *, max_types: int = MAX_TYPES, threads: int = 1,
              require_feasible: bool = False) -> SolveResult:
    """Enumerate ``x`` with ``y`` forced to ``x (x) x``.

    The optimum is always computed; with ``require_feasible`` a budget row
    that no assignment meets raises :class:`InfeasibleBudget`.
    """
    summary = model.summary
    _check_types(summary, max_types)
    t = model.n_types
    magnitude = (abs(model.constant) + sum(map(abs, model.linear))
                 + sum(map(abs, model.quadratic.values())))
    checked(magnitude, "objective magnitude")
    lin = np.array(model.linear, dtype=np.int64)
    quad = np.zeros((t, t), dtype=np.int64)
    for (j, k), q in model.quadratic.items():
        quad[j, k] = quad[k, j] = q
    total = 1 << t
    results = _scan(_kernels.ilp_range, (model.constant, lin, quad), total, threads)
    violations = sum(r[2] for r in results)
    if violations:
        raise AssertionError(f"{violations} pair constraints violated at forced y")
    best, code, _ = _best(results)
    result = SolveResult(int(best), summary.decode_code(int(code)), "ilp", total,
                         model.budget)
    if require_feasible and result.decision is False:
        raise InfeasibleBudget(result)
    return result


def _linear_expr(terms: list[tuple[int, str]], per_line: int = 8) -> str:
    """Signed terms, wrapped onto indented continuation lines."""
    parts = []
    for idx, (coef, name) in enumerate(terms):
        if idx == 0:
            parts.append(f"{'-' if coef < 0 else ''}{abs(coef)} {name}")
        else:
            parts.append(f"{'-' if coef < 0 else '+'} {abs(coef)} {name}")
    rows = [" ".join(parts[k:k + per_line]) for k in range(0, len(parts), per_line)]
    return "\n   ".join(rows)


def _xname(j: int) -> str:
    return f"x{j + 1}"


def _yname(j: int, k: int) -> str:
    return f"y_{j + 1}_{k + 1}"


def export_lp(model: IlpModel) -> str:
    """Render the model in CPLEX LP format.

    The objective constant cannot be stated in every LP reader's dialect, so
    it is written as a comment and subtracted from the budget row.
    """
    terms = [(a, _xname(j)) for j, a in enumerate(model.linear)]
    terms += [(q, _yname(j, k)) for (j, k), q in model.quadratic.items()]
    lines = [
        "\\ Mirkin distance minimization, linearized over column types",
        f"\\ types {model.n_types} strings {len(model.summary.rows)} "
        f"length {model.summary.n}",
        f"\\ objective constant {model.constant} (add to the optimum)",
        "Minimize",
        f" obj: {_linear_expr(terms)}",
        "Subject To",
    ]
    for j, k in model.pairs:
        x1, x2, y = _xname(j), _xname(k), _yname(j, k)
        lines.append(f" p_{j + 1}_{k + 1}_a: {y} - {x1} <= 0")
        lines.append(f" p_{j + 1}_{k + 1}_b: {y} - {x2} <= 0")
        lines.append(f" p_{j + 1}_{k + 1}_c: {x1} + {x2} - {y} <= 1")
    if model.budget is not None:
        lines.append(f" budget: {_linear_expr(terms)} <= "
                     f"{model.budget - model.constant}")
    lines.append("Binary")
    lines += [f" {_xname(j)}" for j in range(model.n_types)]
    lines += [f" {_yname(j, k)}" for j, k in model.pairs]
    lines.append("End")
    return "\n".join(lines) + "\n"


def all_costs(inst: MirkinInstance) -> np.ndarray:
    """Objective of every candidate ``0 .. 2**n - 1`` by direct evaluation.

    Vectorized over candidates, independent of the Gray-code kernels; used
    as an oracle for small ``n``.
    """
    n = inst.n
    if n > 22:
        raise InstanceTooLarge(f"cost table limited to n <= 22, got {n}")
    cands = np.arange(1 << n, dtype=np.uint64)
    costs = np.zeros(1 << n, dtype=np.int64)
    for s, w in inst.strings:
        d = np.bitwise_count(cands ^ np.uint64(s.value)).astype(np.int64)
        costs += w * d * (n - d)
    return costs


SOLVERS = {
    "brute": lambda inst, **kw: solve_brute(inst, max_n=kw.get("max_n", MAX_BRUTE_N),
                                            threads=kw.get("threads", 1)),
    "types": lambda inst, **kw: solve_types(inst, max_types=kw.get("max_types", MAX_TYPES),
                                            threads=kw.get("threads", 1)),
    "ilp": lambda inst, **kw: solve_ilp(build_ilp(inst),
                                        max_types=kw.get("max_types", MAX_TYPES),
                                        threads=kw.get("threads", 1)),
}


def solve(inst: MirkinInstance, backend: str = "brute", **kwargs) -> SolveResult:
    try:
        fn = SOLVERS[backend]
    except KeyError:
        raise InvalidParameter(f"unknown backend {backend!r}")
    return fn(inst, **kwargs)
