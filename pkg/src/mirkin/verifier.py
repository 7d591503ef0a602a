"""Executable property suites.

Each ``verify_*`` function returns a :class:`PropertyReport`; a report with
no failures is a pass. Randomized suites are deterministic given ``seed``.
"""
from __future__ import annotations

import random
from itertools import combinations, permutations, product
from math import comb
from typing import Iterator

import numpy as np

from .bitcore import BitString, MirkinInstance, mirkin_total
from .errors import InvalidParameter
from .gadget import build, check_half_half
from .reduction import (CnfFormula, Literal, NaeFormula, clause_optimum,
                        clause_triple, decode_assignment, gamma, padded_size,
                        reduce_3sat_to_nae, reduce_nae_to_mirkin,
                        variable_gadget)
from .report import PropertyReport
from .solver import (all_costs, build_ilp, column_types, solve_brute,
                     solve_ilp, solve_types)


def truth_table_satisfiable(formula: CnfFormula | NaeFormula) -> bool:
    return any(formula.satisfied_by(bits)
               for bits in product((0, 1), repeat=formula.num_vars))


def random_instance(rng: random.Random, max_n: int, max_m: int,
                    max_mult: int = 3) -> MirkinInstance:
    """Uniform length in 1..max_n, 1..max_m strings, multiplicities 1..max_mult."""
    n = rng.randint(1, max_n)
    m = rng.randint(1, max_m)
    return MirkinInstance(tuple(
        (BitString(n, rng.getrandbits(n)), rng.randint(1, max_mult))
        for _ in range(m)))


def verify_gadget(max_ell: int) -> PropertyReport:
    if max_ell < 1:
        raise InvalidParameter(f"max_ell must be >= 1, got {max_ell}")
    report = PropertyReport("gadget")
    for ell in range(1, max_ell + 1):
        fam = build(ell)
        sub = check_half_half(fam)
        report.checks += sub.checks
        report.failures += sub.failures
        report.constants[f"pairs_ell{ell}"] = sub.checks
    return report


def _variable_gadget_checks(report: PropertyReport, ell: int, trials: int,
            rng: random.Random) -> tuple[int, int]:
    n = (1 << ell) + 1
    width = 2 * n
    b00_values = set()
    gap_values = set()
    for r in range(1, n + 1):
        group = MirkinInstance(tuple((s, 1) for s in variable_gadget(r, ell)))
        size = len(group.strings)
        # one guaranteed member of each block class, then random candidates
        cands = [gamma(BitString.zeros(n)),
                 BitString(width, 1 << (width - 2 * r))]
        cands += [BitString(width, rng.getrandbits(width)) for _ in range(trials)]
        by_class: dict[bool, set[int]] = {True: set(), False: set()}
        for s in cands:
            doubled = s[2 * r - 1] == s[2 * r]
            by_class[doubled].add(mirkin_total(s, group))
        report.record(len(by_class[True]) == 1, "gadget single value on 00/11",
                      sorted(by_class[True]), "one value", r=r)
        report.record(len(by_class[False]) == 1, "gadget single value on 01/10",
                      sorted(by_class[False]), "one value", r=r)
        if len(by_class[True]) == 1 and len(by_class[False]) == 1:
            low, high = min(by_class[True]), min(by_class[False])
            report.record(high - low == size, "gadget gap equals |S_r|",
                          high - low, size, r=r)
            b00_values.add(low)
            gap_values.add(high - low)
    report.record(len(b00_values) == 1, "gadget base cost independent of r",
                  sorted(b00_values), "one value", ell=ell)
    return min(b00_values, default=0), min(gap_values, default=0)


def _clause_triple_checks(report: PropertyReport, ell: int) -> int:
    n = (1 << ell) + 1
    floor = clause_optimum(n)
    assignments = [BitString(n, v) for v in range(1 << n)]
    clauses = 0
    for vars_ in combinations(range(1, n + 1), 3):
        for signs in product((True, False), repeat=3):
            clause = tuple(Literal(v, p) for v, p in zip(vars_, signs))
            nae = NaeFormula(n, (clause,))
            triple = MirkinInstance(tuple((t, 1) for t in clause_triple(clause, n)))
            clauses += 1
            for s in assignments:
                dist = mirkin_total(gamma(s), triple)
                sat = nae.satisfied_by(list(s))
                report.record(dist >= floor, "clause lower bound", dist, f">= {floor}",
                              clause=[int(l) for l in clause], s=str(s))
                report.record((dist == floor) == sat, "clause equality iff NAE",
                              dist, f"== {floor}" if sat else f"> {floor}",
                              clause=[int(l) for l in clause], s=str(s))
    return clauses


def verify_claims(ell: int, trials: int, seed: int = 0) -> PropertyReport:
    if ell < 2:
        raise InvalidParameter(f"ell must be >= 2, got {ell}")
    rng = random.Random(seed)
    n = (1 << ell) + 1
    report = PropertyReport("claims")
    b00, gap = _variable_gadget_checks(report, ell, trials, rng)
    clauses = _clause_triple_checks(report, ell)

    floor = clause_optimum(n)
    clause = tuple(Literal(v) for v in (1, 2, 3))
    triple = MirkinInstance(tuple((t, 1) for t in clause_triple(clause, n)))
    all_true = mirkin_total(gamma(BitString.ones(n)), triple)
    report.record(all_true == 3 * n * n - 3, "clause all-true distance", all_true,
                  3 * n * n - 3, clause=[1, 2, 3])
    nae_sat = mirkin_total(gamma(BitString.from_bits([1] + [0] * (n - 1))), triple)
    report.record(nae_sat == 2 * (n * n - 1) + (n * n - 9),
                  "clause NAE-satisfied distance", nae_sat,
                  2 * (n * n - 1) + (n * n - 9), clause=[1, 2, 3])

    m = 1
    L = 3 * m * n * n
    report.record(L * gap > m * floor, "budget dominance L*gap > m*(3n^2-11)",
                  L * gap, f"> {m * floor}", n=n)

    report.constants.update({
        "n_padded": n, "clause_optimum": floor, "B00": b00, "gap": gap,
        "clauses_checked": clauses, "L(m=1)": L,
    })
    closed = (comb(2 * n - 2, 2) + 2 * (n - 1)) * (n - 1)
    report.notes.append(
        f"closed form (C(2n-2,2) + 2(n-1))(n-1) gives {closed}; "
        f"measured B00 = {b00} with |S_r| = {gap}")
    return report


def verify_backends(instances: int, max_n: int, max_m: int,
                    seed: int = 0) -> PropertyReport:
    """Cross-check all backends against each other and a direct cost table."""
    rng = random.Random(seed)
    report = PropertyReport("backends")
    max_types = 0
    for idx in range(instances):
        inst = random_instance(rng, max_n, max_m)
        brute = solve_brute(inst)
        types = solve_types(inst)
        ilp = solve_ilp(build_ilp(inst))
        witness = {"instance": idx,
                   "strings": [f"{s}x{w}" for s, w in inst.strings]}
        report.record(brute.value == types.value == ilp.value, "backend values",
                      (brute.value, types.value, ilp.value), "all equal", **witness)
        report.record(brute.argmin == types.argmin == ilp.argmin, "backend argmins",
                      (str(brute.argmin), str(types.argmin), str(ilp.argmin)),
                      "all equal", **witness)
        report.record(mirkin_total(brute.argmin, inst) == brute.value,
                      "argmin attains value", mirkin_total(brute.argmin, inst),
                      brute.value, **witness)
        if inst.n <= 16:
            costs = all_costs(inst)
            report.record(int(costs.min()) == brute.value, "cost table minimum",
                          int(costs.min()), brute.value, **witness)
            report.record(int(np.flatnonzero(costs == costs.min())[0])
                          == brute.argmin.value, "lexicographic tie rule",
                          int(np.flatnonzero(costs == costs.min())[0]),
                          brute.argmin.value, **witness)
        max_types = max(max_types, column_types(inst).n_types)
    report.constants["instances"] = instances
    report.constants["max_types_seen"] = max_types
    return report


def verify_type_constant(instances: int, max_n: int, max_m: int,
                  seed: int = 0) -> PropertyReport:
    """Minimum over type-constant strings equals the unrestricted minimum."""
    rng = random.Random(seed)
    report = PropertyReport("type_constant")
    for idx in range(instances):
        inst = random_instance(rng, max_n, max_m)
        summary = column_types(inst)
        costs = all_costs(inst)
        n = inst.n
        # candidate bit at column p for code v is (v >> (n - 1 - p)) & 1
        cands = np.arange(1 << n, dtype=np.int64)
        constant = np.ones(1 << n, dtype=bool)
        first: dict[int, int] = {}
        for p, j in enumerate(summary.column_type):
            if j in first:
                q = first[j]
                constant &= ((cands >> (n - 1 - p)) & 1) == ((cands >> (n - 1 - q)) & 1)
            else:
                first[j] = p
        restricted = int(costs[constant].min())
        unrestricted = int(costs.min())
        witness = {"instance": idx,
                   "strings": [f"{s}x{w}" for s, w in inst.strings]}
        report.record(restricted == unrestricted, "type-constant minimum",
                      restricted, unrestricted, **witness)
        report.record(bool(constant[costs == unrestricted].all()),
                      "every optimum type-constant",
                      int((~constant[costs == unrestricted]).sum()), 0, **witness)
    report.constants["instances"] = instances
    return report


def verify_linearization(instances: int, max_n: int, max_m: int, seed: int = 0,
                         max_types: int = 10) -> PropertyReport:
    rng = random.Random(seed)
    report = PropertyReport("linearization")
    for xj, xk, y in product((0, 1), repeat=3):
        model_free = (y <= xj and y <= xk and xj + xk - y <= 1)
        report.record(model_free == (y == xj * xk), "pair constraint truth table",
                      model_free, y == xj * xk, x=(xj, xk), y=y)
    models = 0
    for idx in range(instances):
        inst = random_instance(rng, max_n, max_m)
        model = build_ilp(inst)
        if model.n_types > max_types:
            continue
        models += 1
        for x in product((0, 1), repeat=model.n_types):
            y = model.forced_y(x)
            obj = model.objective(x, y)
            direct = mirkin_total(model.summary.decode(x), inst)
            report.record(obj == direct and model.feasible(x, y),
                          "objective at forced y", obj, direct,
                          instance=idx, x=x)
    report.constants["models"] = models
    return report


def all_clauses(num_vars: int) -> list[tuple[Literal, Literal, Literal]]:
    """Every ordered 3-literal clause over distinct variables."""
    return [tuple(Literal(v, p) for v, p in zip(vs, signs))
            for vs in permutations(range(1, num_vars + 1), 3)
            for signs in product((True, False), repeat=3)]


def small_cnf_formulas(num_vars: int = 3, max_clauses: int = 2) -> Iterator[CnfFormula]:
    clauses = all_clauses(num_vars)
    for m in range(max_clauses + 1):
        for combo in product(clauses, repeat=m):
            yield CnfFormula(num_vars, combo)


def random_cnf(rng: random.Random, num_vars: int, m: int) -> CnfFormula:
    clauses = []
    for _ in range(m):
        vs = rng.sample(range(1, num_vars + 1), 3)
        clauses.append(tuple(Literal(v, rng.random() < 0.5) for v in vs))
    return CnfFormula(num_vars, tuple(clauses))


def nae_unsatisfiable_examples() -> list[NaeFormula]:
    """Three-variable NAE formulas excluding all four complementary pairs."""
    cover = NaeFormula.from_ints(3, [[1, 2, 3], [1, 2, -3], [1, -2, 3], [-1, 2, 3]])
    return [cover, NaeFormula.from_ints(3, [[1, 2, 3], [-1, 2, 3], [1, -2, 3],
                                           [1, 2, -3], [-1, -2, 3]])]


def _mirkin_leg(report: PropertyReport, psi: NaeFormula, expected: bool,
                witness: dict) -> None:
    inst, cert = reduce_nae_to_mirkin(psi)
    result = solve_brute(inst)
    report.record(result.decision == expected, "Mirkin optimum <= k iff NAE",
                  f"opt={result.value} k={cert.k}", expected, **witness)
    if result.decision:
        values, doubled = decode_assignment(result.argmin)
        report.record(doubled, "optimizer blocks doubled", str(result.argmin),
                      "e1e1e2e2...", **witness)
        report.record(psi.satisfied_by(values[:psi.num_vars]),
                      "read-back assignment NAE-satisfies", values, True, **witness)


def verify_reductions(seed: int = 0, samples: int = 50,
                      max_clauses: int = 2) -> PropertyReport:
    """SAT <=> NAE <=> (Mirkin optimum <= k) on small formulas.

    Exhaustive over 3-variable formulas with up to ``max_clauses`` clauses,
    plus ``samples`` random 4-variable, 3-clause formulas. The empty formula
    has no Mirkin image (the budget needs m >= 1); its Mirkin leg is skipped.
    """
    rng = random.Random(seed)
    report = PropertyReport("reductions")
    formulas = list(small_cnf_formulas(3, max_clauses))
    formulas += [random_cnf(rng, 4, 3) for _ in range(samples)]
    skipped = 0
    for idx, phi in enumerate(formulas):
        witness = {"formula": [[int(l) for l in c] for c in phi.clauses],
                   "num_vars": phi.num_vars}
        sat = truth_table_satisfiable(phi)
        psi = reduce_3sat_to_nae(phi)
        nae = truth_table_satisfiable(psi)
        report.record(sat == nae, "SAT iff NAE image", nae, sat, **witness)
        if psi.m == 0:
            skipped += 1
            continue
        _mirkin_leg(report, psi, sat, witness)

    direct = [NaeFormula(3, (c,)) for c in all_clauses(3)]
    direct += nae_unsatisfiable_examples()
    for psi in direct:
        witness = {"nae": [[int(l) for l in c] for c in psi.clauses]}
        _mirkin_leg(report, psi, truth_table_satisfiable(psi), witness)

    report.constants["formulas"] = len(formulas)
    report.constants["nae_direct"] = len(direct)
    report.constants["mirkin_leg_skipped"] = skipped
    return report


SUITES = ("gadget", "claims", "backends", "reductions")


def verify_all(seed: int = 0, ell: int = 2, trials: int = 100) -> list[PropertyReport]:
    return [
        verify_gadget(6),
        verify_claims(ell, trials, seed),
        verify_backends(500, 14, 6, seed),
        verify_type_constant(200, 12, 5, seed),
        verify_linearization(500, 14, 6, seed),
        verify_reductions(seed),
    ]
