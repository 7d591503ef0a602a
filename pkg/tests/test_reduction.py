import random
from itertools import permutations, product

import pytest

from mirkin.bitcore import BitString, MirkinInstance, mirkin_total
from mirkin.errors import InvalidParameter, ParseError
from mirkin.reduction import (CnfFormula, Literal, NaeFormula,
                              ReductionCertificate, clause_triple,
                              decode_assignment, gamma, padded_size,
                              parse_dimacs_cnf, parse_dimacs_nae,
                              reduce_3sat_to_nae, reduce_nae_to_mirkin,
                              variable_gadget)

B = BitString.from_str


def sat(formula):
    return any(formula.satisfied_by(a)
               for a in product((0, 1), repeat=formula.num_vars))


def clause(*lits):
    return tuple(Literal.from_int(l) for l in lits)


def blocks(s):
    text = str(s)
    return " ".join(text[i:i + 2] for i in range(0, len(text), 2))


class TestDimacs:
    def test_parse(self):
        phi = parse_dimacs_cnf("c hello\np cnf 3 1\n1 -2 3 0\n")
        assert phi.num_vars == 3
        assert phi.clauses == (clause(1, -2, 3),)

    def test_clause_spanning_lines(self):
        phi = parse_dimacs_cnf("p cnf 4 2\n1 -2\n3 0 2 3 4 0\n")
        assert phi.clauses == (clause(1, -2, 3), clause(2, 3, 4))

    @pytest.mark.parametrize("text, line", [
        ("p cnf 3 1\n1 1 2 0\n", 2),
        ("p cnf 2 1\n1 -2 0\n", 2),
        ("p cnf 3 1\n1 2 4 0\n", 2),
        ("p cnf x 1\n1 2 3 0\n", 1),
        ("p sat 3 1\n1 2 3 0\n", 1),
        ("1 2 3 0\n", 1),
    ])
    def test_errors_carry_line(self, text, line):
        with pytest.raises(ParseError) as exc:
            parse_dimacs_cnf(text)
        assert exc.value.line == line

    def test_clause_count_mismatch(self):
        with pytest.raises(ParseError):
            parse_dimacs_cnf("p cnf 3 2\n1 2 3 0\n")
        with pytest.raises(ParseError):
            parse_dimacs_cnf("p cnf 3 1\n1 2 3\n")

    def test_round_trip(self):
        text = "p nae 5 2\n1 -2 4 0\n3 5 -4 0\n"
        assert parse_dimacs_nae(text).to_dimacs() == text


class TestSatToNae:
    def test_single_clause(self):
        psi = reduce_3sat_to_nae(CnfFormula.from_ints(3, [[1, 2, 3]]))
        assert psi.num_vars == 5
        assert psi.clauses == (clause(1, 2, 4), clause(3, 5, -4))

    def test_empty_clause_list(self):
        psi = reduce_3sat_to_nae(CnfFormula(4, ()))
        assert psi.num_vars == 5 and psi.clauses == ()

    def test_literal_roles_follow_input_order(self):
        psi = reduce_3sat_to_nae(CnfFormula.from_ints(3, [[1, -2, 3]]))
        assert psi.to_dimacs() == "p nae 5 2\n1 -2 4 0\n3 5 -4 0\n"

    def test_exhaustive_single_clause(self):
        for vs in permutations((1, 2, 3)):
            for signs in product((1, -1), repeat=3):
                phi = CnfFormula.from_ints(3, [[v * s for v, s in zip(vs, signs)]])
                assert sat(phi) == sat(reduce_3sat_to_nae(phi))

    def test_unsatisfiable_source(self):
        # all eight sign patterns over three variables
        phi = CnfFormula.from_ints(3, [[a, 2 * b, 3 * c]
                                       for a, b, c in product((1, -1), repeat=3)])
        assert not sat(phi)
        assert not sat(reduce_3sat_to_nae(phi))

    def test_random_four_variable(self):
        rng = random.Random(3)
        for _ in range(30):
            cls = [[v * rng.choice((1, -1)) for v in rng.sample(range(1, 5), 3)]
                   for _ in range(rng.randint(1, 9))]
            phi = CnfFormula.from_ints(4, cls)
            assert sat(phi) == sat(reduce_3sat_to_nae(phi))


def test_formula_rejects_repeated_variable():
    with pytest.raises(InvalidParameter):
        CnfFormula.from_ints(3, [[1, -1, 2]])
    with pytest.raises(InvalidParameter):
        NaeFormula.from_ints(2, [[1, 2, 3]])


@pytest.mark.parametrize("s, expected", [("0", "00"), ("01", "0011"), ("101", "110011")])
def test_gamma(s, expected):
    assert gamma(B(s)) == B(expected)


def test_padded_size():
    assert padded_size(3) == (2, 5)
    assert padded_size(5) == (2, 5)
    assert padded_size(6) == (3, 9)
    assert padded_size(9) == (3, 9)
    assert padded_size(10) == (4, 17)


class TestVariableGadget:
    def test_first_members(self):
        group = variable_gadget(1, 1)
        assert str(group[0]) == "110000"
        assert str(group[1]) == "111111"

    @pytest.mark.parametrize("ell", [1, 2, 3])
    def test_shape_and_insertion_site(self, ell):
        n = 2**ell + 1
        for r in range(1, n + 1):
            group = variable_gadget(r, ell)
            assert len(group) == 2**(ell + 2)
            for s in group:
                assert s.n == 2 * n
                assert s[2 * r - 1] == s[2 * r] == 1

    def test_out_of_range(self):
        with pytest.raises(InvalidParameter):
            variable_gadget(6, 2)
        with pytest.raises(InvalidParameter):
            variable_gadget(0, 2)

    def test_two_values_at_n5(self):
        rng = random.Random(11)
        for r in range(1, 6):
            group = MirkinInstance(tuple((s, 1) for s in variable_gadget(r, 2)))
            seen = {True: set(), False: set()}
            for _ in range(200):
                s = BitString(10, rng.getrandbits(10))
                seen[s[2 * r - 1] == s[2 * r]].add(mirkin_total(s, group))
            assert len(seen[True]) == len(seen[False]) == 1
            assert seen[False].pop() - seen[True].pop() == 16


class TestClauseTriple:
    def test_worked_example(self):
        t1, t2, t3 = clause_triple(clause(-1, 2, -3), 5)
        assert blocks(t1) == "00 00 11 01 01"
        assert blocks(t2) == "11 11 11 01 01"
        assert blocks(t3) == "11 00 00 01 01"

    def test_all_positive(self):
        t1, t2, t3 = clause_triple(clause(1, 2, 3), 4)
        assert blocks(t1) == "11 00 00 01"
        assert blocks(t2) == "00 11 00 01"
        assert blocks(t3) == "00 00 11 01"

    def test_minimum_at_n5(self):
        triple = MirkinInstance(tuple((t, 1) for t in clause_triple(clause(1, -4, 5), 5)))
        values = [mirkin_total(gamma(BitString(5, v)), triple) for v in range(32)]
        assert min(values) == 3 * 25 - 11 == 64

    def test_variable_bound(self):
        with pytest.raises(InvalidParameter):
            clause_triple(clause(1, 2, 6), 5)


class TestNaeToMirkin:
    def test_construction_arithmetic(self):
        psi = NaeFormula.from_ints(3, [[1, 2, 3]])
        inst, cert = reduce_nae_to_mirkin(psi)
        assert (cert.n_padded, cert.ell, cert.L, cert.gap) == (5, 2, 75, 16)
        assert inst.n == 10
        # 5 groups of 16 strings at weight 75 plus 3 clause strings at weight 1
        assert inst.m == 5 * 16 * 75 + 3
        gadget = {s for r in range(1, 6) for s in variable_gadget(r, 2)}
        triple = set(clause_triple(psi.clauses[0], 5))
        assert len(inst.strings) == len(gadget | triple)
        assert cert.k == cert.L * 5 * cert.B00 + 1 * 64
        assert inst.budget == cert.k

    def test_base_cost_independent_of_r_and_candidate(self):
        rng = random.Random(5)
        values = set()
        for r in range(1, 6):
            group = MirkinInstance(tuple((s, 1) for s in variable_gadget(r, 2)))
            values.add(mirkin_total(gamma(BitString.zeros(5)), group))
            for _ in range(50):
                s = BitString(10, rng.getrandbits(10))
                if s[2 * r - 1] == s[2 * r]:
                    values.add(mirkin_total(s, group))
        _, cert = reduce_nae_to_mirkin(NaeFormula.from_ints(3, [[1, 2, 3]]))
        assert values == {cert.B00}

    def test_no_clauses_rejected(self):
        with pytest.raises(InvalidParameter):
            reduce_nae_to_mirkin(NaeFormula(3, ()))

    def test_deterministic_and_thread_independent(self):
        psi = NaeFormula.from_ints(6, [[1, -2, 3], [4, 5, -6]])
        assert reduce_nae_to_mirkin(psi) == reduce_nae_to_mirkin(psi, threads=4)

    def test_dummies_only_in_group1(self):
        psi = NaeFormula.from_ints(6, [[1, -2, 3], [4, 5, -6]])
        _, cert = reduce_nae_to_mirkin(psi)
        assert cert.n_padded == 9
        for c in psi.clauses:
            for t in clause_triple(c, 9):
                for i in range(7, 10):
                    assert (t[2 * i - 1], t[2 * i]) == (0, 1)

    def test_decision_equivalence_single_clauses(self):
        # brute force over all 2**10 candidates of the weighted instance
        for vs in permutations((1, 2, 3)):
            for signs in product((1, -1), repeat=3):
                psi = NaeFormula.from_ints(3, [[v * s for v, s in zip(vs, signs)]])
                inst, cert = reduce_nae_to_mirkin(psi)
                best = min(mirkin_total(BitString(10, v), inst) for v in range(1 << 10))
                assert (best <= cert.k) == sat(psi)

    def test_unsatisfiable_exceeds_budget(self):
        psi = NaeFormula.from_ints(3, [[1, 2, 3], [1, 2, -3], [1, -2, 3], [-1, 2, 3]])
        assert not sat(psi)
        inst, cert = reduce_nae_to_mirkin(psi)
        best = min(mirkin_total(BitString(10, v), inst) for v in range(1 << 10))
        assert best > cert.k


def test_certificate_text_round_trip():
    _, cert = reduce_nae_to_mirkin(NaeFormula.from_ints(4, [[1, 2, -4]]))
    text = cert.to_text()
    assert "k 132064" in text.splitlines()
    assert ReductionCertificate.from_text(text) == cert
    assert ("pad5", 5) in cert.var_map


def test_decode_assignment():
    assert decode_assignment(B("110011")) == ([1, 0, 1], True)
    assert decode_assignment(B("100011"))[1] is False
