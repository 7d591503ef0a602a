import pytest

from mirkin.bitcore import BitString, MirkinInstance
from mirkin.errors import ArithmeticOverflow, ParseError
from mirkin.formats import format_instance, parse_instance


def test_round_trip_with_budget_and_weights():
    inst = MirkinInstance(((BitString.from_str("0101"), 3),
                           (BitString.from_str("1100"), 1)), budget=17)
    text = format_instance(inst, comments=("hello",))
    assert text == "c hello\np mirk 4 2\nk 17\n0101 3\n1100\n"
    assert parse_instance(text) == inst


def test_multiplicity_defaults_to_one():
    inst = parse_instance("p mirk 2 2\n01\n10 4\n")
    assert inst.strings == ((BitString.from_str("01"), 1),
                            (BitString.from_str("10"), 4))
    assert inst.budget is None


@pytest.mark.parametrize("text", [
    "",
    "p mirk 2 1\n011\n",
    "p mirk 2 2\n01\n",
    "p mirk 2 1\n01 0\n",
    "p mirk 2 1\n0a\n",
    "p mirk 2 1\n01 1 1\n",
    "p cnf 2 1\n01\n",
    "01\np mirk 2 1\n",
    "p mirk 2 1\n01\nk 3\n",
    "p mirk 2 0\n",
])
def test_malformed(text):
    with pytest.raises(ParseError):
        parse_instance(text)


def test_budget_overflow_is_not_a_parse_error():
    with pytest.raises(ArithmeticOverflow):
        parse_instance(f"p mirk 2 1\nk {2**63}\n01\n")
