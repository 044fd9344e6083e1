import random
from fractions import Fraction

import pytest

from bfcorr import BosonPolynomial, SymmElement, ZMonomial, p, partitions_of, z
from bfcorr.parser import Num, ParseError, Power, Product, Sum, Var, evaluate, flatten, parse, parse_element, render


def test_boson_example_tree():
    tree = parse("z1^2 + 3*z2", "boson")
    assert tree == Sum(((1, Power(Var("z", 1), 2)), (1, Product((Num(Fraction(3)), Var("z", 2))))))
    assert evaluate(tree, "boson") == z(1, 2) + 3 * z(2)


def test_symm_example_tree():
    tree = parse("p2*p1 - 1/2", "symm")
    assert tree == Sum(((1, Product((Var("p", 2), Var("p", 1)))), (-1, Num(Fraction(1, 2)))))
    assert evaluate(tree, "symm") == p(2, 1) - Fraction(1, 2)


def test_whitespace_and_parentheses():
    assert parse_element(" ( z1 + z2 ) ^ 2 ", "boson") == (z(1) + z(2)) ** 2
    assert parse_element("-(p1 - p2)*p3", "symm") == p(2, 3) - p(1, 3)
    assert parse_element("2^3", "boson") == BosonPolynomial.constant(8)
    assert parse_element("z1^0", "boson") == BosonPolynomial.constant(1)


@pytest.mark.parametrize(
    "text, space, offset",
    [
        ("z1 + p1", None, 5),
        ("z1 + p1", "boson", 5),
        ("p1", "boson", 0),
        ("z1 +", "boson", 4),
        ("z0", "boson", 0),
        ("z1^9", "boson", 3),
        ("1/0", "boson", 2),
        ("z1 $ 2", "boson", 3),
        ("(z1", "boson", 3),
        ("z1)", "boson", 2),
        ("x1", "boson", 0),
        ("z1 ^ z2", "boson", 5),
        ("é+z1", "boson", 0),
        ("1 + é", "boson", 4),
    ],
)
def test_errors_carry_byte_offsets(text, space, offset):
    with pytest.raises(ParseError) as info:
        parse(text, space)
    assert info.value.offset == offset


def test_mixed_families_rejected_message():
    with pytest.raises(ParseError, match="mixed"):
        parse("z1 + p1")


def test_degree_cap_is_configurable():
    assert parse_element("z1^9", "boson", max_degree=9) == z(1, 9)


def test_flatten_and_render_roundtrip():
    tree = parse("(z1 + (z2 - z3)) * (z1*z2) * 1/2")
    flat = flatten(tree)
    assert flatten(parse(render(flat))) == flat
    assert render(flat) == "(z1 + z2 - z3)*z1*z2*1/2"


def _random_element(rng, space):
    terms = {}
    for _ in range(rng.randint(0, 5)):
        mu = rng.choice(partitions_of(rng.randint(0, 8)))
        coeff = Fraction(rng.randint(-99, 99), rng.randint(1, 99))
        key = ZMonomial.from_partition(mu) if space == "boson" else mu
        terms[key] = coeff
    return BosonPolynomial(terms) if space == "boson" else SymmElement(terms)


@pytest.mark.parametrize("space", ["boson", "symm"])
def test_parse_render_identity_on_canonical_forms(space):
    rng = random.Random(20261019 + len(space))
    for _ in range(500):
        f = _random_element(rng, space)
        text = str(f)
        back = parse_element(text, space)
        assert back == f
        assert str(back) == text
        tree = flatten(parse(text, space))
        assert flatten(parse(render(tree), space)) == tree
