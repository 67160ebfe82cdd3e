import os

import pytest

import uacat

DATA = os.environ.get("UACAT_DATA_DIR", "data")


def test_equality_oracle():
    assert uacat.equal_in_free("(mul (mul x1 x2) x3)", "(mul x1 (mul x2 x3))", "semigroup")
    assert not uacat.equal_in_free("(mul x1 x2)", "(mul x2 x1)", "semigroup")
    assert uacat.equal_in_free("(mul x1 (mul (inv x1) x1))", "x1", "inverse_semigroup")


def test_normalize_and_munn():
    assert uacat.normalize("(mul x2 (mul x1 x1))", "semigroup").key == "2,1,1"
    assert uacat.munn_canonical("(mul x1 (inv x1))") == "*[+1]"
    assert uacat.munn_canonical("(mul (mul x1 (inv x1)) x1)") == "[+1*]"


def test_enumeration():
    terms = uacat.enumerate_terms("magma", vars=1, max_size=5)
    assert [t.render() for t in terms[:2]] == ["x1", "(mul x1 x1)"]
    assert len(terms) == 4
    elems = uacat.enumerate_elements("semigroup", rank=2, max_size=2)
    assert len(elems) == 6
    with pytest.raises(uacat.CapExceeded):
        uacat.enumerate_terms("magma", vars=2, max_size=15, cap=10)


def test_solver():
    sols = uacat.solve_system(os.path.join(DATA, "systems", "semigroup_binary.eqs"), 5)
    assert sorted(s["w"] for s in sols) == ["(mul x1 x2)", "(mul x2 x1)"]


def test_mutual_derivability():
    assert uacat.check_mutual_derivability("semigroup", {"mul": "(mul x2 x1)"}, 4)
    assert not uacat.check_mutual_derivability("semigroup", {"mul": "x1"}, 4)


def test_finite():
    chain2 = uacat.load_table_file(os.path.join(DATA, "tables", "semilattice2.tbl"))
    assert chain2.carrier == 2
    assert len(uacat.homomorphisms(chain2, chain2)) == 3
    universe = [s for n in (1, 2, 3) for s in uacat.all_semilattices(n)]
    assert uacat.right_indicator(chain2, universe)
    assert uacat.all_monoid_automorphisms_inner(3, False)


def test_mirror_classification():
    assert uacat.mirror_is_inner("inverse_semigroup") == "inner_witness"
    assert uacat.mirror_is_inner("semigroup") == "not_inner_up_to_bound"


def test_errors():
    with pytest.raises(uacat.Error):
        uacat.parse_term("(mul x1", "semigroup")
    with pytest.raises(uacat.Error):
        uacat.normalize("x1", "no_such_variety")
