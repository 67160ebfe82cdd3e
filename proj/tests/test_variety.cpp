#include <doctest.h>

#include <random>

#include "uacat/variety.hpp"

using namespace uacat;

namespace {

Term parse_is(const char* text) {
    return parse_term(text, Variety::inverse_semigroup().signature());
}

// a random binary bracketing of x_{w[0]} ... x_{w[n-1]}
Term random_bracketing(const std::vector<int>& w, std::size_t lo, std::size_t hi,
                       std::mt19937_64& rng) {
    if (hi - lo == 1) return Term::var(w[lo]);
    std::uniform_int_distribution<std::size_t> cut(lo + 1, hi - 1);
    std::size_t mid = cut(rng);
    return Term::app("mul", {random_bracketing(w, lo, mid, rng),
                             random_bracketing(w, mid, hi, rng)});
}

}  // namespace

TEST_CASE("variety tags and signatures") {
    CHECK(variety_tag_from_string("magma") == VarietyTag::magma);
    CHECK(variety_tag_from_string("inverse_semigroup") == VarietyTag::inverse_semigroup);
    CHECK_THROWS_AS(variety_tag_from_string("group"), error);
    CHECK(to_string(VarietyTag::monoid) == "monoid");
    CHECK(Variety::magma().signature().ops().size() == 1);
    CHECK(Variety::monoid().signature().ops().size() == 2);
    CHECK(Variety::inverse_semigroup().signature().arity_of("inv") == 1);
}

TEST_CASE("the five inverse-semigroup identities hold") {
    Variety v = Variety::inverse_semigroup();
    const Signature& sig = v.signature();
    auto holds = [&](const char* l, const char* r) {
        return identity_holds(parse_term(l, sig), parse_term(r, sig), v);
    };
    CHECK(holds("(mul (mul x1 x2) x3)", "(mul x1 (mul x2 x3))"));
    CHECK(holds("(inv (mul x1 x2))", "(mul (inv x2) (inv x1))"));
    CHECK(holds("(inv (inv x1))", "x1"));
    CHECK(holds("(mul (mul x1 (inv x1)) x1)", "x1"));
    CHECK(holds("(mul (mul (inv x1) x1) (mul (inv x2) x2))",
                "(mul (mul (inv x2) x2) (mul (inv x1) x1))"));
    // and so do the variety's own defining identities
    for (const auto& [lhs, rhs] : v.defining_identities()) CHECK(identity_holds(lhs, rhs, v));
    for (const auto& [lhs, rhs] : Variety::semigroup().defining_identities())
        CHECK(identity_holds(lhs, rhs, Variety::semigroup()));
    for (const auto& [lhs, rhs] : Variety::monoid().defining_identities())
        CHECK(identity_holds(lhs, rhs, Variety::monoid()));
}

TEST_CASE("non-identities fail") {
    Variety v = Variety::inverse_semigroup();
    const Signature& sig = v.signature();
    CHECK_FALSE(identity_holds(parse_term("(mul x1 x2)", sig),
                               parse_term("(mul x2 x1)", sig), v));
    CHECK_FALSE(identity_holds(parse_term("(mul x1 (inv x1))", sig),
                               parse_term("(mul (inv x1) x1)", sig), v));
    CHECK_FALSE(identity_holds(parse_term("(mul x1 x1)", sig), parse_term("x1", sig), v));
    // magma does not even rebracket
    Variety m = Variety::magma();
    CHECK_FALSE(identity_holds(parse_term("(mul (mul x1 x2) x3)", m.signature()),
                               parse_term("(mul x1 (mul x2 x3))", m.signature()), m));
}

TEST_CASE("monoid unit laws") {
    Variety v = Variety::monoid();
    const Signature& sig = v.signature();
    CHECK(equal_in_free(parse_term("(mul x1 (unit))", sig), parse_term("x1", sig), v));
    CHECK(equal_in_free(parse_term("(mul (unit) x1)", sig), parse_term("x1", sig), v));
    CHECK(normalize(parse_term("(unit)", sig), v).size() == 0);
}

TEST_CASE("random rebracketings agree in the free semigroup") {
    Variety v = Variety::semigroup();
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<int> len(1, 6), letter(1, 3);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<int> w(len(rng));
        for (auto& l : w) l = letter(rng);
        Term a = random_bracketing(w, 0, w.size(), rng);
        Term b = random_bracketing(w, 0, w.size(), rng);
        CHECK(equal_in_free(a, b, v));
    }
}

TEST_CASE("Munn trees: basic elements") {
    MunnTree x = munn_tree(parse_is("x1"));
    CHECK(x.canonical == "[+1*]");
    CHECK(x.min_word_length == 1);
    MunnTree e = munn_tree(parse_is("(mul x1 (inv x1))"));
    CHECK(e.canonical == "*[+1]");
    CHECK(e.min_word_length == 2);
    CHECK(munn_tree(parse_is("(mul (mul x1 (inv x1)) x1)")) == x);
    // idempotents commute
    CHECK(munn_tree(parse_is("(mul (mul x1 (inv x1)) (mul x2 (inv x2)))")) ==
          munn_tree(parse_is("(mul (mul x2 (inv x2)) (mul x1 (inv x1)))")));
}

TEST_CASE("Munn tree element size is the minimal walk length") {
    // x1 x2 x2^-1: tree has 2 edges, end one step from start
    NormalForm n = normalize(parse_is("(mul x1 (mul x2 (inv x2)))"),
                             Variety::inverse_semigroup());
    CHECK(n.size() == 3);  // 2*2 - 1
    NormalForm idem = normalize(parse_is("(mul x1 (inv x1))"), Variety::inverse_semigroup());
    CHECK(idem.size() == 2);  // 2*1 - 0
}

TEST_CASE("munn_of_word rejects the empty word") {
    CHECK_THROWS_AS(munn_of_word({}), error);
}

TEST_CASE("normalize keys separate exactly the distinct elements") {
    Variety v = Variety::inverse_semigroup();
    Term a = parse_is("(mul x1 (mul (inv x1) x1))");
    Term b = parse_is("x1");
    Term c = parse_is("(mul x1 x1)");
    CHECK(normalize(a, v).key() == normalize(b, v).key());
    CHECK(normalize(a, v).key() != normalize(c, v).key());
}

TEST_CASE("nf_to_term round-trips through normalize") {
    for (Variety v : {Variety::magma(), Variety::semigroup(), Variety::monoid(),
                      Variety::inverse_semigroup()}) {
        std::vector<const char*> samples;
        if (v.tag() == VarietyTag::inverse_semigroup)
            samples = {"x1", "(inv x1)", "(mul x1 (inv x2))", "(mul (inv x1) (mul x1 x2))"};
        else if (v.tag() == VarietyTag::monoid)
            samples = {"x1", "(unit)", "(mul x1 (mul x2 x1))"};
        else
            samples = {"x1", "(mul x1 (mul x2 x1))", "(mul (mul x1 x2) x1)"};
        for (const char* text : samples) {
            NormalForm n = normalize(parse_term(text, v.signature()), v);
            CHECK(normalize(nf_to_term(n, v), v) == n);
        }
    }
}

TEST_CASE("signed_word flattens inversion") {
    CHECK(signed_word(parse_is("(inv (mul x1 x2))")) == std::vector<int>{-2, -1});
    CHECK(signed_word(parse_is("(mul x1 (inv (mul x2 (inv x3))))")) ==
          std::vector<int>{1, 3, -2});
}

TEST_CASE("reverse_element is an involutive anti-automorphism fixing generators") {
    for (Variety v : {Variety::magma(), Variety::semigroup(), Variety::monoid(),
                      Variety::inverse_semigroup()}) {
        const Signature& sig = v.signature();
        Term x = parse_term("x1", sig);
        CHECK(reverse_element(normalize(x, v), v) == normalize(x, v));
        Term xy = parse_term("(mul x1 x2)", sig);
        Term yx = parse_term("(mul x2 x1)", sig);
        CHECK(reverse_element(normalize(xy, v), v) == normalize(yx, v));
        CHECK(reverse_element(reverse_element(normalize(xy, v), v), v) == normalize(xy, v));
    }
    // for inverse semigroups the reversal also fixes inv(x)
    Variety v = Variety::inverse_semigroup();
    NormalForm ix = normalize(parse_is("(inv x1)"), v);
    CHECK(reverse_element(ix, v) == ix);
    // anti-homomorphism on a compound element
    NormalForm ab = normalize(parse_is("(mul x1 (mul x2 (inv x1)))"), v);
    NormalForm rev = normalize(parse_is("(mul (inv x1) (mul x2 x1))"), v);
    CHECK(reverse_element(ab, v) == rev);
}
