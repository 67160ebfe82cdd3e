// Acceptance suite: ten bounded checks, one pass/fail line each.
#include <algorithm>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "uacat/automorphism.hpp"
#include "uacat/category.hpp"
#include "uacat/derived.hpp"
#include "uacat/finite.hpp"

#ifndef UACAT_DATA_DIR
#define UACAT_DATA_DIR "data"
#endif

using namespace uacat;

namespace {

int failures = 0;

void verdict(int n, bool ok, const std::string& what, const std::string& note = "") {
    std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << " - " << what;
    if (!note.empty()) std::cout << " [" << note << "]";
    std::cout << "\n";
    if (!ok) ++failures;
}

std::string data(const char* rel) { return std::string(UACAT_DATA_DIR) + "/" + rel; }

std::set<std::string> solution_set(const std::string& system, int max_size,
                                   const std::string& unknown, bool dedupe = true) {
    EquationSystem sys = load_equation_system(system);
    SolveOptions opts;
    opts.dedupe_by_element = dedupe;
    std::set<std::string> keys;
    for (const auto& a : solve_term_equations(sys, max_size, opts))
        keys.insert(normalize(*a.find(unknown), sys.base).key());
    return keys;
}

Term random_bracketing(const std::vector<int>& w, std::size_t lo, std::size_t hi,
                       std::mt19937_64& rng) {
    if (hi - lo == 1) return Term::var(w[lo]);
    std::uniform_int_distribution<std::size_t> cut(lo + 1, hi - 1);
    std::size_t mid = cut(rng);
    return Term::app("mul", {random_bracketing(w, lo, mid, rng),
                             random_bracketing(w, mid, hi, rng)});
}

void criterion1() {
    auto keys = solution_set(data("systems/semigroup_binary.eqs"), 5, "w");
    verdict(1, keys == std::set<std::string>{"1,2", "2,1"},
            "associative mutually-derivable binary semigroup operations are {xy, yx}");
}

void criterion2() {
    Variety v = Variety::inverse_semigroup();
    // element-level solution set at max_size 9
    auto elems = solution_set(data("systems/inverse_unary_involution.eqs"), 9, "u");
    bool ok = elems == std::set<std::string>{"[+1*]", "[-1*]"};

    // every solving spelling flattens to an alternating one-letter word,
    // i.e. has one of the shapes (xx^-1)^k x, x(x^-1x)^k, or their inverses
    EquationSystem sys = load_equation_system(data("systems/inverse_unary_involution.eqs"));
    SolveOptions all;
    all.dedupe_by_element = false;
    for (const auto& a : solve_term_equations(sys, 9, all)) {
        std::vector<int> w = signed_word(*a.find("u"));
        if (w.size() % 2 != 1) ok = false;
        for (std::size_t i = 0; i < w.size(); ++i) {
            int expected = (i % 2 == 0) ? w[0] : -w[0];
            if (w[i] != expected || std::abs(w[i]) != 1) ok = false;
        }
    }

    // the anti-homomorphism constraint singles out inversion
    auto anti = solution_set(data("systems/inverse_unary_antihom.eqs"), 9, "u");
    ok = ok && anti == std::set<std::string>{"[-1*]"};
    verdict(2, ok, "unary involutions are x and x^-1; the anti-homomorphic one is x^-1");
}

void criterion3() {
    struct Reading {
        const char* file;
        std::set<std::string> expected;
    };
    std::vector<Reading> readings = {
        {"systems/inverse_binary_flat.eqs", {"[+1[+2*]]"}},
        {"systems/inverse_binary_nested.eqs", {"[+1[+2*]]"}},
        {"systems/inverse_binary_nested_noidem.eqs",
         {"[+1*]", "[+2*]", "[+1[+2*]]", "[+2[+1*]]"}},
        {"systems/inverse_binary_nested_idem.eqs", {"[+1[+2*]]", "[+2[+1*]]"}},
    };
    bool ok = true;
    std::string note;
    bool some_reading_exact = false;
    for (const auto& r : readings) {
        auto keys = solution_set(data(r.file), 6, "w");
        if (keys != r.expected) ok = false;
        if (keys == std::set<std::string>{"[+1[+2*]]", "[+2[+1*]]"}) some_reading_exact = true;
        note += std::string(r.file).substr(8) + " -> {";
        bool first = true;
        for (const auto& k : keys) {
            if (!first) note += ", ";
            note += k;
            first = false;
        }
        note += "} ";
    }
    verdict(3, ok && some_reading_exact,
            "one documented reading of the three-equation system yields exactly {xy, yx}", note);
}

void criterion4() {
    Variety inv = Variety::inverse_semigroup();
    const Signature& sig = inv.signature();
    auto holds = [&](const char* l, const char* r) {
        return identity_holds(parse_term(l, sig), parse_term(r, sig), inv);
    };
    bool ok = holds("(mul (mul x1 x2) x3)", "(mul x1 (mul x2 x3))") &&
              holds("(inv (mul x1 x2))", "(mul (inv x2) (inv x1))") &&
              holds("(inv (inv x1))", "x1") &&
              holds("(mul (mul x1 (inv x1)) x1)", "x1") &&
              holds("(mul (mul (inv x1) x1) (mul (inv x2) x2))",
                    "(mul (mul (inv x2) x2) (mul (inv x1) x1))");

    Variety sg = Variety::semigroup();
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> len(1, 6), letter(1, 3);
    for (int i = 0; i < 1000 && ok; ++i) {
        std::vector<int> w(len(rng));
        for (auto& l : w) l = letter(rng);
        Term a = random_bracketing(w, 0, w.size(), rng);  // sizes up to 11 <= 12
        Term b = random_bracketing(w, 0, w.size(), rng);
        ok = equal_in_free(a, b, sg);
    }
    ok = ok && !identity_holds(parse_term("(mul x1 x2)", sg.signature()),
                               parse_term("(mul x2 x1)", sg.signature()), sg);
    verdict(4, ok, "five inverse-semigroup identities, 1000 rebracketings, xy != yx");
}

void criterion5() {
    Variety v = Variety::semigroup();
    AutomorphismSpec mirror = mirror_spec();
    FreeObject a2(v, 2);

    PartialBijection s = extract_s(mirror, a2, 6);
    bool reversal = s.pairs.size() == 126;
    for (const auto& [a, b] : s.pairs)
        if (!(b == reverse_element(a, v))) reversal = false;

    BijectionFamily fam;
    for (int r = 1; r <= 2; ++r) {
        FreeObject obj(v, r);
        fam[obj.key()] = extract_s(mirror, obj, 4);
    }
    Report conj = verify_conjugation(mirror, fam, sample_morphisms(v, 2, 3, 200, 77));
    bool conjugation = conj.checks.size() == 200 && conj.all_passed() && !conj.has_gap();

    Report star = derived_equals_star(mirror, a2, 2);
    bool star_ok = star.all_passed() && !star.has_gap();

    ReductionScenario scenario{FreeObject(v, 1), a2, 3};
    Report mr = reduction_check(mirror, scenario);
    bool cond2_fails = false;
    for (const auto& c : mr.checks)
        if (c.name.find("condition 2") != std::string::npos)
            cond2_fails = c.status == CheckResult::Status::fail;
    Report ir = reduction_check(identity_spec(), scenario);
    bool reduction = cond2_fails && ir.all_passed();

    verdict(5, reversal && conjugation && star_ok && reduction,
            "mirror: s = reversal, conjugation on 200 samples, omega* = omega^Phi, "
            "reduction condition 2 fails (and identity passes)");
}

void criterion6() {
    Variety inv = Variety::inverse_semigroup();
    TermAssignment star_inv;
    star_inv.set("mul", parse_term("(mul x2 x1)", inv.signature()));
    star_inv.set("inv", parse_term("(inv x1)", inv.signature()));
    InnerVerdict vi = decide_inner_via_central(mirror_spec(), inv, star_inv, 7, 2);
    bool inverse_inner = vi.kind == InnerVerdictKind::inner_witness && vi.witness &&
                         vi.witness->render() == "(inv x1)";

    Variety sg = Variety::semigroup();
    TermAssignment star_sg;
    star_sg.set("mul", parse_term("(mul x2 x1)", sg.signature()));
    InnerVerdict vs = decide_inner_via_central(mirror_spec(), sg, star_sg, 7, 3);
    bool semigroup_not = vs.kind == InnerVerdictKind::not_inner_up_to_bound;

    verdict(6, inverse_inner && semigroup_not,
            "mirror is inner (witness: inversion) over inverse semigroups, "
            "not inner up to size 7 over semigroups");
}

void criterion7() {
    bool ok = true;
    for (Variety v : {Variety::semigroup(), Variety::inverse_semigroup()}) {
        FreeObject a2(v, 2);
        PartialBijection s_id = extract_s(identity_spec(), a2, 3);
        PartialBijection s_m = extract_s(mirror_spec(), a2, 3);
        // the identity spec induces the identity on every table entry
        for (const auto& [a, b] : s_id.pairs)
            if (!(a == b)) ok = false;
        // mirror is self-inverse, so s_m must equal its own inverse
        for (const auto& [a, b] : s_m.pairs) {
            const NormalForm* back = s_m.image(b);
            if (!back || !(*back == a)) ok = false;
        }
        // composites: mirror.mirror = identity and identity.mirror = mirror
        for (const auto& [a, b] : s_m.pairs) {
            const NormalForm* mm = s_m.image(b);
            if (!mm || !(*mm == a)) ok = false;  // s_m(s_m(a)) = s_id(a) = a
            const NormalForm* im = s_id.image(b);
            if (!im || !(*im == b)) ok = false;  // s_id(s_m(a)) = s_m(a)
        }
    }
    verdict(7, ok, "s-family laws (identity, inverse, composite) on all table entries");
}

void criterion8() {
    std::vector<FiniteAlgebra> universe;
    for (int n = 1; n <= 3; ++n)
        for (const auto& s : all_semilattices(n)) universe.push_back(s);
    FiniteAlgebra chain2 = load_table_file(data("tables/semilattice2.tbl"));
    IndicatorResult good = is_right_indicator(chain2, universe);

    FiniteAlgebra trivial(1, Signature({{"mul", 2}}));
    trivial.set_table("mul", {0});
    IndicatorResult bad = is_right_indicator(trivial, universe);
    bool cert_ok = false;
    if (!bad.is_indicator && bad.certificate) {
        const auto& cert = *bad.certificate;
        const FiniteAlgebra& a = universe[cert.universe_index_a];
        const FiniteAlgebra& b = universe[cert.universe_index_b];
        cert_ok = !is_isomorphism(a, b, cert.bijection);
        for (const auto& nu : homomorphisms(b, trivial)) {
            FiniteMap composite(a.carrier());
            for (int x = 0; x < a.carrier(); ++x) composite[x] = nu[cert.bijection[x]];
            if (!is_homomorphism(a, trivial, composite)) cert_ok = false;
        }
    }
    verdict(8, good.is_indicator && cert_ok,
            "2-chain is a right indicator over semilattices of carrier <= 3; "
            "a failing A0 yields an independently verified certificate");
}

void criterion9() {
    bool ok = true;
    struct Case {
        int n;
        bool partial;
    };
    for (Case c : {Case{2, false}, Case{3, false}, Case{2, true}}) {
        FiniteAlgebra m = transformation_monoid(c.n, c.partial);
        InnerAutomorphismReport rep = check_automorphisms_inner(m, c.n, c.partial);
        if (!rep.all_inner || rep.automorphisms.empty()) ok = false;
        for (const auto& [phi, witness] : rep.automorphisms) {
            if (!witness) {
                ok = false;
                continue;
            }
            const std::vector<int>& sigma = *witness;
            std::vector<int> sigma_inv(c.n);
            for (int i = 0; i < c.n; ++i) sigma_inv[sigma[i]] = i;
            for (int e = 0; e < m.carrier(); ++e) {
                auto f = decode_transformation(e, c.n, c.partial);
                std::vector<int> conj(c.n);
                for (int x = 0; x < c.n; ++x) {
                    int y = f[sigma_inv[x]];
                    conj[x] = y == c.n ? c.n : sigma[y];  // n encodes "undefined"
                }
                if (phi[e] != encode_transformation(conj, c.n, c.partial)) ok = false;
                // the permutation of monoid elements must also respect the table
                for (int e2 = 0; e2 < m.carrier(); ++e2)
                    if (phi[m.apply("mul", {e, e2})] != m.apply("mul", {phi[e], phi[e2]}))
                        ok = false;
            }
        }
    }
    verdict(9, ok, "all automorphisms of T_2, T_3, F_2 are base-set conjugations, "
                   "witnesses verified against the tables");
}

void criterion10() {
    Variety v = Variety::semigroup();
    std::mt19937_64 rng(31337);
    std::vector<std::vector<NormalForm>> pools;
    for (int r = 1; r <= 3; ++r)
        pools.push_back(enumerate_elements(FreeObject(v, r), 3));
    std::uniform_int_distribution<int> rank(1, 3);
    auto random_morphism = [&](int dom_rank, int cod_rank) {
        const auto& pool = pools[cod_rank - 1];
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        std::vector<NormalForm> images;
        for (int i = 0; i < dom_rank; ++i) images.push_back(pool[pick(rng)]);
        return Morphism{FreeObject(v, dom_rank), FreeObject(v, cod_rank), images};
    };

    bool ok = true;
    for (int i = 0; i < 10000 && ok; ++i) {
        int r1 = rank(rng), r2 = rank(rng), r3 = rank(rng), r4 = rank(rng);
        Morphism f = random_morphism(r1, r2);
        Morphism g = random_morphism(r2, r3);
        Morphism h = random_morphism(r3, r4);
        ok = compose(h, compose(g, f)) == compose(compose(h, g), f) &&
             compose(f, identity_morphism(f.dom)) == f &&
             compose(identity_morphism(f.cod), f) == f;
    }
    for (int i = 0; i < 1000 && ok; ++i) {
        int r1 = rank(rng), r2 = rank(rng);
        Morphism nu = random_morphism(r1, r2);
        const auto& pool = pools[r1 - 1];
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        NormalForm a = pool[pick(rng)];
        // nu o alpha_a = alpha_{Q(nu)(a)}
        ok = compose(nu, alpha(a, nu.dom)) == alpha(apply_morphism(nu, a), nu.cod);
    }
    verdict(10, ok, "10000 composable triples satisfy the category laws; "
                    "1000 alpha-naturality pairs hold");
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    std::cout << (failures == 0 ? "all criteria passed" : "criteria failed") << "\n";
    return failures == 0 ? 0 : 1;
}
