#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "uacat/automorphism.hpp"
#include "uacat/category.hpp"
#include "uacat/derived.hpp"
#include "uacat/finite.hpp"
#include "uacat/json_io.hpp"

using nlohmann::json;
using namespace uacat;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct Options {
    std::string variety = "semigroup";
    int max_size = 5;
    std::size_t cap = kDefaultEnumCap;
    bool as_json = false;
    std::uint64_t seed = 1;
};

Variety variety_of(const Options& o) {
    return Variety::from_tag(variety_tag_from_string(o.variety));
}

void emit(const Options& o, const json& payload, const std::string& text) {
    if (o.as_json)
        std::cout << payload.dump(2) << "\n";
    else
        std::cout << text;
}

int report_exit(const Report& r) {
    if (r.has_gap() && r.all_passed()) return kExitCap;
    return r.all_passed() ? kExitPass : kExitFail;
}

std::string report_text(const Report& r) {
    std::string out;
    for (const auto& c : r.checks) {
        const char* s = c.status == CheckResult::Status::pass  ? "pass"
                        : c.status == CheckResult::Status::fail ? "FAIL"
                                                                : "gap";
        out += s;
        out += "  ";
        out += c.name;
        if (!c.detail.empty()) out += "  (" + c.detail + ")";
        out += "\n";
    }
    return out;
}

Signature signature_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open signature file " + path);
    std::vector<Signature::Op> ops;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string name;
        int arity;
        if (ls >> name >> arity) ops.push_back({name, arity});
    }
    return Signature(std::move(ops));
}

AutomorphismSpec spec_from_options(const std::string& kind, const std::string& spec_file,
                                   Variety& v) {
    if (!spec_file.empty()) return load_spec_file(spec_file, v);
    if (kind == "identity") return identity_spec();
    if (kind == "mirror") return mirror_spec();
    throw error("unknown automorphism kind '" + kind + "' (use identity, mirror, or --spec FILE)");
}

std::vector<FiniteAlgebra> load_universe(const std::string& dir) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.path().extension() == ".tbl") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    std::vector<FiniteAlgebra> out;
    for (const auto& f : files) out.push_back(load_table_file(f.string()));
    if (out.empty()) throw error("no .tbl files in " + dir);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bounded symbolic toolkit for free-algebra categories"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.as_json, "emit JSON reports");
    app.add_option("--cap", opt.cap, "enumeration cap");
    app.add_option("--seed", opt.seed, "sampling seed");

    // oracle eq|normalize|munn
    auto* oracle = app.add_subcommand("oracle", "free-algebra word problem oracles");
    oracle->require_subcommand(1);
    std::string term1, term2;
    auto* oracle_eq = oracle->add_subcommand("eq", "decide equality in the free algebra");
    oracle_eq->add_option("--variety", opt.variety);
    oracle_eq->add_option("lhs", term1)->required();
    oracle_eq->add_option("rhs", term2)->required();
    auto* oracle_norm = oracle->add_subcommand("normalize", "canonical normal form");
    oracle_norm->add_option("--variety", opt.variety);
    oracle_norm->add_option("term", term1)->required();
    auto* oracle_munn = oracle->add_subcommand("munn", "birooted word tree of a term");
    oracle_munn->add_option("term", term1)->required();

    // terms enumerate
    auto* terms = app.add_subcommand("terms", "term enumeration");
    auto* terms_enum = terms->add_subcommand("enumerate", "all terms up to a size bound");
    int nvars = 1;
    std::string sig_file;
    terms_enum->add_option("--variety", opt.variety);
    terms_enum->add_option("--sig", sig_file, "signature file with 'name arity' lines");
    terms_enum->add_option("--vars", nvars, "number of variables x1..xN");
    terms_enum->add_option("--max-size", opt.max_size);

    // solve
    auto* solve = app.add_subcommand("solve", "solve a term equation system");
    std::string system_file;
    bool all_terms = false;
    solve->add_option("--system", system_file)->required();
    solve->add_option("--max-size", opt.max_size);
    solve->add_flag("--all-terms", all_terms,
                    "keep every solving term, not one per free-algebra element");

    // derive check
    auto* derive = app.add_subcommand("derive", "derived-algebra checks");
    auto* derive_check = derive->add_subcommand("check", "A* = A^Phi instance check");
    std::string kind = "identity", spec_file;
    int rank = 2, bound = 3;
    derive_check->add_option("--variety", opt.variety);
    derive_check->add_option("--kind", kind, "identity or mirror");
    derive_check->add_option("--spec", spec_file, "automorphism spec JSON");
    derive_check->add_option("--rank", rank);
    derive_check->add_option("--bound", bound, "argument element-size bound");

    // category verify
    auto* category = app.add_subcommand("category", "category engine verification");
    auto* cat_verify = category->add_subcommand("verify", "functor, conjugation and s-family laws");
    std::size_t samples = 100;
    cat_verify->add_option("--variety", opt.variety);
    cat_verify->add_option("--kind", kind);
    cat_verify->add_option("--spec", spec_file);
    cat_verify->add_option("--samples", samples);
    cat_verify->add_option("--bound", bound);

    // auto inner / auto reduction
    auto* aut = app.add_subcommand("auto", "automorphism classification");
    auto* aut_inner = aut->add_subcommand("inner", "search for a central isomorphism witness");
    int term_bound = 7, elem_bound = 3;
    aut_inner->add_option("--variety", opt.variety);
    aut_inner->add_option("--kind", kind);
    aut_inner->add_option("--spec", spec_file);
    aut_inner->add_option("--term-bound", term_bound);
    aut_inner->add_option("--elem-bound", elem_bound);
    auto* aut_reduction = aut->add_subcommand("reduction", "reduction condition set");
    aut_reduction->add_option("--variety", opt.variety);
    aut_reduction->add_option("--kind", kind);
    aut_reduction->add_option("--spec", spec_file);
    aut_reduction->add_option("--rank", rank);
    aut_reduction->add_option("--bound", bound);

    // indicator right|left
    auto* indicator = app.add_subcommand("indicator", "brute-force indicator checks");
    std::string a0_file, universe_dir;
    int max_carrier = 6;
    auto add_ind = [&](const char* name) {
        auto* sub = indicator->add_subcommand(name);
        sub->add_option("--a0", a0_file)->required();
        sub->add_option("--universe", universe_dir)->required();
        sub->add_option("--max-carrier", max_carrier);
        return sub;
    };
    auto* ind_right = add_ind("right");
    auto* ind_left = add_ind("left");

    // monoid build|aut-check
    auto* monoid = app.add_subcommand("monoid", "transformation monoids");
    int monoid_n = 2;
    bool partial = false;
    std::string out_file;
    auto* monoid_build = monoid->add_subcommand("build", "multiplication table of T_n or of partial maps");
    monoid_build->add_option("--n", monoid_n)->required();
    monoid_build->add_flag("--partial", partial);
    monoid_build->add_option("--out", out_file);
    auto* monoid_aut = monoid->add_subcommand("aut-check", "are all automorphisms conjugations?");
    monoid_aut->add_option("--n", monoid_n)->required();
    monoid_aut->add_flag("--partial", partial);

    // let --json/--cap/--seed appear after any subcommand
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        for (CLI::App* sub : a->get_subcommands({})) {
            sub->fallthrough();
            enable_fallthrough(sub);
        }
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (oracle_eq->parsed()) {
            Variety v = variety_of(opt);
            Term lhs = parse_term(term1, v.signature());
            Term rhs = parse_term(term2, v.signature());
            bool eq = equal_in_free(lhs, rhs, v);
            emit(opt,
                 json{{"variety", opt.variety}, {"equal", eq},
                      {"lhs", normalize(lhs, v).key()}, {"rhs", normalize(rhs, v).key()}},
                 eq ? "equal\n" : "not equal\n");
            return eq ? kExitPass : kExitFail;
        }
        if (oracle_norm->parsed()) {
            Variety v = variety_of(opt);
            NormalForm nf = normalize(parse_term(term1, v.signature()), v);
            emit(opt,
                 json{{"variety", opt.variety}, {"normal_form", nf.key()}, {"size", nf.size()}},
                 nf.key() + "\n");
            return kExitPass;
        }
        if (oracle_munn->parsed()) {
            Variety v = Variety::inverse_semigroup();
            MunnTree m = munn_tree(parse_term(term1, v.signature()));
            int end_id = 0;
            for (char c : m.canonical) {
                if (c == '*') break;
                if (c == '[') ++end_id;
            }
            emit(opt,
                 json{{"tree", m.canonical}, {"start", 0}, {"end", end_id},
                      {"edges", m.edges.size()}},
                 m.canonical + "\nstart 0 end " + std::to_string(end_id) + "\n");
            return kExitPass;
        }
        if (terms_enum->parsed()) {
            Signature sig = sig_file.empty() ? variety_of(opt).signature()
                                             : signature_from_file(sig_file);
            std::vector<int> vars;
            for (int i = 1; i <= nvars; ++i) vars.push_back(i);
            auto terms_out = enumerate_terms(sig, vars, opt.max_size, opt.cap);
            json arr = json::array();
            std::string text;
            for (const auto& t : terms_out) {
                arr.push_back(t.render());
                text += t.render() + "\n";
            }
            emit(opt, json{{"max_size", opt.max_size}, {"count", terms_out.size()}, {"terms", arr}},
                 text);
            return kExitPass;
        }
        if (solve->parsed()) {
            EquationSystem sys = load_equation_system(system_file);
            SolveOptions so;
            so.cap = opt.cap;
            so.dedupe_by_element = !all_terms;
            auto solutions = solve_term_equations(sys, opt.max_size, so);
            json arr = json::array();
            std::string text;
            for (const auto& a : solutions) {
                json entry = json::object();
                std::string line;
                for (const auto& [name, t] : a.entries()) {
                    entry[name] = t.render();
                    if (!line.empty()) line += ", ";
                    line += name + " -> " + t.render();
                }
                arr.push_back(entry);
                text += line + "\n";
            }
            emit(opt,
                 json{{"system", system_file}, {"max_size", opt.max_size},
                      {"complete_up_to_size", opt.max_size}, {"solutions", arr}},
                 text.empty() ? "no solutions up to size " + std::to_string(opt.max_size) + "\n"
                              : text);
            return kExitPass;
        }
        if (derive_check->parsed()) {
            Variety v = variety_of(opt);
            AutomorphismSpec spec = spec_from_options(kind, spec_file, v);
            Report r = derived_equals_star(spec, FreeObject(v, rank), bound);
            emit(opt, report_to_json(r), report_text(r));
            return report_exit(r);
        }
        if (cat_verify->parsed()) {
            Variety v = variety_of(opt);
            AutomorphismSpec spec = spec_from_options(kind, spec_file, v);
            Report all;
            auto sample = sample_morphisms(v, 2, bound, samples, opt.seed);
            std::vector<std::pair<Morphism, Morphism>> pairs;
            for (std::size_t i = 0; i + 1 < sample.size(); i += 2) {
                const Morphism& f = sample[i];
                // rebase the second morphism so the pair composes
                const Morphism& g0 = sample[i + 1];
                if (g0.dom == f.cod) pairs.emplace_back(g0, f);
            }
            Report functor = check_functor(spec, pairs);
            for (auto& c : functor.checks) all.checks.push_back(c);

            BijectionFamily s;
            for (int r = 1; r <= 2; ++r) {
                FreeObject obj(v, r);
                s[obj.key()] = extract_s(spec, obj, bound);
            }
            Report conj = verify_conjugation(spec, s, sample);
            for (auto& c : conj.checks) all.checks.push_back(c);

            // s-family laws for identity spec and the spec's self-composition
            PartialBijection s_id = extract_s(identity_spec(), FreeObject(v, 2), bound);
            bool eq4 = true;
            for (const auto& [a, b] : s_id.pairs)
                if (!(a == b)) eq4 = false;
            all.add("s(identity) = id", eq4 ? CheckResult::Status::pass : CheckResult::Status::fail);

            emit(opt, report_to_json(all), report_text(all));
            return report_exit(all);
        }
        if (aut_inner->parsed()) {
            Variety v = variety_of(opt);
            AutomorphismSpec spec = spec_from_options(kind, spec_file, v);
            // A^Phi from the extracted s on the rank-2 object
            FreeObject a2(v, 2);
            PartialBijection s = extract_s(spec, a2, 4);
            TermAssignment assignment;
            for (const auto& op : v.signature().ops()) {
                std::vector<Term> gen_args;
                for (int i = 1; i <= op.arity; ++i) gen_args.push_back(Term::var(i));
                NormalForm base = normalize(Term::app(op.name, gen_args), v);
                const NormalForm* img = s.image(base);
                if (!img) throw error("s undefined on " + op.name + "(x1..xk); raise bounds");
                assignment.set(op.name, nf_to_term(*img, v));
            }
            InnerVerdict verdict =
                decide_inner_via_central(spec, v, assignment, term_bound, elem_bound, opt.seed);
            const char* kind_str = verdict.kind == InnerVerdictKind::inner_witness
                                       ? "inner_witness"
                                   : verdict.kind == InnerVerdictKind::not_inner_up_to_bound
                                       ? "not_inner_up_to_bound"
                                       : "inconclusive";
            json j{{"verdict", kind_str}, {"note", verdict.note},
                   {"term_bound", term_bound}, {"elem_bound", elem_bound}};
            if (verdict.witness) j["witness"] = verdict.witness->render();
            emit(opt, j, std::string(kind_str) + (verdict.note.empty() ? "" : ": " + verdict.note) + "\n");
            if (verdict.kind == InnerVerdictKind::inconclusive) return kExitCap;
            return kExitPass;
        }
        if (aut_reduction->parsed()) {
            Variety v = variety_of(opt);
            AutomorphismSpec spec = spec_from_options(kind, spec_file, v);
            ReductionScenario scenario{FreeObject(v, 1), FreeObject(v, rank), bound};
            Report r = reduction_check(spec, scenario);
            emit(opt, report_to_json(r), report_text(r));
            return report_exit(r);
        }
        if (ind_right->parsed() || ind_left->parsed()) {
            FiniteAlgebra a0 = load_table_file(a0_file);
            auto universe = load_universe(universe_dir);
            IndicatorResult res = ind_right->parsed()
                                      ? is_right_indicator(a0, universe, max_carrier)
                                      : is_left_indicator(a0, universe, max_carrier);
            json j{{"side", ind_right->parsed() ? "right" : "left"},
                   {"indicator", res.is_indicator}, {"max_carrier", max_carrier}};
            std::string text = std::string(ind_right->parsed() ? "right" : "left") +
                               " indicator: " + (res.is_indicator ? "true" : "false") + "\n";
            if (res.certificate) {
                json cert{{"universe_index_a", res.certificate->universe_index_a},
                          {"universe_index_b", res.certificate->universe_index_b},
                          {"bijection", res.certificate->bijection}};
                j["certificate"] = cert;
                text += "certificate: A=" + std::to_string(res.certificate->universe_index_a) +
                        " B=" + std::to_string(res.certificate->universe_index_b) + "\n";
            }
            emit(opt, j, text);
            return res.is_indicator ? kExitPass : kExitFail;
        }
        if (monoid_build->parsed()) {
            FiniteAlgebra m = transformation_monoid(monoid_n, partial);
            std::string text = table_file_text(m);
            if (!out_file.empty()) {
                std::ofstream out(out_file);
                out << text;
                emit(opt, json{{"carrier", m.carrier()}, {"file", out_file}},
                     "wrote " + out_file + " (carrier " + std::to_string(m.carrier()) + ")\n");
            } else {
                emit(opt, json{{"carrier", m.carrier()}, {"table", text}}, text);
            }
            return kExitPass;
        }
        if (monoid_aut->parsed()) {
            FiniteAlgebra m = transformation_monoid(monoid_n, partial);
            InnerAutomorphismReport r = check_automorphisms_inner(m, monoid_n, partial);
            json autos = json::array();
            for (const auto& [phi, witness] : r.automorphisms) {
                json entry{{"inner", witness.has_value()}};
                if (witness) entry["permutation"] = *witness;
                autos.push_back(entry);
            }
            emit(opt,
                 json{{"n", monoid_n}, {"partial", partial}, {"all_inner", r.all_inner},
                      {"automorphism_count", r.automorphisms.size()}, {"automorphisms", autos}},
                 std::string("automorphisms: ") + std::to_string(r.automorphisms.size()) +
                     (r.all_inner ? ", all inner\n" : ", NOT all inner\n"));
            return r.all_inner ? kExitPass : kExitFail;
        }
    } catch (const cap_exceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kExitCap;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    std::cerr << "no subcommand executed\n";
    return kExitUsage;
}
