#include "uacat/derived.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace uacat {

const Term* TermAssignment::find(const std::string& symbol) const {
    auto it = map_.find(symbol);
    return it == map_.end() ? nullptr : &it->second;
}

Term expand(const Term& t, const TermAssignment& a) {
    if (t.is_var()) return t;
    std::vector<Term> args;
    args.reserve(t.args().size());
    for (const auto& arg : t.args()) args.push_back(expand(arg, a));
    if (const Term* body = a.find(t.op())) {
        Substitution s;
        for (std::size_t i = 0; i < args.size(); ++i) s.set(static_cast<int>(i) + 1, args[i]);
        return substitute(*body, s);
    }
    return Term::app(t.op(), std::move(args));
}

DerivedAlgebra build_derived_algebra(const Variety& v, const TermAssignment& a) {
    for (const auto& op : v.signature().ops()) {
        const Term* body = a.find(op.name);
        if (!body) throw error("assignment missing base operation " + op.name);
        validate_term(*body, v.signature());
        if (body->max_var() > op.arity)
            throw error("defining term for " + op.name + " uses x" +
                        std::to_string(body->max_var()) + " beyond arity " +
                        std::to_string(op.arity));
    }
    for (const auto& [name, body] : a.entries())
        if (!v.signature().find(name)) throw error("unknown symbol " + name + " in assignment");
    return DerivedAlgebra{v, a};
}

NormalForm derived_apply(const DerivedAlgebra& d, const std::string& op,
                         const std::vector<NormalForm>& args) {
    const Term* body = d.assignment.find(op);
    if (!body) throw error("no assignment for operation " + op);
    int arity = d.base.signature().arity_of(op);
    if (static_cast<int>(args.size()) != arity)
        throw error("derived_apply: arity mismatch for " + op);
    Substitution s;
    for (int i = 0; i < arity; ++i) s.set(i + 1, nf_to_term(args[i], d.base));
    return normalize(substitute(*body, s), d.base);
}

bool satisfies(const DerivedAlgebra& d, const std::vector<std::pair<Term, Term>>& identities) {
    for (const auto& [lhs, rhs] : identities)
        if (!identity_holds(expand(lhs, d.assignment), expand(rhs, d.assignment), d.base))
            return false;
    return true;
}

Signature EquationSystem::extended_signature() const {
    std::vector<Signature::Op> ops = base.signature().ops();
    for (const auto& [name, arity] : unknowns) ops.push_back({name, arity});
    return Signature(std::move(ops));
}

EquationSystem parse_equation_system(const std::string& text) {
    EquationSystem sys;
    bool have_variety = false;
    std::istringstream in(text);
    std::string line;

    // first pass: variety and unknowns, so equations can be parsed after
    std::vector<std::pair<std::string, std::string>> equation_lines;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "variety") {
            std::string name;
            if (!(ls >> name)) throw error("line " + std::to_string(lineno) + ": variety name missing");
            sys.base = Variety::from_tag(variety_tag_from_string(name));
            have_variety = true;
        } else if (kw == "unknown") {
            std::string name;
            int arity;
            if (!(ls >> name >> arity)) throw error("line " + std::to_string(lineno) + ": expected 'unknown NAME ARITY'");
            sys.unknowns.emplace_back(name, arity);
        } else if (kw == "derive_base") {
            if (!(ls >> sys.derive_base)) throw error("line " + std::to_string(lineno) + ": expected 'derive_base SIZE'");
        } else if (kw == "equation") {
            std::string rest;
            std::getline(ls, rest);
            equation_lines.emplace_back(rest, "line " + std::to_string(lineno));
        } else {
            throw error("line " + std::to_string(lineno) + ": unknown keyword '" + kw + "'");
        }
    }
    if (!have_variety) throw error("equation system: missing 'variety' line");

    Signature sig = sys.extended_signature();
    for (const auto& [rest, where] : equation_lines) {
        // an equation line carries exactly two S-expressions
        std::string_view sv(rest);
        std::size_t i = 0;
        while (i < sv.size() && std::isspace(static_cast<unsigned char>(sv[i]))) ++i;
        std::size_t split = 0;
        if (i < sv.size() && sv[i] == '(') {
            int depth = 0;
            for (; i < sv.size(); ++i) {
                if (sv[i] == '(') ++depth;
                else if (sv[i] == ')' && --depth == 0) {
                    split = i + 1;
                    break;
                }
            }
        } else {
            while (i < sv.size() && !std::isspace(static_cast<unsigned char>(sv[i]))) ++i;
            split = i;
        }
        if (split == 0) throw error(where + ": expected two terms");
        try {
            Term lhs = parse_term(sv.substr(0, split), sig);
            Term rhs = parse_term(sv.substr(split), sig);
            sys.equations.emplace_back(std::move(lhs), std::move(rhs));
        } catch (const parse_error& e) {
            throw error(where + ": " + e.what());
        }
    }
    for (const auto& [lhs, rhs] : sys.equations) {
        validate_term(lhs, sig);
        validate_term(rhs, sig);
    }
    return sys;
}

EquationSystem load_equation_system(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open equation system file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_equation_system(buf.str());
}

namespace {

// True if `target_op(x1..xk)` equals the expansion of some term over the
// given derived symbols within max_size.
bool derivable(const Variety& v, const std::vector<std::pair<std::string, int>>& symbols,
               const TermAssignment& a, const Signature::Op& target, int max_size,
               std::size_t cap) {
    std::vector<Signature::Op> ops;
    for (const auto& [name, arity] : symbols) ops.push_back({name, arity});
    Signature derived_sig(std::move(ops));
    std::vector<int> vars;
    for (int i = 1; i <= target.arity; ++i) vars.push_back(i);
    std::vector<Term> target_args;
    for (int v_i : vars) target_args.push_back(Term::var(v_i));
    Term goal = Term::app(target.name, std::move(target_args));
    for (const auto& cand : enumerate_terms(derived_sig, vars, max_size, cap))
        if (equal_in_free(expand(cand, a), goal, v)) return true;
    return false;
}

}  // namespace

bool check_mutual_derivability(const Variety& v, const TermAssignment& a, int max_size,
                               std::size_t cap) {
    std::vector<std::pair<std::string, int>> symbols;
    for (const auto& op : v.signature().ops()) symbols.emplace_back(op.name, op.arity);
    for (const auto& op : v.signature().ops())
        if (!derivable(v, symbols, a, op, max_size, cap)) return false;
    return true;
}

std::vector<TermAssignment> solve_term_equations(const EquationSystem& sys, int max_size,
                                                 const SolveOptions& opts) {
    if (max_size < 1) throw error("max_size must be >= 1");
    if (sys.unknowns.empty()) throw error("equation system declares no unknowns");

    std::vector<std::vector<Term>> candidates;
    std::size_t tuples = 1;
    for (const auto& [name, arity] : sys.unknowns) {
        std::vector<int> vars;
        for (int i = 1; i <= arity; ++i) vars.push_back(i);
        candidates.push_back(enumerate_terms(sys.base.signature(), vars, max_size, opts.cap));
        if (candidates.back().empty()) return {};
        tuples *= candidates.back().size();
        if (tuples > opts.cap) throw cap_exceeded("solve_term_equations", opts.cap);
    }

    std::vector<TermAssignment> solutions;
    std::vector<std::string> seen_keys;  // sorted; element-level dedup
    std::vector<std::size_t> idx(sys.unknowns.size(), 0);
    for (;;) {
        TermAssignment a;
        for (std::size_t i = 0; i < sys.unknowns.size(); ++i)
            a.set(sys.unknowns[i].first, candidates[i][idx[i]]);

        bool ok = true;
        for (const auto& [lhs, rhs] : sys.equations) {
            if (!identity_holds(expand(lhs, a), expand(rhs, a), sys.base)) {
                ok = false;
                break;
            }
        }
        if (ok && sys.derive_base > 0) {
            for (const auto& op : sys.base.signature().ops()) {
                if (!derivable(sys.base, sys.unknowns, a, op, sys.derive_base, opts.cap)) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            bool fresh = true;
            if (opts.dedupe_by_element) {
                std::string key;
                for (std::size_t i = 0; i < sys.unknowns.size(); ++i) {
                    key += normalize(candidates[i][idx[i]], sys.base).key();
                    key += '|';
                }
                if (std::binary_search(seen_keys.begin(), seen_keys.end(), key)) {
                    fresh = false;
                } else {
                    seen_keys.insert(std::lower_bound(seen_keys.begin(), seen_keys.end(), key),
                                     key);
                }
            }
            if (fresh) solutions.push_back(std::move(a));
        }

        int k = static_cast<int>(idx.size()) - 1;
        for (; k >= 0; --k) {
            if (++idx[k] < candidates[k].size()) break;
            idx[k] = 0;
        }
        if (k < 0) break;
    }
    return solutions;
}

}  // namespace uacat
