#pragma once

#include <map>
#include <string>
#include <vector>

#include "uacat/variety.hpp"

namespace uacat {

// Maps operation symbols to defining terms; the term for a k-ary symbol may
// use only variables x1..xk.
class TermAssignment {
public:
    TermAssignment() = default;

    void set(const std::string& symbol, Term t) { map_.insert_or_assign(symbol, std::move(t)); }
    const Term* find(const std::string& symbol) const;
    const std::map<std::string, Term>& entries() const { return map_; }

    bool operator==(const TermAssignment& o) const { return map_ == o.map_; }

private:
    std::map<std::string, Term> map_;
};

// Replaces every assigned symbol, innermost-first, by its defining term with
// the expanded arguments substituted in. Unassigned symbols are kept.
Term expand(const Term& t, const TermAssignment& a);

struct DerivedAlgebra {
    Variety base;
    TermAssignment assignment;
};

// Validates arities and variable usage against the base signature.
DerivedAlgebra build_derived_algebra(const Variety& v, const TermAssignment& a);

NormalForm derived_apply(const DerivedAlgebra& d, const std::string& op,
                         const std::vector<NormalForm>& args);

bool satisfies(const DerivedAlgebra& d, const std::vector<std::pair<Term, Term>>& identities);

struct EquationSystem {
    Variety base = Variety::semigroup();
    std::vector<std::pair<std::string, int>> unknowns;
    std::vector<std::pair<Term, Term>> equations;
    // When > 0, each base operation must additionally be expressible as a
    // term over the unknown-defined derived operations within this size.
    int derive_base = 0;

    // Base signature extended by the unknown symbols; used to parse equations.
    Signature extended_signature() const;
};

EquationSystem parse_equation_system(const std::string& text);
EquationSystem load_equation_system(const std::string& path);

struct SolveOptions {
    std::size_t cap = kDefaultEnumCap;
    // Keep only the smallest term per distinct free-algebra element; the
    // solution set is then a set of derived operations, not of spellings.
    bool dedupe_by_element = true;
};

std::vector<TermAssignment> solve_term_equations(const EquationSystem& sys, int max_size,
                                                 const SolveOptions& opts = {});

bool check_mutual_derivability(const Variety& v, const TermAssignment& a, int max_size,
                               std::size_t cap = kDefaultEnumCap);

}  // namespace uacat
