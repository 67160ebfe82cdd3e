#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "uacat/category.hpp"
#include "uacat/derived.hpp"

namespace uacat {

enum class SpecKind { identity, mirror, table };

// A candidate category automorphism as finite data: either a rule (identity,
// mirror = conjugation by word reversal) or an explicit bounded hom-set table.
struct AutomorphismSpec {
    SpecKind kind = SpecKind::identity;
    // object key -> image object; objects not listed are fixed
    std::map<std::string, FreeObject> object_action;
    // morphism key -> (morphism, image morphism); table kind only
    std::map<std::string, std::pair<Morphism, Morphism>> table;

    FreeObject apply_object(const FreeObject& a) const;
    // nullopt = coverage gap (table kind, morphism not in the table)
    std::optional<Morphism> apply(const Morphism& m) const;
};

AutomorphismSpec identity_spec();
AutomorphismSpec mirror_spec();

struct PartialBijection {
    std::vector<std::pair<NormalForm, NormalForm>> pairs;

    const NormalForm* image(const NormalForm& a) const;
    const NormalForm* preimage(const NormalForm& b) const;
    bool injective() const;
    PartialBijection inverse() const;
    void add(NormalForm from, NormalForm to);
};

// per-object tables, keyed by FreeObject::key()
using BijectionFamily = std::map<std::string, PartialBijection>;

struct CheckResult {
    enum class Status { pass, fail, gap };
    std::string name;
    Status status;
    std::string detail;
};

struct Report {
    std::vector<CheckResult> checks;
    bool all_passed() const;
    bool has_gap() const;
    void add(std::string name, CheckResult::Status status, std::string detail = "");
};

// s_A(a) = Q(Phi(alpha_a))(x0) for all elements a of size <= bound.
PartialBijection extract_s(const AutomorphismSpec& phi, const FreeObject& a, int bound);

// The family induced by a unary term: a |-> u(a).
PartialBijection family_from_term(const Term& u, const FreeObject& a, int bound);
// The family induced by a permutation of generator indices (indices beyond
// the permutation's length are fixed).
PartialBijection family_from_generator_permutation(const std::vector<int>& perm,
                                                   const FreeObject& a, int bound);

Report verify_conjugation(const AutomorphismSpec& phi, const BijectionFamily& s,
                          const std::vector<Morphism>& sample);

Report check_central(const BijectionFamily& c, const std::vector<Morphism>& sample);

enum class InnerVerdictKind { inner_witness, not_inner_up_to_bound, inconclusive };

struct InnerVerdict {
    InnerVerdictKind kind = InnerVerdictKind::inconclusive;
    std::optional<Term> witness;  // unary term inducing the central family
    std::string note;
};

// Searches central families induced by unary terms of size <= term_bound (and
// generator transpositions) for one that is an isomorphism from Phi(A) onto
// the derived algebra described by star_assignment.
InnerVerdict decide_inner_via_central(const AutomorphismSpec& phi, const Variety& v,
                                      const TermAssignment& star_assignment, int term_bound,
                                      int elem_bound, std::uint64_t seed = 1);

// Checks omega*(a1..ak) = s(omega(s^-1(a1),..,s^-1(ak))) against the
// term-defined operation omega^Phi built from extract_s.
Report derived_equals_star(const AutomorphismSpec& phi, const FreeObject& a, int bound);

struct ReductionScenario {
    FreeObject f0;       // rank-1 representing object
    FreeObject fsup;     // generating object F^0
    int bound;           // element-size bound for hom-set checks
};

Report reduction_check(const AutomorphismSpec& phi, const ReductionScenario& scenario);

Report check_functor(const AutomorphismSpec& phi,
                     const std::vector<std::pair<Morphism, Morphism>>& composable_pairs);

// Object-action bijectivity plus rank equality of A0 and Phi(A0).
bool potential_inner(const AutomorphismSpec& phi, const Variety& v);

// Seeded, size-stratified morphism sampling between objects of rank 1..max_rank.
std::vector<Morphism> sample_morphisms(const Variety& v, int max_rank, int elem_bound,
                                       std::size_t count, std::uint64_t seed);

}  // namespace uacat
