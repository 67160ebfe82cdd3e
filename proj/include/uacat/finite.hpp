#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uacat/term.hpp"

namespace uacat {

// A finite algebra as flat operation tables over carrier {0..n-1}.
class FiniteAlgebra {
public:
    FiniteAlgebra(int carrier, Signature sig);

    int carrier() const { return n_; }
    const Signature& signature() const { return sig_; }

    // table is row-major over the arity-many argument indices
    void set_table(const std::string& op, std::vector<int> table);
    int apply(const std::string& op, const std::vector<int>& args) const;
    const std::vector<int>& table(const std::string& op) const;

    int eval(const Term& t, const std::vector<int>& env) const;  // env[i] = value of x_{i+1}

private:
    int n_;
    Signature sig_;
    std::vector<std::vector<int>> tables_;  // indexed like sig_.ops()
    int op_index(const std::string& op) const;
};

FiniteAlgebra load_table_file(const std::string& path);
std::string table_file_text(const FiniteAlgebra& a);

using FiniteMap = std::vector<int>;  // total map, value per carrier element

bool is_homomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b, const FiniteMap& h);

// All homomorphisms A -> B, ordered lexicographically by value vector.
std::vector<FiniteMap> homomorphisms(const FiniteAlgebra& a, const FiniteAlgebra& b);

struct IndicatorCertificate {
    std::size_t universe_index_a;
    std::size_t universe_index_b;
    FiniteMap bijection;
};

struct IndicatorResult {
    bool is_indicator;
    std::optional<IndicatorCertificate> certificate;
};

IndicatorResult is_right_indicator(const FiniteAlgebra& a0,
                                   const std::vector<FiniteAlgebra>& universe,
                                   int max_carrier = 6);
IndicatorResult is_left_indicator(const FiniteAlgebra& a0,
                                  const std::vector<FiniteAlgebra>& universe,
                                  int max_carrier = 6);

bool is_isomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b, const FiniteMap& s);

// The multiplication table of T_n (total maps) or of the monoid of partial
// maps on n points; composition is (f.g)(x) = f(g(x)). Element i encodes the
// map digit-wise in base n (total) or base n+1 with digit n = undefined.
FiniteAlgebra transformation_monoid(int n, bool partial);

// Decodes monoid element -> map (value n means undefined on that point).
std::vector<int> decode_transformation(int element, int n, bool partial);
int encode_transformation(const std::vector<int>& map, int n, bool partial);

struct InnerAutomorphismReport {
    bool all_inner;
    // per automorphism: (automorphism as a permutation of monoid elements,
    // witnessing base-set permutation if inner)
    std::vector<std::pair<FiniteMap, std::optional<std::vector<int>>>> automorphisms;
};

// Enumerates all semigroup automorphisms of transformation_monoid(n, partial)
// and matches each against conjugation by a base-set permutation.
InnerAutomorphismReport check_automorphisms_inner(const FiniteAlgebra& m, int n, bool partial);

// All semigroup automorphisms by brute force over all carrier permutations.
std::vector<FiniteMap> automorphisms_brute_force(const FiniteAlgebra& a);

// All labeled semilattice operations (associative, commutative, idempotent
// binary ops) on a carrier of the given size.
std::vector<FiniteAlgebra> all_semilattices(int carrier);

}  // namespace uacat
