#pragma once

#include <string>
#include <variant>
#include <vector>

#include "uacat/term.hpp"

namespace uacat {

enum class VarietyTag { magma, semigroup, monoid, inverse_semigroup };

std::string to_string(VarietyTag tag);
VarietyTag variety_tag_from_string(std::string_view name);

// One of the four shipped varieties. The tag fixes the signature:
// magma/semigroup {mul/2}, monoid {mul/2, unit/0},
// inverse_semigroup {mul/2, inv/1}.
class Variety {
public:
    static Variety magma();
    static Variety semigroup();
    static Variety monoid();
    static Variety inverse_semigroup();
    static Variety from_tag(VarietyTag tag);

    VarietyTag tag() const { return tag_; }
    const Signature& signature() const;

    // The defining identities of the variety (empty for magma).
    std::vector<std::pair<Term, Term>> defining_identities() const;

    bool operator==(const Variety& o) const { return tag_ == o.tag_; }

private:
    explicit Variety(VarietyTag tag) : tag_(tag) {}
    VarietyTag tag_;
};

// Birooted edge-labeled word tree solving the free inverse semigroup word
// problem. Edges are oriented: from --label--> to. Two elements are equal iff
// their canonical serializations coincide.
struct MunnTree {
    struct Edge {
        int from, to, label;
    };
    std::vector<Edge> edges;
    int start = 0;
    int end = 0;
    std::string canonical;          // deterministic DFS serialization from start
    std::vector<int> rep_word;      // signed-letter representative (+i / -i)
    int min_word_length = 0;        // 2|E| - dist(start, end)

    bool operator==(const MunnTree& o) const { return canonical == o.canonical; }
};

// Builds the Munn tree of a word over signed letters (+i for x_i, -i for
// x_i^{-1}). The empty word is not a valid inverse-semigroup element.
MunnTree munn_of_word(const std::vector<int>& letters);

using Word = std::vector<int>;  // variable indices; empty only for monoids

class NormalForm {
public:
    NormalForm() = default;
    NormalForm(VarietyTag tag, Term t) : tag_(tag), payload_(std::move(t)) {}
    NormalForm(VarietyTag tag, Word w) : tag_(tag), payload_(std::move(w)) {}
    NormalForm(VarietyTag tag, MunnTree m) : tag_(tag), payload_(std::move(m)) {}

    VarietyTag tag() const { return tag_; }
    const Term& term() const { return std::get<Term>(payload_); }
    const Word& word() const { return std::get<Word>(payload_); }
    const MunnTree& munn() const { return std::get<MunnTree>(payload_); }

    // Canonical serialization; equality of normal forms is key equality.
    std::string key() const;
    // Element size: node count (magma), word length (semigroup/monoid),
    // minimal word length (inverse semigroup).
    int size() const;
    // Largest generator index occurring in the element (0 for the monoid unit).
    int max_var() const;

    bool operator==(const NormalForm& o) const { return tag_ == o.tag_ && key() == o.key(); }
    bool operator!=(const NormalForm& o) const { return !(*this == o); }
    bool operator<(const NormalForm& o) const;  // (size, key) order

private:
    VarietyTag tag_ = VarietyTag::magma;
    std::variant<Term, Word, MunnTree> payload_;
};

NormalForm normalize(const Term& t, const Variety& v);
bool equal_in_free(const Term& t1, const Term& t2, const Variety& v);
bool identity_holds(const Term& lhs, const Term& rhs, const Variety& v);

MunnTree munn_tree(const Term& t);

// inv(t); only meaningful over the inverse-semigroup signature.
Term invert(const Term& t);

// A term denoting the element; normalize(nf_to_term(n), v) == n.
Term nf_to_term(const NormalForm& n, const Variety& v);

// Flattens an inverse-semigroup term into a signed-letter word.
std::vector<int> signed_word(const Term& t);

// The image of an element under the anti-automorphism fixing the generators
// (word reversal). For magmas this mirrors the term.
NormalForm reverse_element(const NormalForm& n, const Variety& v);

}  // namespace uacat
