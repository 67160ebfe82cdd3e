#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace uacat {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : error {
    parse_error(const std::string& msg, std::size_t pos)
        : error(msg + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

// Raised when a bounded enumeration would exceed its configured cap.
struct cap_exceeded : error {
    cap_exceeded(const std::string& what_search, std::size_t cap)
        : error(what_search + ": enumeration cap " + std::to_string(cap) + " exceeded"),
          cap(cap) {}
    std::size_t cap;
};

class Signature {
public:
    struct Op {
        std::string name;
        int arity;
    };

    Signature() = default;
    explicit Signature(std::vector<Op> ops);

    const std::vector<Op>& ops() const { return ops_; }
    const Op* find(std::string_view name) const;
    int arity_of(std::string_view name) const;  // throws on unknown op
    int max_arity() const { return max_arity_; }

private:
    std::vector<Op> ops_;
    int max_arity_ = 0;
};

// A term is either a variable x<i> (i >= 1) or an application of a signature
// operation to exactly arity-many subterms.
class Term {
public:
    static Term var(int index);
    static Term app(std::string op, std::vector<Term> args);

    bool is_var() const { return var_ > 0; }
    int var_index() const { return var_; }
    const std::string& op() const { return op_; }
    const std::vector<Term>& args() const { return args_; }

    int size() const;  // node count
    int max_var() const;

    std::string render() const;

    bool operator==(const Term& other) const;
    bool operator!=(const Term& other) const { return !(*this == other); }

private:
    Term() = default;
    int var_ = 0;
    std::string op_;
    std::vector<Term> args_;
};

// Checks op names and arities against sig; throws uacat::error on mismatch.
void validate_term(const Term& t, const Signature& sig);

class Substitution {
public:
    Substitution() = default;
    explicit Substitution(std::map<int, Term> mapping) : map_(std::move(mapping)) {}

    void set(int var, Term t) { map_.insert_or_assign(var, std::move(t)); }
    // Unmapped variables map to themselves.
    const Term* find(int var) const;

private:
    std::map<int, Term> map_;
};

Term substitute(const Term& t, const Substitution& s);

Term parse_term(std::string_view text, const Signature& sig);

inline constexpr std::size_t kDefaultEnumCap = 1000000;

// All terms over sig with variables drawn from vars and node count <= max_size,
// duplicate-free, ordered by (size, rendered string).
std::vector<Term> enumerate_terms(const Signature& sig, const std::vector<int>& vars,
                                  int max_size, std::size_t cap = kDefaultEnumCap);

}  // namespace uacat
