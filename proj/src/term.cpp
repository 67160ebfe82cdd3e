#include "uacat/term.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace uacat {

Signature::Signature(std::vector<Op> ops) : ops_(std::move(ops)) {
    for (std::size_t i = 0; i < ops_.size(); ++i) {
        if (ops_[i].arity < 0) throw error("negative arity for op " + ops_[i].name);
        for (std::size_t j = i + 1; j < ops_.size(); ++j)
            if (ops_[i].name == ops_[j].name)
                throw error("duplicate operation name " + ops_[i].name);
        max_arity_ = std::max(max_arity_, ops_[i].arity);
    }
}

const Signature::Op* Signature::find(std::string_view name) const {
    for (const auto& op : ops_)
        if (op.name == name) return &op;
    return nullptr;
}

int Signature::arity_of(std::string_view name) const {
    const Op* op = find(name);
    if (!op) throw error("unknown operation symbol " + std::string(name));
    return op->arity;
}

Term Term::var(int index) {
    if (index <= 0) throw error("variable index must be positive");
    Term t;
    t.var_ = index;
    return t;
}

Term Term::app(std::string op, std::vector<Term> args) {
    if (op.empty()) throw error("empty operation name");
    Term t;
    t.op_ = std::move(op);
    t.args_ = std::move(args);
    return t;
}

int Term::size() const {
    int n = 1;
    for (const auto& a : args_) n += a.size();
    return n;
}

int Term::max_var() const {
    if (is_var()) return var_;
    int m = 0;
    for (const auto& a : args_) m = std::max(m, a.max_var());
    return m;
}

std::string Term::render() const {
    if (is_var()) return "x" + std::to_string(var_);
    if (args_.empty()) return "(" + op_ + ")";
    std::string out = "(" + op_;
    for (const auto& a : args_) {
        out += ' ';
        out += a.render();
    }
    out += ')';
    return out;
}

bool Term::operator==(const Term& other) const {
    return var_ == other.var_ && op_ == other.op_ && args_ == other.args_;
}

void validate_term(const Term& t, const Signature& sig) {
    if (t.is_var()) return;
    int arity = sig.arity_of(t.op());
    if (static_cast<int>(t.args().size()) != arity)
        throw error("arity mismatch: " + t.op() + " expects " + std::to_string(arity) +
                    " arguments, got " + std::to_string(t.args().size()));
    for (const auto& a : t.args()) validate_term(a, sig);
}

const Term* Substitution::find(int var) const {
    auto it = map_.find(var);
    return it == map_.end() ? nullptr : &it->second;
}

Term substitute(const Term& t, const Substitution& s) {
    if (t.is_var()) {
        const Term* img = s.find(t.var_index());
        return img ? *img : t;
    }
    std::vector<Term> args;
    args.reserve(t.args().size());
    for (const auto& a : t.args()) args.push_back(substitute(a, s));
    return Term::app(t.op(), std::move(args));
}

namespace {

struct Parser {
    std::string_view text;
    const Signature& sig;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, pos); }

    std::string symbol() {
        std::size_t begin = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
               text[pos] != '(' && text[pos] != ')')
            ++pos;
        if (pos == begin) fail("expected symbol");
        return std::string(text.substr(begin, pos - begin));
    }

    Term term() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        if (text[pos] == '(') {
            ++pos;
            skip_ws();
            std::size_t op_pos = pos;
            std::string op = symbol();
            const Signature::Op* decl = sig.find(op);
            if (!decl) {
                pos = op_pos;
                fail("unknown operation symbol '" + op + "'");
            }
            std::vector<Term> args;
            for (;;) {
                skip_ws();
                if (pos >= text.size()) fail("missing ')'");
                if (text[pos] == ')') {
                    ++pos;
                    break;
                }
                args.push_back(term());
            }
            if (static_cast<int>(args.size()) != decl->arity)
                fail("arity mismatch: " + op + " expects " + std::to_string(decl->arity) +
                     " arguments, got " + std::to_string(args.size()));
            return Term::app(std::move(op), std::move(args));
        }
        std::size_t sym_pos = pos;
        std::string sym = symbol();
        if (sym.size() >= 2 && sym[0] == 'x') {
            bool digits = std::all_of(sym.begin() + 1, sym.end(),
                                      [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
            if (digits) {
                int idx = std::stoi(sym.substr(1));
                if (idx <= 0) {
                    pos = sym_pos;
                    fail("variable index must be positive");
                }
                return Term::var(idx);
            }
        }
        pos = sym_pos;
        fail("expected variable or '(' but found '" + sym + "'");
    }
};

}  // namespace

Term parse_term(std::string_view text, const Signature& sig) {
    Parser p{text, sig};
    Term t = p.term();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return t;
}

std::vector<Term> enumerate_terms(const Signature& sig, const std::vector<int>& vars,
                                  int max_size, std::size_t cap) {
    if (max_size < 1) throw error("max_size must be >= 1");
    std::vector<int> sorted_vars = vars;
    std::sort(sorted_vars.begin(), sorted_vars.end());
    sorted_vars.erase(std::unique(sorted_vars.begin(), sorted_vars.end()), sorted_vars.end());

    // by_size[n] holds all terms with exactly n+1 nodes
    std::vector<std::vector<Term>> by_size;
    std::size_t total = 0;
    auto emit = [&](std::vector<Term>& bucket, Term t) {
        if (++total > cap) throw cap_exceeded("enumerate_terms", cap);
        bucket.push_back(std::move(t));
    };

    for (int n = 1; n <= max_size; ++n) {
        std::vector<Term> bucket;
        if (n == 1) {
            for (int v : sorted_vars) emit(bucket, Term::var(v));
            for (const auto& op : sig.ops())
                if (op.arity == 0) emit(bucket, Term::app(op.name, {}));
        }
        for (const auto& op : sig.ops()) {
            if (op.arity == 0) continue;
            // distribute n-1 nodes over arity-many children, each >= 1
            int rest = (n - 1) - op.arity;
            if (rest < 0) continue;
            std::vector<std::vector<int>> splits;
            std::vector<int> cur;
            std::function<void(int, int)> split = [&](int i, int remaining) {
                if (i == op.arity - 1) {
                    cur.push_back(1 + remaining);
                    splits.push_back(cur);
                    cur.pop_back();
                    return;
                }
                for (int extra = 0; extra <= remaining; ++extra) {
                    cur.push_back(1 + extra);
                    split(i + 1, remaining - extra);
                    cur.pop_back();
                }
            };
            split(0, rest);
            for (const auto& sizes : splits) {
                std::vector<std::size_t> idx(op.arity, 0);
                for (;;) {
                    bool ok = true;
                    std::vector<Term> args;
                    for (int k = 0; k < op.arity; ++k) {
                        const auto& pool = by_size[sizes[k] - 1];
                        if (idx[k] >= pool.size()) {
                            ok = false;
                            break;
                        }
                        args.push_back(pool[idx[k]]);
                    }
                    if (!ok) break;
                    emit(bucket, Term::app(op.name, std::move(args)));
                    // advance multi-index
                    int k = op.arity - 1;
                    for (; k >= 0; --k) {
                        if (++idx[k] < by_size[sizes[k] - 1].size()) break;
                        idx[k] = 0;
                    }
                    if (k < 0) break;
                }
            }
        }
        std::sort(bucket.begin(), bucket.end(),
                  [](const Term& a, const Term& b) { return a.render() < b.render(); });
        by_size.push_back(std::move(bucket));
    }

    std::vector<Term> out;
    out.reserve(total);
    for (auto& bucket : by_size)
        for (auto& t : bucket) out.push_back(std::move(t));
    return out;
}

}  // namespace uacat
